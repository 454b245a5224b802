#include "boundgen/inequalities.hpp"

#include <algorithm>
#include <set>

#include "boundgen/ballsearch.hpp"
#include "boundgen/error.hpp"
#include "boundgen/witness.hpp"

namespace boundgen {

bool InequalityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return c.holds; });
}

namespace {

std::string show(const DeltaReport& d) { return d.attained ? std::to_string(d.value) : "-inf"; }

// a <= b with -inf for unattained values.
bool le(const DeltaReport& a, const DeltaReport& b) {
  if (!a.attained)
    return true;
  return b.attained && a.value <= b.value;
}

std::set<Elem> image(const std::vector<Elem>& xs, const std::vector<Elem>& pi) {
  std::set<Elem> out;
  for (Elem x : xs)
    out.insert(pi[x]);
  return out;
}

std::vector<Elem> images(const std::vector<Elem>& xs, const std::vector<Elem>& pi) {
  std::vector<Elem> out;
  for (Elem x : xs)
    out.push_back(pi[x]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string set_label(const FiniteGroupTable& g, const std::vector<Elem>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ", ";
    out += g.element(s[i]).to_string();
  }
  return out + "}";
}

// Ball image identity pi(B_S(d)) = B_{pi(S)}(d) for every d up to the larger radius.
bool ball_image_holds(const FiniteGroupTable& g, const FiniteGroupTable& h, const std::vector<Elem>& pi,
                      const std::vector<Elem>& s, int threads, int& radius) {
  BallReport bg = ball_bfs(g, s, threads);
  BallReport bh = ball_bfs(h, images(s, pi), threads);
  radius = static_cast<int>(std::max(bg.growth.size(), bh.growth.size()));
  for (int d = 0; d <= radius; ++d) {
    auto lhs = image(ball_members(bg, d), pi);
    auto rhs = ball_members(bh, d);
    if (lhs != std::set<Elem>(rhs.begin(), rhs.end()))
      return false;
  }
  return true;
}

std::vector<Elem> setwise_product(const FiniteGroupTable& g, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<bool> hit(g.size(), false);
  for (Elem x : a)
    for (Elem y : b)
      hit[g.mul(x, y)] = true;
  std::vector<Elem> out;
  for (Elem e = 0; e < g.size(); ++e)
    if (hit[e])
      out.push_back(e);
  return out;
}

}  // namespace

InequalityReport check_inequalities(const std::string& suite, int threads) {
  if (suite != "small")
    fail(ErrorCode::InvalidArgument, "unknown inequality suite '" + suite + "' (available: small)");
  InequalityReport rep;
  rep.suite = suite;
  auto add = [&](std::string name, std::string instance, std::string lhs, std::string rel, std::string rhs,
                 bool holds) {
    rep.checks.push_back({std::move(name), std::move(instance), std::move(lhs), std::move(rel), std::move(rhs), holds});
  };

  const Ring F2 = Ring::prime_field(2);
  const Ring F3 = Ring::prime_field(3);
  const Ring Z4 = Ring::residue(4);

  // Quotient: Delta_k(H) <= Delta_{n0+k}(G) for G = SL(2,Z/4) -> H = SL(2,Z/2).
  FiniteGroupTable g4 = FiniteGroupTable::enumerate(Z4, 2);
  FiniteGroupTable h2 = FiniteGroupTable::enumerate(F2, 2);
  const int n0 = normal_generation_number(g4);
  for (int k = 1; k <= 2; ++k) {
    DeltaReport dh = delta_exhaustive(h2, k, threads);
    DeltaReport dg = delta_exhaustive(g4, n0 + k, threads);
    add("quotient", "SL(2,Z/4) -> SL(2,Z/2), n0 = " + std::to_string(n0) + ", k = " + std::to_string(k),
        "Delta_" + std::to_string(k) + "(H) = " + show(dh), "<=",
        "Delta_" + std::to_string(n0 + k) + "(G) = " + show(dg), le(dh, dg));
  }

  // Extension by the center: Delta_k(G) <= (2|N|-1) Delta_k(H) + |N| - 1.
  FiniteGroupTable sl23 = FiniteGroupTable::enumerate(F3, 2);
  FiniteGroupTable psl23 = FiniteGroupTable::enumerate(F3, 2, true);
  const long nsize = static_cast<long>(sl23.center().size());
  for (int k = 1; k <= 2; ++k) {
    DeltaReport dg = delta_exhaustive(sl23, k, threads);
    DeltaReport dh = delta_exhaustive(psl23, k, threads);
    bool holds = !dg.attained || (dh.attained && dg.value <= (2 * nsize - 1) * dh.value + nsize - 1);
    std::string rhs = dh.attained ? std::to_string((2 * nsize - 1) * dh.value + nsize - 1) : "-inf";
    add("extension", "SL(2,F3) -> PSL(2,F3), |N| = " + std::to_string(nsize) + ", k = " + std::to_string(k),
        "Delta_" + std::to_string(k) + "(G) = " + show(dg), "<=",
        "(2|N|-1) Delta_" + std::to_string(k) + "(H) + |N| - 1 = " + rhs, holds);
  }

  // Product: Delta_2(S3 x S3) >= Delta_1(S3) + Delta_1(S3), S3 = SL(2,F2).
  std::vector<MatrixSL> pgens;
  for (int offset : {0, 2}) {
    pgens.push_back(embed(elem(1, 2, 1, 2, F2), 4, offset));
    pgens.push_back(embed(elem(2, 1, 1, 2, F2), 4, offset));
  }
  FiniteGroupTable s3xs3 = FiniteGroupTable::generated_by(F2, 4, pgens);
  DeltaReport d1 = delta_exhaustive(h2, 1, threads);
  DeltaReport d2 = delta_exhaustive(s3xs3, 2, threads);
  add("product", "S3 x S3 (|G| = " + std::to_string(s3xs3.size()) + ")", "Delta_2(G) = " + show(d2), ">=",
      "2 Delta_1(S3) = " + std::to_string(2 * d1.value), d1.attained && d2.attained && d2.value >= 2 * d1.value);

  // Splitting collection: the two factors are proper normal subgroups with
  // G -> G/N1 x G/N2 onto, so Delta(G) >= 2.
  std::vector<Elem> f1, f2;
  for (int i = 0; i < 2; ++i) {
    f1.push_back(s3xs3.index_of(pgens[i]));
    f2.push_back(s3xs3.index_of(pgens[2 + i]));
  }
  int split = splitting_lower_bound(s3xs3, {normal_closure(s3xs3, f1), normal_closure(s3xs3, f2)});
  DeltaReport dall = delta_all(s3xs3, threads);
  add("splitting", "S3 x S3 with the two factors", "Delta(G) = " + show(dall), ">=",
      "splitting size = " + std::to_string(split), split == 2 && dall.attained && dall.value >= split);

  // Ball image identity and Lipschitz bound under SL(2,Z/4) -> SL(2,Z/2).
  std::vector<Elem> pi = quotient_map(g4, h2);
  auto classes4 = symmetric_classes(g4);
  bool all_images = true;
  std::size_t sets = 0;
  for (std::size_t i = 0; i < classes4.size(); ++i)
    for (std::size_t j = i; j < classes4.size(); ++j) {
      std::vector<Elem> s{classes4[i].front()};
      if (j != i)
        s.push_back(classes4[j].front());
      int radius = 0;
      all_images = all_images && ball_image_holds(g4, h2, pi, s, threads, radius);
      ++sets;
    }
  add("ball-image", "SL(2,Z/4) -> SL(2,Z/2), " + std::to_string(sets) + " sets S of <= 2 classes, all radii",
      "pi(B_S(d))", "==", "B_pi(S)(d)", all_images);

  {
    // S normally generates G; nu = word norm of T = {E_{1,2}(1)} on H.
    std::vector<Elem> s;
    for (const auto& cls : classes4) {
      s = {cls.front()};
      if (ball_bfs(g4, s).normally_generates)
        break;
      s.clear();
    }
    if (s.empty())
      s = {classes4[0].front(), classes4[1].front()};
    BallReport bs = ball_bfs(g4, s, threads);
    BallReport nu = ball_bfs(h2, {h2.index_of(elem(1, 2, 1, 2, F2))}, threads);
    int c = 0;
    for (Elem x : s)
      c = std::max(c, nu.norm[pi[x]]);
    bool holds = bs.normally_generates;
    int worst = 0;
    for (Elem g = 0; g < g4.size() && holds; ++g) {
      holds = nu.norm[pi[g]] <= c * bs.norm[g];
      worst = std::max(worst, nu.norm[pi[g]] - c * bs.norm[g]);
    }
    add("lipschitz", "SL(2,Z/4) -> SL(2,Z/2), S = " + set_label(g4, s) + ", C = " + std::to_string(c),
        "max nu(pi(g)) - C ||g||_S = " + std::to_string(worst), "<=", "0", holds);
  }

  // B_S(n) B_S(m) = B_S(n+m).
  for (const FiniteGroupTable* t : {&h2, &g4}) {
    auto cls = symmetric_classes(*t);
    std::vector<Elem> s{cls.front().front()};
    BallReport b = ball_bfs(*t, s, threads);
    int top = static_cast<int>(b.growth.size());
    bool holds = true;
    for (int n = 0; n <= top; ++n)
      for (int m = 0; m <= top; ++m) {
        auto prod = setwise_product(*t, ball_members(b, n), ball_members(b, m));
        holds = holds && prod == ball_members(b, n + m);
      }
    add("ball-multiplicative", std::string(t == &h2 ? "SL(2,F2)" : "SL(2,Z/4)") + ", S = " + set_label(*t, s),
        "B_S(n) B_S(m)", "==", "B_S(n+m)", holds);
  }

  // Norm axioms of ||.||_S on SL(2,F3) for the first normally generating class.
  {
    auto cls = symmetric_classes(sl23);
    std::vector<Elem> s;
    for (const auto& c : cls)
      if (ball_bfs(sl23, {c.front()}).normally_generates) {
        s = {c.front()};
        break;
      }
    BallReport b = ball_bfs(sl23, s, threads);
    bool inv = true, sub = true, conj_inv = true;
    for (Elem g = 0; g < sl23.size(); ++g) {
      inv = inv && b.norm[sl23.inv(g)] == b.norm[g];
      for (Elem h = 0; h < sl23.size(); ++h) {
        sub = sub && b.norm[sl23.mul(g, h)] <= b.norm[g] + b.norm[h];
        conj_inv = conj_inv && b.norm[sl23.conj(g, h)] == b.norm[g];
      }
    }
    std::string inst = "SL(2,F3), S = " + set_label(sl23, s);
    add("norm-inverse", inst, "||g^-1||", "==", "||g||", !s.empty() && inv);
    add("norm-subadditive", inst, "||gh||", "<=", "||g|| + ||h||", !s.empty() && sub);
    add("norm-conjugation", inst, "||hgh^-1||", "==", "||g||", !s.empty() && conj_inv);
  }

  // Class sizes in SL(3,F2): (4|S|)^Delta_1 > 168, and (2|S|)^Delta_1 > 168 for
  // classes closed under inversion.
  {
    FiniteGroupTable sl32 = FiniteGroupTable::enumerate(F2, 3);
    DeltaReport d = delta_exhaustive(sl32, 1, threads);
    add("delta1-upper", "SL(3,F2)", "Delta_1 = " + show(d), "<=", "12(n-1) = 24", d.attained && d.value <= 24);
    ConjugacyClasses cc = conjugacy_classes(sl32);
    const Int order = static_cast<unsigned long>(sl32.size());
    for (const auto& c : cc.classes) {
      if (c.front() == sl32.identity())
        continue;
      const Int size = static_cast<unsigned long>(c.size());
      bool symmetric = std::binary_search(c.begin(), c.end(), sl32.inv(c.front()));
      bool holds = d.attained && class_size_bound_holds(order, d.value, size, false);
      if (symmetric)
        holds = holds && class_size_bound_holds(order, d.value, size, true);
      add("class-size", "SL(3,F2), class of " + sl32.element(c.front()).to_string(),
          "log2 |S| = log2 " + size.get_str(), ">",
          std::string(symmetric ? "log2 168 / Delta_1 - 1" : "log2 168 / Delta_1 - 2") +
              " with Delta_1 = " + show(d),
          holds);
    }
  }

  // The class-size bound for a non-simple group: SL(2,F3) with Delta = Delta(G).
  {
    DeltaReport d = delta_all(sl23, threads);
    const Int order = static_cast<unsigned long>(sl23.size());
    ConjugacyClasses cc = conjugacy_classes(sl23);
    bool holds = d.attained && d.value >= 2;
    std::size_t tested = 0;
    for (const auto& c : cc.classes) {
      if (!ball_bfs(sl23, {c.front()}).normally_generates)
        continue;
      ++tested;
      holds = holds && class_size_bound_holds(order, d.value, static_cast<unsigned long>(c.size()), false);
    }
    add("class-size", "SL(2,F3), " + std::to_string(tested) + " normally generating classes",
        "log2 |S|", ">", "log2 24 / Delta - 2 with Delta = " + show(d), holds && tested > 0);
  }

  for (auto [n, q] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{3, 5}, std::pair{4, 2}, std::pair{5, 3}}) {
    PslChainReport chain = check_psl_chain(n, q);
    add("psl-class-chain", "PSL(" + std::to_string(n) + "," + std::to_string(q) + ")",
        "log|G|/(12(n-1)) - 2", ">=", "(n+1) log q / 12 - (2 + log q)/(12(n-1)) - 2", chain.holds);
  }
  return rep;
}

}  // namespace boundgen
