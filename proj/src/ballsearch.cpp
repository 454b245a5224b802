#include "boundgen/ballsearch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <memory>
#include <thread>
#include <unordered_map>

#include "boundgen/error.hpp"
#include "boundgen/witness.hpp"

namespace boundgen {

namespace {

constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
constexpr std::uint64_t kDirectLimit = std::uint64_t{1} << 24;
constexpr int kMaxDigits = 64;
constexpr std::size_t kExhaustiveOrderLimit = 10000;
constexpr std::size_t kMaxCollections = 500000;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("BOUNDGEN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
    fail(ErrorCode::InvalidArgument, std::string("BOUNDGEN_BUDGET is not a positive integer: ") + env);
  }
  return std::size_t{1} << 24;
}

Int sl_order_mod(int n, const Int& l) {
  if (l < 2)
    fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
  Int out = 1;
  Int rest = l;
  for (const Int& p : distinct_prime_factors(l)) {
    unsigned long e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    Int lift;
    mpz_pow_ui(lift.get_mpz_t(), p.get_mpz_t(), (e - 1) * static_cast<unsigned long>(n * n - 1));
    out *= lift * sl_order(n, p);
  }
  return out;
}

FiniteGroupTable::FiniteGroupTable(const Ring& ring, int n, bool psl) : ring_(ring), n_(n), psl_(psl), l_(0) {
  if (!ring.is_finite())
    fail(ErrorCode::UnsupportedRing, "finite group tables need Z/l or F_p, got " + ring.to_string());
  if (ring.modulus() > 255)
    fail(ErrorCode::UnsupportedRing, "finite group tables need l <= 255, got " + ring.modulus().get_str());
  if (n < 1 || n > 8)
    fail(ErrorCode::InvalidArgument, "finite group tables need 1 <= n <= 8");
  l_ = static_cast<unsigned>(ring.modulus().get_ui());
  Int space;
  mpz_ui_pow_ui(space.get_mpz_t(), l_, static_cast<unsigned long>(n * n));
  if (space >= Int("18446744073709551615"))
    fail(ErrorCode::UnsupportedRing, "l^(n^2) does not fit a 64-bit key");
  for (unsigned lam = 1; lam < l_; ++lam) {
    unsigned long p = 1;
    for (int i = 0; i < n; ++i)
      p = p * lam % l_;
    if (p == 1)
      scalars_.push_back(lam);
  }
  residue_.resize(static_cast<std::size_t>(n) * (l_ - 1) * (l_ - 1) + 1);
  for (std::size_t v = 0; v < residue_.size(); ++v)
    residue_[v] = static_cast<std::uint8_t>(v % l_);
  if (space.get_ui() <= kDirectLimit)
    direct_.assign(space.get_ui(), -1);
  else {
    hash_keys_.assign(1 << 16, kEmpty);
    hash_vals_.assign(1 << 16, 0);
  }
}

std::uint64_t FiniteGroupTable::encode(const std::uint8_t* digits) const {
  std::uint64_t code = 0;
  for (int k = n_ * n_ - 1; k >= 0; --k)
    code = code * l_ + digits[k];
  return code;
}

std::uint64_t FiniteGroupTable::canonical(std::uint8_t* digits) const {
  if (!psl_)
    return encode(digits);
  const int m = n_ * n_;
  std::uint64_t best = kEmpty;
  unsigned best_lam = 1;
  std::array<std::uint8_t, kMaxDigits> tmp{};
  for (unsigned lam : scalars_) {
    for (int k = 0; k < m; ++k)
      tmp[k] = static_cast<std::uint8_t>(digits[k] * lam % l_);
    std::uint64_t c = encode(tmp.data());
    if (c < best) {
      best = c;
      best_lam = lam;
    }
  }
  for (int k = 0; k < m; ++k)
    digits[k] = static_cast<std::uint8_t>(digits[k] * best_lam % l_);
  return best;
}

std::optional<Elem> FiniteGroupTable::lookup(std::uint64_t code) const {
  if (!direct_.empty()) {
    std::int32_t v = direct_[code];
    if (v < 0)
      return std::nullopt;
    return static_cast<Elem>(v);
  }
  const std::size_t mask = hash_keys_.size() - 1;
  for (std::size_t pos = mix(code) & mask;; pos = (pos + 1) & mask) {
    if (hash_keys_[pos] == kEmpty)
      return std::nullopt;
    if (hash_keys_[pos] == code)
      return hash_vals_[pos];
  }
}

Elem FiniteGroupTable::insert(std::uint64_t code, const std::uint8_t* digits) {
  const Elem idx = static_cast<Elem>(codes_.size());
  codes_.push_back(code);
  digits_.insert(digits_.end(), digits, digits + n_ * n_);
  if (!direct_.empty()) {
    direct_[code] = static_cast<std::int32_t>(idx);
    return idx;
  }
  if (2 * (hash_count_ + 1) > hash_keys_.size()) {
    std::vector<std::uint64_t> keys(hash_keys_.size() * 2, kEmpty);
    std::vector<Elem> vals(keys.size(), 0);
    const std::size_t mask = keys.size() - 1;
    for (std::size_t i = 0; i < hash_keys_.size(); ++i) {
      if (hash_keys_[i] == kEmpty)
        continue;
      std::size_t pos = mix(hash_keys_[i]) & mask;
      while (keys[pos] != kEmpty)
        pos = (pos + 1) & mask;
      keys[pos] = hash_keys_[i];
      vals[pos] = hash_vals_[i];
    }
    hash_keys_.swap(keys);
    hash_vals_.swap(vals);
  }
  const std::size_t mask = hash_keys_.size() - 1;
  std::size_t pos = mix(code) & mask;
  while (hash_keys_[pos] != kEmpty)
    pos = (pos + 1) & mask;
  hash_keys_[pos] = code;
  hash_vals_[pos] = idx;
  ++hash_count_;
  return idx;
}

Elem FiniteGroupTable::mul(Elem a, Elem b) const {
  const int n = n_;
  const std::uint8_t* x = &digits_[static_cast<std::size_t>(a) * n * n];
  const std::uint8_t* y = &digits_[static_cast<std::size_t>(b) * n * n];
  std::array<std::uint8_t, kMaxDigits> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      unsigned s = 0;
      for (int k = 0; k < n; ++k)
        s += static_cast<unsigned>(x[i * n + k]) * y[k * n + j];
      out[i * n + j] = residue_[s];
    }
  auto r = lookup(canonical(out.data()));
  ensure(r.has_value(), "product lies in the table");
  return *r;
}

std::optional<Elem> FiniteGroupTable::find(const Matrix& m) const {
  if (m.n() != n_ || !(m.ring() == ring_))
    return std::nullopt;
  std::array<std::uint8_t, kMaxDigits> d;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      d[(i - 1) * n_ + (j - 1)] = static_cast<std::uint8_t>(m.at(i, j).get_ui());
  return lookup(canonical(d.data()));
}

Elem FiniteGroupTable::index_of(const MatrixSL& m) const {
  auto r = find(m.matrix());
  if (!r)
    fail(ErrorCode::InvalidArgument, "matrix is not an element of the group table");
  return *r;
}

MatrixSL FiniteGroupTable::element(Elem e) const {
  std::vector<std::vector<Int>> rows(n_, std::vector<Int>(n_));
  const std::uint8_t* d = &digits_[static_cast<std::size_t>(e) * n_ * n_];
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      rows[i][j] = d[i * n_ + j];
  return MatrixSL::trusted(Matrix::from_rows(ring_, rows));
}

void FiniteGroupTable::build(const std::vector<MatrixSL>& gens, std::size_t budget) {
  const int m = n_ * n_;
  std::array<std::uint8_t, kMaxDigits> d{};
  for (int i = 0; i < n_; ++i)
    d[i * n_ + i] = 1;
  insert(canonical(d.data()), d.data());

  std::vector<std::vector<std::uint8_t>> gd;
  for (const MatrixSL& g : gens) {
    if (g.n() != n_ || !(g.ring() == ring_))
      fail(ErrorCode::DimMismatch, "generator does not match the table's ring and dimension");
    std::vector<std::uint8_t> row(m);
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        row[(i - 1) * n_ + (j - 1)] = static_cast<std::uint8_t>(g.at(i, j).get_ui());
    gd.push_back(row);
  }

  // BFS from I by right multiplication; parent/gen give inverses afterwards.
  std::vector<Elem> parent{0};
  std::vector<std::uint32_t> via{0};
  for (std::size_t head = 0; head < codes_.size(); ++head) {
    for (std::size_t g = 0; g < gd.size(); ++g) {
      const std::uint8_t* x = &digits_[head * m];
      const std::uint8_t* y = gd[g].data();
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          unsigned s = 0;
          for (int k = 0; k < n_; ++k)
            s += static_cast<unsigned>(x[i * n_ + k]) * y[k * n_ + j];
          d[i * n_ + j] = static_cast<std::uint8_t>(s % l_);
        }
      std::uint64_t c = canonical(d.data());
      if (lookup(c))
        continue;
      if (codes_.size() >= budget)
        fail(ErrorCode::BudgetExceeded,
             "group has more than " + std::to_string(budget) + " elements (raise BOUNDGEN_BUDGET)");
      insert(c, d.data());
      parent.push_back(static_cast<Elem>(head));
      via.push_back(static_cast<std::uint32_t>(g));
    }
  }

  std::vector<Elem> ginv;
  for (const MatrixSL& g : gens) {
    generators_.push_back(index_of(g));
    ginv.push_back(index_of(g.inverse()));
  }
  // e = parent * g  =>  e^-1 = g^-1 * parent^-1; parents precede children.
  inverse_.assign(codes_.size(), 0);
  for (std::size_t e = 1; e < codes_.size(); ++e)
    inverse_[e] = mul(ginv[via[e]], inverse_[parent[e]]);

  if (psl_)
    center_ = {0};
  else
    for (unsigned lam : scalars_) {
      std::vector<std::vector<Int>> rows(n_, std::vector<Int>(n_, 0));
      for (int i = 0; i < n_; ++i)
        rows[i][i] = lam;
      if (auto e = find(Matrix::from_rows(ring_, rows)))
        center_.push_back(*e);
    }
  std::sort(center_.begin(), center_.end());
}

FiniteGroupTable FiniteGroupTable::enumerate(const Ring& ring, int n, bool psl, std::size_t budget) {
  FiniteGroupTable t(ring, n, psl);
  Int order = sl_order_mod(n, ring.modulus());
  if (psl)
    order /= static_cast<long>(t.scalars_.size());
  if (order > Int(static_cast<unsigned long>(budget)))
    fail(ErrorCode::BudgetExceeded, std::string(psl ? "PSL" : "SL") + "(" + std::to_string(n) + ", " +
                                        ring.to_string() + ") has " + order.get_str() + " elements, budget is " +
                                        std::to_string(budget));
  std::vector<MatrixSL> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        gens.push_back(elem(i, j, 1, n, ring));
  t.build(gens, budget);
  t.expected_ = order;
  ensure(Int(static_cast<unsigned long>(t.size())) == order, "enumerated order matches the closed form");
  return t;
}

FiniteGroupTable FiniteGroupTable::generated_by(const Ring& ring, int n, const std::vector<MatrixSL>& gens,
                                                std::size_t budget) {
  FiniteGroupTable t(ring, n, false);
  t.build(gens, budget);
  return t;
}

ConjugacyClasses conjugacy_classes(const FiniteGroupTable& g) {
  ConjugacyClasses out;
  constexpr std::uint32_t none = ~std::uint32_t{0};
  out.class_of.assign(g.size(), none);
  for (Elem e = 0; e < g.size(); ++e) {
    if (out.class_of[e] != none)
      continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    std::vector<Elem> orbit{e};
    out.class_of[e] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (Elem h : g.generators()) {
        Elem c = g.conj(orbit[head], h);
        if (out.class_of[c] == none) {
          out.class_of[c] = id;
          orbit.push_back(c);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.classes.push_back(std::move(orbit));
  }
  return out;
}

std::vector<AlphabetEntry> class_closure(const FiniteGroupTable& g, const std::vector<Elem>& s) {
  std::unordered_map<Elem, AlphabetEntry> seen;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int e : {1, -1}) {
      Elem start = e == 1 ? s[i] : g.inv(s[i]);
      if (start == g.identity() || seen.count(start))
        continue;
      std::vector<Elem> orbit{start};
      seen[start] = AlphabetEntry{start, i, e, g.identity()};
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        const AlphabetEntry cur = seen[orbit[head]];
        for (Elem h : g.generators()) {
          Elem c = g.conj(cur.value, h);
          if (seen.count(c))
            continue;
          seen[c] = AlphabetEntry{c, i, e, g.mul(h, cur.conjugator)};
          orbit.push_back(c);
        }
      }
    }
  std::vector<AlphabetEntry> out;
  out.reserve(seen.size());
  for (const auto& [k, v] : seen)
    out.push_back(v);
  std::sort(out.begin(), out.end(), [](const AlphabetEntry& a, const AlphabetEntry& b) { return a.value < b.value; });
  return out;
}

BallReport ball_bfs(const FiniteGroupTable& g, const std::vector<Elem>& s, int threads) {
  BallReport r;
  r.S = s;
  r.alphabet = class_closure(g, s);
  const std::size_t size = g.size();
  r.norm.assign(size, -1);
  r.parent.assign(size, 0);
  r.via.assign(size, 0);
  r.norm[g.identity()] = 0;
  r.growth.push_back(1);

  const std::uint64_t A = r.alphabet.size();
  std::unique_ptr<std::atomic<std::uint64_t>[]> best(new std::atomic<std::uint64_t>[size]);
  for (std::size_t i = 0; i < size; ++i)
    best[i].store(kEmpty, std::memory_order_relaxed);
  const int workers = std::max(1, threads);

  std::vector<Elem> frontier{g.identity()};
  std::size_t reached = 1;
  int depth = 0;
  std::vector<Elem> inverse_letter(A);
  for (std::uint64_t e = 0; e < A; ++e)
    inverse_letter[e] = g.inv(r.alphabet[e].value);

  auto run_chunks = [&](std::size_t count, const std::function<void(std::size_t, std::size_t, std::vector<Elem>&)>& job) {
    std::vector<std::vector<Elem>> found(workers);
    if (workers == 1 || count < 1024) {
      job(0, count, found[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (count + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t lo = std::min(count, w * chunk), hi = std::min(count, lo + chunk);
        pool.emplace_back(job, lo, hi, std::ref(found[w]));
      }
      for (auto& t : pool)
        t.join();
    }
    std::vector<Elem> next;
    for (auto& f : found)
      next.insert(next.end(), f.begin(), f.end());
    return next;
  };

  while (!frontier.empty() && A > 0 && reached < size) {
    std::vector<Elem> next;
    if (size - reached < frontier.size()) {
      // Bottom-up: few elements remain, so each one looks for its own parent.
      // The alphabet is closed under inverses, so t lies one step out iff
      // t a^-1 is in the frontier for some letter a; the least such letter wins.
      std::vector<Elem> unvisited;
      for (std::size_t t = 0; t < size; ++t)
        if (r.norm[t] == -1)
          unvisited.push_back(static_cast<Elem>(t));
      next = run_chunks(unvisited.size(), [&](std::size_t lo, std::size_t hi, std::vector<Elem>& found) {
        for (std::size_t i = lo; i < hi; ++i) {
          const Elem t = unvisited[i];
          for (std::uint64_t e = 0; e < A; ++e) {
            Elem f = g.mul(t, inverse_letter[e]);
            if (r.norm[f] == depth) {
              r.parent[t] = f;
              r.via[t] = static_cast<std::uint32_t>(e);
              found.push_back(t);
              break;
            }
          }
        }
      });
      std::sort(next.begin(), next.end());
    } else {
      // Top-down: each target keeps the least (frontier position, letter)
      // key, which is exactly the discovery a serial scan would make first.
      next = run_chunks(frontier.size(), [&](std::size_t lo, std::size_t hi, std::vector<Elem>& found) {
        for (std::size_t p = lo; p < hi; ++p)
          for (std::uint64_t e = 0; e < A; ++e) {
            Elem t = g.mul(frontier[p], r.alphabet[e].value);
            if (r.norm[t] != -1)
              continue;
            std::uint64_t key = p * A + e;
            std::uint64_t cur = best[t].load(std::memory_order_relaxed);
            while (key < cur && !best[t].compare_exchange_weak(cur, key, std::memory_order_relaxed)) {
            }
            if (cur == kEmpty && key < cur)
              found.push_back(t);
          }
      });
      std::sort(next.begin(), next.end(), [&](Elem a, Elem b) {
        return best[a].load(std::memory_order_relaxed) < best[b].load(std::memory_order_relaxed);
      });
      for (Elem t : next) {
        std::uint64_t key = best[t].load(std::memory_order_relaxed);
        r.parent[t] = frontier[key / A];
        r.via[t] = static_cast<std::uint32_t>(key % A);
      }
    }
    if (next.empty())
      break;
    for (Elem t : next)
      r.norm[t] = depth + 1;
    ++depth;
    reached += next.size();
    r.growth.push_back(reached);
    frontier.swap(next);
  }
  r.normally_generates = reached == size;
  r.diameter = r.normally_generates ? depth : -1;
  return r;
}

ConjWord ball_word(const FiniteGroupTable& g, const BallReport& r, Elem x) {
  if (r.norm[x] < 0)
    fail(ErrorCode::InvalidArgument, "element is outside the normal closure of S");
  std::vector<std::uint32_t> letters;
  for (Elem cur = x; cur != g.identity(); cur = r.parent[cur])
    letters.push_back(r.via[cur]);
  std::reverse(letters.begin(), letters.end());
  ConjWord w;
  for (std::uint32_t a : letters) {
    const AlphabetEntry& e = r.alphabet[a];
    w.push(e.gen, e.exponent, g.element(e.conjugator));
  }
  return w;
}

std::vector<Elem> ball_members(const BallReport& r, int d) {
  std::vector<Elem> out;
  for (Elem e = 0; e < r.norm.size(); ++e)
    if (r.norm[e] >= 0 && r.norm[e] <= d)
      out.push_back(e);
  return out;
}

std::vector<std::vector<Elem>> symmetric_classes(const FiniteGroupTable& g) {
  ConjugacyClasses cc = conjugacy_classes(g);
  std::vector<bool> used(cc.classes.size(), false);
  std::vector<std::vector<Elem>> out;
  for (std::size_t c = 0; c < cc.classes.size(); ++c) {
    if (used[c] || cc.classes[c].front() == g.identity())
      continue;
    used[c] = true;
    std::vector<Elem> sym = cc.classes[c];
    std::size_t ci = cc.class_of[g.inv(cc.classes[c].front())];
    if (!used[ci]) {
      used[ci] = true;
      sym.insert(sym.end(), cc.classes[ci].begin(), cc.classes[ci].end());
      std::sort(sym.begin(), sym.end());
    }
    out.push_back(std::move(sym));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

// Calls visit(indices) for every subset of {0..c-1} of size 1..kmax in
// size-then-lexicographic order; stops early when visit returns false.
template <class F>
void for_each_collection(std::size_t c, std::size_t kmax, F&& visit) {
  for (std::size_t size = 1; size <= std::min(c, kmax); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i)
      idx[i] = i;
    while (true) {
      if (!visit(idx))
        return;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == c - size + (i - 1))
        --i;
      if (i == 0)
        break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j)
        idx[j] = idx[j - 1] + 1;
    }
  }
}

std::size_t binomial_sum(std::size_t c, std::size_t kmax) {
  std::size_t total = 0, term = 1;
  for (std::size_t j = 1; j <= std::min(c, kmax); ++j) {
    term = term * (c - j + 1) / j;
    total += term;
    if (total > kMaxCollections)
      return total;
  }
  return total;
}

}  // namespace

bool is_simple(const FiniteGroupTable& g) {
  if (g.size() <= 1)
    return false;
  for (const auto& cls : symmetric_classes(g))
    if (!ball_bfs(g, {cls.front()}).normally_generates)
      return false;
  return true;
}

DeltaReport delta_exhaustive(const FiniteGroupTable& g, int k, int threads) {
  if (k < 1)
    fail(ErrorCode::InvalidArgument, "Delta_k needs k >= 1");
  DeltaReport rep;
  rep.k = k;
  if (g.size() == 1) {
    rep.attained = true;
    return rep;
  }
  auto classes = symmetric_classes(g);
  if (is_simple(g)) {
    rep.simple_shortcut = true;
    rep.attained = true;
    for (const auto& cls : classes) {
      BallReport b = ball_bfs(g, {cls.front()}, threads);
      ++rep.collections_checked;
      if (b.diameter > rep.value || rep.witness.empty()) {
        rep.value = b.diameter;
        rep.witness = {cls.front()};
      }
    }
    return rep;
  }
  if (k >= 2 && g.size() > kExhaustiveOrderLimit)
    fail(ErrorCode::BudgetExceeded, "exhaustive Delta_k for k >= 2 needs |G| <= 10000, got " + std::to_string(g.size()));
  if (binomial_sum(classes.size(), static_cast<std::size_t>(k)) > kMaxCollections)
    fail(ErrorCode::BudgetExceeded, "too many class collections to sweep");
  for_each_collection(classes.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& idx) {
    std::vector<Elem> s;
    for (std::size_t i : idx)
      s.push_back(classes[i].front());
    BallReport b = ball_bfs(g, s, threads);
    ++rep.collections_checked;
    if (b.normally_generates && (!rep.attained || b.diameter > rep.value)) {
      rep.attained = true;
      rep.value = b.diameter;
      rep.witness = s;
    }
    return true;
  });
  return rep;
}

DeltaReport delta_all(const FiniteGroupTable& g, int threads) {
  int c = static_cast<int>(symmetric_classes(g).size());
  DeltaReport rep = delta_exhaustive(g, std::max(1, c), threads);
  return rep;
}

int normal_generation_number(const FiniteGroupTable& g) {
  if (g.size() == 1)
    return 0;
  auto classes = symmetric_classes(g);
  int answer = -1;
  for_each_collection(classes.size(), classes.size(), [&](const std::vector<std::size_t>& idx) {
    if (idx.size() >= 2 && g.size() > kExhaustiveOrderLimit)
      fail(ErrorCode::BudgetExceeded, "normal generation number needs |G| <= 10000");
    std::vector<Elem> s;
    for (std::size_t i : idx)
      s.push_back(classes[i].front());
    if (ball_bfs(g, s).normally_generates) {
      answer = static_cast<int>(idx.size());
      return false;
    }
    return true;
  });
  ensure(answer > 0, "the group is normally generated by all of its classes");
  return answer;
}

std::vector<Elem> quotient_map(const FiniteGroupTable& g, const FiniteGroupTable& h) {
  if (g.n() != h.n())
    fail(ErrorCode::DimMismatch, "quotient map needs equal dimensions");
  std::vector<Elem> out(g.size());
  const bool reduce = !(g.ring() == h.ring());
  for (Elem e = 0; e < g.size(); ++e) {
    Matrix m = g.element(e).matrix();
    if (reduce)
      m = m.reduce(h.ring());
    auto img = h.find(m);
    if (!img)
      fail(ErrorCode::InvalidArgument, "image of an element is missing from the target table");
    out[e] = *img;
  }
  return out;
}

std::vector<Elem> normal_closure(const FiniteGroupTable& g, const std::vector<Elem>& s) {
  BallReport r = ball_bfs(g, s);
  std::vector<Elem> out;
  for (Elem e = 0; e < g.size(); ++e)
    if (r.norm[e] >= 0)
      out.push_back(e);
  return out;
}

int splitting_lower_bound(const FiniteGroupTable& g, const std::vector<std::vector<Elem>>& normals) {
  std::vector<std::vector<Elem>> coset_of;
  std::size_t product = 1;
  for (std::vector<Elem> n : normals) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    if (n.size() >= g.size() || normal_closure(g, n) != n)
      return 0;
    std::vector<Elem> ids(g.size());
    std::size_t count = 0;
    for (Elem x = 0; x < g.size(); ++x) {
      Elem least = x;
      for (Elem y : n)
        least = std::min(least, g.mul(x, y));
      ids[x] = least;
      count += least == x;
    }
    product *= count;
    coset_of.push_back(std::move(ids));
  }
  std::vector<std::vector<Elem>> tuples(g.size());
  for (Elem x = 0; x < g.size(); ++x)
    for (const auto& ids : coset_of)
      tuples[x].push_back(ids[x]);
  std::sort(tuples.begin(), tuples.end());
  std::size_t distinct = std::unique(tuples.begin(), tuples.end()) - tuples.begin();
  return distinct == product ? static_cast<int>(normals.size()) : 0;
}

}  // namespace boundgen
