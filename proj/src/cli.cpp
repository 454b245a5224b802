#include "boundgen/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "boundgen/ballsearch.hpp"
#include "boundgen/error.hpp"
#include "boundgen/factorize.hpp"
#include "boundgen/hessenberg.hpp"
#include "boundgen/identities.hpp"
#include "boundgen/ideals.hpp"
#include "boundgen/inequalities.hpp"
#include "boundgen/io.hpp"
#include "boundgen/witness.hpp"

namespace boundgen::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;

struct Globals {
  int threads = 1;
  std::uint64_t seed = 0;
};

// Reports never mention the thread count, so output is byte-identical across --threads.
Json header(const std::string& verb, const Globals& g, const std::optional<Ring>& ring, int n,
            const std::vector<std::string>& formulas) {
  Json h;
  h["tool"] = "boundgen";
  h["version"] = kVersion;
  h["verb"] = verb;
  h["ring"] = ring ? Json(ring->to_string()) : Json(nullptr);
  h["n"] = n > 0 ? Json(n) : Json(nullptr);
  h["seed"] = g.seed;
  h["formulas"] = formulas;
  return h;
}

Json support_list(const std::vector<PrimeSupport>& s) {
  Json a = Json::array();
  for (const PrimeSupport& p : s)
    a.push_back(io::prime_support_to_json(p));
  return a;
}

Int parse_int(const std::string& text, const std::string& flag) {
  Int v;
  bool digits = !text.empty() && text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
                text != "-";
  if (!digits || v.set_str(text, 10) != 0)
    fail(ErrorCode::InvalidArgument, flag + ": expected a decimal integer, got \"" + text + "\"");
  return v;
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f)
    fail(ErrorCode::InvalidArgument, "cannot write " + path);
  f << j.dump(2) << "\n";
}

// Replays a certificate; the report carries the verdict.
Json verified_certificate(const Certificate& c, bool& ok) {
  VerifyResult v = verify(c);
  ok = ok && v.ok;
  Json j = io::certificate_to_json(c);
  j["verified"] = v.ok;
  return j;
}

Json matrices(const FiniteGroupTable& g, const std::vector<Elem>& xs) {
  Json a = Json::array();
  for (Elem x : xs)
    a.push_back(io::matrix_to_json(g.element(x)));
  return a;
}

// ---------------------------------------------------------------------------

int cmd_pia(const Globals& gl, const std::string& file, std::ostream& out) {
  MatrixSL a = io::matrix_sl_from_json(io::read_json_file(file));
  Json r;
  r["header"] = header("pia", gl, a.ring(), a.n(), {"J = J_1 + ... + J_{n+1} <= I", "E(A,4) contains E_{1,n}(J)"});
  r["matrix"] = io::matrix_to_json(a);
  r["pi"] = io::prime_support_to_json(pi_support(a));
  r["scalar"] = a.is_scalar();
  bool ok = true;
  if (a.n() >= 3) {
    ObstructionIdeal ob = scalar_obstruction_ideal(a);
    Json o;
    o["I"] = io::int_to_json(ob.I);
    o["J"] = io::int_to_json(ob.J);
    o["depth_total"] = ob.depth_total;
    Json parts = Json::array();
    for (const ECertificate& c : ob.parts) {
      bool part_ok = eval(c.word(1), GenSet({a})) == c.target(1) && c.word(1).length() == 4;
      ok = ok && part_ok;
      Json p;
      p["label"] = c.label;
      p["t"] = io::int_to_json(c.t);
      p["q"] = io::int_to_json(c.q);
      p["length"] = c.depth();
      p["verified"] = part_ok;
      parts.push_back(p);
    }
    o["parts"] = parts;
    o["J_divides_I"] = divides(ob.J, ob.I, a.ring()) || ob.I == 0;
    r["obstruction"] = o;
  } else {
    r["obstruction"] = nullptr;
  }
  r["verified"] = ok;
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_normgen(const Globals& gl, const std::string& file, bool no_assume, const std::string& cert_out,
                std::ostream& out) {
  GenSet s = io::genset_from_json(io::read_json_file(file));
  if (s.empty())
    fail(ErrorCode::InvalidArgument, "normgen: the generating set is empty");
  Decision d = decide_normal_generation(s, !no_assume);
  Json r;
  r["header"] = header("normgen", gl, s.ring(), s.n(), {"||E_{1,n}(1)||_S <= 4 k (n+1)"});
  r["decision"] = d.yes ? "yes" : "no";
  bool ok = true;
  if (!d.yes) {
    // Every prime lies in the intersection when all_primes; 2 is the least one.
    r["common_prime"] = d.all_primes ? Json("2") : Json(d.common_prime.get_str());
    r["all_primes"] = d.all_primes;
  }
  r["assume_el_generates"] = d.assume_el_generates;
  r["supports"] = support_list(d.supports);
  if (d.yes) {
    Json terms = Json::array();
    for (const DecisionTerm& t : d.terms) {
      Json j;
      j["gen"] = t.gen;
      j["source"] = t.source;
      j["t"] = io::int_to_json(t.t);
      j["coefficient"] = io::int_to_json(t.coefficient);
      j["length"] = t.length;
      terms.push_back(j);
    }
    r["terms"] = terms;
    r["length"] = d.word.length();
    r["length_bound"] = d.length_bound;
    Certificate c = make_certificate(s, d.word);
    ok = c.target == elem(1, s.n(), 1, s.n(), s.ring()) && d.word.length() <= d.length_bound;
    Json cj = verified_certificate(c, ok);
    if (!cert_out.empty())
      write_file(cert_out, cj);
    r["certificate"] = cj;
  }
  r["verified"] = ok;
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_factor(const Globals& gl, const std::string& file, const std::string& ring_text, bool bounded,
               const std::string& cert_out, std::ostream& out) {
  MatrixSL a = io::matrix_sl_from_json(io::read_json_file(file));
  if (!ring_text.empty())
    a = a.reduce(Ring::parse(ring_text));
  if (!a.ring().is_finite() && bounded)
    fail(ErrorCode::UnsupportedRing, "factor --bounded: no uniform length bound over Z; drop --bounded");
  const bool semilocal = a.ring().is_finite();
  const std::string method = semilocal ? "semilocal" : "euclid";
  const Json bound = semilocal ? Json(3 * (a.n() - 1)) : Json(nullptr);
  ElemFactorization f = [&] {
    if (semilocal)
      return factor_semilocal(a);
    ElemFactorization e = factor_euclid(a);
    return a.n() >= 3 ? normalize_elementary_word(e.gens, e.word) : e;
  }();
  Certificate c = make_certificate(f.gens, f.word);
  bool ok = c.target == a;
  if (!bound.is_null())
    ok = ok && f.word.length() <= bound.get<std::size_t>();
  Json r;
  r["header"] = header("factor", gl, a.ring(), a.n(),
                       a.ring().is_finite() ? std::vector<std::string>{"||A||_EL <= 3(n-1) over semilocal rings"}
                                            : std::vector<std::string>{});
  r["method"] = method;
  r["length"] = f.word.length();
  r["bound"] = bound;
  Json cj = verified_certificate(c, ok);
  if (!cert_out.empty())
    write_file(cert_out, cj);
  r["certificate"] = cj;
  r["verified"] = ok;
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_hessenberg(const Globals& gl, const std::string& file, std::ostream& out) {
  MatrixSL m = io::matrix_sl_from_json(io::read_json_file(file));
  HessenbergCert h = to_hessenberg(m);
  bool ok = h.H.is_upper_hessenberg() && h.P * m * h.P.inverse() == h.H;
  Json r;
  r["header"] = header("hessenberg", gl, m.ring(), m.n(), {"P M P^-1 = H, P = diag(1, *)"});
  r["H"] = io::matrix_to_json(h.H);
  r["P"] = io::matrix_to_json(h.P);
  r["verified"] = ok;
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

struct BallArgs {
  std::string ring;
  int n = 0;
  std::string gens;
  bool psl = false;
  std::string csv;
  std::size_t samples = 64;
};

int cmd_ball(const Globals& gl, const BallArgs& a, std::ostream& out) {
  const Ring ring = Ring::parse(a.ring);
  GenSet s = io::genset_from_json(io::read_json_file(a.gens));
  if (s.n() != a.n)
    fail(ErrorCode::DimMismatch, "--gens has n = " + std::to_string(s.n()) + " but --n " + std::to_string(a.n));
  if (s.ring() != ring)
    s = s.reduced(ring);
  FiniteGroupTable g = FiniteGroupTable::enumerate(ring, a.n, a.psl);
  std::vector<Elem> S;
  for (const MatrixSL& m : s.elements())
    S.push_back(g.index_of(m));
  BallReport b = ball_bfs(g, S, gl.threads);

  // Replay a deterministic sample of BFS words, always including one element of maximal norm.
  std::vector<Elem> sample;
  const std::size_t step = std::max<std::size_t>(1, g.size() / std::max<std::size_t>(1, a.samples));
  for (std::size_t e = 0; e < g.size() && sample.size() < a.samples; e += step)
    if (b.norm[e] >= 0)
      sample.push_back(static_cast<Elem>(e));
  std::optional<Elem> far;
  for (std::size_t e = 0; e < g.size(); ++e)
    if (b.norm[e] >= 0 && (!far || b.norm[e] > b.norm[*far]))
      far = static_cast<Elem>(e);
  if (far)
    sample.push_back(*far);
  GenSet table_gens(ring, a.n);
  for (Elem x : S)
    table_gens.add(g.element(x));
  std::size_t replay_failures = 0;
  for (Elem x : sample) {
    ConjWord w = ball_word(g, b, x);
    auto found = g.find(eval(w, table_gens).matrix());
    if (!found || *found != x || w.length() != static_cast<std::size_t>(b.norm[x]))
      ++replay_failures;
  }
  bool ok = replay_failures == 0;

  Json r;
  std::vector<std::string> formulas;
  Json bound = nullptr;
  if (!a.psl && ring.is_finite() && a.n >= 3) {
    BoundParams p;
    p.modulus = ring.modulus();
    BoundValue v = delta_upper(a.n, static_cast<int>(S.size()), Regime::Residue, p);
    formulas.push_back(v.formula);
    bound = io::int_to_json(v.value);
  }
  r["header"] = header("ball", gl, ring, a.n, formulas);
  r["group"] = a.psl ? "PSL" : "SL";
  r["order"] = g.size();
  r["expected_order"] = g.expected_order() ? io::int_to_json(*g.expected_order()) : Json(nullptr);
  r["S"] = matrices(g, S);
  r["alphabet_size"] = b.alphabet.size();
  r["normally_generates"] = b.normally_generates;
  r["diameter"] = b.normally_generates ? Json(b.diameter) : Json("inf");
  r["growth"] = b.growth;
  r["upper_bound"] = bound;
  if (!bound.is_null() && b.normally_generates)
    r["within_upper_bound"] = Int(b.diameter) <= io::int_from_json(bound, "$");
  r["replayed"] = sample.size();
  r["replay_failures"] = replay_failures;
  if (far) {
    ConjWord w = ball_word(g, b, *far);
    r["extremal_certificate"] = verified_certificate(make_certificate(table_gens, w), ok);
  }
  r["verified"] = ok;
  if (!a.csv.empty()) {
    std::ofstream f(a.csv);
    if (!f)
      fail(ErrorCode::InvalidArgument, "cannot write " + a.csv);
    f << "radius,ball_size\n";
    std::size_t total = 0;
    for (std::size_t d = 0; d < b.growth.size(); ++d) {
      total = b.growth[d];
      f << d << "," << total << "\n";
    }
  }
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_delta(const Globals& gl, const std::string& ring_text, int n, int k, bool all, bool psl, std::ostream& out) {
  const Ring ring = Ring::parse(ring_text);
  FiniteGroupTable g = FiniteGroupTable::enumerate(ring, n, psl);
  DeltaReport d = all ? delta_all(g, gl.threads) : delta_exhaustive(g, k, gl.threads);
  Json r;
  r["header"] = header("delta", gl, ring, n, {all ? "Delta(G) = sup_k Delta_k(G)" : "Delta_k(G) = max ||G||_S, |S| <= k"});
  r["group"] = psl ? "PSL" : "SL";
  r["order"] = g.size();
  r["k"] = all ? Json("all") : Json(k);
  r["attained"] = d.attained;
  r["value"] = d.attained ? Json(d.value) : Json("-inf");
  r["witness"] = matrices(g, d.witness);
  r["simple_shortcut"] = d.simple_shortcut;
  r["collections_checked"] = d.collections_checked;
  bool ok = true;
  if (d.attained && !d.witness.empty()) {
    BallReport b = ball_bfs(g, d.witness, gl.threads);
    ok = b.normally_generates && b.diameter == d.value;
  }
  r["verified"] = ok;
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_witness(const Globals& gl, int n, const std::vector<std::string>& prime_text, bool quotient,
                const std::string& cert_out, std::ostream& out) {
  std::vector<Int> primes;
  for (const std::string& p : prime_text)
    primes.push_back(parse_int(p, "--primes"));
  LowerBoundWitness w = build_lower_witness(n, primes);
  Json r;
  r["header"] = header("witness-lower", gl, Ring::integers(), n,
                       {"S = {E_{1,n}(r_i)}, r_i = prod_{j != i} p_j", "sum f_i r_i = 1"});
  r["k"] = w.k;
  Json ps = Json::array(), rs = Json::array(), fs = Json::array();
  for (int i = 0; i < w.k; ++i) {
    ps.push_back(io::int_to_json(w.primes[i]));
    rs.push_back(io::int_to_json(w.r[i]));
    fs.push_back(io::int_to_json(w.f[i]));
  }
  r["primes"] = ps;
  r["r"] = rs;
  r["f"] = fs;
  r["gens"] = io::genset_to_json(w.gens);
  bool ok = w.obstruction_holds;
  Certificate c = make_certificate(w.gens, w.crt_word);
  ok = ok && c.target == elem(1, n, 1, n, Ring::integers());
  Json cj = verified_certificate(c, ok);
  if (!cert_out.empty())
    write_file(cert_out, cj);
  r["crt_certificate"] = cj;
  r["crt_length"] = w.crt_word.length();
  r["membership"] = w.membership;
  r["supports"] = support_list(w.supports);
  r["obstruction_holds"] = w.obstruction_holds;
  r["certified_lower"] = w.certified_lower;
  r["assume_el_generates"] = w.assume_el_generates;
  if (quotient) {
    Int m = 1;
    for (const Int& p : w.primes)
      m *= p;
    const Ring ring = Ring::residue(m);
    FiniteGroupTable g = FiniteGroupTable::enumerate(ring, n);
    std::vector<Elem> S;
    for (const MatrixSL& s : w.gens.elements())
      S.push_back(g.index_of(s.reduce(ring)));
    BallReport b = ball_bfs(g, S, gl.threads);
    BoundParams p;
    p.modulus = m;
    BoundValue up = delta_upper(n, w.k, Regime::Residue, p);
    Json q;
    q["ring"] = ring.to_string();
    q["order"] = g.size();
    q["normally_generates"] = b.normally_generates;
    q["diameter"] = b.normally_generates ? Json(b.diameter) : Json("inf");
    q["lower_bound"] = w.k;
    q["upper_bound"] = io::int_to_json(up.value);
    q["upper_formula"] = up.formula;
    bool in_range = b.normally_generates && b.diameter >= w.k && Int(b.diameter) <= up.value;
    q["within_bounds"] = in_range;
    ok = ok && in_range;
    r["quotient"] = q;
  }
  r["verified"] = ok;
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

struct BoundArgs {
  std::string regime;
  int n = 0;
  int k = 0;
  std::string cn, d, l;
};

int cmd_bound(const Globals& gl, const BoundArgs& a, std::ostream& out) {
  Regime reg = parse_regime(a.regime);
  BoundParams p;
  if (!a.cn.empty())
    p.c_n = parse_int(a.cn, "--cn");
  if (!a.d.empty())
    p.d = parse_int(a.d, "--d");
  if (!a.l.empty())
    p.modulus = parse_int(a.l, "--l");
  BoundValue v = delta_upper(a.n, a.k, reg, p);
  Json r;
  r["header"] = header("bound", gl, std::nullopt, a.n, {v.formula});
  r["regime"] = regime_name(v.regime);
  r["k"] = a.k;
  r["value"] = io::int_to_json(v.value);
  r["formula"] = v.formula;
  r["source"] = v.source;
  out << r.dump(2) << "\n";
  return kOk;
}

struct ClassArgs {
  std::string order, delta, class_size;
  int psl_n = 0;
  std::string psl_q;
};

int cmd_class_bound(const Globals& gl, const ClassArgs& a, std::ostream& out) {
  Json r;
  bool ok = true;
  if (a.psl_n > 0 || !a.psl_q.empty()) {
    if (a.psl_n <= 0 || a.psl_q.empty())
      fail(ErrorCode::InvalidArgument, "--psl-n and --psl-q must be given together");
    PslChainReport c = check_psl_chain(a.psl_n, parse_int(a.psl_q, "--psl-q"));
    r["header"] = header("class-bound", gl, Ring::prime_field(c.q), a.psl_n,
                         {"log2|C| > log2|G|/Delta - 2", "Delta(PSL(n,q)) <= 12(n-1)"});
    r["order"] = io::int_to_json(c.order);
    Json steps = Json::array();
    for (const ChainStep& s : c.steps) {
      Json j;
      j["name"] = s.name;
      j["lhs"] = s.lhs;
      j["rhs"] = s.rhs;
      j["holds"] = s.holds;
      steps.push_back(j);
    }
    r["chain"] = steps;
    r["holds"] = c.holds;
    ok = c.holds;
  } else {
    if (a.order.empty() || a.delta.empty())
      fail(ErrorCode::InvalidArgument, "class-bound needs --order and --delta, or --psl-n and --psl-q");
    Int order = parse_int(a.order, "--order");
    Int delta = parse_int(a.delta, "--delta");
    ClassSizeBound b = class_size_lower(order, delta);
    r["header"] = header("class-bound", gl, std::nullopt, 0,
                         {"log2|C| > log2|G|/Delta - 2 (generic)", "log2|C| > log2|G|/Delta - 1 (symmetric)"});
    r["order"] = io::int_to_json(b.order);
    r["delta"] = io::int_to_json(b.delta);
    r["generic_threshold_log2"] = b.generic_threshold;
    r["symmetric_threshold_log2"] = b.symmetric_threshold;
    r["min_size_generic"] = io::int_to_json(b.min_size_generic);
    r["min_size_symmetric"] = io::int_to_json(b.min_size_symmetric);
    if (!a.class_size.empty()) {
      Int s = parse_int(a.class_size, "--class-size");
      r["class_size"] = io::int_to_json(s);
      r["holds_generic"] = class_size_bound_holds(order, delta, s, false);
      r["holds_symmetric"] = class_size_bound_holds(order, delta, s, true);
    }
  }
  out << r.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_verify_word(const Globals& gl, const std::string& file, std::ostream& out) {
  Certificate c = io::certificate_from_json(io::read_json_file(file));
  VerifyResult v = verify(c);
  Json r;
  r["header"] = header("verify-word", gl, c.target.ring(), c.target.n(), {});
  r["ok"] = v.ok;
  r["length"] = c.word.length();
  r["claimed_length"] = c.claimed_length;
  r["first_mismatch"] = v.first_mismatch ? Json(*v.first_mismatch) : Json(nullptr);
  r["message"] = v.message;
  out << r.dump(2) << "\n";
  return v.ok ? kOk : kVerifyFailed;
}

int cmd_identities(const Globals& gl, std::size_t count, std::ostream& out) {
  IdentityReport rep = check_identities(gl.seed, count);
  Json r;
  r["header"] = header("check-identities", gl, std::nullopt, 0, {});
  Json checks = Json::array();
  for (const IdentityCheck& c : rep.checks) {
    Json j;
    j["name"] = c.name;
    j["draws"] = c.draws;
    j["failures"] = c.failures;
    j["first_failure"] = c.first_failure.empty() ? Json(nullptr) : Json(c.first_failure);
    checks.push_back(j);
  }
  r["checks"] = checks;
  r["all_hold"] = rep.all_hold();
  out << r.dump(2) << "\n";
  return rep.all_hold() ? kOk : kVerifyFailed;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s)
    q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_inequalities(const Globals& gl, const std::string& suite, const std::string& csv, std::ostream& out) {
  InequalityReport rep = check_inequalities(suite, gl.threads);
  Json r;
  r["header"] = header("check-inequalities", gl, std::nullopt, 0, {});
  r["suite"] = rep.suite;
  Json checks = Json::array();
  for (const InequalityCheck& c : rep.checks) {
    Json j;
    j["name"] = c.name;
    j["instance"] = c.instance;
    j["lhs"] = c.lhs;
    j["relation"] = c.relation;
    j["rhs"] = c.rhs;
    j["holds"] = c.holds;
    checks.push_back(j);
  }
  r["checks"] = checks;
  r["all_hold"] = rep.all_hold();
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f)
      fail(ErrorCode::InvalidArgument, "cannot write " + csv);
    f << "name,instance,lhs,relation,rhs,holds\n";
    for (const InequalityCheck& c : rep.checks)
      f << csv_field(c.name) << "," << csv_field(c.instance) << "," << csv_field(c.lhs) << "," << c.relation << ","
        << csv_field(c.rhs) << "," << (c.holds ? "true" : "false") << "\n";
  }
  out << r.dump(2) << "\n";
  return rep.all_hold() ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact word-norm certificates and bounds for SL(n, R)", "boundgen"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Globals gl;
  app.add_option("--threads", gl.threads, "Worker threads for finite-group searches")->check(CLI::Range(1, 256));
  app.add_option("--seed", gl.seed, "Seed for randomized checks");

  std::function<int()> action;

  std::string file, ring_text, cert_out, csv, suite = "small";
  bool flag_a = false, flag_b = false;

  auto* pia = app.add_subcommand("pia", "Prime support and scalar obstruction ideal of a matrix");
  pia->add_option("matrix", file, "Matrix JSON file")->required();
  pia->callback([&] { action = [&] { return cmd_pia(gl, file, out); }; });

  auto* normgen = app.add_subcommand("normgen", "Decide normal generation of SL(n,Z) with a certificate");
  normgen->add_option("genset", file, "Generating set JSON file")->required();
  normgen->add_flag("--no-assume-el-generates", flag_a, "Do not assume E_{1,n}(1) normally generates");
  normgen->add_option("--cert-out", cert_out, "Write the certificate here");
  normgen->callback([&] { action = [&] { return cmd_normgen(gl, file, flag_a, cert_out, out); }; });

  auto* factor = app.add_subcommand("factor", "Factor a matrix into elementary conjugates");
  factor->add_option("matrix", file, "Matrix JSON file")->required();
  factor->add_option("--ring", ring_text, "Reduce to this ring first (Z, Zmod:l, Fp:p)");
  factor->add_flag("--bounded", flag_a, "Require a uniformly bounded factorization");
  factor->add_option("--cert-out", cert_out, "Write the certificate here");
  factor->callback([&] { action = [&] { return cmd_factor(gl, file, ring_text, flag_a, cert_out, out); }; });

  auto* hess = app.add_subcommand("hessenberg", "Upper Hessenberg form with a conjugator fixing e_1");
  hess->add_option("matrix", file, "Matrix JSON file")->required();
  hess->callback([&] { action = [&] { return cmd_hessenberg(gl, file, out); }; });

  BallArgs ba;
  auto* ball = app.add_subcommand("ball", "Conjugation-invariant balls in a finite SL or PSL");
  ball->add_option("--ring", ba.ring, "Zmod:l or Fp:p")->required();
  ball->add_option("--n", ba.n, "Matrix dimension")->required()->check(CLI::Range(2, 8));
  ball->add_option("--gens", ba.gens, "Generating set JSON file")->required();
  ball->add_flag("--psl", ba.psl, "Work in PSL");
  ball->add_option("--csv", ba.csv, "Write ball sizes as CSV");
  ball->add_option("--samples", ba.samples, "Number of words to replay");
  ball->callback([&] { action = [&] { return cmd_ball(gl, ba, out); }; });

  int dn = 0, dk = 1;
  auto* delta = app.add_subcommand("delta", "Exact Delta_k of a finite SL or PSL");
  delta->add_option("--ring", ring_text, "Zmod:l or Fp:p")->required();
  delta->add_option("--n", dn, "Matrix dimension")->required()->check(CLI::Range(2, 8));
  delta->add_option("--k", dk, "Maximal size of S")->check(CLI::Range(1, 64));
  delta->add_flag("--all", flag_a, "Delta over sets of any size");
  delta->add_flag("--psl", flag_b, "Work in PSL");
  delta->callback([&] { action = [&] { return cmd_delta(gl, ring_text, dn, dk, flag_a, flag_b, out); }; });

  int wn = 3;
  std::vector<std::string> primes;
  auto* wit = app.add_subcommand("witness-lower", "Generating set of size k with norm >= k");
  wit->add_option("--n", wn, "Matrix dimension")->check(CLI::Range(3, 16));
  wit->add_option("--primes", primes, "Distinct primes, comma separated")->required()->delimiter(',');
  wit->add_flag("--quotient", flag_a, "Also search the ball in SL(n, Z/prod p)");
  wit->add_option("--cert-out", cert_out, "Write the CRT certificate here");
  wit->callback([&] { action = [&] { return cmd_witness(gl, wn, primes, flag_a, cert_out, out); }; });

  BoundArgs bo;
  auto* bound = app.add_subcommand("bound", "Upper bound on Delta_k for a ring regime");
  bound->add_option("--regime", bo.regime, "infinite-maximal-ideals, semilocal, number-ring, residue, psl")
      ->required();
  bound->add_option("--n", bo.n, "Matrix dimension")->required();
  bound->add_option("--k", bo.k, "Size of the generating set (0: uniform bound)");
  bound->add_option("--cn", bo.cn, "Bounded generation constant C_n");
  bound->add_option("--d", bo.d, "Number of maximal ideals");
  bound->add_option("--l", bo.l, "Modulus for the residue regime");
  bound->callback([&] { action = [&] { return cmd_bound(gl, bo, out); }; });

  ClassArgs ca;
  auto* cls = app.add_subcommand("class-bound", "Lower bound on conjugacy class sizes from Delta");
  cls->add_option("--order", ca.order, "Group order");
  cls->add_option("--delta", ca.delta, "Delta(G)");
  cls->add_option("--class-size", ca.class_size, "Check this class size");
  cls->add_option("--psl-n", ca.psl_n, "Check the PSL(n, q) chain");
  cls->add_option("--psl-q", ca.psl_q, "Prime q for the PSL chain");
  cls->callback([&] { action = [&] { return cmd_class_bound(gl, ca, out); }; });

  auto* vw = app.add_subcommand("verify-word", "Replay a word certificate");
  vw->add_option("certificate", file, "Certificate JSON file")->required();
  vw->callback([&] { action = [&] { return cmd_verify_word(gl, file, out); }; });

  std::size_t count = 200;
  auto* ids = app.add_subcommand("check-identities", "Randomized exact checks of the matrix identities");
  ids->add_option("--count", count, "Draws per family");
  ids->callback([&] { action = [&] { return cmd_identities(gl, count, out); }; });

  auto* ineq = app.add_subcommand("check-inequalities", "Exact checks of the Delta inequalities on small groups");
  ineq->add_option("--suite", suite, "Suite name");
  ineq->add_option("--csv", csv, "Write the checks as CSV");
  ineq->callback([&] { action = [&] { return cmd_inequalities(gl, suite, csv, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::SelfCheckFailed ? kVerifyFailed : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace boundgen::cli
