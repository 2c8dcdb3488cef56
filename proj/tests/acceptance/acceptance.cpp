// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "asymvar/numeric.hpp"
#include "asymvar/parser.hpp"
#include "asymvar/report.hpp"

namespace fs = std::filesystem;
using namespace asymvar;

namespace {

constexpr double kWorkedExampleSeconds = 5.0;
constexpr double kAutomorphismSeconds = 10.0;
const Rational kNumericZ(1, 1000000);
constexpr double kNumericRelTol = 1e-2;
constexpr double kDeadNormFloor = 1e3;
constexpr int kCriterionFixtures = 500;
constexpr int kKernelCasesPerFamily = 300;

const fs::path kCorpus = ASYMVAR_CORPUS_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << "\n";
  if (!o.pass) ++failures;
}

void run_criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(n, title, o);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_files(const std::string& prefix = "") {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kCorpus))
    if (e.path().extension() == ".map" && e.path().filename().string().rfind(prefix, 0) == 0) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

struct Timed {
  InputSpec spec;
  AnalysisReport rep;
  double seconds;
};

Timed analyze_file(const fs::path& p) {
  Timed t;
  t.spec = parse_input(read_file(p));
  auto t0 = std::chrono::steady_clock::now();
  t.rep = analyze(t.spec.map, t.spec.options);
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

bool golden_matches(const fs::path& map, const AnalysisReport& rep) {
  fs::path expected = map;
  expected.replace_extension(".expected");
  return fs::exists(expected) && canonical_section(read_file(expected)) == canonical_section(format_text(rep));
}

BiPoly xy(const std::string& s) { return parse_polynomial(s); }
BiPoly uv(const std::string& s) { return parse_polynomial(s, "U", "V"); }

const VerdictRecord* find(const EntryReport& e, const std::string& name) {
  for (const auto& v : e.verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

// ---------------------------------------------------------------------------

void worked_example(Outcome& o, const std::string& file, bool full) {
  Timed t = analyze_file(kCorpus / file);
  const auto& rep = t.rep;
  if (rep.entries.size() != 1) return o.fail(std::to_string(rep.entries.size()) + " components");
  const EntryReport& e = rep.entries[0];
  if (!(e.component.h == uv("U"))) o.fail("component " + e.component.h.to_string("U", "V"));
  if (full) {
    const ChartR& ch = e.entry.chart;
    if (ch.alpha != 1 || ch.beta != 1 || !(ch.phi == UniPoly(TowerElement(-1)))) o.fail("chart parameters");
    if (!(e.entry.dual[0] == xy("X*Y")) || !(e.entry.dual[1] == xy("X^2*Y^2 - Y"))) o.fail("dual map");
    if (e.phantom.gamma != 1 || !(e.phantom.s == xy("Y"))) o.fail("phantom");
  }
  if (!golden_matches(kCorpus / file, rep)) o.fail("golden mismatch");
  if (t.seconds >= kWorkedExampleSeconds) o.fail("runtime " + std::to_string(t.seconds) + " s");
  o.detail = o.pass ? "runtime " + std::to_string(t.seconds) + " s" : o.detail;
}

void automorphisms(Outcome& o) {
  auto files = corpus_files("auto_");
  if (files.size() < 5) o.fail("only " + std::to_string(files.size()) + " automorphisms");
  for (const auto& f : files) {
    Timed t = analyze_file(f);
    const std::string name = f.filename().string();
    if (!t.rep.keller) o.fail(name + " is not Keller");
    if (!t.rep.entries.empty()) o.fail(name + " has a nonempty basis");
    if (t.rep.certificate != Certificate::Surjective) o.fail(name + " not certified");
    if (!t.rep.oracle.computed || !t.rep.oracle.factors.empty()) o.fail(name + " oracle set not empty");
    if (!golden_matches(f, t.rep)) o.fail(name + " golden mismatch");
    if (t.seconds >= kAutomorphismSeconds) o.fail(name + " runtime");
  }
  // The cubic pair kills three branches over W^2 - W + 1.
  AnalysisReport pair = analyze({xy("X + Y^3"), xy("X + Y + Y^3")});
  int dead = 0;
  for (const auto& leaf : pair.engine.leaves) {
    auto tower = describe_tower(leaf.state.node());
    if (leaf.kind == LeafKind::Dead && tower.size() == 1 && tower[0] == "t1: t1^2 - t1 + 1 = 0") ++dead;
  }
  if (dead != 3 || pair.engine.leaves.size() != 3) o.fail("cubic pair trace has " + std::to_string(dead) + " dead branches over the quadratic tower");
  if (o.pass) o.detail = std::to_string(files.size()) + " maps";
}

// Lead coefficient of Res_v(P - u, Q - w) drops at (u, w) on a component:
// checked directly from the eliminant at rational points of the component.
bool eliminant_degenerates(const PolyMap& f, const Rational& u, const Rational& w) {
  BiPoly a = f.p - BiPoly(TowerElement(u)), b = f.q - BiPoly(TowerElement(w));
  int generic_y = -1, generic_x = -1;
  // Generic degrees from a point off every curve of small height.
  BiPoly ga = f.p - BiPoly(TowerElement(Rational(1234567, 7))), gb = f.q - BiPoly(TowerElement(Rational(-7654321, 11)));
  generic_y = resultant(ga, gb, Var::Y).degree();
  generic_x = resultant(ga, gb, Var::X).degree();
  return resultant(a, b, Var::Y).degree() < generic_y || resultant(a, b, Var::X).degree() < generic_x;
}

void oracle_reconciliation(Outcome& o) {
  std::vector<fs::path> files = corpus_files("np_");
  for (const char* extra : {"xy_line.map", "x2_xy.map"}) files.push_back(kCorpus / extra);
  if (files.size() < 10) o.fail("only " + std::to_string(files.size()) + " non-proper maps");
  int components = 0, unmatched = 0;
  for (const auto& f : files) {
    Timed t = analyze_file(f);
    const std::string name = f.filename().string();
    const auto& rep = t.rep;
    if (rep.entries.empty()) o.fail(name + " has no component");
    if (!rep.oracle.reconciled) o.fail(name + " not reconciled");
    if (!golden_matches(f, rep)) o.fail(name + " golden mismatch");
    for (const auto& fac : rep.oracle.factors) unmatched += fac.matched ? 0 : 1;
    for (const auto& e : rep.entries) {
      ++components;
      if (!e.component.h.is_rational()) continue;
      // Independent check at three rational parameters.
      for (int y : {2, -3, 5}) {
        TowerElement u = e.entry.param[0](TowerElement(y)), w = e.entry.param[1](TowerElement(y));
        if (!eliminant_degenerates(t.spec.map, u.to_rational(), w.to_rational()))
          o.fail(name + ": eliminant does not degenerate on " + e.component.h.to_string("U", "V"));
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(files.size()) + " maps, " + std::to_string(components) + " components, " +
               std::to_string(unmatched) + " unmatched oracle factors";
}

void identity_suite(Outcome& o) {
  int entries = 0;
  for (const auto& f : corpus_files()) {
    Timed t = analyze_file(f);
    const PolyMap& map = t.spec.map;
    for (const auto& e : t.rep.entries) {
      ++entries;
      const std::string name = f.filename().string();
      BiPoly hg = compose(e.component.h, e.entry.dual[0], e.entry.dual[1]);
      if (!(hg == e.phantom.s.shifted_x(e.phantom.gamma)) || e.phantom.s.at_x0().is_zero_poly())
        o.fail(name + ": phantom factorization");
      // det J_G = (det J_F o R) det J_R, with J_R from the chart's components.
      auto r = e.entry.chart.map();
      BiPoly jg = PolyMap{e.entry.dual[0], e.entry.dual[1]}.jacobian();
      LaurentBiPoly jr = r[0].dx() * r[1].dy() - r[0].dy() * r[1].dx();
      if (!(to_laurent(jg) == compose(map.jacobian(), r[0], r[1]) * jr)) o.fail(name + ": chain rule");
      const int deg_g = std::max(e.entry.dual[0].total_degree(), e.entry.dual[1].total_degree());
      if (deg_g > (e.entry.chart.beta + 1) * map.degree()) o.fail(name + ": degree bound");
      for (const char* v : {"gradient-identity-u", "gradient-identity-v", "jacobian-chain-rule", "phantom-factorization"}) {
        const VerdictRecord* rec = find(e, v);
        if (!rec || rec->verdict != Verdict::Holds) o.fail(name + ": " + v);
      }
    }
  }
  if (entries == 0) o.fail("no entries in the corpus");
  if (o.pass) o.detail = std::to_string(entries) + " entries";
}

void criterion_equivalence(Outcome& o) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> deg(0, 6), coef(-4, 4), terms(1, 8), pick(0, 3);
  TowerPtr quad = TowerNode::make(nullptr, UniPoly(std::vector<TowerElement>{TowerElement(-2), TowerElement(0), TowerElement(1)}));
  TowerElement root2 = TowerElement::generator(quad);
  int done = 0;
  while (done < kCriterionFixtures) {
    BiPoly s;
    const int n = terms(rng);
    for (int k = 0; k < n; ++k) {
      int i = deg(rng), j = deg(rng);
      if (i + j > 6) continue;
      TowerElement c(coef(rng));
      if (pick(rng) == 0) c = c + TowerElement(coef(rng)) * root2;
      s.add_term(i, j, c);
    }
    if (s.at_x0().is_zero_poly()) continue;
    ++done;
    CriterionResult c = trace_criterion({1, s});
    // Brute force: every X-free term of S has Y-degree 0, and dS/dY has no
    // X-free term.
    bool brute_const = true, brute_div = true;
    for (const auto& [e, coeff] : s.terms())
      if (e.first == 0 && e.second > 0) brute_const = false;
    BiPoly sy = s.dy();
    for (const auto& [e, coeff] : sy.terms())
      if (e.first == 0) brute_div = false;
    if (c.constant_trace != brute_const || c.divisible != brute_div || c.divisible != c.constant_trace) {
      o.fail("disagreement on S = " + s.to_string());
      return;
    }
    if (c.h6 && !(c.h6->shifted_x(1) == sy)) o.fail("h6 witness on S = " + s.to_string());
  }
  o.detail = std::to_string(done) + " fixtures";
}

void cubic_bounds(Outcome& o) {
  const std::pair<long, long> cases[] = {{1, 1}, {2, 10}, {3, 33}, {5, 145}};
  for (auto [n, want] : cases)
    if (cubic_bound(n) != want) o.fail("N = " + std::to_string(n));
  AnalysisReport rep = analyze({xy("X"), xy("X*Y")});
  if (rep.picard.cubic_bound != 10) o.fail("report bound for degree 2");
  AnalysisReport shear = analyze({xy("X + Y^3"), xy("Y")});
  if (shear.picard.cubic_bound != 33) o.fail("report bound for degree 3");
}

// (U_0, V_0) from the final (Z, W) by unwinding V = a + W U^(b/c), U = Z^c.
std::pair<TowerElement, TowerElement> unwind(const BranchState& st, const TowerElement& z, const TowerElement& w) {
  TowerElement zk = z, wk = w;
  for (auto it = st.chain.rbegin(); it != st.chain.rend(); ++it) {
    TowerElement u = zk.pow(static_cast<unsigned>(it->c));
    TowerElement v = it->a + wk * zk.pow(static_cast<unsigned>(it->b));
    zk = u;
    wk = v;
  }
  return {zk, wk};
}

double norm(const std::array<Complex, 2>& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

void numeric_spot_check(Outcome& o) {
  const Rational z = kNumericZ;
  const int samples[] = {-2, -1, 1, 2, 3};
  int asym = 0, dead = 0;
  double worst = 0;
  for (const auto& f : corpus_files()) {
    InputSpec spec = parse_input(read_file(f));
    NormalizedMap nm = normalize_degrees(spec.map, spec.options.normalization_bound);
    EngineResult er = iterate_branches(projectivize(nm), spec.options.engine);
    const Matrix2 minv = nm.m.inverse();
    for (const Leaf& leaf : er.leaves) {
      NumericEmbedding embed;
      std::optional<BasisEntry> entry;
      if (leaf.kind == LeafKind::Asymptotic) {
        entry = dual_map(spec.map, compose_chain(leaf.state, nm.l));
        ++asym;
      } else {
        ++dead;
      }
      for (int ws : samples) {
        TowerElement w(ws);
        auto [u0, v0] = unwind(leaf.state, TowerElement(z), w);
        TowerElement xg = u0.inverse(), yg = v0 * u0.inverse();
        auto src = nm.l.apply(xg, yg);
        TowerElement fp = spec.map.p.eval(src[0], src[1]), fq = spec.map.q.eval(src[0], src[1]);
        std::array<Complex, 2> val{embed(fp), embed(fq)};
        if (leaf.kind == LeafKind::Asymptotic) {
          std::array<Complex, 2> lim{embed(entry->param[0](w)), embed(entry->param[1](w))};
          double err = norm({val[0] - lim[0], val[1] - lim[1]}) / std::max(1.0, norm(lim));
          worst = std::max(worst, err);
          if (!(err < kNumericRelTol)) o.fail(f.filename().string() + ": relative error " + std::to_string(err));
        } else {
          // m^-1 D / Z^e must agree with F o l and be large.
          TowerElement zi = TowerElement(z).inverse().pow(static_cast<unsigned>(leaf.state.e));
          auto d = minv.apply(leaf.state.d[0].eval(TowerElement(z), w) * zi, leaf.state.d[1].eval(TowerElement(z), w) * zi);
          if (!(d[0] == fp) || !(d[1] == fq)) o.fail(f.filename().string() + ": dead leaf state disagrees with F");
          if (!(norm(val) > kDeadNormFloor)) o.fail(f.filename().string() + ": dead leaf norm " + std::to_string(norm(val)));
        }
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(asym) + " asymptotic and " + std::to_string(dead) + " dead leaves, worst relative error " +
               std::to_string(worst);
}

void membership(Outcome& o) {
  ChartR r;
  r.alpha = 1;
  r.beta = 2;
  r.phi = UniPoly(std::vector<TowerElement>{TowerElement(0), TowerElement(0), TowerElement(-1)});
  const std::pair<const char*, const char*> gens[] = {{"V", "X^2*Y - X"}, {"U*V", "X*Y - 1"}, {"U^2*V + U", "Y"}};
  for (auto [h, image] : gens) {
    auto m = laurent_membership(uv(h), r);
    if (!std::holds_alternative<BiPoly>(m) || !(std::get<BiPoly>(m) == xy(image))) o.fail(std::string(h) + " image");
  }
  auto u = laurent_membership(uv("U"), r);
  if (!std::holds_alternative<Obstruction>(u) || std::get<Obstruction>(u).exponent != -1) o.fail("U is not obstructed");
}

// Kernel families ------------------------------------------------------------

UniPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-6, 6);
  std::vector<TowerElement> c;
  for (int i = 0, d = deg(rng); i <= d; ++i) c.emplace_back(coef(rng));
  return UniPoly(std::move(c));
}

UniPoly from_roots(const std::vector<int>& roots, long lead = 1) {
  UniPoly p{TowerElement(lead)};
  for (int r : roots) p = p * UniPoly(std::vector<TowerElement>{TowerElement(-r), TowerElement(1)});
  return p;
}

bool divides(const UniPoly& d, const UniPoly& p) { return (p % d).is_zero_poly(); }

void kernel_properties(Outcome& o) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> root(-4, 4), count(1, 3), coin(0, 1);
  int cases = 0;
  auto fail = [&](const std::string& family) { o.fail(family + " case " + std::to_string(cases)); };

  // gcd divisibility, with a planted common factor.
  for (int k = 0; k < kKernelCasesPerFamily && o.pass;) {
    UniPoly c = random_poly(rng, 2), a = random_poly(rng, 4) * c, b = random_poly(rng, 4) * c;
    if (a.is_zero_poly() || b.is_zero_poly()) continue;
    ++k, ++cases;
    UniPoly g = gcd(a, b);
    if (!divides(g, a) || !divides(g, b) || (c.degree() >= 1 && !divides(c, g))) fail("gcd");
  }
  // Resultant vanishes exactly when the integer root sets meet.
  for (int k = 0; k < kKernelCasesPerFamily && o.pass; ++k, ++cases) {
    std::vector<int> ra, rb;
    for (int i = 0, n = count(rng); i < n; ++i) ra.push_back(root(rng));
    for (int i = 0, n = count(rng); i < n; ++i) rb.push_back(root(rng));
    bool common = false;
    for (int x : ra) common = common || std::find(rb.begin(), rb.end(), x) != rb.end();
    if (resultant(from_roots(ra, 2), from_roots(rb, -3)).is_zero() != common) fail("resultant");
  }
  // Squarefree decomposition reconstructs f from squarefree factors.
  for (int k = 0; k < kKernelCasesPerFamily && o.pass;) {
    UniPoly base = random_poly(rng, 2) * random_poly(rng, 1);
    UniPoly f = base * base * random_poly(rng, 2) * random_poly(rng, 1);
    if (f.degree() < 1) continue;
    ++k, ++cases;
    UniPoly back(f.lc());
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
      back = back * pow(factor, static_cast<unsigned>(mult));
      if (!gcd(factor, factor.derivative()).is_constant()) fail("squarefree factor");
    }
    if (!(back == f)) fail("squarefree");
  }
  // Dynamic splitting over Q[t]/(prod (t - r_i) * (t^2 + c)): units invert,
  // zero divisors split the defining polynomial, and every branch map is a
  // ring homomorphism sending t to a root of its factor.
  for (int k = 0; k < kKernelCasesPerFamily && o.pass; ++k, ++cases) {
    std::vector<int> rs;
    for (int i = 0, n = count(rng) + 1; i < n; ++i) {
      int r = root(rng);
      if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
    }
    const int c = k % 5 + 2;
    UniPoly def = from_roots(rs) * UniPoly(std::vector<TowerElement>{TowerElement(c), TowerElement(0), TowerElement(1)});
    TowerPtr node = TowerNode::make(nullptr, def);
    TowerElement t = TowerElement::generator(node);
    TowerElement x(1);
    bool zero_divisor = coin(rng) == 1;
    if (zero_divisor) {
      for (int r : rs)
        if (coin(rng) == 1 || r == rs[0]) x = x * (t - TowerElement(r));
    } else {
      x = t - TowerElement(5 + k % 3);
    }
    TowerElement y = t * t + TowerElement(root(rng)) * t + TowerElement(root(rng));
    try {
      TowerElement inv = x.inverse();
      if (zero_divisor || !(x * inv).is_one()) fail("inverse");
    } catch (const ZeroDivisorSplit& s) {
      if (!zero_divisor || !(s.first() * s.second() == def)) fail("split factors");
      for (const TowerMap& m : s.branches(node)) {
        if (!(m(x * y) == m(x) * m(y)) || !(m(x + y) == m(x) + m(y))) fail("branch homomorphism");
        TowerElement img = m(t);
        if (!s.first()(img).is_zero() && !s.second()(img).is_zero()) fail("branch image");
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " randomized cases";
}

}  // namespace

int main() {
  run_criterion(1, "worked map (X, X*Y)", [](Outcome& o) { worked_example(o, "xy_line.map", true); });
  run_criterion(2, "map (X^2, X*Y)", [](Outcome& o) { worked_example(o, "x2_xy.map", false); });
  run_criterion(3, "automorphism corpus", automorphisms);
  run_criterion(4, "oracle reconciliation on non-proper maps", oracle_reconciliation);
  run_criterion(5, "identity suite on every entry", identity_suite);
  run_criterion(6, "trace criterion formulations agree", criterion_equivalence);
  run_criterion(7, "cubic bound arithmetic", cubic_bounds);
  run_criterion(8, "numeric limits along charts", numeric_spot_check);
  run_criterion(9, "membership of the three generators", membership);
  run_criterion(10, "kernel properties", kernel_properties);
  return failures == 0 ? 0 : 1;
}
