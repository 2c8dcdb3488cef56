#include "asymvar/variety.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

namespace asymvar {

namespace {

// Newton interpolation through (k, values[k]), k = 0..n.
UniPoly interpolate(std::vector<TowerElement> dd) {
  const int n = static_cast<int>(dd.size()) - 1;
  for (int k = 1; k <= n; ++k)
    for (int i = n; i >= k; --i)
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) * TowerElement(Rational(1, k));
  UniPoly p;
  for (int i = n; i >= 0; --i)
    p = p * UniPoly(std::vector<TowerElement>{TowerElement(-i), TowerElement(1)}) + UniPoly(dd[static_cast<std::size_t>(i)]);
  return p;
}

// values[a][b] = f(a, b) for a polynomial of degree <= du in U and <= dv in V.
BiPoly interpolate2d(const std::vector<std::vector<TowerElement>>& values) {
  const std::size_t nu = values.size(), nv = values.at(0).size();
  std::vector<UniPoly> rows;
  for (const auto& row : values) rows.push_back(interpolate(row));
  BiPoly out;
  for (std::size_t j = 0; j < nv; ++j) {
    std::vector<TowerElement> col(nu);
    for (std::size_t a = 0; a < nu; ++a) col[a] = rows[a].coeff(static_cast<int>(j));
    UniPoly pu = interpolate(col);
    for (int i = 0; i <= pu.degree(); ++i) out.add_term(i, static_cast<int>(j), pu.coeffs()[static_cast<std::size_t>(i)]);
  }
  return out;
}

BiPoly simplify_coeffs(const BiPoly& p) {
  return p.map_coeffs([](const TowerElement& c) { return c.simplified(); });
}

std::string uv(const BiPoly& p) { return p.to_string("U", "V"); }

bool divides(const BiPoly& a, const BiPoly& b) {
  try {
    exact_div(a, b);
    return true;
  } catch (const InexactDivision&) {
    return false;
  }
}

// Polynomials and values carried together through tower splits.
struct EvalCtx {
  std::vector<BiPoly> polys;
  std::vector<TowerElement> vals;

  TowerPtr node() const {
    TowerPtr n;
    for (const auto& p : polys) n = common_node(n, p.node());
    for (const auto& v : vals) n = common_node(n, v.node());
    return n;
  }
  EvalCtx mapped(const TowerMap& m) const {
    const TowerPtr n = m.source();
    auto f = [&](const TowerElement& c) { return m(c.promoted(n)); };
    EvalCtx r;
    for (const auto& p : polys) r.polys.push_back(p.map_coeffs(f));
    for (const auto& v : vals) r.vals.push_back(f(v));
    return r;
  }
};

// True when pred holds on every branch of the context's tower.
bool on_all_branches(EvalCtx ctx, const std::function<bool(const EvalCtx&)>& pred) {
  bool all = true;
  for_each_branch(std::move(ctx), [&](const EvalCtx& c) {
    const bool ok = pred(c);
    all = all && ok;
  });
  return all;
}

bool vanishes(const TowerElement& x) { return certified_is_zero(x); }

std::string pair_string(const TowerElement& u, const TowerElement& v) {
  return "(" + u.simplified().to_string() + ", " + v.simplified().to_string() + ")";
}

struct EntryCtx {
  BasisEntry entry;
  VarietyComponent comp;

  TowerPtr node() const { return common_node(entry.node(), comp.h.node()); }
  EntryCtx mapped(const TowerMap& m) const {
    const TowerPtr n = m.source();
    auto f = [&](const TowerElement& c) { return m(c.promoted(n)); };
    BasisEntry e = entry;
    e.chart.phi = UniPoly();
    std::vector<TowerElement> phi;
    for (const auto& c : entry.chart.phi.coeffs()) phi.push_back(f(c));
    e.chart.phi = UniPoly(std::move(phi));
    e.dual = {entry.dual[0].map_coeffs(f), entry.dual[1].map_coeffs(f)};
    for (int k = 0; k < 2; ++k) {
      std::vector<TowerElement> v;
      for (const auto& c : entry.param[static_cast<std::size_t>(k)].coeffs()) v.push_back(f(c));
      e.param[static_cast<std::size_t>(k)] = UniPoly(std::move(v));
    }
    VarietyComponent c{comp.h.map_coeffs(f), e.param};
    return {e, c};
  }
};

UniPoly map_uni(const UniPoly& p, const std::function<TowerElement(const TowerElement&)>& f) {
  std::vector<TowerElement> v;
  for (const auto& c : p.coeffs()) v.push_back(f(c));
  return UniPoly(std::move(v));
}

BasisEntry promote_entry(const BasisEntry& e, const TowerPtr& n) {
  auto f = [&](const TowerElement& c) { return c.promoted(n); };
  BasisEntry out = e;
  out.chart.phi = map_uni(e.chart.phi, f);
  out.dual = {e.dual[0].map_coeffs(f), e.dual[1].map_coeffs(f)};
  out.param = {map_uni(e.param[0], f), map_uni(e.param[1], f)};
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Components and phantoms

VarietyComponent implicitize(const std::array<UniPoly, 2>& param) {
  const UniPoly& g1 = param[0];
  const UniPoly& g2 = param[1];
  const bool c1 = g1.degree() < 1, c2 = g2.degree() < 1;
  if (c1 && c2) throw ConstantParametrization("both coordinates of the parametrization are constant");
  BiPoly h;
  if (c1) {
    h = BiPoly::x() - BiPoly(g1.coeff(0));
  } else if (c2) {
    h = BiPoly::y() - BiPoly(g2.coeff(0));
  } else {
    // Res_Y(g1 - U, g2 - V) has degree <= deg g2 in U and <= deg g1 in V.
    std::vector<std::vector<TowerElement>> grid(static_cast<std::size_t>(g2.degree()) + 1,
                                                std::vector<TowerElement>(static_cast<std::size_t>(g1.degree()) + 1));
    for (std::size_t a = 0; a < grid.size(); ++a)
      for (std::size_t b = 0; b < grid[a].size(); ++b)
        grid[a][b] = resultant(g1 - UniPoly(TowerElement(static_cast<long>(a))),
                               g2 - UniPoly(TowerElement(static_cast<long>(b))));
    h = squarefree_part(interpolate2d(grid));
  }
  h = simplify_coeffs(normalize(h));
  if (!compose(h, from_y(g1), from_y(g2)).is_zero())
    throw std::logic_error("implicit equation does not vanish on its parametrization");
  return {h, param};
}

PhantomData phantom(const BasisEntry& entry, const VarietyComponent& comp) {
  BiPoly hg = compose(comp.h, entry.dual[0], entry.dual[1]);
  if (hg.is_zero()) throw ZeroComposition("H o G vanishes identically for H = " + uv(comp.h));
  PhantomData ph;
  ph.gamma = hg.min_x();
  ph.s = hg.shifted_x(-ph.gamma);
  return ph;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "HOLDS";
    case Verdict::Fails:
      return "FAILS";
    case Verdict::NotApplicable:
      return "NOT-APPLICABLE";
  }
  return "?";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::Surjective:
      return "SURJECTIVE";
    case Certificate::Inconclusive:
      return "INCONCLUSIVE";
    case Certificate::NotApplicable:
      return "NOT-APPLICABLE";
  }
  return "?";
}

TowerValue describe(const std::vector<TowerElement>& coords, int multiplicity) {
  TowerValue out;
  TowerPtr n;
  for (const auto& c : coords) {
    TowerElement s = c.simplified();
    n = common_node(n, s.node());
    out.coords.push_back(s.to_string());
  }
  out.tower = describe_tower(n);
  out.multiplicity = multiplicity;
  return out;
}

std::vector<RootMult> intersection_with_sing(const PhantomData& ph, int height_limit) {
  UniPoly s0 = ph.s.at_x0();
  if (s0.degree() < 1) return {};
  return roots_with_multiplicity(s0, height_limit, ph.s.node());
}

RootStructureReport root_structure_check(const PhantomData& ph, int height_limit) {
  RootStructureReport rep;
  const UniPoly s0 = ph.s.at_x0();
  if (s0.degree() < 1) return rep;
  const UniPoly sx0 = ph.s.dx().at_x0();
  const UniPoly sy0 = ph.s.dy().at_x0();
  for (const auto& [factor, mult] : squarefree_decomposition(s0))
    if (mult < 2 && factor.degree() >= 1) rep.multiplicity_at_least_two = Verdict::Fails;
  const UniPoly r = squarefree_part(s0);
  if (!(sy0 % r).is_zero_poly()) rep.dsdy_vanishes = Verdict::Fails;
  const UniPoly rem = sx0 % r;
  if (rem.degree() >= 1)
    rep.common_dsdx = Verdict::Fails;
  else
    rep.common_dsdx_value = rem.coeff(0).simplified().to_string();

  for (const auto& rm : intersection_with_sing(ph, height_limit)) {
    rep.roots.push_back(describe({rm.root}, rm.multiplicity));
    rep.epsilon.push_back(rm.multiplicity - 2);
    rep.dsdx_values.push_back(sx0(rm.root).simplified().to_string());
    rep.dsdy_zero.push_back(sy0(rm.root).is_zero());
  }
  return rep;
}

CriterionResult trace_criterion(const PhantomData& ph) {
  CriterionResult out;
  BiPoly sy = ph.s.dy();
  out.divisible = sy.at_x0().is_zero_poly();
  UniPoly s0 = ph.s.at_x0();
  out.constant_trace = s0.degree() == 0;
  if (out.divisible) out.h6 = sy.shifted_x(-1);
  return out;
}

ZeroSet singular_locus(const BiPoly& h, int height_limit) {
  return common_zeros({h, h.dx(), h.dy()}, height_limit, h.node());
}

// ---------------------------------------------------------------------------
// Identities along the chart

bool jacobian_chain_rule_holds(const PolyMap& f, const BasisEntry& entry) {
  const ChartR& ch = entry.chart;
  BiPoly jg = PolyMap{entry.dual[0], entry.dual[1]}.jacobian();
  auto r = ch.map();
  LaurentBiPoly jf = compose(f.jacobian(), r[0], r[1]);
  LaurentBiPoly rhs =
      LaurentBiPoly::monomial(TowerElement(Rational(-ch.alpha) * ch.l.det()), ch.beta - ch.alpha - 1, 0) * jf;
  return to_laurent(jg) == rhs;
}

bool jacobian_is_monomial(const BasisEntry& entry) {
  BiPoly jg = PolyMap{entry.dual[0], entry.dual[1]}.jacobian();
  const int k = entry.chart.beta - entry.chart.alpha - 1;
  return k >= 0 && jg.terms().size() == 1 && jg.terms().begin()->first == Exponent{k, 0};
}

std::array<bool, 2> gradient_identities_hold(const PolyMap& f, const BasisEntry& entry, const VarietyComponent& comp,
                                             const PhantomData& ph) {
  const ChartR& ch = entry.chart;
  PolyMap fl = compose_source(f, ch.l);
  BiPoly k = compose(comp.h, fl.p, fl.q);
  auto rg = ch.normalized_map();
  const int a = ch.alpha, b = ch.beta, g = ph.gamma;
  auto xm = [](int e) { return LaurentBiPoly::monomial(TowerElement(1), e, 0); };
  const LaurentBiPoly s = to_laurent(ph.s), sx = to_laurent(ph.s.dx()), sy = to_laurent(ph.s.dy());

  LaurentBiPoly lhs_v = compose(k.dy(), rg[0], rg[1]);
  LaurentBiPoly rhs_v = xm(g - b) * sy;

  LaurentBiPoly phi = to_laurent(from_x(ch.phi));
  LaurentBiPoly dphi = to_laurent(from_x(ch.phi.derivative()));
  LaurentBiPoly inner = TowerElement(b) * LaurentBiPoly::monomial(TowerElement(1), a + b, 1) -
                        TowerElement(a) * phi + xm(1) * dphi;
  LaurentBiPoly bracket = TowerElement(g) * xm(a + g) * s + xm(a + g + 1) * sx - xm(g - b) * sy * inner;
  LaurentBiPoly lhs_u = compose(k.dx(), rg[0], rg[1]);
  LaurentBiPoly rhs_u = TowerElement(Rational(-1, a)) * bracket;
  return {lhs_v == rhs_v, lhs_u == rhs_u};
}

std::variant<BiPoly, Obstruction> laurent_membership(const BiPoly& h, const ChartR& chart) {
  auto r = chart.map();
  LaurentBiPoly l = compose(h, r[0], r[1]);
  if (l.is_zero() || l.min_x() >= 0) return to_polynomial(l);
  return Obstruction{l.min_x(), l.coeff_x(l.min_x())};
}

bool in_no_jacobian_pair_family(const ChartR& chart) {
  const int n = chart.alpha;
  if (n < 1 || chart.beta != n + 1) return false;
  for (int i = 0; i <= chart.phi.degree(); ++i)
    if (!chart.phi.coeffs()[static_cast<std::size_t>(i)].is_zero() && (i < n + 1 || i > 2 * n)) return false;
  return true;
}

long cubic_bound(long n) { return n * n * n + n * n - n; }

// ---------------------------------------------------------------------------
// Oracle

namespace {

// Squarefree leading coefficient of Res_v(P - U, Q - V) in the surviving
// variable, as a polynomial in (U, V).
BiPoly eliminant_lc(const PolyMap& f, Var v) {
  const int dp = v == Var::Y ? f.p.degree_y() : f.p.degree_x();
  const int dq = v == Var::Y ? f.q.degree_y() : f.q.degree_x();
  const std::size_t nu = static_cast<std::size_t>(std::max(dq, 0)) + 1;
  const std::size_t nv = static_cast<std::size_t>(std::max(dp, 0)) + 1;
  std::vector<std::vector<UniPoly>> res(nu, std::vector<UniPoly>(nv));
  int top = -1;
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = 0; b < nv; ++b) {
      res[a][b] = resultant(f.p - BiPoly(static_cast<int>(a)), f.q - BiPoly(static_cast<int>(b)), v);
      top = std::max(top, res[a][b].degree());
    }
  for (int k = top; k >= 0; --k) {
    std::vector<std::vector<TowerElement>> grid(nu, std::vector<TowerElement>(nv));
    for (std::size_t a = 0; a < nu; ++a)
      for (std::size_t b = 0; b < nv; ++b) grid[a][b] = res[a][b].coeff(k);
    BiPoly c = interpolate2d(grid);
    if (c.is_zero()) continue;
    return c.is_constant() ? BiPoly(1) : squarefree_part(c);
  }
  throw DegenerateResultant(std::string("Res_") + (v == Var::Y ? "Y" : "X") +
                            "(P - U, Q - V) vanishes identically");
}

}  // namespace

OracleReport nonproper_oracle(const PolyMap& f) {
  if (f.jacobian().is_zero()) throw InputError("Jacobian determinant vanishes identically");
  OracleReport rep;
  rep.lc_res_y = eliminant_lc(f, Var::Y);
  rep.lc_res_x = eliminant_lc(f, Var::X);
  BiPoly prod = rep.lc_res_y * rep.lc_res_x;
  rep.product = prod.is_constant() ? BiPoly(1) : squarefree_part(prod);
  rep.computed = true;
  rep.reconciled = true;
  if (!rep.product.is_constant()) rep.factors.push_back({rep.product, false});
  return rep;
}

void reconcile(OracleReport& oracle, const std::vector<VarietyComponent>& components) {
  oracle.component_divides.clear();
  oracle.factors.clear();
  BiPoly rest = oracle.product;
  std::vector<const VarietyComponent*> tower_components;
  for (const auto& comp : components) {
    bool ok;
    if (comp.h.is_rational()) {
      ok = divides(oracle.product, comp.h);
      if (ok && divides(rest, comp.h)) {
        rest = exact_div(rest, comp.h);
        oracle.factors.push_back({comp.h, true});
      }
    } else {
      ok = on_all_branches(EvalCtx{{oracle.product, comp.h}, {}},
                           [](const EvalCtx& c) { return divides(c.polys[0], c.polys[1]); });
      tower_components.push_back(&comp);
    }
    oracle.component_divides.push_back(ok);
  }
  oracle.reconciled = std::all_of(oracle.component_divides.begin(), oracle.component_divides.end(),
                                  [](bool b) { return b; });
  if (rest.is_constant()) return;
  // Coprime pieces of the remainder: the part shared with the Res_Y side and
  // its cofactor.
  std::vector<BiPoly> pieces;
  BiPoly a = gcd(rest, oracle.lc_res_y);
  if (!a.is_constant()) pieces.push_back(normalize(a));
  BiPoly b = exact_div(rest, a);
  if (!b.is_constant()) pieces.push_back(normalize(b));
  for (const auto& p : pieces) {
    bool matched = false;
    for (const auto* comp : tower_components)
      matched = matched || on_all_branches(EvalCtx{{p, comp->h}, {}},
                                           [](const EvalCtx& c) { return divides(c.polys[0], c.polys[1]); });
    oracle.factors.push_back({p, matched});
  }
}

// ---------------------------------------------------------------------------
// Basis

BasisResult geometric_basis(const PolyMap& f, const AnalysisOptions& options) {
  BasisResult out;
  out.normalized = normalize_degrees(f, options.normalization_bound);
  out.engine = iterate_branches(projectivize(out.normalized), options.engine);
  std::vector<std::pair<BasisEntry, VarietyComponent>> all;
  for (const Leaf& leaf : out.engine.leaves) {
    if (leaf.kind != LeafKind::Asymptotic) continue;
    BasisEntry entry = dual_map(f, compose_chain(leaf.state, out.normalized.l));
    entry = promote_entry(entry, entry.node());
    for_each_branch(EntryCtx{entry, {}}, [&](const EntryCtx& c) {
      VarietyComponent comp = implicitize(c.entry.param);
      all.emplace_back(c.entry, comp);
    });
  }
  auto key = [](const BasisEntry& e) { return std::make_tuple(e.chart.alpha, e.chart.beta, to_string(e.chart.phi, "X")); };
  std::stable_sort(all.begin(), all.end(), [&](const auto& x, const auto& y) { return key(x.first) < key(y.first); });
  std::set<std::string> seen;
  for (auto& [entry, comp] : all) {
    std::string k;
    for (const auto& line : describe_tower(comp.h.node())) k += line + ";";
    k += uv(comp.h);
    if (seen.insert(k).second) out.entries.emplace_back(entry, comp);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-entry analysis

EntryReport analyze_entry(const PolyMap& f, bool keller, const BasisEntry& entry, const VarietyComponent& comp,
                          int height_limit) {
  EntryReport rep;
  rep.entry = entry;
  rep.component = comp;
  const ChartR& ch = entry.chart;
  const BiPoly& h = comp.h;
  const BiPoly hu = h.dx(), hv = h.dy();
  const BiPoly& g0 = entry.dual[0];
  const BiPoly& g1 = entry.dual[1];
  const std::string not_keller = keller ? "" : "; input not Keller";
  auto verdict = [&](const std::string& name, Verdict v, const std::string& witness) {
    rep.verdicts.push_back({name, v, witness});
  };
  auto check = [&](const std::string& name, bool ok, const std::string& witness) {
    verdict(name, ok ? Verdict::Holds : Verdict::Fails, witness);
  };

  const bool sound = compose(h, from_y(entry.param[0]), from_y(entry.param[1])).is_zero();
  check("parametrization-sound", sound, "H = " + uv(h) + " on G(0, Y)");

  rep.phantom = phantom(entry, comp);
  const PhantomData& ph = rep.phantom;
  const int gamma = ph.gamma, diff = ch.beta - ch.alpha;
  const UniPoly s0 = ph.s.at_x0();
  const std::string gwit = "gamma = " + std::to_string(gamma) + ", beta - alpha = " + std::to_string(diff);

  check("phantom-factorization",
        compose(h, g0, g1) == ph.s.shifted_x(gamma) && !s0.is_zero_poly() && gamma >= 1,
        "H(G) = X^" + std::to_string(gamma) + " * (" + ph.s.to_string() + ")");
  check("gamma-equals-beta-minus-alpha", gamma == diff, gwit + not_keller);
  check("gamma-at-most-beta-minus-alpha", gamma <= diff, gwit + not_keller);
  check("gamma-matches-jacobian-exponent", (gamma == 1 && diff - 1 == 0) || (gamma >= 2 && diff - 1 > 0),
        gwit + not_keller);

  const BiPoly jg = PolyMap{g0, g1}.jacobian();
  check("jacobian-chain-rule", jacobian_chain_rule_holds(f, entry), "det J_G = " + jg.to_string());
  check("jacobian-monomial", jacobian_is_monomial(entry),
        "det J_G = " + jg.to_string() + ", expected c*X^" + std::to_string(diff - 1) + not_keller);
  const int deg_g = std::max(g0.total_degree(), g1.total_degree());
  const int bound = (ch.beta + 1) * f.degree();
  check("dual-degree-bound", deg_g <= bound,
        "deg G = " + std::to_string(deg_g) + ", (beta + 1) deg F = " + std::to_string(bound));
  auto grad = gradient_identities_hold(f, entry, comp, ph);
  check("gradient-identity-v", grad[0], "K_V o R = X^" + std::to_string(gamma - ch.beta) + " * S_Y");
  check("gradient-identity-u", grad[1], "K_U o R expanded with gamma = " + std::to_string(gamma));

  const bool disjoint = s0.degree() == 0;
  check("sing-disjoint", disjoint, "S(0, Y) = " + to_string(s0, "Y") + not_keller);

  rep.criterion = trace_criterion(ph);
  const BiPoly sy = ph.s.dy();
  check("criterion-divisible", rep.criterion.divisible,
        rep.criterion.h6 ? "h6 = " + rep.criterion.h6->to_string() : "dS/dY(0, Y) = " + to_string(sy.at_x0(), "Y"));
  check("criterion-constant-trace", rep.criterion.constant_trace, "S(0, Y) = " + to_string(s0, "Y"));
  check("criterion-agree", rep.criterion.divisible == rep.criterion.constant_trace,
        std::string(rep.criterion.divisible ? "both hold" : "divisibility fails") +
            (rep.criterion.constant_trace ? "" : ", trace not constant"));

  bool roots_known = true;
  try {
    rep.roots = root_structure_check(ph, height_limit);
  } catch (const TowerDepthExceeded& e) {
    roots_known = false;
    rep.notes.push_back(std::string("undecided roots of S(0, Y): ") + e.what());
  }
  if (roots_known) {
    const std::string eps = [&] {
      std::string s;
      for (int e : rep.roots.epsilon) s += (s.empty() ? "" : ", ") + std::to_string(e);
      return "epsilon = [" + s + "]";
    }();
    verdict("root-multiplicity-at-least-two", rep.roots.multiplicity_at_least_two, eps + not_keller);
    verdict("dsdy-vanishes-at-roots", rep.roots.dsdy_vanishes, "dS/dY(0, Y) = " + to_string(sy.at_x0(), "Y"));
    verdict("common-dsdx-at-roots", rep.roots.common_dsdx,
            rep.roots.common_dsdx == Verdict::Holds
                ? (rep.roots.roots.empty() ? "no roots" : "dS/dX(0, Y_j) = " + rep.roots.common_dsdx_value)
                : "dS/dX(0, Y) = " + to_string(ph.s.dx().at_x0(), "Y"));
  } else {
    for (const char* name : {"root-multiplicity-at-least-two", "dsdy-vanishes-at-roots", "common-dsdx-at-roots"})
      verdict(name, Verdict::NotApplicable, "undecided: tower height limit");
  }

  // G(0, Y_j) on sing(H = 0), decided modulo the squarefree part of S(0, Y).
  std::string param_sing_witness = "S(0, Y) has no roots";
  bool param_sing = true;
  if (!disjoint) {
    const UniPoly r = squarefree_part(s0);
    const BiPoly p0 = from_y(entry.param[0]), p1 = from_y(entry.param[1]);
    const std::array<std::pair<const char*, const BiPoly*>, 3> parts{
        {{"H", &h}, {"H_U", &hu}, {"H_V", &hv}}};
    param_sing_witness.clear();
    for (const auto& [name, poly] : parts) {
      UniPoly rem = compose(*poly, p0, p1).at_x0() % r;
      if (!rem.is_zero_poly()) {
        param_sing = false;
        param_sing_witness += std::string(param_sing_witness.empty() ? "" : ", ") + name + "(G(0, Y)) mod " +
                              to_string(r, "Y") + " = " + to_string(rem, "Y");
      }
    }
    if (param_sing) param_sing_witness = "H, H_U, H_V vanish at G(0, Y_j)";
  }
  check("param-roots-singular", param_sing, param_sing_witness + not_keller);

  // sing(H = 0) against G(sing(S = 0)) union G({S = 0} on X = 0).
  try {
    ZeroSet sing_h = singular_locus(h, height_limit);
    if (sing_h.finite) {
      std::vector<TowerValue> pts;
      for (const auto& p : sing_h.points) pts.push_back(describe({p.x, p.y}));
      rep.singular_points = pts;
      if (pts.empty() && keller) rep.notes.push_back("NONSINGULAR-COMPONENT");
    }
    ZeroSet sing_s = common_zeros({ph.s, ph.s.dx(), ph.s.dy()}, height_limit, ph.s.node());
    if (!sing_h.finite) {
      verdict("sing-correspondence", Verdict::NotApplicable, "sing(H = 0) is not finite");
    } else if (!sing_s.finite) {
      verdict("sing-correspondence", Verdict::NotApplicable,
              "sing(S = 0) contains the curve " + sing_s.curve.to_string() + " = 0");
    } else {
      std::string witness;
      bool ok = param_sing;
      if (!param_sing) witness = "image of a root of S(0, Y) is not singular on H = 0";
      for (const auto& p : sing_s.points) {
        if (!ok) break;
        bool hit = on_all_branches(EvalCtx{{h, hu, hv, g0, g1}, {p.x, p.y}}, [](const EvalCtx& c) {
          TowerElement u = c.polys[3].eval(c.vals[0], c.vals[1]), v = c.polys[4].eval(c.vals[0], c.vals[1]);
          return vanishes(c.polys[0].eval(u, v)) && vanishes(c.polys[1].eval(u, v)) && vanishes(c.polys[2].eval(u, v));
        });
        if (!hit) {
          ok = false;
          witness = "G" + pair_string(p.x, p.y) + " is not singular on H = 0";
        }
      }
      for (const auto& q : sing_h.points) {
        if (!ok) break;
        bool hit = on_all_branches(EvalCtx{{ph.s, g0, g1}, {q.x, q.y}}, [&](const EvalCtx& c) {
          const BiPoly& s = c.polys[0];
          BiPoly a = c.polys[1] - BiPoly(c.vals[0]), b = c.polys[2] - BiPoly(c.vals[1]);
          if (gcd(gcd(s.at_x0(), a.at_x0()), b.at_x0()).degree() >= 1) return true;
          ZeroSet z = common_zeros({s, s.dx(), s.dy(), a, b}, height_limit, c.node());
          return !z.finite || !z.points.empty();
        });
        if (!hit) {
          ok = false;
          witness = pair_string(q.x, q.y) + " in sing(H = 0) has no preimage";
        }
      }
      if (ok) witness = std::to_string(sing_h.points.size()) + " singular point(s) matched";
      check("sing-correspondence", ok, witness + not_keller);
    }
  } catch (const TowerDepthExceeded& e) {
    verdict("sing-correspondence", Verdict::NotApplicable, "undecided: tower height limit");
    rep.notes.push_back(std::string("undecided singular sets: ") + e.what());
  }

  if (diff != 1)
    verdict("beta-alpha-plus-one-disjoint", Verdict::NotApplicable, "beta - alpha = " + std::to_string(diff));
  else
    check("beta-alpha-plus-one-disjoint", disjoint, "S(0, Y) = " + to_string(s0, "Y") + not_keller);

  if (ch.beta == 0) rep.notes.push_back("beta = 0: chart is not of the alpha < beta type");
  if (in_no_jacobian_pair_family(ch))
    rep.notes.push_back("chart has the form (X^-N, X^(N+1)*Y + a_N*X^N + ... + a_1*X): its coordinate algebra contains no Jacobian pair");

  // Picard candidates G(0, Y_j).
  try {
    for (const auto& rm : intersection_with_sing(ph, height_limit)) {
      TowerElement u = entry.param[0](rm.root), v = entry.param[1](rm.root);
      rep.picard_points.push_back(describe({u, v}, rm.multiplicity));
      rep.picard_on_sing.push_back(on_all_branches(EvalCtx{{h, hu, hv}, {u, v}}, [](const EvalCtx& c) {
        return vanishes(c.polys[0].eval(c.vals[0], c.vals[1])) && vanishes(c.polys[1].eval(c.vals[0], c.vals[1])) &&
               vanishes(c.polys[2].eval(c.vals[0], c.vals[1]));
      }));
    }
  } catch (const TowerDepthExceeded& e) {
    rep.notes.push_back(std::string("undecided Picard candidates: ") + e.what());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pipeline

AnalysisReport analyze(const PolyMap& f, const AnalysisOptions& options) {
  AnalysisReport rep;
  rep.input = f;
  rep.options = options;
  rep.jacobian = f.jacobian();
  rep.keller = f.is_keller();
  const int limit = options.engine.tower_limit;

  BasisResult basis;
  bool have_basis = false;
  try {
    basis = geometric_basis(f, options);
    have_basis = true;
  } catch (const Error& e) {
    if (!options.keep_going) throw;
    rep.errors.push_back(std::string("basis: ") + e.what());
  }
  if (have_basis) {
    rep.normalized = basis.normalized;
    rep.engine = basis.engine;
    for (std::size_t i = 0; i < basis.entries.size(); ++i) {
      try {
        for_each_branch(EntryCtx{basis.entries[i].first, basis.entries[i].second}, [&](const EntryCtx& c) {
          rep.entries.push_back(analyze_entry(f, rep.keller, c.entry, c.comp, limit));
        });
      } catch (const Error& e) {
        if (!options.keep_going) throw;
        rep.errors.push_back("entry " + std::to_string(i + 1) + ": " + e.what());
      }
    }
  }

  if (!rep.keller)
    rep.certificate = Certificate::NotApplicable;
  else if (!have_basis)
    rep.certificate = Certificate::Inconclusive;
  else
    rep.certificate = std::all_of(rep.entries.begin(), rep.entries.end(),
                                  [](const EntryReport& e) { return e.phantom.s.at_x0().degree() == 0; })
                          ? Certificate::Surjective
                          : Certificate::Inconclusive;

  rep.picard.applicable = rep.keller;
  rep.picard.cubic_bound = cubic_bound(f.degree());
  for (const auto& e : rep.entries) {
    rep.picard.refined_bound += std::max(0, e.phantom.s.at_x0().degree());
    for (const auto& p : e.picard_points) rep.picard.points.push_back(p);
  }

  if (options.oracle) {
    try {
      rep.oracle = nonproper_oracle(f);
      std::vector<VarietyComponent> comps;
      for (const auto& e : rep.entries) comps.push_back(e.component);
      reconcile(rep.oracle, comps);
    } catch (const Error& e) {
      if (!options.keep_going) throw;
      rep.errors.push_back(std::string("oracle: ") + e.what());
    }
  }
  return rep;
}

}  // namespace asymvar
