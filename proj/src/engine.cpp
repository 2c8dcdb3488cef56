#include "asymvar/engine.hpp"

#include <numeric>
#include <optional>

namespace asymvar {

namespace {

UniPoly taylor_shift(const UniPoly& a, const TowerElement& at) {
  return compose(a, UniPoly(std::vector<TowerElement>{at, TowerElement(1)}));
}

// Index of the first coefficient that is not zero; zero divisors split.
int order_at_zero(const UniPoly& t) {
  for (int i = 0; i <= t.degree(); ++i)
    if (!certified_is_zero(t.coeffs()[static_cast<std::size_t>(i)])) return i;
  return kInfiniteOrder;
}

int max_z_degree(const BranchState& st) { return std::max(st.d[0].degree_x(), st.d[1].degree_x()); }

TowerPtr deeper(const TowerPtr& a, const TowerPtr& b) { return common_node(a, b); }

}  // namespace

TowerPtr BranchState::node() const {
  TowerPtr n = deeper(d[0].node(), d[1].node());
  for (const auto& s : chain) n = deeper(n, s.a.node());
  return n;
}

BranchState BranchState::mapped(const TowerMap& m) const {
  BranchState r;
  auto f = [&](const TowerElement& c) { return m(c); };
  r.d = {d[0].map_coeffs(f), d[1].map_coeffs(f)};
  r.e = e;
  for (const auto& s : chain) r.chain.push_back({m(s.a), s.b, s.c});
  return r;
}

BranchState initial_state(const HomDecomp& hd) {
  BranchState st;
  st.e = hd.n;
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j <= hd.n; ++j) {
      const UniPoly& a = hd.a[static_cast<std::size_t>(j)][k];
      for (int i = 0; i <= a.degree(); ++i) st.d[k].add_term(j, i, a.coeffs()[static_cast<std::size_t>(i)]);
    }
  return st;
}

std::vector<int> vanishing_orders(const BranchState& st, const TowerElement& a) {
  std::vector<int> orders;
  for (int j = 0; j <= std::max(max_z_degree(st), st.e); ++j) {
    int p = kInfiniteOrder;
    for (int k = 0; k < 2; ++k) {
      UniPoly aj = st.d[k].coeff_x(j);
      if (aj.is_zero_poly()) continue;
      p = std::min(p, order_at_zero(taylor_shift(aj, a)));
    }
    orders.push_back(p);
  }
  if (orders.empty() || orders[0] == 0)
    throw NotABranchPoint(a.to_string() + " is not a common zero of the leading pair");
  return orders;
}

ExponentChoice choose_exponent(const std::vector<int>& orders, int e) {
  const int p0 = orders.at(0);
  std::optional<Rational> best;
  for (std::size_t j = 1; j < orders.size(); ++j) {
    if (orders[j] >= p0) continue;
    Rational cand(static_cast<long>(j), static_cast<long>(p0 - orders[j]));
    cand.canonicalize();
    if (!best || cand < *best) best = cand;
  }
  Rational limit(e, p0);
  limit.canonicalize();
  ExponentChoice out;
  Rational p = (!best || *best >= limit) ? limit : *best;
  out.terminal = !best || *best >= limit;
  out.b = static_cast<int>(p.get_num().get_si());
  out.c = static_cast<int>(p.get_den().get_si());
  return out;
}

BranchState substitute_branch(const BranchState& st, const TowerElement& a, const ExponentChoice& p, int p0) {
  BranchState out;
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j <= st.d[k].degree_x(); ++j) {
      UniPoly aj = st.d[k].coeff_x(j);
      if (aj.is_zero_poly()) continue;
      UniPoly t = taylor_shift(aj, a);
      for (int i = 0; i <= t.degree(); ++i) {
        const TowerElement& c = t.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const int z = p.c * j + p.b * i - p.b * p0;
        if (z < 0)
          throw InternalFractionalExponent("negative Z-power " + std::to_string(z) + " after substitution");
        out.d[k].add_term(z, i, c);
      }
    }
    if (p.c > 1) {
      for (const auto& [e, c] : out.d[k].terms())
        if (e.first == 0 && ((e.second - p0) % p.c + p.c) % p.c != 0)
          throw InternalFractionalExponent("leading pair is not of the form W^a E(W^c)");
    }
  }
  out.e = p.c * st.e - p.b * p0;
  out.chain = st.chain;
  out.chain.push_back({a, p.b, p.c});
  return out;
}

EngineResult iterate_branches(const HomDecomp& hd, const EngineOptions& options) {
  struct Item {
    BranchState st;
    std::optional<TowerElement> root;
    int depth = 0;
    int parent_p0 = -1;
    int parent_e = -1;
  };
  EngineResult result;
  std::vector<Item> stack;
  stack.push_back({initial_state(hd), std::nullopt, 0, -1, -1});
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    try {
      if (!item.root) {
        if (item.st.e == 0) {
          result.leaves.push_back({LeafKind::Asymptotic, item.st});
          continue;
        }
        if (item.depth >= options.iteration_cap)
          throw IterationCapExceeded("branch depth reached " + std::to_string(item.depth));
        auto lp = item.st.leading_pair();
        UniPoly g = gcd(lp[0], lp[1]);
        if (g.degree() < 1) {
          result.leaves.push_back({LeafKind::Dead, item.st});
          continue;
        }
        auto roots = roots_with_multiplicity(g, options.tower_limit);
        for (auto it = roots.rbegin(); it != roots.rend(); ++it)
          stack.push_back({item.st, it->root, item.depth, item.parent_p0, item.parent_e});
        continue;
      }
      const TowerElement& a = *item.root;
      std::vector<int> orders = vanishing_orders(item.st, a);
      const int p0 = orders[0];
      if (item.parent_p0 >= 0 && !(p0 < item.parent_p0 || (p0 == item.parent_p0 && item.st.e < item.parent_e)))
        throw MeasureViolation("(p0, e) went from (" + std::to_string(item.parent_p0) + ", " +
                               std::to_string(item.parent_e) + ") to (" + std::to_string(p0) + ", " +
                               std::to_string(item.st.e) + ")");
      ExponentChoice choice = choose_exponent(orders, item.st.e);
      result.trace.push_back({item.depth, a, orders, choice});
      stack.push_back({substitute_branch(item.st, a, choice, p0), std::nullopt, item.depth + 1, p0, item.st.e});
    } catch (const ZeroDivisorSplit& split) {
      TowerPtr target = item.st.node();
      if (item.root) target = common_node(target, item.root->node());
      for (const TowerMap& m : split.branches(target)) {
        Item next{item.st.mapped(m), std::nullopt, item.depth, item.parent_p0, item.parent_e};
        if (item.root) next.root = m(item.root->promoted(target));
        stack.push_back(std::move(next));
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Charts

TowerPtr ChartR::node() const {
  TowerPtr n;
  for (const auto& c : phi.coeffs()) n = common_node(n, c.node());
  return n;
}

std::array<LaurentBiPoly, 2> ChartR::normalized_map() const {
  LaurentBiPoly first = LaurentBiPoly::monomial(TowerElement(1), -alpha, 0);
  LaurentBiPoly second = LaurentBiPoly::monomial(TowerElement(1), beta, 1);
  for (int i = 0; i <= phi.degree(); ++i) second.add_term(i - alpha, 0, phi.coeffs()[static_cast<std::size_t>(i)]);
  return {first, second};
}

std::array<LaurentBiPoly, 2> ChartR::map() const {
  auto [u, v] = normalized_map();
  return l.apply(u, v);
}

ChartR ChartR::mapped(const TowerMap& m) const { return {alpha, beta, m(phi), l}; }

ChartR reduce_primitive(const ChartR& chart) {
  int g = std::gcd(chart.alpha, chart.beta);
  for (int i = 0; i <= chart.phi.degree(); ++i)
    if (!chart.phi.coeffs()[static_cast<std::size_t>(i)].is_zero()) g = std::gcd(g, i);
  if (g <= 1) return chart;
  ChartR out = chart;
  out.alpha /= g;
  out.beta /= g;
  std::vector<TowerElement> v(static_cast<std::size_t>(chart.phi.degree() / g) + 1);
  for (int i = 0; i <= chart.phi.degree(); ++i) {
    const TowerElement& c = chart.phi.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (i % g != 0) throw PrimitivityReductionFailed("exponent " + std::to_string(i) + " not divisible by " + std::to_string(g));
    v[static_cast<std::size_t>(i / g)] = c;
  }
  out.phi = UniPoly(std::move(v));
  return out;
}

ChartR compose_chain(const BranchState& leaf, const Matrix2& l) {
  const std::size_t m = leaf.chain.size();
  // suffix[k] = c_k * ... * c_{m-1}
  std::vector<long> suffix(m + 1, 1);
  for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] * leaf.chain[k].c;
  std::vector<long> e(m + 1, 0);
  for (std::size_t k = 0; k < m; ++k) e[k + 1] = e[k] + leaf.chain[k].b * suffix[k + 1];
  ChartR chart;
  chart.alpha = static_cast<int>(suffix[0]);
  chart.beta = static_cast<int>(e[m] - suffix[0]);
  chart.l = l;
  std::vector<TowerElement> phi(static_cast<std::size_t>(e[m]) + 1);
  for (std::size_t k = 0; k < m; ++k) phi[static_cast<std::size_t>(e[k])] += leaf.chain[k].a;
  chart.phi = UniPoly(std::move(phi));
  return reduce_primitive(chart);
}

TowerPtr BasisEntry::node() const {
  TowerPtr n = chart.node();
  for (const auto& g : dual) n = common_node(n, g.node());
  return n;
}

BasisEntry BasisEntry::mapped(const TowerMap& m) const {
  auto f = [&](const TowerElement& c) { return m(c); };
  return {chart.mapped(m), {dual[0].map_coeffs(f), dual[1].map_coeffs(f)}, {m(param[0]), m(param[1])}};
}

BasisEntry dual_map(const PolyMap& f, const ChartR& chart) {
  auto r = chart.map();
  auto g = f.compose(r[0], r[1]);
  BasisEntry entry;
  entry.chart = chart;
  entry.dual = {to_polynomial(g[0]), to_polynomial(g[1])};
  entry.param = {entry.dual[0].at_x0(), entry.dual[1].at_x0()};
  return entry;
}

}  // namespace asymvar
