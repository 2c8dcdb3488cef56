#pragma once

// Branch-substitution iteration at infinity and assembly of the rational
// charts (X^-a, X^b Y + X^-a Phi(X)) with their polynomial duals.

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "asymvar/algebra.hpp"
#include "asymvar/normal_form.hpp"

namespace asymvar {

inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

struct EngineOptions {
  int tower_limit = kDefaultTowerLimit;
  int iteration_cap = 64;
};

/// V <- a + W U^(b/c), then U <- Z^c.
struct Substitution {
  TowerElement a;
  int b = 0;
  int c = 1;
};

/// The pair D(Z, W) standing for D / Z^e, reached through `chain`.
struct BranchState {
  std::array<BiPoly, 2> d;
  int e = 0;
  std::vector<Substitution> chain;

  TowerPtr node() const;
  BranchState mapped(const TowerMap& m) const;
  std::array<UniPoly, 2> leading_pair() const { return {d[0].at_x0(), d[1].at_x0()}; }
};

BranchState initial_state(const HomDecomp& hd);

/// Orders p_j at `a` of the coefficient pairs of Z^j (minimum over the two
/// coordinates, kInfiniteOrder for a zero pair). Throws NotABranchPoint when
/// a is not a common zero of the leading pair.
std::vector<int> vanishing_orders(const BranchState& st, const TowerElement& a);

struct ExponentChoice {
  int b = 0;  // p = b / c in lowest terms
  int c = 1;
  bool terminal = false;
};

ExponentChoice choose_exponent(const std::vector<int>& orders, int e);

BranchState substitute_branch(const BranchState& st, const TowerElement& a, const ExponentChoice& p, int p0);

enum class LeafKind { Asymptotic, Dead };

struct Leaf {
  LeafKind kind;
  BranchState state;
};

/// One processed branch point, for reports and tests.
struct TraceEvent {
  int depth = 0;
  TowerElement root;
  std::vector<int> orders;
  ExponentChoice choice;
};

struct EngineResult {
  std::vector<Leaf> leaves;
  std::vector<TraceEvent> trace;
};

/// Depth-first exploration of every branch point at every stage.
EngineResult iterate_branches(const HomDecomp& hd, const EngineOptions& options = {});

struct ChartR {
  int alpha = 1;
  int beta = 0;
  UniPoly phi;
  Matrix2 l;

  TowerPtr node() const;
  /// (X^-alpha, X^beta Y + X^-alpha Phi(X)), before the source change l.
  std::array<LaurentBiPoly, 2> normalized_map() const;
  /// l applied to normalized_map().
  std::array<LaurentBiPoly, 2> map() const;
  ChartR mapped(const TowerMap& m) const;
};

/// Unwinds a leaf's chain into a chart and applies primitivity reduction.
ChartR compose_chain(const BranchState& leaf, const Matrix2& l);

/// Divides alpha, beta and the exponents of Phi by their gcd.
ChartR reduce_primitive(const ChartR& chart);

struct BasisEntry {
  ChartR chart;
  std::array<BiPoly, 2> dual;
  std::array<UniPoly, 2> param;

  TowerPtr node() const;
  BasisEntry mapped(const TowerMap& m) const;
};

/// F o chart, required to be polynomial (NegativePowerResidue otherwise).
BasisEntry dual_map(const PolyMap& f, const ChartR& chart);

}  // namespace asymvar
