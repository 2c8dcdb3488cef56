#pragma once

// Components of the asymptotic variety, phantom curves, identity verdicts,
// surjectivity certificate, Picard candidates and the resultant oracle.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asymvar/engine.hpp"

namespace asymvar {

struct VarietyComponent {
  BiPoly h;  // in (U, V), squarefree and normalized
  std::array<UniPoly, 2> param;
};

/// Normalized squarefree part of Res_Y(g1(Y) - U, g2(Y) - V); U - c or V - c
/// when a coordinate is the constant c.
VarietyComponent implicitize(const std::array<UniPoly, 2>& param);

struct PhantomData {
  int gamma = 0;
  BiPoly s;
};

/// H o G = X^gamma S with S(0, Y) not identically zero.
PhantomData phantom(const BasisEntry& entry, const VarietyComponent& comp);

enum class Verdict { Holds, Fails, NotApplicable };
std::string to_string(Verdict v);

struct VerdictRecord {
  std::string name;
  Verdict verdict;
  std::string witness;
};

/// Point or root written over its tower.
struct TowerValue {
  std::vector<std::string> coords;
  std::vector<std::string> tower;  // "t1: t1^2 - t1 + 1 = 0", ...
  int multiplicity = 1;
};

TowerValue describe(const std::vector<TowerElement>& coords, int multiplicity = 1);

struct RootStructureReport {
  std::vector<TowerValue> roots;         // roots Y_j of S(0, Y)
  std::vector<int> epsilon;              // multiplicity - 2
  std::vector<std::string> dsdx_values;  // dS/dX(0, Y_j)
  std::vector<bool> dsdy_zero;           // dS/dY(0, Y_j) = 0
  Verdict multiplicity_at_least_two = Verdict::Holds;
  Verdict dsdy_vanishes = Verdict::Holds;
  Verdict common_dsdx = Verdict::Holds;
  std::string common_dsdx_value;  // set when common_dsdx holds and roots exist
};

/// Roots of S(0, Y) with multiplicities, over towers extending S's node.
std::vector<RootMult> intersection_with_sing(const PhantomData& ph, int height_limit = kDefaultTowerLimit);

/// Double-root structure of S along X = 0. The three flags are decided from
/// S(0, Y) and remainders modulo its squarefree part; the per-root values
/// need the roots themselves.
RootStructureReport root_structure_check(const PhantomData& ph, int height_limit = kDefaultTowerLimit);

struct CriterionResult {
  bool divisible = false;       // X | dS/dY
  bool constant_trace = false;  // S(0, Y) is a nonzero constant
  std::optional<BiPoly> h6;     // dS/dY / X when divisible
};

CriterionResult trace_criterion(const PhantomData& ph);

/// Common zeros of h, dh/dU, dh/dV.
ZeroSet singular_locus(const BiPoly& h, int height_limit = kDefaultTowerLimit);

/// det J_G = -alpha X^(beta-alpha-1) (det J_F o R) det(l) as Laurent
/// polynomials.
bool jacobian_chain_rule_holds(const PolyMap& f, const BasisEntry& entry);
/// det J_G is a nonzero constant times X^(beta-alpha-1).
bool jacobian_is_monomial(const BasisEntry& entry);
/// The V- and U-gradient identities of K = H o F o l along the normalized
/// chart, with the computed gamma.
std::array<bool, 2> gradient_identities_hold(const PolyMap& f, const BasisEntry& entry, const VarietyComponent& comp,
                                             const PhantomData& ph);

struct Obstruction {
  int exponent = 0;
  UniPoly coefficient;  // in Y
};

/// h o R when it is a polynomial, otherwise the most negative X-power and its
/// coefficient. The chart's source change l is applied.
std::variant<BiPoly, Obstruction> laurent_membership(const BiPoly& h, const ChartR& chart);

/// Charts (X^-N, X^(N+1) Y + a_N X^N + ... + a_1 X).
bool in_no_jacobian_pair_family(const ChartR& chart);

/// N^3 + N^2 - N.
long cubic_bound(long n);

struct OracleFactor {
  BiPoly h;
  bool matched = false;
};

struct OracleReport {
  bool computed = false;
  BiPoly lc_res_y;  // squarefree lc_X of Res_Y(P - U, Q - V)
  BiPoly lc_res_x;  // squarefree lc_Y of Res_X(P - U, Q - V)
  BiPoly product;   // squarefree part of lc_res_y * lc_res_x
  std::vector<OracleFactor> factors;
  std::vector<bool> component_divides;  // per basis entry
  bool reconciled = false;              // every component divides the product
};

/// Squarefree leading coefficients of both eliminants in (U, V).
OracleReport nonproper_oracle(const PolyMap& f);
/// Fills the component columns and splits the product into matched
/// components and unmatched cofactors.
void reconcile(OracleReport& oracle, const std::vector<VarietyComponent>& components);

struct AnalysisOptions {
  EngineOptions engine;
  bool oracle = true;
  bool keep_going = false;
  int normalization_bound = 8;
};

struct BasisResult {
  NormalizedMap normalized;
  EngineResult engine;
  std::vector<std::pair<BasisEntry, VarietyComponent>> entries;
};

/// normalize -> projectivize -> iterate -> compose -> dual, deduplicated by
/// implicit equation and sorted by (alpha, beta, Phi).
BasisResult geometric_basis(const PolyMap& f, const AnalysisOptions& options = {});

struct EntryReport {
  BasisEntry entry;
  VarietyComponent component;
  PhantomData phantom;
  RootStructureReport roots;
  CriterionResult criterion;
  std::vector<VerdictRecord> verdicts;
  std::vector<TowerValue> picard_points;
  std::vector<bool> picard_on_sing;
  std::optional<std::vector<TowerValue>> singular_points;  // unset: not finite or undecided
  std::vector<std::string> notes;
};

/// Every per-entry computation and verdict.
EntryReport analyze_entry(const PolyMap& f, bool keller, const BasisEntry& entry, const VarietyComponent& comp,
                          int height_limit = kDefaultTowerLimit);

enum class Certificate { Surjective, Inconclusive, NotApplicable };
std::string to_string(Certificate c);

struct PicardSection {
  bool applicable = false;  // input is Keller
  std::vector<TowerValue> points;
  int refined_bound = 0;
  long cubic_bound = 0;
};

struct AnalysisReport {
  PolyMap input;
  AnalysisOptions options;
  NormalizedMap normalized;
  BiPoly jacobian;
  bool keller = false;
  EngineResult engine;
  std::vector<EntryReport> entries;
  Certificate certificate = Certificate::NotApplicable;
  PicardSection picard;
  OracleReport oracle;
  std::vector<std::string> errors;
};

AnalysisReport analyze(const PolyMap& f, const AnalysisOptions& options = {});

}  // namespace asymvar
