#pragma once

// Floating-point helpers. Nothing here feeds back into exact results: the
// root approximations only propose candidates that are verified exactly, and
// tower embeddings serve the numeric spot checks.

#include <complex>
#include <map>
#include <vector>

#include "asymvar/tower.hpp"

namespace asymvar {

using Complex = std::complex<long double>;

/// All complex roots of the polynomial with coefficients `c` (lowest first,
/// nonzero leading coefficient), by simultaneous iteration and Newton polish.
std::vector<Complex> complex_roots(const std::vector<Complex>& c);

/// A ring homomorphism from a tower into C, fixed by sending every level's
/// generator to the first root of its (embedded) defining polynomial.
class NumericEmbedding {
 public:
  Complex operator()(const TowerElement& x);

 private:
  const std::vector<Complex>& generators(const TowerPtr& node);

  // Keyed by node serial; values are the images of t1..th along the chain.
  std::map<std::uint64_t, std::vector<Complex>> cache_;
  std::vector<TowerPtr> keep_alive_;
};

}  // namespace asymvar
