#pragma once

// Generalized Gell-Mann generators of SU(d), normalized to Tr(l_k l_l) = 2 d_kl.
//
// Canonical ordering: all symmetric E_jk + E_kj with j<k in lexicographic
// order, then all antisymmetric -i(E_jk - E_kj), then the d-1 diagonal
// generators sqrt(2/(l(l+1))) (E_00 + ... + E_{l-1,l-1} - l E_ll). Every entry
// is a Gaussian integer times the square root of a rational, which lets the
// trace pairing be verified in exact integer arithmetic.

#include <vector>

#include "gme/types.hpp"

namespace gme {

struct GeneratorBasis {
  int d = 0;
  std::vector<ComplexMatrix> generators;  // d*d - 1 entries

  int count() const { return static_cast<int>(generators.size()); }
};

// Canonical basis for local dimension d >= 2. Entries are closed-form values
// (0, +-1, +-i, 1/sqrt(3), ...); no numerical orthogonalization is involved.
GeneratorBasis generators(int d);

struct OrthogonalityReport {
  bool orthogonal = false;
  double max_deviation = 0.0;
};

// Numeric check of max |Tr(l_k l_l) - 2 d_kl| over all pairs; works for any
// generator list, canonical or not.
OrthogonalityReport verify_orthogonality(const GeneratorBasis& basis,
                                         double tol = tol::structural);

// Pairing deviation of the canonical basis evaluated in exact rational
// arithmetic over the integer-times-radical representation. Exactly 0.0 for
// every d; anything else indicates a construction bug.
double exact_orthogonality_deviation(int d);

// Replaces the generator list by an orthogonal recombination
// l'_a = sum_b O(a,b) l_b, which preserves Tr(l'_a l'_b) = 2 d_ab. Used to
// exercise basis-independence of downstream norms.
GeneratorBasis orthogonal_mix(const GeneratorBasis& basis, const RealMatrix& mix);

}  // namespace gme
