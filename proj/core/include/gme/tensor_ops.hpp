#pragma once

// Dense complex-matrix kernel for multipartite operators: Kronecker products,
// subsystem permutation, partial trace and transpose, Hermitian spectra, SVD,
// von Neumann entropy. All functions are pure and safe to call concurrently.

#include <span>

#include "gme/types.hpp"

namespace gme {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reorders tensor factors. perm[q] is the source slot placed at output slot q,
// so permute_subsystems(kron(a,b), {da,db}, {1,0}) == kron(b,a). Conjugation
// by a permutation unitary: trace, spectrum and hermiticity are preserved.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemShape& shape,
                                 std::span<const int> perm);

// Traces out every subsystem not listed in `keep`; the kept factors stay in
// their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            std::span<const int> keep);

// Transposes the listed tensor factors in place. An involution; preserves
// hermiticity.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemShape& shape,
                                std::span<const int> systems);
ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemShape& shape,
                                int system);

// Eigenvalues of a Hermitian matrix, ascending. Throws std::domain_error when
// the input deviates from Hermitian by more than `tol`.
RealVector hermitian_eigenvalues(const ComplexMatrix& m, double tol = tol::structural);

// Singular values, non-increasing; count = min(rows, cols). The zero matrix
// yields exact zeros.
RealVector svd_singular_values(const ComplexMatrix& m);

// -sum_i e_i ln e_i over the spectrum, in nats; eigenvalues below `clamp_tol`
// are clamped to zero first. Throws std::domain_error if the matrix is not
// PSD within `clamp_tol`.
double von_neumann_entropy(const ComplexMatrix& m, double clamp_tol = tol::structural);

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = tol::structural) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

}  // namespace gme
