#include "gme/su_basis.hpp"

#include <cmath>
#include <cstdint>

namespace gme {
namespace {

// Exact form of one generator: (re + i*im) * sqrt(scale_num / scale_den)
// entrywise, with integer matrices re, im.
struct ExactGenerator {
  Eigen::MatrixXi re, im;
  std::int64_t scale_num = 1;
  std::int64_t scale_den = 1;
};

std::vector<ExactGenerator> exact_generators(int d) {
  if (d < 2) throw std::invalid_argument("generators: local dimension must be >= 2");
  std::vector<ExactGenerator> out;
  const Eigen::MatrixXi zero = Eigen::MatrixXi::Zero(d, d);

  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ExactGenerator g{zero, zero, 1, 1};
      g.re(j, k) = 1;
      g.re(k, j) = 1;
      out.push_back(std::move(g));
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ExactGenerator g{zero, zero, 1, 1};
      g.im(j, k) = -1;
      g.im(k, j) = 1;
      out.push_back(std::move(g));
    }
  for (int l = 1; l < d; ++l) {
    ExactGenerator g{zero, zero, 2, static_cast<std::int64_t>(l) * (l + 1)};
    for (int m = 0; m < l; ++m) g.re(m, m) = 1;
    g.re(l, l) = -l;
    out.push_back(std::move(g));
  }
  return out;
}

ComplexMatrix materialize(const ExactGenerator& g) {
  const double s = std::sqrt(static_cast<double>(g.scale_num) /
                             static_cast<double>(g.scale_den));
  ComplexMatrix m(g.re.rows(), g.re.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      m(i, j) = Complex(g.re(i, j) * s, g.im(i, j) * s);
  return m;
}

}  // namespace

GeneratorBasis generators(int d) {
  GeneratorBasis basis;
  basis.d = d;
  for (const auto& g : exact_generators(d)) basis.generators.push_back(materialize(g));
  return basis;
}

OrthogonalityReport verify_orthogonality(const GeneratorBasis& basis, double tol) {
  const int n = basis.count();
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      // Tr(AB) = sum_ij A(i,j) B(j,i)
      Complex trace{0.0, 0.0};
      const ComplexMatrix& A = basis.generators[a];
      const ComplexMatrix& B = basis.generators[b];
      for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j) trace += A(i, j) * B(j, i);
      const double target = a == b ? 2.0 : 0.0;
      worst = std::max(worst, std::abs(trace - Complex(target, 0.0)));
    }
  return {worst < tol, worst};
}

double exact_orthogonality_deviation(int d) {
  const auto gens = exact_generators(d);
  const int n = static_cast<int>(gens.size());
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      // Gaussian-integer part of Tr(AB).
      std::int64_t tr_re = 0, tr_im = 0;
      const auto& A = gens[a];
      const auto& B = gens[b];
      for (Index i = 0; i < A.re.rows(); ++i)
        for (Index j = 0; j < A.re.cols(); ++j) {
          tr_re += static_cast<std::int64_t>(A.re(i, j)) * B.re(j, i) -
                   static_cast<std::int64_t>(A.im(i, j)) * B.im(j, i);
          tr_im += static_cast<std::int64_t>(A.re(i, j)) * B.im(j, i) +
                   static_cast<std::int64_t>(A.im(i, j)) * B.re(j, i);
        }
      if (tr_im != 0)
        throw std::logic_error("exact_orthogonality_deviation: complex trace pairing");
      if (tr_re == 0) {
        if (a == b) throw std::logic_error("exact_orthogonality_deviation: zero generator");
        continue;  // deviation exactly 0 regardless of the irrational scales
      }
      // Nonzero integer pairing only happens for identical scales, where the
      // combined scale factor is the rational scale_num/scale_den itself.
      if (A.scale_num != B.scale_num || A.scale_den != B.scale_den)
        throw std::logic_error("exact_orthogonality_deviation: mixed-scale overlap");
      // |tr_re * num / den - 2 delta| = |tr_re * num - 2 delta * den| / den
      const std::int64_t delta = a == b ? 1 : 0;
      const std::int64_t numer = tr_re * A.scale_num - 2 * delta * A.scale_den;
      worst = std::max(worst, std::abs(static_cast<double>(numer)) /
                                  static_cast<double>(A.scale_den));
    }
  return worst;
}

GeneratorBasis orthogonal_mix(const GeneratorBasis& basis, const RealMatrix& mix) {
  const int n = basis.count();
  if (mix.rows() != n || mix.cols() != n)
    throw std::invalid_argument("orthogonal_mix: mixing matrix size mismatch");
  GeneratorBasis out;
  out.d = basis.d;
  out.generators.reserve(n);
  for (int a = 0; a < n; ++a) {
    ComplexMatrix g = ComplexMatrix::Zero(basis.d, basis.d);
    for (int b = 0; b < n; ++b) g += mix(a, b) * basis.generators[b];
    out.generators.push_back(std::move(g));
  }
  return out;
}

}  // namespace gme
