#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace gme {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Global tolerance policy: structural checks (hermiticity, trace, PSD,
// involutions) at 1e-10, spectral comparisons (entropies, eigenvalue and
// norm agreement) at 1e-8. Both overridable per call.
namespace tol {
inline constexpr double structural = 1e-10;
inline constexpr double spectral = 1e-8;
}  // namespace tol

// Ordered subsystem dimensions of a multipartite operator, e.g. [2,2,4].
struct SubsystemShape {
  std::vector<Index> dims;

  SubsystemShape() = default;
  SubsystemShape(std::initializer_list<Index> d) : dims(d) { validate(); }
  explicit SubsystemShape(std::vector<Index> d) : dims(std::move(d)) { validate(); }

  Index total() const {
    return std::accumulate(dims.begin(), dims.end(), Index{1},
                           [](Index a, Index b) { return a * b; });
  }
  int count() const { return static_cast<int>(dims.size()); }

  bool operator==(const SubsystemShape& other) const { return dims == other.dims; }

 private:
  void validate() const {
    if (dims.empty()) throw std::invalid_argument("SubsystemShape: no subsystems");
    for (Index d : dims)
      if (d < 1) throw std::invalid_argument("SubsystemShape: nonpositive dimension");
  }
};

inline void require_shape_matches(const ComplexMatrix& m, const SubsystemShape& shape) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("expected a square matrix");
  if (m.rows() != shape.total())
    throw std::invalid_argument("matrix dimension does not match subsystem shape");
}

}  // namespace gme
