#include "gme/tensor_ops.hpp"

#include <algorithm>
#include <cmath>

namespace gme {
namespace {

// Linear index maps for mixed-radix digit manipulation. dims are row-major:
// the last subsystem varies fastest.
std::vector<Index> strides_of(const SubsystemShape& shape) {
  const int n = shape.count();
  std::vector<Index> s(n);
  Index acc = 1;
  for (int q = n - 1; q >= 0; --q) {
    s[q] = acc;
    acc *= shape.dims[q];
  }
  return s;
}

void check_subset(const SubsystemShape& shape, std::span<const int> systems,
                  const char* what) {
  std::vector<bool> seen(shape.dims.size(), false);
  for (int s : systems) {
    if (s < 0 || s >= shape.count())
      throw std::invalid_argument(std::string(what) + ": subsystem index out of range");
    if (seen[s]) throw std::invalid_argument(std::string(what) + ": repeated subsystem");
    seen[s] = true;
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const SubsystemShape& shape,
                                 std::span<const int> perm) {
  require_shape_matches(m, shape);
  const int n = shape.count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_subsystems: permutation length mismatch");
  check_subset(shape, perm, "permute_subsystems");

  const auto src_strides = strides_of(shape);
  std::vector<Index> out_dims(n);
  for (int q = 0; q < n; ++q) out_dims[q] = shape.dims[perm[q]];
  const auto dst_strides = strides_of(SubsystemShape(out_dims));

  const Index total = shape.total();
  std::vector<Index> map(total);
  for (Index x = 0; x < total; ++x) {
    Index y = 0;
    for (int q = 0; q < n; ++q) {
      const Index digit = (x / src_strides[perm[q]]) % shape.dims[perm[q]];
      y += digit * dst_strides[q];
    }
    map[x] = y;
  }

  ComplexMatrix out(total, total);
  for (Index i = 0; i < total; ++i)
    for (Index j = 0; j < total; ++j) out(map[i], map[j]) = m(i, j);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemShape& shape,
                            std::span<const int> keep) {
  require_shape_matches(m, shape);
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  check_subset(shape, keep, "partial_trace");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());

  const int n = shape.count();
  std::vector<int> dropped;
  {
    std::vector<bool> is_kept(n, false);
    for (int s : kept) is_kept[s] = true;
    for (int q = 0; q < n; ++q)
      if (!is_kept[q]) dropped.push_back(q);
  }

  const auto strides = strides_of(shape);
  auto offsets = [&](const std::vector<int>& subs) {
    Index count = 1;
    for (int s : subs) count *= shape.dims[s];
    std::vector<Index> off(count);
    for (Index x = 0; x < count; ++x) {
      Index rem = x, o = 0;
      for (int q = static_cast<int>(subs.size()) - 1; q >= 0; --q) {
        const Index d = shape.dims[subs[q]];
        o += (rem % d) * strides[subs[q]];
        rem /= d;
      }
      off[x] = o;
    }
    return off;
  };

  const auto kept_off = offsets(kept);
  const auto drop_off = offsets(dropped);
  const Index dk = static_cast<Index>(kept_off.size());

  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Index r = 0; r < dk; ++r)
    for (Index c = 0; c < dk; ++c) {
      Complex acc{0.0, 0.0};
      for (Index t : drop_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemShape& shape,
                                std::span<const int> systems) {
  require_shape_matches(m, shape);
  check_subset(shape, systems, "partial_transpose");

  const auto strides = strides_of(shape);
  std::vector<bool> flip(shape.dims.size(), false);
  for (int s : systems) flip[s] = true;

  const Index total = shape.total();
  // Split each linear index into the transposed part and the rest.
  std::vector<Index> sys_part(total), rest_part(total);
  for (Index x = 0; x < total; ++x) {
    Index sp = 0;
    for (int q = 0; q < shape.count(); ++q)
      if (flip[q]) sp += ((x / strides[q]) % shape.dims[q]) * strides[q];
    sys_part[x] = sp;
    rest_part[x] = x - sp;
  }

  ComplexMatrix out(total, total);
  for (Index i = 0; i < total; ++i)
    for (Index j = 0; j < total; ++j)
      out(rest_part[i] + sys_part[j], rest_part[j] + sys_part[i]) = m(i, j);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const SubsystemShape& shape,
                                int system) {
  const int sys[] = {system};
  return partial_transpose(m, shape, sys);
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol))
    throw std::domain_error("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

RealVector svd_singular_values(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double von_neumann_entropy(const ComplexMatrix& m, double clamp_tol) {
  RealVector ev = hermitian_eigenvalues(m);
  if (ev(0) < -clamp_tol)
    throw std::domain_error("von_neumann_entropy: matrix is not PSD within tolerance");
  double s = 0.0;
  for (Index i = 0; i < ev.size(); ++i) {
    const double e = ev(i) < clamp_tol ? 0.0 : ev(i);
    if (e > 0.0) s -= e * std::log(e);
  }
  return s;
}

}  // namespace gme
