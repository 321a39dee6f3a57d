#include "pbtsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pbtsim {

namespace {

void check_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

}  // namespace

ComplexMatrix pauli_matrix(int k) {
  const Complex i(0.0, 1.0);
  ComplexMatrix s(2, 2);
  switch (k) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_matrix: index must be in 0..3");
  }
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  check_square(m, "partial_trace");
  Eigen::Index total = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: dimensions must be positive");
    total *= d;
  }
  if (total != m.rows())
    throw std::invalid_argument("partial_trace: dimensions do not match the matrix");

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    int s = keep[j];
    if (s < 0 || s >= n) throw std::invalid_argument("partial_trace: subsystem out of range");
    if (j > 0 && keep[j] <= keep[j - 1])
      throw std::invalid_argument("partial_trace: keep list must be strictly increasing");
    kept[s] = true;
  }

  // Strides of each subsystem in the flat index (most significant first).
  std::vector<Eigen::Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  std::vector<int> kept_list, traced_list;
  for (int s = 0; s < n; ++s) (kept[s] ? kept_list : traced_list).push_back(s);

  Eigen::Index dim_keep = 1, dim_trace = 1;
  for (int s : kept_list) dim_keep *= dims[s];
  for (int s : traced_list) dim_trace *= dims[s];

  // Flat offsets contributed by every multi-index over the kept (resp.
  // traced) subsystems, enumerated in row-major order.
  auto offsets = [&](const std::vector<int>& subs, Eigen::Index count) {
    std::vector<Eigen::Index> off(count, 0);
    std::vector<int> idx(subs.size(), 0);
    for (Eigen::Index flat = 0; flat < count; ++flat) {
      Eigen::Index o = 0;
      for (std::size_t j = 0; j < subs.size(); ++j) o += idx[j] * stride[subs[j]];
      off[flat] = o;
      for (int j = static_cast<int>(subs.size()) - 1; j >= 0; --j) {
        if (++idx[j] < dims[subs[j]]) break;
        idx[j] = 0;
      }
    }
    return off;
  };
  const auto keep_off = offsets(kept_list, dim_keep);
  const auto trace_off = offsets(traced_list, dim_trace);

  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index r = 0; r < dim_keep; ++r)
    for (Eigen::Index c = 0; c < dim_keep; ++c) {
      Complex acc = 0;
      for (Eigen::Index t = 0; t < dim_trace; ++t)
        acc += m(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::array<int, 2> dims,
                                int subsystem) {
  check_square(m, "partial_transpose");
  const Eigen::Index d1 = dims[0], d2 = dims[1];
  if (d1 < 1 || d2 < 1 || d1 * d2 != m.rows())
    throw std::invalid_argument("partial_transpose: dimensions do not match the matrix");
  if (subsystem != 0 && subsystem != 1)
    throw std::invalid_argument("partial_transpose: subsystem must be 0 or 1");

  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k)
        for (Eigen::Index l = 0; l < d2; ++l) {
          if (subsystem == 0)
            out(i * d2 + j, k * d2 + l) = m(k * d2 + j, i * d2 + l);
          else
            out(i * d2 + j, k * d2 + l) = m(i * d2 + l, k * d2 + j);
        }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const int> dims,
                                 std::span<const int> perm) {
  check_square(m, "permute_subsystems");
  const int n = static_cast<int>(dims.size());
  Eigen::Index total = 1;
  for (int d : dims) total *= d;
  if (total != m.rows())
    throw std::invalid_argument("permute_subsystems: dimensions do not match the matrix");
  std::vector<bool> seen(n, false);
  for (int s : perm) {
    if (s < 0 || s >= n || seen[s])
      throw std::invalid_argument("permute_subsystems: invalid permutation");
    seen[s] = true;
  }
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_subsystems: invalid permutation");

  std::vector<Eigen::Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  // Map each flat index of the result to the source flat index.
  std::vector<Eigen::Index> src(total);
  std::vector<int> idx(n, 0);  // digits of the result index, factor order perm
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index s = 0;
    for (int k = 0; k < n; ++k) s += idx[k] * stride[perm[k]];
    src[flat] = s;
    for (int k = n - 1; k >= 0; --k) {
      if (++idx[k] < dims[perm[k]]) break;
      idx[k] = 0;
    }
  }

  ComplexMatrix out(total, total);
  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c) out(r, c) = m(src[r], src[c]);
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

EigenSystem hermitian_eigs(const ComplexMatrix& m) {
  if (!is_hermitian(m, hermitian_tol))
    throw std::invalid_argument("hermitian_eigs: matrix is not Hermitian");
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigs: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix psd_inv_sqrt(const ComplexMatrix& m, double support_tol) {
  EigenSystem es = hermitian_eigs(m);
  const double top = es.values.size() ? es.values.maxCoeff() : 0.0;
  if (top <= 0.0) return ComplexMatrix::Zero(m.rows(), m.cols());
  const double cutoff = support_tol * top;
  if (es.values.minCoeff() < -std::max(1e-10, cutoff))
    throw std::invalid_argument("psd_inv_sqrt: matrix has a negative eigenvalue");
  RealVector inv(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i)
    inv[i] = es.values[i] > cutoff ? 1.0 / std::sqrt(es.values[i]) : 0.0;
  return es.vectors * inv.asDiagonal() * es.vectors.adjoint();
}

double max_abs(const ComplexMatrix& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

}  // namespace pbtsim
