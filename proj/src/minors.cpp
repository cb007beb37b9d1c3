#include "homsiegel/minors.hpp"

#include "homsiegel/continuation.hpp"

namespace homsiegel {
namespace {

std::vector<int> mus(std::span<const int> nu) {
  std::vector<int> out;
  int acc = 0;
  for (int n : nu) {
    out.push_back(acc + 1);
    acc += n;
  }
  return out;
}

ComplexMatrix segment_point(const ComplexMatrix& Z, double t) {
  return (1.0 - t) * ComplexMatrix::Identity(Z.rows(), Z.cols()) + t * Z;
}

void require_continuation_domain(const ComplexMatrix& Z) {
  if (!has_positive_real_part(Z)) throw DomainError("outside continuation domain");
}

}  // namespace

cplx principal_minor(const ComplexMatrix& Z, int m) {
  if (m < 0 || m > Z.rows()) throw StructuralError("minor order out of range");
  if (m == 0) return 1.0;
  return Z.topLeftCorner(m, m).determinant();
}

std::vector<cplx> leading_pivots(const ComplexMatrix& Z) {
  ComplexMatrix A = Z;
  const Eigen::Index n = A.rows();
  std::vector<cplx> pivots(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx p = A(i, i);
    if (p == 0.0) throw BranchError("vanishing leading minor");
    pivots[static_cast<std::size_t>(i)] = p;
    const Eigen::Index rest = n - i - 1;
    if (rest > 0) {
      A.bottomRightCorner(rest, rest) -= A.col(i).tail(rest) * A.row(i).tail(rest) / p;
    }
  }
  return pivots;
}

bool has_positive_real_part(const ComplexMatrix& Z) {
  const ComplexMatrix H = 0.5 * (Z + Z.adjoint());
  Eigen::LLT<ComplexMatrix> llt(H);
  return llt.info() == Eigen::Success;
}

std::vector<cplx> log_deltas(std::span<const int> nu, const ComplexMatrix& Z) {
  require_continuation_domain(Z);
  const auto mu = mus(nu);
  const std::vector<cplx> start(mu.size(), cplx(0.0));
  return track_logs(
      [&](double t, std::vector<cplx>& out) {
        const auto pivots = leading_pivots(segment_point(Z, t));
        out.resize(mu.size());
        for (std::size_t j = 0; j < mu.size(); ++j) out[j] = pivots[static_cast<std::size_t>(mu[j] - 1)];
      },
      start);
}

cplx log_delta(std::span<const int> nu, const ComplexMatrix& Z, int j) {
  if (j < 1 || j > static_cast<int>(nu.size())) throw StructuralError("delta index out of range");
  return log_deltas(nu, Z)[static_cast<std::size_t>(j - 1)];
}

KernelValue delta(std::span<const int> nu, const ComplexMatrix& Z, int j) { return {log_delta(nu, Z, j)}; }

KernelValue power_q(std::span<const int> nu, const ComplexMatrix& Z, std::span<const double> s) {
  if (s.size() != nu.size()) throw StructuralError("exponent vector length must equal the rank");
  const auto logs = log_deltas(nu, Z);
  cplx acc = 0.0;
  for (std::size_t j = 0; j < logs.size(); ++j) {
    if (s[j] != 0.0) acc += s[j] * logs[j];
  }
  return {acc};
}

std::vector<cplx> log_leading_minors(const ComplexMatrix& Z, std::span<const int> orders) {
  require_continuation_domain(Z);
  for (int m : orders) {
    if (m < 0 || m > Z.rows()) throw StructuralError("minor order out of range");
  }
  const std::vector<cplx> start(orders.size(), cplx(0.0));
  return track_logs(
      [&](double t, std::vector<cplx>& out) {
        const auto pivots = leading_pivots(segment_point(Z, t));
        out.resize(orders.size());
        for (std::size_t q = 0; q < orders.size(); ++q) {
          cplx det = 1.0;
          for (int i = 0; i < orders[q]; ++i) det *= pivots[static_cast<std::size_t>(i)];
          out[q] = det;
        }
      },
      start);
}

IntTable exponent_c(std::span<const int> nu) {
  const int r = static_cast<int>(nu.size());
  if (r < 1) throw StructuralError("rank must be at least 1");
  IntTable c = IntTable::Zero(r, r);
  for (int j = 0; j < r; ++j) c(j, j) = 1;
  // Row j+1 from row j (0-based here): c_{j+1,j} = -nu_j, c_{j+1,i} = (1 - nu_j) c_{j,i}.
  for (int j = 0; j + 1 < r; ++j) {
    c(j + 1, j) = -nu[static_cast<std::size_t>(j)];
    for (int i = 0; i < j; ++i) c(j + 1, i) = (1 - nu[static_cast<std::size_t>(j)]) * c(j, i);
  }
  return c;
}

ExponentData exponent_data(const RealizationSpec& spec, ExponentConvention convention) {
  const int r = static_cast<int>(spec.nu.size());
  ExponentData out;
  out.c = exponent_c(spec.nu);
  out.dims_v.assign(static_cast<std::size_t>(r), 0);
  out.b.assign(static_cast<std::size_t>(r), 0);
  for (const auto& [key, basis] : spec.v_basis) {
    const auto [l, k] = key;
    const int d = static_cast<int>(basis.size());
    out.dims_v[static_cast<std::size_t>(l - 1)] += d;  // counted as V_{l,k} with k < l
    out.dims_v[static_cast<std::size_t>(k - 1)] += d;  // counted as V_{l,k} with l > k
  }
  for (std::size_t k = 0; k < spec.w_basis.size(); ++k) out.b[k] = static_cast<int>(spec.w_basis[k].size());

  out.e.resize(static_cast<std::size_t>(r));
  for (std::size_t k = 0; k < out.e.size(); ++k) {
    const long long d = 2 + out.dims_v[k];
    out.e[k] = (convention == ExponentConvention::doubled ? 2 * d : d) + out.b[k];
  }
  out.s.assign(static_cast<std::size_t>(r), 0);
  for (int j = 0; j < r; ++j) {
    for (int k = j; k < r; ++k) out.s[static_cast<std::size_t>(j)] += out.e[static_cast<std::size_t>(k)] * out.c(k, j);
  }
  return out;
}

}  // namespace homsiegel
