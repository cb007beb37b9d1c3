#include "homsiegel/geometry.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "homsiegel/sampling.hpp"

namespace homsiegel {
namespace {

std::vector<Tangent> tangent_basis(const Realization& r) {
  std::vector<Tangent> basis;
  for (int a = 0; a < r.dim(); ++a) {
    ComplexVector e = ComplexVector::Zero(r.dim());
    e(a) = 1.0;
    basis.push_back(r.point(e));
  }
  return basis;
}

MetricForm checked(MetricForm m) {
  m.G = 0.5 * (m.G + m.G.adjoint()).eval();
  const double scale = std::max(1.0, m.G.cwiseAbs().maxCoeff());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.G, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 1e-10 * scale) throw NumericalError("metric degenerate");
  return m;
}

// log K(p, p) = -sum_j s_j log det A^[mu_j] with A = Im Z - F(U, U) real.
double log_kernel_diagonal(const Realization& r, const ExponentData& exps, const SiegelPoint& p) {
  const RealMatrix A = kernel_arg(p, p).real();
  double acc = 0.0;
  for (int j = 1; j <= r.rank(); ++j) {
    const long long s = exps.s[static_cast<std::size_t>(j - 1)];
    if (s == 0) continue;
    const int m = r.mu(j);
    Eigen::LLT<RealMatrix> llt(A.topLeftCorner(m, m));
    if (llt.info() != Eigen::Success) throw DomainError("point outside the domain");
    double logdet = 0.0;
    for (int i = 0; i < m; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    acc -= static_cast<double>(s) * logdet;
  }
  return acc;
}

RealMatrix fd_hessian(const std::function<double(const RealVector&)>& f, int n, double h) {
  RealMatrix H(n, n);
  const RealVector x0 = RealVector::Zero(n);
  const double f0 = f(x0);
  for (int k = 0; k < n; ++k) {
    RealVector e = RealVector::Zero(n);
    e(k) = h;
    H(k, k) = (f(x0 + e) - 2.0 * f0 + f(x0 - e)) / (h * h);
    for (int l = 0; l < k; ++l) {
      RealVector g = RealVector::Zero(n);
      g(l) = h;
      H(k, l) = (f(x0 + e + g) - f(x0 + e - g) - f(x0 - e + g) + f(x0 - e - g)) / (4.0 * h * h);
      H(l, k) = H(k, l);
    }
  }
  return H;
}

struct Symmetric {
  std::vector<std::pair<int, int>> entries;  // (i, j), i <= j
  explicit Symmetric(int n) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) entries.emplace_back(i, j);
  }
  ComplexMatrix unit(std::size_t k, int n) const {
    ComplexMatrix E = ComplexMatrix::Zero(n, n);
    E(entries[k].first, entries[k].second) = 1.0;
    E(entries[k].second, entries[k].first) = 1.0;
    return E;
  }
};

ComplexMatrix hermitian_power(const ComplexMatrix& A, double p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(A);
  const RealVector ev = es.eigenvalues().array().pow(p);
  return es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

void check_disk_input(const ComplexMatrix& W, int n) {
  if (W.rows() != n || W.cols() != n) throw StructuralError("disk points must be n x n");
  if ((W - W.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, W.cwiseAbs().maxCoeff())) {
    throw StructuralError("disk points must be symmetric");
  }
  if (!in_disk(W)) throw DomainError("point outside the Siegel disk");
}

// Real coordinates of a curve: c(t) = c0 + t (c1 - c0) + sum_m sin(m pi t) a_m.
struct SinePath {
  ComplexVector c0;
  ComplexVector c1;
  std::vector<ComplexVector> modes;

  ComplexVector at(double t) const {
    ComplexVector c = c0 + t * (c1 - c0);
    for (std::size_t m = 0; m < modes.size(); ++m) c += std::sin((m + 1.0) * std::numbers::pi * t) * modes[m];
    return c;
  }
  ComplexVector velocity(double t) const {
    ComplexVector v = c1 - c0;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      v += (m + 1.0) * std::numbers::pi * std::cos((m + 1.0) * std::numbers::pi * t) * modes[m];
    }
    return v;
  }
};

class GaussLegendre {
 public:
  explicit GaussLegendre(int n) : table_(gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n))) {
    for (int i = 0; i < n; ++i) {
      double x = 0.0;
      double w = 0.0;
      gsl_integration_glfixed_point(0.0, 1.0, static_cast<std::size_t>(i), &x, &w, table_.get());
      nodes.push_back(x);
      weights.push_back(w);
    }
  }
  std::vector<double> nodes;
  std::vector<double> weights;

 private:
  struct Free {
    void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
  };
  std::unique_ptr<gsl_integration_glfixed_table, Free> table_;
};

const GaussLegendre& quadrature() {
  static const GaussLegendre gl(kQuadratureNodes);
  return gl;
}

// Metric length of a path in domain coordinates; +inf if a node leaves D.
double path_length(const Realization& r, const ExponentData& exps, const SinePath& path) {
  const auto& gl = quadrature();
  double length = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const SiegelPoint x = r.point(path.at(gl.nodes[i]));
    if (!in_domain(r, x)) return std::numeric_limits<double>::infinity();
    const ComplexVector v = path.velocity(gl.nodes[i]);
    length += gl.weights[i] * std::sqrt(std::max(0.0, bergman_metric(r, exps, x).value(v)));
  }
  return length;
}

struct SimplexContext {
  const Realization* r;
  const ExponentData* exps;
  SinePath path;
};

double simplex_objective(const gsl_vector* x, void* params) {
  auto* ctx = static_cast<SimplexContext*>(params);
  const int d = ctx->r->dim();
  for (int m = 0; m < kPathModes; ++m) {
    for (int a = 0; a < d; ++a) {
      const std::size_t base = 2 * static_cast<std::size_t>(m * d + a);
      ctx->path.modes[static_cast<std::size_t>(m)](a) = cplx(gsl_vector_get(x, base), gsl_vector_get(x, base + 1));
    }
  }
  try {
    const double L = path_length(*ctx->r, *ctx->exps, ctx->path);
    return std::isfinite(L) ? L : 1e300;
  } catch (const Error&) {
    return 1e300;
  }
}

double optimize_path(const Realization& r, const ExponentData& exps, const SinePath& straight, double start) {
  const std::size_t d = static_cast<std::size_t>(r.dim());
  const std::size_t n = 2 * d * kPathModes;
  SimplexContext ctx{&r, &exps, straight};
  ctx.path.modes.assign(kPathModes, ComplexVector::Zero(r.dim()));

  gsl_multimin_function fn{&simplex_objective, n, &ctx};
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> x(gsl_vector_calloc(n), &gsl_vector_free);
  std::unique_ptr<gsl_vector, decltype(&gsl_vector_free)> step(gsl_vector_alloc(n), &gsl_vector_free);
  const double scale = std::max(1e-3, 0.1 * (straight.c1 - straight.c0).norm());
  gsl_vector_set_all(step.get(), scale);
  std::unique_ptr<gsl_multimin_fminimizer, decltype(&gsl_multimin_fminimizer_free)> s(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n), &gsl_multimin_fminimizer_free);
  gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), step.get());
  for (int it = 0; it < kSimplexIterations; ++it) {
    if (gsl_multimin_fminimizer_iterate(s.get()) != GSL_SUCCESS) break;
  }
  return std::min(start, s->fval);
}

}  // namespace

MetricForm bergman_metric(const Realization& r, const ExponentData& exps, const SiegelPoint& p) {
  const int d = r.dim();
  const auto basis = tangent_basis(r);
  const ComplexMatrix A = kernel_arg(p, p);
  ComplexMatrix G = ComplexMatrix::Zero(d, d);
  for (int j = 1; j <= r.rank(); ++j) {
    const long long s = exps.s[static_cast<std::size_t>(j - 1)];
    if (s == 0) continue;
    const int m = r.mu(j);
    const Eigen::LLT<RealMatrix> llt(A.real().topLeftCorner(m, m));
    if (llt.info() != Eigen::Success) throw DomainError("point outside the domain");
    const ComplexMatrix Minv = llt.solve(RealMatrix::Identity(m, m)).cast<cplx>();
    std::vector<ComplexMatrix> X(static_cast<std::size_t>(d));
    std::vector<ComplexMatrix> Y(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
      const Tangent& e = basis[static_cast<std::size_t>(a)];
      const ComplexMatrix hol = e.Z / (2.0 * kI) - hermitian_form(e.U, p.U);
      const ComplexMatrix antihol = -e.Z.conjugate() / (2.0 * kI) - hermitian_form(p.U, e.U);
      X[static_cast<std::size_t>(a)] = Minv * hol.topLeftCorner(m, m);
      Y[static_cast<std::size_t>(a)] = Minv * antihol.topLeftCorner(m, m);
    }
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        const ComplexMatrix mixed =
            -hermitian_form(basis[static_cast<std::size_t>(a)].U, basis[static_cast<std::size_t>(b)].U);
        const cplx second = (Minv * mixed.topLeftCorner(m, m)).trace() -
                            (X[static_cast<std::size_t>(a)] * Y[static_cast<std::size_t>(b)]).trace();
        // Stored transposed so that the squared length is v^* G v.
        G(b, a) -= static_cast<double>(s) * second;
      }
    }
  }
  return checked({p, G});
}

MetricForm bergman_metric(const Realization& r, const SiegelPoint& p) {
  return bergman_metric(r, exponent_data(r.spec()), p);
}

MetricForm bergman_metric_fd(const Realization& r, const ExponentData& exps, const SiegelPoint& p) {
  const int d = r.dim();
  const ComplexVector c0 = r.coordinates(p);
  auto psi = [&](const RealVector& x) {
    ComplexVector c = c0;
    for (int a = 0; a < d; ++a) c(a) += cplx(x(a), x(d + a));
    return log_kernel_diagonal(r, exps, r.point(c));
  };
  // Second derivatives scale like the inverse square of the cone part.
  const RealVector ev = Eigen::SelfAdjointEigenSolver<RealMatrix>(cone_part(p), Eigen::EigenvaluesOnly).eigenvalues();
  const double h = kMetricStep * std::sqrt(ev.minCoeff() * ev.maxCoeff());
  const RealMatrix H1 = fd_hessian(psi, 2 * d, h);
  const RealMatrix H2 = fd_hessian(psi, 2 * d, 0.5 * h);
  const RealMatrix H = (4.0 * H2 - H1) / 3.0;
  ComplexMatrix G(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      G(b, a) = 0.25 * cplx(H(a, b) + H(d + a, d + b), H(a, d + b) - H(d + a, b));
    }
  }
  return checked({p, G});
}

cplx metric_upper_half(const ComplexMatrix& Z, const ComplexMatrix& dZ, const ComplexMatrix& dZ2) {
  const Eigen::Index n = Z.rows();
  const Eigen::LLT<RealMatrix> llt(Z.imag());
  if (llt.info() != Eigen::Success) throw DomainError("point outside the Siegel upper half plane");
  const ComplexMatrix Yinv = llt.solve(RealMatrix::Identity(n, n)).cast<cplx>();
  return static_cast<double>(n + 1) / 4.0 * (Yinv * dZ * Yinv * dZ2.conjugate()).trace();
}

double metric_upper_half(const ComplexMatrix& Z, const ComplexMatrix& dZ) {
  return metric_upper_half(Z, dZ, dZ).real();
}

double metric_disk(const ComplexMatrix& W, const ComplexMatrix& dW) {
  const Eigen::Index n = W.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix A = Id - W * W.conjugate();
  const ComplexMatrix B = Id - W.conjugate() * W;
  return static_cast<double>(n + 1) * (A.partialPivLu().solve(dW) * B.partialPivLu().solve(dW.conjugate())).trace().real();
}

ComplexMatrix disk_automorphism(const ComplexMatrix& W, const ComplexMatrix& Z) {
  const Eigen::Index n = W.rows();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix A = Id - W * W.adjoint();
  const ComplexMatrix B = Id - W.adjoint() * W;
  const ComplexMatrix right = (Id - W.conjugate() * Z).partialPivLu().solve(hermitian_power(B, 0.5));
  return hermitian_power(A, -0.5) * (Z - W) * right;
}

double disk_distance_scale(int n) { return std::sqrt(static_cast<double>(n + 1)); }

double distance_disk(const ComplexMatrix& W, const ComplexMatrix& Wprime, int n) {
  check_disk_input(W, n);
  check_disk_input(Wprime, n);
  const ComplexMatrix image = disk_automorphism(W, Wprime);
  const RealVector sv = Eigen::JacobiSVD<ComplexMatrix>(image).singularValues();
  double acc = 0.0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) >= 1.0) throw DomainError("point outside the Siegel disk");
    acc += std::pow(std::atanh(sv(k)), 2);
  }
  return disk_distance_scale(n) * std::sqrt(acc);
}

RealMatrix disk_metric_real(const ComplexMatrix& W) {
  const int n = static_cast<int>(W.rows());
  const Symmetric sym(n);
  const std::size_t m = sym.entries.size();
  const ComplexMatrix Id = ComplexMatrix::Identity(n, n);
  const auto luA = (Id - W * W.conjugate()).partialPivLu();
  const auto luB = (Id - W.conjugate() * W).partialPivLu();
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
  for (std::size_t k = 0; k < 2 * m; ++k) {
    const ComplexMatrix E = (k < m ? cplx(1.0) : kI) * sym.unit(k % m, n);
    left.push_back(luA.solve(E));
    right.push_back(luB.solve(E.conjugate().eval()));
  }
  RealMatrix G(2 * m, 2 * m);
  for (std::size_t k = 0; k < 2 * m; ++k)
    for (std::size_t l = 0; l < 2 * m; ++l)
      G(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) =
          static_cast<double>(n + 1) * (left[k] * right[l]).trace().real();
  return 0.5 * (G + G.transpose());
}

RealVector disk_to_real(const ComplexMatrix& W) {
  const Symmetric sym(static_cast<int>(W.rows()));
  const std::size_t m = sym.entries.size();
  RealVector x(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    const cplx w = W(sym.entries[k].first, sym.entries[k].second);
    x(static_cast<Eigen::Index>(k)) = w.real();
    x(static_cast<Eigen::Index>(m + k)) = w.imag();
  }
  return x;
}

ComplexMatrix disk_from_real(const RealVector& x, int n) {
  const Symmetric sym(n);
  const std::size_t m = sym.entries.size();
  if (static_cast<std::size_t>(x.size()) != 2 * m) throw StructuralError("wrong coordinate count for U_n");
  ComplexMatrix W(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    const cplx w(x(static_cast<Eigen::Index>(k)), x(static_cast<Eigen::Index>(m + k)));
    W(sym.entries[k].first, sym.entries[k].second) = w;
    W(sym.entries[k].second, sym.entries[k].first) = w;
  }
  return W;
}

PathOracleResult geodesic_oracle(const RealMetric& metric, const RealVector& a, const RealVector& b, int segments) {
  if (segments < 4 || (segments & (segments - 1)) != 0) throw StructuralError("segments must be a power of two >= 4");
  const Eigen::Index d = a.size();
  std::vector<RealVector> path{a, 0.5 * (a + b), b};
  PathOracleResult result;

  auto energy = [&](const std::vector<RealVector>& x) {
    const double N = static_cast<double>(x.size() - 1);
    double E = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      const RealVector delta = x[i + 1] - x[i];
      E += N * delta.dot(metric(0.5 * (x[i] + x[i + 1])) * delta);
    }
    return E;
  };
  auto safe_energy = [&](const std::vector<RealVector>& x) {
    try {
      const double E = energy(x);
      return std::isfinite(E) ? E : std::numeric_limits<double>::infinity();
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  auto length = [&](const std::vector<RealVector>& x) {
    double L = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      const RealVector delta = x[i + 1] - x[i];
      L += std::sqrt(delta.dot(metric(0.5 * (x[i] + x[i + 1])) * delta));
    }
    return L;
  };

  double previous = 0.0;
  for (int N = 2;; N *= 2) {
    const Eigen::Index K = N - 1;
    double E = energy(path);
    for (int it = 0; it < 200; ++it) {
      ++result.iterations;
      std::vector<RealMatrix> G(static_cast<std::size_t>(N));
      std::vector<RealVector> dG(static_cast<std::size_t>(N));  // gradient of delta^t G(m) delta in m
      for (int i = 0; i < N; ++i) {
        const RealVector mid = 0.5 * (path[i] + path[i + 1]);
        const RealVector delta = path[i + 1] - path[i];
        G[i] = metric(mid);
        dG[i].resize(d);
        for (Eigen::Index k = 0; k < d; ++k) {
          const double h = 1e-6 * std::max(1.0, std::abs(mid(k)));
          RealVector up = mid;
          RealVector down = mid;
          up(k) += h;
          down(k) -= h;
          dG[i](k) = (delta.dot(metric(up) * delta) - delta.dot(metric(down) * delta)) / (2.0 * h);
        }
      }
      RealVector grad(K * d);
      RealMatrix H = RealMatrix::Zero(K * d, K * d);
      for (Eigen::Index k = 1; k <= K; ++k) {
        const RealVector dl = path[k] - path[k - 1];
        const RealVector dr = path[k + 1] - path[k];
        grad.segment((k - 1) * d, d) = N * (2.0 * G[k - 1] * dl - 2.0 * G[k] * dr + 0.5 * (dG[k - 1] + dG[k]));
        H.block((k - 1) * d, (k - 1) * d, d, d) = 2.0 * N * (G[k - 1] + G[k]);
        if (k < K) {
          H.block((k - 1) * d, k * d, d, d) = -2.0 * N * G[k];
          H.block(k * d, (k - 1) * d, d, d) = -2.0 * N * G[k];
        }
      }
      const RealVector step = H.llt().solve(grad);
      double alpha = 1.0;
      double E_new = E;
      std::vector<RealVector> trial = path;
      for (int ls = 0; ls < 40; ++ls) {
        for (Eigen::Index k = 1; k <= K; ++k) trial[k] = path[k] - alpha * step.segment((k - 1) * d, d);
        E_new = safe_energy(trial);
        if (E_new <= E) break;
        alpha *= 0.5;
      }
      if (!(E_new <= E)) break;
      path = trial;
      const bool done = E - E_new <= 1e-15 * E || alpha * step.norm() <= 1e-13 * (1.0 + (b - a).norm());
      E = E_new;
      if (done) break;
    }
    const double L = length(path);
    if (N == segments) {
      result.length_coarse = previous;
      result.length = (4.0 * L - previous) / 3.0;
      return result;
    }
    previous = L;
    std::vector<RealVector> refined;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      refined.push_back(path[i]);
      refined.push_back(0.5 * (path[i] + path[i + 1]));
    }
    refined.push_back(path.back());
    path = std::move(refined);
  }
}

DistanceSample distance_siegel_upper_bound(const Realization& r, const ExponentData& exps, const SiegelPoint& p,
                                           const SiegelPoint& q, bool optimize) {
  const GroupElement b = to_basepoint(r, p);
  const SiegelPoint target = group_act(group_inverse(b), q);
  if (!in_domain(r, target)) throw DomainError("point outside the domain");
  const SiegelPoint p0 = r.base_point();
  SinePath straight{r.coordinates(p0), r.coordinates(target), {}};
  DistanceSample sample{p, q, path_length(r, exps, straight), DistanceMethod::path_upper_bound};
  if (!std::isfinite(sample.distance)) {
    // Route through i times the midpoint of the imaginary parts.
    const SiegelPoint waypoint{kI * (0.5 * (p0.Z.imag() + target.Z.imag())).cast<cplx>(), r.zero_tangent().U};
    const ComplexVector cw = r.coordinates(waypoint);
    sample.distance = path_length(r, exps, {straight.c0, cw, {}}) + path_length(r, exps, {cw, straight.c1, {}});
    if (!std::isfinite(sample.distance)) throw DomainError("path leaves the domain");
    return sample;
  }
  if (optimize && sample.distance > 0.0) {
    const double best = optimize_path(r, exps, straight, sample.distance);
    if (best < sample.distance) {
      sample.distance = best;
      sample.method = DistanceMethod::optimized_path;
    }
  }
  return sample;
}

double lipschitz_M(const Realization& r, const ExponentData& exps, int n) {
  if (n < 1 || n > r.big_n()) throw StructuralError("truncation order out of range");
  const SiegelPoint p0 = r.base_point();
  const ComplexMatrix G = bergman_metric(r, exps, p0).G;
  const auto basis = tangent_basis(r);
  const int d = r.dim();
  const ComplexMatrix Z = phi_n(r, p0, n).Z;
  std::vector<ComplexMatrix> J;
  for (const auto& e : basis) J.push_back(jacobian_phi_n(r, p0, n, e));
  ComplexMatrix P(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      P(b, a) = metric_upper_half(Z, J[static_cast<std::size_t>(a)], J[static_cast<std::size_t>(b)]);
  const Eigen::LLT<ComplexMatrix> llt(G);
  const ComplexMatrix Linv = llt.matrixL().solve(ComplexMatrix::Identity(d, d));
  const ComplexMatrix S = Linv * P * Linv.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (S + S.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double disk_ratio_constant(int n, double radius) {
  return std::pow(1.0 - std::tanh(radius / disk_distance_scale(n)), -static_cast<double>(n + 1));
}

double envelope_constant(const Realization& r, const ExponentData& exps, double rho) {
  double log_c = 0.0;
  for (int j = 1; j <= r.rank(); ++j) {
    const long long s = exps.s[static_cast<std::size_t>(j - 1)];
    if (s == 0) continue;
    const int n = r.n_j(j);
    const double Cj = disk_ratio_constant(n, std::sqrt(lipschitz_M(r, exps, n)) * rho);
    log_c += std::abs(static_cast<double>(s)) / (n + 1.0) * std::log(Cj);
  }
  return std::exp(log_c);
}

SiegelPoint sample_near_base(const Realization& r, const MetricForm& g0, CounterRng& rng, double radius) {
  ComplexVector v(r.dim());
  for (int a = 0; a < r.dim(); ++a) v(a) = cplx(rng.normal(), rng.normal());
  v *= radius / std::sqrt(g0.value(v));
  return r.point(r.coordinates(r.base_point()) + v);
}

EnvelopeReport envelope_experiment(const Realization& r, double rho, int samples, std::uint64_t seed) {
  if (!(rho > 0.0) || samples < 1) throw StructuralError("rho must be positive and samples at least 1");
  const ExponentData exps = exponent_data(r.spec());
  const MetricForm g0 = bergman_metric(r, exps, r.base_point());
  EnvelopeReport rep;
  rep.rho = rho;
  rep.seed = seed;
  rep.bound = envelope_constant(r, exps, rho);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  rep.max_ratio = 0.0;
  rep.max_disk_distance_excess = -std::numeric_limits<double>::infinity();
  for (int j = 1; j <= r.rank(); ++j) {
    const double M = lipschitz_M(r, exps, r.n_j(j));
    rep.lipschitz.push_back(M);
    rep.disk_constant.push_back(disk_ratio_constant(r.n_j(j), std::sqrt(M) * rho));
    rep.disk_sampled.push_back(1.0);
  }

  const int max_candidates = 50 * samples;
  for (std::uint64_t i = 0; rep.pairs < samples; ++i) {
    if (rep.candidates >= max_candidates) {
      throw NumericalError("too few pairs within distance rho; increase rho or reduce the sample count");
    }
    ++rep.candidates;
    CounterRng rng(seed, i);
    const SiegelPoint eta = sample_near_base(r, g0, rng, rho * rng.uniform(0.02, 1.0));
    if (!in_domain(r, eta)) continue;
    const GroupElement b = random_group_element(r, rng, 1.0);
    const SiegelPoint a = group_act(b, r.base_point());
    const SiegelPoint z = group_act(b, eta);
    if (distance_siegel_upper_bound(r, exps, a, z).distance > rho) continue;
    ++rep.pairs;

    const double ratio = (k_minimal_product(r, exps, z, a) / k_minimal_product(r, exps, a, a)).abs();
    rep.min_ratio = std::min(rep.min_ratio, ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    for (int j = 1; j <= r.rank(); ++j) {
      const int n = r.n_j(j);
      const ComplexMatrix Wz = theta(r, z, j).W;
      const ComplexMatrix Wa = theta(r, a, j).W;
      const std::size_t k = static_cast<std::size_t>(j - 1);
      rep.max_disk_distance_excess =
          std::max(rep.max_disk_distance_excess, distance_disk(Wz, Wa, n) - std::sqrt(rep.lipschitz[k]) * rho);
      const double q = (k_siegel_disk(Wz, Wa, n) / k_siegel_disk(Wa, Wa, n)).abs();
      rep.disk_sampled[k] = std::max(rep.disk_sampled[k], std::max(q, 1.0 / q));
    }
  }
  const double slack = 1e-12;
  rep.pass = rep.min_ratio >= (1.0 - slack) / rep.bound && rep.max_ratio <= (1.0 + slack) * rep.bound;
  return rep;
}

FarFieldReport far_field_experiment(const Realization& r, double rho, int z_samples, int w_samples, std::uint64_t seed) {
  if (!(rho > 0.0) || z_samples < 1 || w_samples < 1) {
    throw StructuralError("rho must be positive and sample counts at least 1");
  }
  const ExponentData exps = exponent_data(r.spec());
  const MetricForm g0 = bergman_metric(r, exps, r.base_point());
  FarFieldReport rep;
  rep.rho = rho;
  rep.seed = seed;
  rep.z_samples = z_samples;
  rep.w_samples = w_samples;
  rep.bound = envelope_constant(r, exps, rho);

  // Stream 0..: near points; streams offset by 2^32: far-field points.
  std::vector<SiegelPoint> zs{r.base_point()};
  for (std::uint64_t i = 0; static_cast<int>(zs.size()) < z_samples; ++i) {
    if (i >= static_cast<std::uint64_t>(50 * z_samples)) {
      throw NumericalError("too few points within distance rho; increase rho or reduce the sample count");
    }
    CounterRng rng(seed, i);
    const SiegelPoint z = sample_near_base(r, g0, rng, rho * rng.uniform(0.02, 1.0));
    if (!in_domain(r, z)) continue;
    if (distance_siegel_upper_bound(r, exps, r.base_point(), z).distance > rho) continue;
    zs.push_back(z);
  }
  std::vector<SiegelPoint> ws;
  for (int i = 0; i < w_samples; ++i) {
    CounterRng rng(seed, (std::uint64_t{1} << 32) + static_cast<std::uint64_t>(i));
    ws.push_back(group_act(random_far_group_element(r, rng, kFarFieldDecades), r.base_point()));
  }

  rep.min_abs = std::numeric_limits<double>::infinity();
  rep.max_abs = 0.0;
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    for (const auto& w : ws) {
      const KernelValue k = k_minimal_product(r, exps, zs[zi], w);
      if (zi == 0) rep.base_row_deviation = std::max(rep.base_row_deviation, std::abs(k.value() - 1.0));
      rep.min_abs = std::min(rep.min_abs, k.abs());
      rep.max_abs = std::max(rep.max_abs, k.abs());
    }
  }
  const double slack = 1e-12;
  rep.pass = rep.min_abs >= (1.0 - slack) / rep.bound && rep.max_abs <= (1.0 + slack) * rep.bound &&
             rep.base_row_deviation <= 1e-12;
  return rep;
}

}  // namespace homsiegel
