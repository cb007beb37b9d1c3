#include "homsiegel/oracle.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "homsiegel/random.hpp"
#include "homsiegel/sampling.hpp"

namespace homsiegel {
namespace {

// Cascade summation: partial sums of 1, 2, 4, ... chunks are merged in a fixed
// binary-tree order, independent of how the chunks were produced.
template <typename T>
class PairwiseSum {
 public:
  void add(T value) {
    int level = 0;
    while (level < static_cast<int>(levels_.size()) && levels_[static_cast<std::size_t>(level)].second) {
      value = levels_[static_cast<std::size_t>(level)].first + value;
      levels_[static_cast<std::size_t>(level)].second = false;
      ++level;
    }
    if (level == static_cast<int>(levels_.size())) levels_.emplace_back(value, true);
    else levels_[static_cast<std::size_t>(level)] = {value, true};
  }
  T total(T zero) const {
    for (const auto& [v, used] : levels_)
      if (used) zero = v + zero;
    return zero;
  }

 private:
  std::vector<std::pair<T, bool>> levels_;
};

// Draws chunk `c` of a box sampling run and returns the accepted points.
std::vector<RealVector> draw_chunk(const Indicator& inside, const Box& box, long samples, std::uint64_t seed,
                                   long c) {
  CounterRng rng(seed, static_cast<std::uint64_t>(c));
  const long count = std::min(kChunk, samples - c * kChunk);
  std::vector<RealVector> accepted;
  RealVector x(box.dim());
  for (long i = 0; i < count; ++i) {
    for (int k = 0; k < box.dim(); ++k) {
      x(k) = rng.uniform(box.ranges[static_cast<std::size_t>(k)].first, box.ranges[static_cast<std::size_t>(k)].second);
    }
    if (inside(x)) accepted.push_back(x);
  }
  return accepted;
}

long chunk_count(long samples) { return (samples + kChunk - 1) / kChunk; }

std::vector<std::pair<ComplexMatrix, ComplexMatrix>> test_pairs_u(int n, int pairs, double max_sv, std::uint64_t seed) {
  std::vector<std::pair<ComplexMatrix, ComplexMatrix>> out;
  auto draw = [&](CounterRng& rng) {
    ComplexMatrix W(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) W(i, j) = W(j, i) = cplx(rng.normal(), rng.normal());
    const double sv = Eigen::JacobiSVD<ComplexMatrix>(W).singularValues()(0);
    return ComplexMatrix(W * (rng.uniform(0.0, max_sv) / sv));
  };
  for (int i = 0; i < pairs; ++i) {
    CounterRng rng(seed, (std::uint64_t{1} << 40) + static_cast<std::uint64_t>(i));
    ComplexMatrix a = draw(rng);
    ComplexMatrix b = (i % 5 == 0) ? a : draw(rng);
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

double Box::volume() const {
  double v = 1.0;
  for (const auto& [lo, hi] : ranges) v *= hi - lo;
  return v;
}

VolumeEstimate mc_volume(const Indicator& inside, const Box& box, long samples, std::uint64_t seed) {
  if (samples < 1) throw StructuralError("sample count must be positive");
  long hits = 0;
  for (long c = 0; c < chunk_count(samples); ++c) hits += static_cast<long>(draw_chunk(inside, box, samples, seed, c).size());
  if (hits == 0) throw NumericalError("no sample fell inside the domain");
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {p * box.volume(), box.volume() * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), hits, samples};
}

SampleCloud sample_cloud(const Indicator& inside, const Box& box, long samples, std::uint64_t seed) {
  SampleCloud cloud{seed, samples, box.volume() / static_cast<double>(samples), {}};
  for (long c = 0; c < chunk_count(samples); ++c) {
    auto pts = draw_chunk(inside, box, samples, seed, c);
    cloud.points.insert(cloud.points.end(), pts.begin(), pts.end());
  }
  if (cloud.points.empty()) throw NumericalError("no sample fell inside the domain");
  return cloud;
}

ComplexVector to_complex(const RealVector& x) {
  ComplexVector z(x.size() / 2);
  for (Eigen::Index k = 0; k < z.size(); ++k) z(k) = cplx(x(2 * k), x(2 * k + 1));
  return z;
}

std::vector<std::vector<int>> monomial_exponents(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  for (int total = 0; total <= degree; ++total) {
    // Compositions of `total` into `vars` parts, lexicographically descending.
    std::function<void(int, int)> rec = [&](int k, int left) {
      if (k == vars - 1) {
        e[static_cast<std::size_t>(k)] = left;
        out.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[static_cast<std::size_t>(k)] = v;
        rec(k + 1, left - v);
      }
    };
    if (vars > 0) rec(0, total);
  }
  return out;
}

ComplexVector eval_monomials(const std::vector<std::vector<int>>& exps, const ComplexVector& z) {
  ComplexVector m(static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    cplx v = 1.0;
    for (std::size_t k = 0; k < exps[i].size(); ++k)
      for (int p = 0; p < exps[i][k]; ++p) v *= z(static_cast<Eigen::Index>(k));
    m(static_cast<Eigen::Index>(i)) = v;
  }
  return m;
}

MonteCarloKernel::MonteCarloKernel(const Indicator& inside, const Box& box, int degree, long samples,
                                   std::uint64_t seed)
    : exps_(monomial_exponents(box.dim() / 2, degree)) {
  if (box.dim() % 2 != 0) throw StructuralError("box must have an even number of real coordinates");
  if (samples < 1) throw StructuralError("sample count must be positive");
  const Eigen::Index nb = static_cast<Eigen::Index>(exps_.size());
  PairwiseSum<ComplexMatrix> gram;
  for (long c = 0; c < chunk_count(samples); ++c) {
    const auto pts = draw_chunk(inside, box, samples, seed, c);
    hits_ += static_cast<long>(pts.size());
    ComplexMatrix M(static_cast<Eigen::Index>(pts.size()), nb);
    for (std::size_t i = 0; i < pts.size(); ++i) M.row(static_cast<Eigen::Index>(i)) = eval_monomials(exps_, to_complex(pts[i])).transpose();
    gram.add(M.adjoint() * M);
  }
  if (hits_ == 0) throw NumericalError("no sample fell inside the domain");
  ComplexMatrix G = gram.total(ComplexMatrix::Zero(nb, nb)) * (box.volume() / static_cast<double>(samples));
  G = 0.5 * (G + G.adjoint()).eval();

  const RealVector scale = G.diagonal().real().cwiseSqrt().cwiseInverse();
  const ComplexMatrix S = scale.cast<cplx>().asDiagonal() * G * scale.cast<cplx>().asDiagonal();
  const RealVector ev = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(S, Eigen::EigenvaluesOnly).eigenvalues();
  condition_ = ev.minCoeff() > 0.0 ? ev.maxCoeff() / ev.minCoeff() : std::numeric_limits<double>::infinity();
  if (!(condition_ <= kMaxGramCondition)) {
    throw NumericalError("Gram matrix ill-conditioned: increase samples or reduce degree");
  }
  const ComplexMatrix Sinv = S.ldlt().solve(ComplexMatrix::Identity(nb, nb));
  gram_inverse_ = scale.cast<cplx>().asDiagonal() * Sinv * scale.cast<cplx>().asDiagonal();
  gram_inverse_ = 0.5 * (gram_inverse_ + gram_inverse_.adjoint()).eval();
}

cplx MonteCarloKernel::operator()(const ComplexVector& z, const ComplexVector& w) const {
  const ComplexVector mz = eval_monomials(exps_, z);
  const ComplexVector mw = eval_monomials(exps_, w);
  return (mz.transpose() * gram_inverse_ * mw.conjugate())(0, 0);
}

double reproducing_check(const KernelFunction& K, const HolomorphicFunction& f, const ComplexVector& z,
                         const Indicator& inside, const Box& box, long samples, std::uint64_t seed) {
  PairwiseSum<cplx> sum;
  for (long c = 0; c < chunk_count(samples); ++c) {
    cplx part = 0.0;
    for (const auto& x : draw_chunk(inside, box, samples, seed, c)) {
      const ComplexVector w = to_complex(x);
      part += K(z, w) * f(w);
    }
    sum.add(part);
  }
  const cplx integral = sum.total(0.0) * (box.volume() / static_cast<double>(samples));
  const cplx fz = f(z);
  return std::abs(integral - fz) / (1.0 + std::abs(fz));
}

Indicator unit_disk_indicator() {
  return [](const RealVector& x) { return x(0) * x(0) + x(1) * x(1) < 1.0; };
}

Box unit_disk_box() { return {{{-1.0, 1.0}, {-1.0, 1.0}}}; }

Indicator bidisk_indicator() {
  return [](const RealVector& x) { return x(0) * x(0) + x(1) * x(1) < 1.0 && x(2) * x(2) + x(3) * x(3) < 1.0; };
}

Box bidisk_box() { return {std::vector<std::pair<double, double>>(4, {-1.0, 1.0})}; }

ComplexMatrix siegel_disk_matrix(const ComplexVector& coords, int n) {
  ComplexMatrix W(n, n);
  Eigen::Index k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) W(i, j) = W(j, i) = coords(k++);
  return W;
}

ComplexVector siegel_disk_coords(const ComplexMatrix& W) {
  const Eigen::Index n = W.rows();
  ComplexVector c(n * (n + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) c(k++) = W(i, j);
  return c;
}

Indicator siegel_disk_indicator(int n) {
  return [n](const RealVector& x) {
    const ComplexMatrix W = siegel_disk_matrix(to_complex(x), n);
    return in_disk(W);
  };
}

Box siegel_disk_box(int n) {
  // Every entry of a contraction has modulus below 1.
  return {std::vector<std::pair<double, double>>(static_cast<std::size_t>(n * (n + 1)), {-1.0, 1.0})};
}

OracleKernelReport oracle_kernel_disk(int degree, long samples, std::uint64_t seed) {
  const MonteCarloKernel K(unit_disk_indicator(), unit_disk_box(), degree, samples, seed);
  OracleKernelReport rep{"disk", degree, samples, seed, K.basis_size(), K.hits(), K.condition(), 0, 0.0, 1.0, 0.02, false};
  for (int i = 0; i < 40; ++i) {
    CounterRng rng(seed, (std::uint64_t{1} << 40) + static_cast<std::uint64_t>(i));
    auto draw = [&] { return std::polar(0.6 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform()); };
    const cplx z = i == 0 ? cplx(0.0) : draw();
    const cplx w = i == 0 ? cplx(0.0) : (i % 5 == 0 ? z : draw());
    const cplx exact = 1.0 / (std::numbers::pi * std::pow(1.0 - z * std::conj(w), 2));
    const cplx est = K(ComplexVector::Constant(1, z), ComplexVector::Constant(1, w));
    rep.max_rel_error = std::max(rep.max_rel_error, std::abs(est - exact) / std::abs(exact));
    ++rep.test_pairs;
  }
  rep.pass = rep.max_rel_error < rep.tolerance;
  return rep;
}

OracleKernelReport oracle_kernel_bidisk(int degree, long samples, std::uint64_t seed) {
  const MonteCarloKernel K(bidisk_indicator(), bidisk_box(), degree, samples, seed);
  OracleKernelReport rep{"bidisk", degree, samples, seed, K.basis_size(), K.hits(), K.condition(), 0, 0.0, 1.0, 0.03, false};
  const double pi2 = std::numbers::pi * std::numbers::pi;
  for (int i = 0; i < 20; ++i) {
    CounterRng rng(seed, (std::uint64_t{1} << 40) + static_cast<std::uint64_t>(i));
    auto draw = [&] {
      ComplexVector z(2);
      for (int k = 0; k < 2; ++k) z(k) = std::polar(0.4 * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
      return z;
    };
    const ComplexVector z = i == 0 ? ComplexVector::Zero(2) : draw();
    const ComplexVector w = i == 0 ? ComplexVector::Zero(2) : draw();
    const cplx exact = 1.0 / (pi2 * std::pow(1.0 - z(0) * std::conj(w(0)), 2) * std::pow(1.0 - z(1) * std::conj(w(1)), 2));
    rep.max_rel_error = std::max(rep.max_rel_error, std::abs(K(z, w) - exact) / std::abs(exact));
    ++rep.test_pairs;
  }
  rep.pass = rep.max_rel_error < rep.tolerance;
  return rep;
}

OracleVolumeReport oracle_volume(const std::string& domain, long samples, std::uint64_t seed) {
  OracleVolumeReport rep;
  rep.domain = domain;
  const double pi = std::numbers::pi;
  if (domain == "disk") {
    rep.estimate = mc_volume(unit_disk_indicator(), unit_disk_box(), samples, seed);
    rep.exact = pi;
  } else if (domain == "bidisk") {
    rep.estimate = mc_volume(bidisk_indicator(), bidisk_box(), samples, seed);
    rep.exact = pi * pi;
  } else if (domain == "u2") {
    rep.estimate = mc_volume(siegel_disk_indicator(2), siegel_disk_box(2), samples, seed);
    rep.exact = pi * pi * pi / 6.0;
  } else {
    throw StructuralError("unknown volume domain: " + domain);
  }
  rep.z_score = std::abs(rep.estimate.volume - rep.exact) / rep.estimate.std_error;
  rep.pass = rep.z_score <= 4.0;
  return rep;
}

bool is_full_symmetric_tube(const RealizationSpec& spec) {
  if (spec.nu0 != 0) return false;
  for (int v : spec.nu)
    if (v != 1) return false;
  const int r = static_cast<int>(spec.nu.size());
  for (int l = 2; l <= r; ++l) {
    for (int k = 1; k < l; ++k) {
      auto it = spec.v_basis.find({l, k});
      if (it == spec.v_basis.end() || it->second.size() != 1) return false;
    }
  }
  return true;
}

OracleKernelReport oracle_kernel_spec_cayley(const RealizationSpec& spec, int degree, long samples, std::uint64_t seed,
                                             ExponentConvention convention) {
  if (!is_full_symmetric_tube(spec)) {
    throw StructuralError("the Cayley oracle supports tubes over full symmetric-matrix cones only");
  }
  const Realization r(spec);
  const int n = r.rank();
  const ExponentData exps = exponent_data(spec, convention);
  const MonteCarloKernel K(siegel_disk_indicator(n), siegel_disk_box(n), degree, samples, seed);
  OracleKernelReport rep{n == 1 ? "disk-cayley" : "u" + std::to_string(n), degree, samples, seed, K.basis_size(),
                         K.hits(), K.condition(), 0, 0.0, 1.0, 0.05, false};

  auto to_siegel = [&](const ComplexMatrix& W) {
    return SiegelPoint{cayley_inverse({W}).Z, ComplexMatrix::Zero(n, 0)};
  };
  std::vector<cplx> est;
  std::vector<KernelValue> model;
  for (const auto& [a, b] : test_pairs_u(n, 30, 0.5, seed)) {
    est.push_back(K(siegel_disk_coords(a), siegel_disk_coords(b)));
    model.push_back(k_minimal_product(r, exps, to_siegel(a), to_siegel(b)));
  }
  // One global constant, fitted by least squares in the log domain.
  cplx log_c = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) log_c += std::log(est[i]) - model[i].log;
  log_c /= static_cast<double>(est.size());
  rep.fitted_constant = std::exp(log_c);
  for (std::size_t i = 0; i < est.size(); ++i) {
    const cplx fitted = std::exp(log_c + model[i].log);
    rep.max_rel_error = std::max(rep.max_rel_error, std::abs(est[i] - fitted) / std::abs(fitted));
  }
  rep.test_pairs = static_cast<int>(est.size());
  rep.pass = rep.max_rel_error < rep.tolerance;
  return rep;
}

double transformation_law_residual(const Realization& r, ExponentConvention convention, int samples,
                                   std::uint64_t seed) {
  const ExponentData exps = exponent_data(r.spec(), convention);
  const int d = r.dim();
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    const GroupElement b = random_group_element(r, rng, 0.7);
    const SiegelPoint p = random_point(r, rng, 0.7);
    const SiegelPoint q = random_point(r, rng, 0.7);
    // The action is affine, so unit coordinate differences give the Jacobian.
    const ComplexVector base = r.coordinates(group_act(b, p));
    ComplexMatrix J(d, d);
    const ComplexVector cp = r.coordinates(p);
    for (int a = 0; a < d; ++a) {
      ComplexVector e = cp;
      e(a) += 1.0;
      J.col(a) = r.coordinates(group_act(b, r.point(e))) - base;
    }
    const double log_abs_det2 = 2.0 * std::log(std::abs(J.determinant()));
    const KernelValue lhs = k_siegel(r, exps, group_act(b, p), group_act(b, q));
    const KernelValue rhs = k_siegel(r, exps, p, q);
    const cplx diff = lhs.log + log_abs_det2 - rhs.log;
    worst = std::max(worst, std::abs(std::exp(diff) - 1.0));
  }
  return worst;
}

}  // namespace homsiegel
