#include "homsiegel/continuation.hpp"

#include <cmath>
#include <numbers>

namespace homsiegel {
namespace {

void check_finite(const std::vector<cplx>& values) {
  for (const cplx& v : values) {
    if (v == 0.0 || !std::isfinite(std::abs(v))) {
      throw BranchError("branch tracking failed: function vanishes along the path");
    }
  }
}

bool small_jumps(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(std::arg(b[k] / a[k])) >= std::numbers::pi / 2) return false;
  }
  return true;
}

}  // namespace

std::vector<cplx> track_logs(const PathFunctions& f, std::span<const cplx> start_logs) {
  const std::size_t m = start_logs.size();
  auto eval = [&](double t) {
    std::vector<cplx> v;
    f(t, v);
    if (v.size() != m) throw BranchError("path function returned the wrong number of values");
    check_finite(v);
    return v;
  };

  std::vector<cplx> logs(start_logs.begin(), start_logs.end());
  std::vector<cplx> left = eval(0.0);
  double t_left = 0.0;
  int segments = 0;

  // Depth-first over the initial grid; each interval is bisected until the
  // argument jump across it drops below pi/2.
  struct Pending {
    double t;
    std::vector<cplx> values;
  };
  std::vector<Pending> stack;
  for (int i = kContinuationInitialSegments; i >= 1; --i) {
    const double t = static_cast<double>(i) / kContinuationInitialSegments;
    stack.push_back({t, eval(t)});
  }
  while (!stack.empty()) {
    Pending& right = stack.back();
    if (small_jumps(left, right.values)) {
      for (std::size_t k = 0; k < m; ++k) logs[k] += std::log(right.values[k] / left[k]);
      t_left = right.t;
      left = std::move(right.values);
      stack.pop_back();
      if (++segments > kContinuationMaxSegments) {
        throw BranchError("branch tracking failed: argument jumps persist at maximum subdivision");
      }
      continue;
    }
    const double mid = 0.5 * (t_left + right.t);
    if (!(mid > t_left && mid < right.t) || static_cast<int>(stack.size()) > kContinuationMaxSegments) {
      throw BranchError("branch tracking failed: argument jumps persist at maximum subdivision");
    }
    stack.push_back({mid, eval(mid)});
  }

  for (std::size_t k = 0; k < m; ++k) {
    const double arg = std::arg(left[k]);
    const double winding = std::round((logs[k].imag() - arg) / (2.0 * std::numbers::pi));
    logs[k] = cplx(std::log(std::abs(left[k])), arg + 2.0 * std::numbers::pi * winding);
  }
  return logs;
}

}  // namespace homsiegel
