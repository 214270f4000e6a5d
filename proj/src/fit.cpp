#include "stimint/fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stimint {

namespace {

constexpr int kNumParams = 4;
constexpr int kMaxIterations = 200;
constexpr double kRelTolerance = 1e-9;

using Vec4 = std::array<double, kNumParams>;
using Mat4 = std::array<std::array<double, kNumParams>, kNumParams>;

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve4(Mat4 a, Vec4 b, Vec4& x) {
  for (int col = 0; col < kNumParams; ++col) {
    int pivot = col;
    for (int row = col + 1; row < kNumParams; ++row) {
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    }
    if (std::abs(a[pivot][col]) < 1e-300) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < kNumParams; ++row) {
      double f = a[row][col] / a[col][col];
      for (int k = col; k < kNumParams; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (int row = kNumParams - 1; row >= 0; --row) {
    double s = b[row];
    for (int k = row + 1; k < kNumParams; ++k) s -= a[row][k] * x[k];
    x[row] = s / a[row][row];
  }
  return true;
}

bool invert4(const Mat4& a, Mat4& inv) {
  for (int col = 0; col < kNumParams; ++col) {
    Vec4 e{};
    e[col] = 1.0;
    Vec4 x{};
    if (!solve4(a, e, x)) return false;
    for (int row = 0; row < kNumParams; ++row) inv[row][col] = x[row];
  }
  return true;
}

void model_and_jacobian(double delay, const Vec4& p, double& f, Vec4& j) {
  double a = p[0], v = p[1], t0 = p[2], tc = p[3];
  double u = (delay - t0) / tc;
  double e = std::exp(-u * u);
  f = a * (1.0 + v * e);
  j[0] = 1.0 + v * e;
  j[1] = a * e;
  j[2] = a * v * e * 2.0 * u / tc;
  j[3] = a * v * e * 2.0 * u * u / tc;
}

double chi_square(const std::vector<ScanPoint>& pts, const std::vector<double>& w, const Vec4& p) {
  double c = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double f;
    Vec4 j;
    model_and_jacobian(pts[i].delay, p, f, j);
    double r = pts[i].value - f;
    c += w[i] * r * r;
  }
  return c;
}

Vec4 initial_guess(std::vector<ScanPoint> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const ScanPoint& a, const ScanPoint& b) { return a.delay < b.delay; });
  std::size_t n = pts.size();
  std::size_t wing = std::max<std::size_t>(1, n / 8);

  double a0 = 0.0;
  for (std::size_t i = 0; i < wing; ++i) a0 += pts[i].value + pts[n - 1 - i].value;
  a0 /= 2.0 * wing;

  std::size_t imax = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (pts[i].value > pts[imax].value) imax = i;
  }
  double t0 = pts[imax].delay;
  double peak = pts[imax].value;
  if (std::abs(a0) < 1e-300) a0 = peak != 0.0 ? peak / 2.0 : 1.0;
  double v0 = peak / a0 - 1.0;

  // Half width at half maximum of (value - A) around the peak.
  double half = a0 + 0.5 * (peak - a0);
  double left = pts.front().delay, right = pts.back().delay;
  for (std::size_t i = imax; i-- > 0;) {
    if (pts[i].value < half) {
      left = pts[i].delay;
      break;
    }
  }
  for (std::size_t i = imax + 1; i < n; ++i) {
    if (pts[i].value < half) {
      right = pts[i].delay;
      break;
    }
  }
  double tc0 = 0.5 * (right - left);
  if (!(tc0 > 0.0)) tc0 = 0.25 * (pts.back().delay - pts.front().delay);
  if (!(tc0 > 0.0)) tc0 = 1.0;
  return {a0, v0, t0, tc0};
}

}  // namespace

double gaussian_peak(double delay, double a, double v, double t0, double tc) {
  if (tc == 0.0) throw std::invalid_argument("gaussian_peak: tc must be nonzero");
  double u = (delay - t0) / tc;
  return a * (1.0 + v * std::exp(-u * u));
}

FitResult fit_gaussian_peak(const std::vector<ScanPoint>& points, bool weighted) {
  if (points.size() < 6) throw std::invalid_argument("fit needs at least 6 points");
  std::vector<double> w(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].sigma > 0.0)) throw std::invalid_argument("fit: sigma must be positive");
    if (!std::isfinite(points[i].delay) || !std::isfinite(points[i].value)) {
      throw std::invalid_argument("fit: non-finite scan point");
    }
    w[i] = weighted ? 1.0 / (points[i].sigma * points[i].sigma) : 1.0;
  }

  FitResult result;
  result.dof = int(points.size()) - kNumParams;

  bool flat = true;
  for (const auto& p : points) {
    if (p.value != points.front().value) {
      flat = false;
      break;
    }
  }
  if (flat) {
    result.a = points.front().value;
    result.v = 0.0;
    result.converged = false;
    return result;
  }

  Vec4 p = initial_guess(points);
  double chi2 = chi_square(points, w, p);
  double lambda = 1e-3;

  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    result.iterations = iter;
    Mat4 h{};
    Vec4 grad{};
    for (std::size_t i = 0; i < points.size(); ++i) {
      double f;
      Vec4 j;
      model_and_jacobian(points[i].delay, p, f, j);
      double r = points[i].value - f;
      for (int row = 0; row < kNumParams; ++row) {
        grad[row] += w[i] * r * j[row];
        for (int col = 0; col < kNumParams; ++col) h[row][col] += w[i] * j[row] * j[col];
      }
    }

    bool stepped = false;
    double rel = 0.0;
    while (!stepped && lambda < 1e12) {
      Mat4 damped = h;
      for (int d = 0; d < kNumParams; ++d) {
        damped[d][d] += lambda * std::max(h[d][d], 1e-300);
      }
      Vec4 step{};
      if (!solve4(damped, grad, step)) {
        lambda *= 10.0;
        continue;
      }
      Vec4 trial = {p[0] + step[0], p[1] + step[1], p[2] + step[2], p[3] + step[3]};
      if (trial[3] == 0.0) trial[3] = p[3];
      rel = 0.0;
      for (int d = 0; d < kNumParams; ++d) {
        rel = std::max(rel, std::abs(step[d]) / std::max(std::abs(trial[d]), 1e-12));
      }
      double trial_chi2 = chi_square(points, w, trial);
      if (rel < kRelTolerance) {
        // Step already below tolerance; we are at the optimum whether or not
        // roundoff lets chi2 tick down.
        if (trial_chi2 <= chi2) {
          p = trial;
          chi2 = trial_chi2;
        }
        result.converged = true;
        stepped = true;
        break;
      }
      if (trial_chi2 <= chi2 + 1e-15) {
        p = trial;
        chi2 = trial_chi2;
        lambda = std::max(lambda / 3.0, 1e-12);
        stepped = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!stepped || result.converged) break;
  }

  result.a = p[0];
  result.v = p[1];
  result.t0 = p[2];
  result.tc = std::abs(p[3]);  // F depends on tc^2 only
  result.chi2 = chi2;

  Mat4 h{};
  for (std::size_t i = 0; i < points.size(); ++i) {
    double f;
    Vec4 j;
    model_and_jacobian(points[i].delay, p, f, j);
    for (int row = 0; row < kNumParams; ++row) {
      for (int col = 0; col < kNumParams; ++col) h[row][col] += w[i] * j[row] * j[col];
    }
  }
  Mat4 cov{};
  if (invert4(h, cov)) {
    double scale = weighted ? 1.0 : (result.dof > 0 ? chi2 / result.dof : 1.0);
    result.a_err = std::sqrt(std::max(0.0, cov[0][0] * scale));
    result.v_err = std::sqrt(std::max(0.0, cov[1][1] * scale));
    result.t0_err = std::sqrt(std::max(0.0, cov[2][2] * scale));
    result.tc_err = std::sqrt(std::max(0.0, cov[3][3] * scale));
  }
  return result;
}

double peak_to_wing(const FitResult& fit) {
  if (!fit.converged) throw std::runtime_error("peak_to_wing requires a converged fit");
  return 1.0 + fit.v;
}

std::string fit_report(const FitResult& fit) {
  std::ostringstream out;
  out.precision(17);
  out << "A " << fit.a << ' ' << fit.a_err << '\n';
  out << "v " << fit.v << ' ' << fit.v_err << '\n';
  out << "T0 " << fit.t0 << ' ' << fit.t0_err << '\n';
  out << "Tc " << fit.tc << ' ' << fit.tc_err << '\n';
  out << "chi2 " << fit.chi2 << '\n';
  out << "dof " << fit.dof << '\n';
  out << "converged " << (fit.converged ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace stimint
