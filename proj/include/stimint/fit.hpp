#pragma once

#include <string>
#include <vector>

namespace stimint {

struct ScanPoint {
  double delay;
  double value;
  double sigma;
};

struct FitResult {
  double a = 0.0;
  double v = 0.0;
  double t0 = 0.0;
  double tc = 0.0;
  double a_err = 0.0;
  double v_err = 0.0;
  double t0_err = 0.0;
  double tc_err = 0.0;
  double chi2 = 0.0;
  int dof = 0;
  bool converged = false;
  int iterations = 0;
};

/// F(T) = A [1 + v exp(-(T - t0)^2 / tc^2)].
double gaussian_peak(double delay, double a, double v, double t0, double tc);

/// Weighted least squares on the Gaussian bunching peak via damped
/// Gauss-Newton. Initialization: A from the outer delay quartiles, t0 at the
/// maximum, v from the peak excess, tc from the half width at half maximum.
/// All-equal values yield a non-converged result with v = 0.
FitResult fit_gaussian_peak(const std::vector<ScanPoint>& points, bool weighted = true);

/// 1 + v; requires a converged fit.
double peak_to_wing(const FitResult& fit);

/// "param estimate uncertainty" lines plus chi2, dof and converged.
std::string fit_report(const FitResult& fit);

}  // namespace stimint
