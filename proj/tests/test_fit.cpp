#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stimint/fit.hpp"

using namespace stimint;

namespace {

std::vector<ScanPoint> model_points(double a, double v, double t0, double tc, int n, double span,
                                    double sigma = 1.0) {
  std::vector<ScanPoint> pts;
  for (int i = 0; i < n; ++i) {
    double delay = t0 - span + 2.0 * span * i / (n - 1);
    pts.push_back({delay, gaussian_peak(delay, a, v, t0, tc), sigma});
  }
  return pts;
}

}  // namespace

TEST_CASE("gaussian peak evaluation") {
  CHECK(gaussian_peak(0.0, 100.0, 1.81, 0.0, 330.0) == doctest::Approx(281.0).epsilon(1e-14));
  CHECK(gaussian_peak(1e9, 100.0, 1.81, 0.0, 330.0) == doctest::Approx(100.0).epsilon(1e-12));
  CHECK(gaussian_peak(1.0, 1.0, 2.0, 0.0, 1.0) ==
        doctest::Approx(1.0 + 2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK_THROWS_AS(gaussian_peak(0.0, 1.0, 1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("noiseless recovery to 1e-6 relative") {
  auto pts = model_points(100.0, 1.81, 0.0, 330.0, 21, 1000.0);
  FitResult fit = fit_gaussian_peak(pts);
  CHECK(fit.converged);
  CHECK(fit.a == doctest::Approx(100.0).epsilon(1e-6));
  CHECK(fit.v == doctest::Approx(1.81).epsilon(1e-6));
  CHECK(std::abs(fit.t0) < 330.0 * 1e-6);
  CHECK(fit.tc == doctest::Approx(330.0).epsilon(1e-6));
  CHECK(fit.chi2 < 1e-12);
}

TEST_CASE("flat data is flagged degenerate") {
  std::vector<ScanPoint> pts;
  for (int i = 0; i < 10; ++i) pts.push_back({double(i), 5.0, 1.0});
  FitResult fit = fit_gaussian_peak(pts);
  CHECK(!fit.converged);
  CHECK(fit.v == 0.0);
  CHECK(fit.a == doctest::Approx(5.0));
  CHECK_THROWS_AS(peak_to_wing(fit), std::runtime_error);
}

TEST_CASE("input validation") {
  auto pts = model_points(10.0, 1.0, 0.0, 1.0, 5, 3.0);
  CHECK_THROWS_AS(fit_gaussian_peak(pts), std::invalid_argument);  // too few points
  pts = model_points(10.0, 1.0, 0.0, 1.0, 9, 3.0);
  pts[3].sigma = 0.0;
  CHECK_THROWS_AS(fit_gaussian_peak(pts), std::invalid_argument);
}

TEST_CASE("scale invariance and translation equivariance") {
  auto pts = model_points(40.0, 0.9, 5.0, 2.0, 25, 7.0, 2.0);
  FitResult base = fit_gaussian_peak(pts);

  SUBCASE("common rescaling of values and sigmas") {
    auto scaled = pts;
    for (auto& p : scaled) {
      p.value *= 13.0;
      p.sigma *= 13.0;
    }
    FitResult fit = fit_gaussian_peak(scaled);
    CHECK(fit.a == doctest::Approx(13.0 * base.a).epsilon(1e-9));
    CHECK(fit.v == doctest::Approx(base.v).epsilon(1e-9));
    CHECK(fit.t0 == doctest::Approx(base.t0).epsilon(1e-9));
    CHECK(fit.tc == doctest::Approx(base.tc).epsilon(1e-9));
  }
  SUBCASE("delay translation shifts only t0") {
    auto shifted = pts;
    for (auto& p : shifted) p.delay += 42.0;
    FitResult fit = fit_gaussian_peak(shifted);
    CHECK(fit.a == doctest::Approx(base.a).epsilon(1e-9));
    CHECK(fit.v == doctest::Approx(base.v).epsilon(1e-9));
    CHECK(fit.t0 == doctest::Approx(base.t0 + 42.0).epsilon(1e-9));
    CHECK(fit.tc == doctest::Approx(base.tc).epsilon(1e-9));
  }
}

TEST_CASE("Poisson-resampled scan stays compatible with the generating curve") {
  std::mt19937 rng(101);
  auto truth = model_points(21.35, 1.81, 0.0, 330.0, 21, 1000.0);
  std::vector<ScanPoint> noisy;
  for (const auto& p : truth) {
    double counts = double(std::poisson_distribution<long long>(p.value)(rng));
    noisy.push_back({p.delay, counts, std::sqrt(std::max(counts, 1.0))});
  }
  FitResult fit = fit_gaussian_peak(noisy);
  CHECK(fit.converged);
  CHECK(std::abs(fit.v - 1.81) < 5.0 * fit.v_err);
  CHECK(peak_to_wing(fit) == doctest::Approx(1.0 + fit.v).epsilon(1e-14));
}

TEST_CASE("peak-to-wing ratios") {
  FitResult fit;
  fit.converged = true;
  fit.v = 1.81;
  CHECK(peak_to_wing(fit) == doctest::Approx(2.81).epsilon(1e-14));
  fit.v = 0.88;
  CHECK(peak_to_wing(fit) == doctest::Approx(1.88).epsilon(1e-14));
  fit.v = 0.0;
  CHECK(peak_to_wing(fit) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("fit report format") {
  auto pts = model_points(10.0, 1.0, 0.0, 1.0, 9, 3.0);
  FitResult fit = fit_gaussian_peak(pts);
  std::string report = fit_report(fit);
  CHECK(report.find("A ") == 0);
  CHECK(report.find("\nv ") != std::string::npos);
  CHECK(report.find("\nchi2 ") != std::string::npos);
  CHECK(report.find("\ndof 5") != std::string::npos);
  CHECK(report.find("\nconverged 1\n") != std::string::npos);
}
