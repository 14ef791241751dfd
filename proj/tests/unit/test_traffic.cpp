#include <doctest.h>

#include <cmath>

#include "burgers/error.hpp"
#include "burgers/presets.hpp"
#include "burgers/traffic.hpp"
#include "oracles.hpp"

using namespace burgers;

namespace {

BasisPtr road(std::size_t m, double L = 2.0 * oracle::pi) {
  return build_basis(Domain::interval(L, Boundary::periodic, true), m);
}

double periodic_gaussian(double x, double x0, double sigma, double L) {
  double s = 0.0;
  for (int n = -5; n <= 5; ++n) {
    const double d = x - x0 - n * L;
    s += std::exp(-d * d / (2 * sigma * sigma));
  }
  return s / (sigma * std::sqrt(2 * oracle::pi));
}

Trajectory run(const BasisPtr& basis, const SpectralField& u0, double nu, bool advection, double t_end) {
  BurgersProblem p{.nu = nu, .u0 = u0, .advection = advection};
  return integrate(p, {.m = basis->size(), .dt = 1e-3, .t_end = t_end, .record_every = 100});
}

}  // namespace

TEST_SUITE("traffic") {
  TEST_CASE("kernel has unit mass and matches the projected Gaussian") {
    const double L = 2.0 * oracle::pi;
    auto basis = road(65);
    auto k = gaussian_kernel(basis, 1.0, 0.3);
    CHECK(k(0, 0) * std::sqrt(L) == doctest::Approx(1.0).epsilon(1e-15));
    const auto& d = basis->domain();
    for (std::size_t j = 0; j < basis->size(); j += 7) {
      const double q = oracle::integrate_1d([&](double x) {
        return periodic_gaussian(x, 1.0, 0.3, L) * oracle::mode_value(d, basis->mode(j), x, 0.0);
      }, 0.0, L, 64);
      CHECK(k(0, j) == doctest::Approx(q).epsilon(1e-12).scale(1.0));
    }
  }

  TEST_CASE("kernel peaks at its centre") {
    auto basis = road(129);
    auto k = gaussian_kernel(basis, 2.0, 0.2);
    const double peak = oracle::evaluate(k, 0, 2.0);
    CHECK(peak > oracle::evaluate(k, 0, 1.9));
    CHECK(peak > oracle::evaluate(k, 0, 2.1));
    CHECK(peak == doctest::Approx(1.0 / (0.2 * std::sqrt(2 * oracle::pi))).epsilon(1e-10));
  }

  TEST_CASE("switching profiles") {
    CHECK(smoothed_square_wave(0.25, 1.0, 0.5, 0.01) == 1.0);
    CHECK(smoothed_square_wave(0.75, 1.0, 0.5, 0.01) == 0.0);
    CHECK(smoothed_square_wave(3.25, 1.0, 0.5, 0.01) == 1.0);
    CHECK(smoothed_square_wave(0.505, 1.0, 0.5, 0.01) == doctest::Approx(0.5));
    CHECK(smoothed_window(0.5, 1.0, 2.0, 0.1) == 0.0);
    CHECK(smoothed_window(1.5, 1.0, 2.0, 0.1) == 1.0);
    CHECK(smoothed_window(1.05, 1.0, 2.0, 0.1) == doctest::Approx(0.5));
    CHECK(smoothed_window(2.5, 1.0, 2.0, 0.1) == 0.0);
  }

  TEST_CASE("empty and zero-amplitude scenarios give zero forcing") {
    auto basis = road(33);
    auto none = build_source({}, basis, 1e-3);
    CHECK_FALSE(none.has_terms());
    CHECK(none.damping() == 0.0);
    auto quiet = build_source({TrafficLight{.x_k = 1.0, .sigma = 0.5, .amplitude = 0.0},
                              Pulse{.x0 = 2.0, .width = 0.5, .t_off = 1.0}}, basis, 1e-3);
    CHECK(quiet.at(0.3, basis, 1).is_zero());
  }

  TEST_CASE("pulse is active only inside its window") {
    auto basis = road(65);
    auto f = build_source({Pulse{.x0 = 2.0, .width = 0.2, .amplitude = 3.0, .t_on = 1.0, .t_off = 2.0}}, basis, 1e-3);
    CHECK(f.at(0.5, basis, 1).is_zero());
    CHECK(f.at(2.5, basis, 1).is_zero());
    auto on = f.at(1.5, basis, 1);
    auto k = gaussian_kernel(basis, 2.0, 0.2);
    for (std::size_t j = 0; j < basis->size(); ++j) CHECK(on(0, j) == doctest::Approx(3.0 * k(0, j)));
  }

  TEST_CASE("narrow kernels are rejected") {
    auto basis = road(33);
    const double h = basis->grid().axes[0].spacing;
    CHECK_THROWS_AS(build_source({TrafficLight{.x_k = 1.0, .sigma = h, .amplitude = 1.0}}, basis, 1e-3),
                    InvalidArgument);
    CHECK_NOTHROW(build_source({TrafficLight{.x_k = 1.0, .sigma = 2.0 * h, .amplitude = 1.0}}, basis, 1e-3));
    CHECK_THROWS_AS(build_source({Ramp{.alpha = -1.0}}, basis, 1e-3), InvalidArgument);
    CHECK_THROWS_AS(gaussian_kernel(build_basis(Domain::interval(1.0, Boundary::periodic), 8), 0.5, 0.1),
                    InvalidArgument);
  }

  TEST_CASE("ramp relaxes the mean to beta / alpha") {
    auto basis = road(17);
    auto u0 = sample(basis, 1, [](int, double x, double) { return 1.0 + 0.2 * std::sin(x); });
    const double alpha = 0.5, beta = 0.25;
    auto rep = run_scenario({Ramp{alpha, beta}}, u0, 0.1, {.m = 17, .dt = 1e-2, .t_end = 4.0});
    for (std::size_t s = 0; s < rep.mean.size(); ++s) {
      const double t = rep.trajectory.times[s];
      const double exact = beta / alpha + (1.0 - beta / alpha) * std::exp(-alpha * t);
      CHECK(rep.mean[s] == doctest::Approx(exact).epsilon(1e-10));
    }
  }

  TEST_CASE("classification of simple flows") {
    auto basis = road(128);
    auto s = sine_preset(basis, 1);
    auto decay = detect_shock(run(basis, s, 1.0, false, 1.0));
    CHECK(decay.classification == Classification::rarefaction);
    CHECK(decay.max_gradient.front() == doctest::Approx(1.0).epsilon(1e-3));

    auto steep = detect_shock(run(basis, s, 0.02, true, 1.5));
    CHECK(steep.classification == Classification::shock);
    CHECK(std::abs(steep.position.back() - oracle::pi) < 2.0 * basis->grid().axes[0].spacing);

    auto flat = detect_shock(run(basis, SpectralField(basis, 1), 0.1, true, 0.2));
    CHECK(flat.classification == Classification::smooth);
    CHECK(std::isnan(flat.position.front()));
  }

  TEST_CASE("ties in the gradient go to the smallest position") {
    auto basis = road(3);
    auto u = sample(basis, 1, [](int, double x, double) { return std::cos(x); });
    BurgersProblem p{.nu = 1.0, .u0 = u, .advection = false};
    auto diag = detect_shock(integrate(p, {.m = 3, .dt = 0.1, .t_end = 0.2}));
    CHECK(diag.position.front() == doctest::Approx(oracle::pi / 2));
  }

  TEST_CASE("descriptions name the source") {
    CHECK(describe(Ramp{0.5, 0.1}).find("ramp") != std::string::npos);
    CHECK(describe(TrafficLight{.x_k = 1.0}).find("light") != std::string::npos);
    CHECK(describe(Pulse{.x0 = 1.0}).find("pulse") != std::string::npos);
  }
}
