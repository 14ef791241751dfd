#include <doctest.h>

#include <cmath>

#include "burgers/cole_hopf.hpp"
#include "burgers/error.hpp"
#include "burgers/presets.hpp"
#include "oracles.hpp"

using namespace burgers;

namespace {

// u(x, t) = int (x - y)/t K dy / int K dy with
// K = exp(-(x - y)^2 / (4 nu t) - U0(y) / (2 nu)), U0' = u0, on the real line.
double heat_kernel_solution(const std::function<double(double)>& potential, double nu, double t, double x) {
  const double w = 40.0 * std::sqrt(nu * t) + 1.0;
  // shift the exponent to avoid underflow
  double shift = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 400; ++i) {
    const double y = x - w + 2.0 * w * i / 400;
    shift = std::min(shift, (x - y) * (x - y) / (4 * nu * t) + potential(y) / (2 * nu));
  }
  auto kernel = [&](double y) {
    return std::exp(-((x - y) * (x - y) / (4 * nu * t) + potential(y) / (2 * nu) - shift));
  };
  const double num = oracle::integrate_1d([&](double y) { return (x - y) / t * kernel(y); }, x - w, x + w, 400);
  const double den = oracle::integrate_1d(kernel, x - w, x + w, 400);
  return num / den;
}

}  // namespace

TEST_SUITE("cole_hopf") {
  TEST_CASE("matches the heat-kernel integral for sin x") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 128);
    auto u0 = sine_preset(basis, 1);
    const double nu = 0.2, t = 0.5;
    auto u = cole_hopf_oracle(u0, nu, t);
    for (double x : {0.0, 0.4, 1.3, 2.0, 3.1, 4.7, 6.0}) {
      const double ref = heat_kernel_solution([](double y) { return 1.0 - std::cos(y); }, nu, t, x);
      CHECK(oracle::evaluate(u, 0, x) == doctest::Approx(ref).epsilon(1e-9).scale(1.0));
    }
  }

  TEST_CASE("nonzero mean is carried by a Galilean shift") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic, true), 129);
    auto u0 = sample(basis, 1, [](int, double x, double) { return 0.5 + std::sin(x); });
    const double nu = 0.25, t = 0.8;
    auto u = cole_hopf_oracle(u0, nu, t);
    CHECK(mean(u) == doctest::Approx(0.5));
    for (double x : {0.2, 1.7, 3.3, 5.9}) {
      const double ref = heat_kernel_solution([](double y) { return 0.5 * y + 1.0 - std::cos(y); }, nu, t, x);
      CHECK(oracle::evaluate(u, 0, x) == doctest::Approx(ref).epsilon(1e-9).scale(1.0));
    }
  }

  TEST_CASE("t = 0 returns the data and zero stays zero") {
    auto basis = build_basis(Domain::interval(3.0, Boundary::periodic), 20);
    auto u0 = random_preset(basis, 1, 4, 0.5);
    auto same = cole_hopf_oracle(u0, 0.1, 0.0);
    for (std::size_t j = 0; j < 20; ++j) CHECK(same(0, j) == u0(0, j));
    auto z = cole_hopf_oracle(SpectralField(basis, 1), 0.1, 2.0);
    CHECK(l2_norm(z) < 1e-14);
  }

  TEST_CASE("projection onto a target basis") {
    const auto d = Domain::interval(2.0 * oracle::pi, Boundary::periodic);
    auto small = build_basis(d, 16);
    auto large = build_basis(d, 64);
    auto u0 = sine_preset(small, 1);
    auto on_large = cole_hopf_oracle(u0, 0.3, 0.5, large);
    auto on_small = cole_hopf_oracle(u0, 0.3, 0.5);
    CHECK(on_large.modes() == 64);
    for (std::size_t j = 0; j < 16; ++j) CHECK(on_small(0, j) == doctest::Approx(on_large(0, j)).scale(1.0));
  }

  TEST_CASE("unsupported inputs are rejected") {
    auto dir = build_basis(Domain::interval(1.0, Boundary::dirichlet), 8);
    CHECK_THROWS_AS(cole_hopf_oracle(sine_preset(dir, 1), 0.1, 1.0), InvalidArgument);
    auto sq = build_basis(Domain::rectangle(1.0, 1.0, Boundary::periodic), 8);
    CHECK_THROWS_AS(cole_hopf_oracle(SpectralField(sq, 2), 0.1, 1.0), InvalidArgument);
    auto per = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 8);
    CHECK_THROWS_AS(cole_hopf_oracle(sine_preset(per, 1), -0.1, 1.0), InvalidArgument);
    CHECK_THROWS_AS(cole_hopf_oracle(sine_preset(per, 1, 50.0), 1e-3, 1.0), InvalidArgument);
  }
}
