#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "burgers/error.hpp"
#include "burgers/parallel.hpp"
#include "burgers/presets.hpp"
#include "oracles.hpp"

using namespace burgers;

TEST_SUITE("presets") {
  TEST_CASE("sine preset on an interval") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 8);
    auto u = sine_preset(basis, 1, 2.0, 3);
    for (double x : {0.1, 0.25, 0.8}) CHECK(oracle::evaluate(u, 0, x) == doctest::Approx(2.0 * std::sin(3 * oracle::pi * x)));
  }

  TEST_CASE("smoothed step has the requested mean and a steep rise") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic, true), 129);
    auto u = smoothed_step_preset(basis, 1.0, 0.1, -1.0, 0.7);
    CHECK(mean(u) == doctest::Approx(0.7));
    const double x0 = oracle::pi;
    CHECK(oracle::evaluate_derivative(u, 0, 0, x0) > 5.0);
    CHECK(oracle::evaluate_derivative(u, 0, 0, x0 + 1.5) < 0.0);
    CHECK_THROWS_AS(smoothed_step_preset(build_basis(Domain::interval(1.0, Boundary::dirichlet), 8)), InvalidArgument);
  }

  TEST_CASE("random preset is deterministic and normalized") {
    auto basis = build_basis(Domain::rectangle(1.0, 1.0, Boundary::periodic, true), 30);
    auto a = random_preset(basis, 2, 42, 0.3);
    auto b = random_preset(basis, 2, 42, 0.3);
    auto c = random_preset(basis, 2, 43, 0.3);
    CHECK(l2_norm(a) == doctest::Approx(0.3));
    CHECK(l2_norm(a - b) == 0.0);
    CHECK(l2_norm(a - c) > 0.0);
    CHECK(a(0, 0) == 0.0);
    CHECK(random_preset(basis, 1, 42, 0.3, 1.0, true)(0, 0) != 0.0);
  }

  TEST_CASE("sampling rejects data the basis cannot carry") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::periodic), 8);
    CHECK_THROWS_AS(sample(basis, 1, [](int, double, double) { return 1.0; }), InvalidArgument);
    CHECK_THROWS_AS(sample(basis, 1, [](int, double, double) { return NAN; }), InvalidArgument);
    CHECK_THROWS_AS(coefficient_preset(basis, 1, std::vector<double>(9, 1.0)), InvalidArgument);
    auto u = coefficient_preset(basis, 1, {1.0, 2.0});
    CHECK(u(0, 1) == 2.0);
    CHECK(u(0, 7) == 0.0);
  }

  TEST_CASE("parallel map keeps index order and propagates errors") {
    auto v = parallel_map(100, 4, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < 100; ++i) CHECK(v[i] == i * i);
    CHECK_THROWS_AS(parallel_map(10, 3,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw std::runtime_error("boom");
                                   return 0;
                                 }),
                    std::runtime_error);
  }
}
