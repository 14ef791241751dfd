#include <doctest.h>

#include <cmath>

#include "burgers/error.hpp"
#include "burgers/operators.hpp"
#include "burgers/presets.hpp"
#include "oracles.hpp"

using namespace burgers;

namespace {

BasisPtr periodic_2pi(std::size_t m) { return build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), m); }

// sum_{i,j} int u_i d_i v_j w_j by pointwise quadrature.
double reference_b(const SpectralField& u, const SpectralField& v, const SpectralField& w) {
  const auto& d = u.basis().domain();
  const int dim = d.dimension();
  return oracle::integrate(d, [&](double x, double y) {
    double s = 0.0;
    for (int j = 0; j < v.components(); ++j) {
      double adv = 0.0;
      for (int i = 0; i < dim; ++i) adv += oracle::evaluate(u, i, x, y) * oracle::evaluate_derivative(v, j, i, x, y);
      s += adv * oracle::evaluate(w, j, x, y);
    }
    return s;
  }, dim == 1 ? 32 : 12);
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("A scales coefficients by eigenvalues") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 5);
    SpectralField u(basis, 1, {1, 1, 1, 1, 1});
    auto a = apply_A(u);
    for (std::size_t j = 0; j < 5; ++j) CHECK(a(0, j) == doctest::Approx(std::pow((j + 1) * oracle::pi, 2)));
  }

  TEST_CASE("(Au, v) equals the gradient pairing") {
    const auto d = Domain::rectangle(1.0, 1.5, Boundary::dirichlet);
    auto basis = build_basis(d, 12);
    auto u = random_preset(basis, 1, 1);
    auto v = random_preset(basis, 1, 2);
    const double q = oracle::integrate(d, [&](double x, double y) {
      return oracle::evaluate_derivative(u, 0, 0, x, y) * oracle::evaluate_derivative(v, 0, 0, x, y) +
             oracle::evaluate_derivative(u, 0, 1, x, y) * oracle::evaluate_derivative(v, 0, 1, x, y);
    }, 12);
    CHECK(inner(apply_A(u), v) == doctest::Approx(q).epsilon(1e-10));
    CHECK(inner_v(u, v) == doctest::Approx(q).epsilon(1e-10));
  }

  TEST_CASE("b(sin x, sin 2x, sin x) = -pi") {
    auto basis = periodic_2pi(8);
    auto s1 = sample(basis, 1, [](int, double x, double) { return std::sin(x); });
    auto s2 = sample(basis, 1, [](int, double x, double) { return std::sin(2 * x); });
    CHECK(trilinear_b(s1, s2, s1) == doctest::Approx(-oracle::pi).epsilon(1e-12));
    auto q = trilinear_b_quadrature(s1, s2, s1);
    CHECK(q.method == TrilinearMethod::quadrature_oracle);
    CHECK(q.value == doctest::Approx(-oracle::pi).epsilon(1e-10));
  }

  TEST_CASE("B(sin x) = sin(2x) / 2") {
    auto basis = periodic_2pi(6);
    auto s1 = sample(basis, 1, [](int, double x, double) { return std::sin(x); });
    auto expected = sample(basis, 1, [](int, double x, double) { return 0.5 * std::sin(2 * x); });
    auto b = apply_B(s1, basis->size());
    for (std::size_t j = 0; j < basis->size(); ++j) CHECK(b(0, j) == doctest::Approx(expected(0, j)).scale(1.0));
    // the coefficient of w = sin(2x)/sqrt(pi) is sqrt(pi)/2
    const std::size_t j2 = basis->find(Mode{{AxisMode{2, Trig::sine}, AxisMode{0, Trig::constant}}, 0.0});
    REQUIRE(j2 < basis->size());
    CHECK(b(0, j2) == doctest::Approx(std::sqrt(oracle::pi) / 2));
  }

  TEST_CASE("B coefficients are b(u, v, w_j) and vanish beyond m") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 10);
    auto u = random_preset(basis, 1, 4);
    auto v = random_preset(basis, 1, 5);
    auto b = apply_B(u, v, 7);
    for (std::size_t j = 0; j < 10; ++j) {
      const double expected = j < 7 ? trilinear_b(u, v, SpectralField::unit(basis, j)) : 0.0;
      CHECK(b(0, j) == doctest::Approx(expected).scale(1.0));
    }
  }

  TEST_CASE("trilinear form matches pointwise quadrature") {
    for (const auto& d : {Domain::interval(1.0, Boundary::dirichlet), Domain::interval(3.0, Boundary::periodic, true),
                          Domain::rectangle(1.0, 1.0, Boundary::dirichlet),
                          Domain::rectangle(2.0, 1.0, Boundary::periodic)}) {
      const int comps = d.dimension();
      auto basis = build_basis(d, d.dimension() == 1 ? 12 : 9);
      auto u = random_preset(basis, comps, 11, 1.0, 0.5, true);
      auto v = random_preset(basis, comps, 12, 1.0, 0.5, true);
      auto w = random_preset(basis, comps, 13, 1.0, 0.5, true);
      const double ref = reference_b(u, v, w);
      CHECK(trilinear_b(u, v, w) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
      CHECK(trilinear_b_quadrature(u, v, w).value == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
    }
  }

  TEST_CASE("b(u, u, u) vanishes in 1D") {
    for (const auto& d : {Domain::interval(1.0, Boundary::dirichlet), Domain::interval(2.0, Boundary::periodic, true)}) {
      auto basis = build_basis(d, 32);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto u = random_preset(basis, 1, seed, 1.0, 0.2, true);
        CHECK(std::abs(trilinear_b(u, u, u)) < 1e-12);
      }
    }
  }

  TEST_CASE("b(u, v, w) + b(u, w, v) = -int (div u) v.w") {
    auto basis = build_basis(Domain::rectangle(1.0, 1.0, Boundary::dirichlet), 20);
    auto u = random_preset(basis, 2, 1);
    auto v = random_preset(basis, 2, 2);
    auto w = random_preset(basis, 2, 3);
    const auto& d = basis->domain();
    const double q = oracle::integrate(d, [&](double x, double y) {
      const double div = oracle::evaluate_derivative(u, 0, 0, x, y) + oracle::evaluate_derivative(u, 1, 1, x, y);
      const double vw = oracle::evaluate(v, 0, x, y) * oracle::evaluate(w, 0, x, y) +
                        oracle::evaluate(v, 1, x, y) * oracle::evaluate(w, 1, x, y);
      return -div * vw;
    }, 12);
    CHECK(trilinear_b(u, v, w) + trilinear_b(u, w, v) == doctest::Approx(q).epsilon(1e-10).scale(1.0));
    CHECK(trilinear_b(u, v, v) == doctest::Approx(skew_defect(u, v)).epsilon(1e-10).scale(1.0));
    CHECK(skew_defect(u, v) == doctest::Approx(skew_defect_quadrature(u, v)).epsilon(1e-10).scale(1.0));
  }

  TEST_CASE("trilinear form is linear in each argument") {
    auto basis = build_basis(Domain::rectangle(1.0, 1.0, Boundary::periodic), 15);
    auto u = random_preset(basis, 2, 1);
    auto u2 = random_preset(basis, 2, 4);
    auto v = random_preset(basis, 2, 2);
    auto w = random_preset(basis, 2, 3);
    CHECK(trilinear_b(2.0 * u + u2, v, w) ==
          doctest::Approx(2.0 * trilinear_b(u, v, w) + trilinear_b(u2, v, w)).scale(1.0));
    CHECK(trilinear_b(u, v, -3.0 * w) == doctest::Approx(-3.0 * trilinear_b(u, v, w)).scale(1.0));
  }

  TEST_CASE("divergence of a shear field") {
    auto basis = build_basis(Domain::rectangle(1.0, 1.0, Boundary::dirichlet), 6);
    auto u = sample(basis, 2, [](int c, double x, double y) {
      return c == 0 ? std::sin(oracle::pi * x) * std::sin(oracle::pi * y) : 0.0;
    });
    auto div = divergence(u);
    const auto& g = div.grid();
    double err = 0.0;
    for (std::size_t iy = 0; iy < g.ny(); ++iy)
      for (std::size_t ix = 0; ix < g.nx(); ++ix) {
        const double x = g.axes[0].nodes[ix];
        const double y = g.axes[1].nodes[iy];
        err = std::max(err, std::abs(div.component(0)[iy * g.nx() + ix] -
                                     oracle::pi * std::cos(oracle::pi * x) * std::sin(oracle::pi * y)));
      }
    CHECK(err < 1e-12);
  }

  TEST_CASE("divergence-free field has zero divergence and skew defect") {
    auto basis = build_basis(Domain::rectangle(2.0 * oracle::pi, 2.0 * oracle::pi, Boundary::periodic), 12);
    auto u = sample(basis, 2, [](int c, double x, double y) { return c == 0 ? std::sin(y) : std::cos(x); });
    const auto div = divergence(u);
    for (double v : div.values()) CHECK(std::abs(v) < 1e-12);
    auto v = random_preset(basis, 2, 8);
    CHECK(std::abs(skew_defect(u, v)) < 1e-12);
    CHECK(std::abs(trilinear_b(u, v, v)) < 1e-12);
  }

  TEST_CASE("shape mismatches are rejected") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 5);
    SpectralField u1(basis, 1);
    SpectralField u2(basis, 2);
    CHECK_THROWS_AS(trilinear_b(u2, u1, u1), InvalidArgument);
    CHECK_THROWS_AS(divergence(u1), InvalidArgument);
    CHECK_THROWS_AS(apply_B(u1, u1, 6), InvalidArgument);
  }
}
