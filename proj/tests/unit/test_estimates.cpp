#include <doctest.h>

#include <cmath>
#include <random>

#include "burgers/error.hpp"
#include "burgers/estimates.hpp"
#include "burgers/presets.hpp"
#include "oracles.hpp"

using namespace burgers;

namespace {

// Largest window integral of the piecewise linear interpolant over a dense
// scan of window starts. The trapezoid rule through the window ends and every
// interior node is exact for a piecewise linear function.
double scanned_window_sup(const std::vector<double>& f, double dt, double r, int scan) {
  const double T = dt * static_cast<double>(f.size() - 1);
  auto value = [&](double t) {
    const std::size_t k = std::min(f.size() - 2, static_cast<std::size_t>(t / dt));
    const double s = (t - k * dt) / dt;
    return f[k] + (f[k + 1] - f[k]) * s;
  };
  double best = 0.0;
  for (int i = 0; i <= scan; ++i) {
    const double a = (T - r) * i / scan;
    std::vector<double> pts{a};
    for (std::size_t k = 0; k < f.size(); ++k)
      if (k * dt > a && k * dt < a + r) pts.push_back(k * dt);
    pts.push_back(a + r);
    double sum = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) sum += 0.5 * (pts[k] - pts[k - 1]) * (value(pts[k]) + value(pts[k - 1]));
    best = std::max(best, sum);
  }
  return best;
}

BasisPtr unit_square(std::size_t m) { return build_basis(Domain::rectangle(1.0, 1.0, Boundary::dirichlet), m); }

}  // namespace

TEST_SUITE("estimates") {
  TEST_CASE("window supremum of simple profiles") {
    CHECK(window_sup(std::vector<double>(11, 2.0), 0.1, 0.3) == doctest::Approx(0.6));
    std::vector<double> ramp(21);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 0.1 * i;  // f(t) = t on [0, 2]
    CHECK(window_sup(ramp, 0.1, 0.5) == doctest::Approx((4.0 - 1.5 * 1.5) / 2.0));
    CHECK_THROWS_AS(window_sup(ramp, 0.1, 3.0), InvalidArgument);
  }

  TEST_CASE("window supremum matches a dense scan") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> f(40);
      for (auto& v : f) v = U(rng);
      const double r = 0.05 + 0.5 * U(rng);
      const double exact = window_sup(f, 0.05, r);
      const double scanned = scanned_window_sup(f, 0.05, r, 4000);
      CHECK(exact >= scanned - 1e-12);
      CHECK(exact == doctest::Approx(scanned).epsilon(1e-4));
    }
  }

  TEST_CASE("uniform Gronwall trivial cases") {
    // g = h = 0, y = c: the bound is c
    auto d = gronwall_data(0.0, 0.1, std::vector<double>(21, 0.0), std::vector<double>(21, 0.0),
                           std::vector<double>(21, 3.0), 0.5);
    CHECK(uniform_gronwall_bound(d) == doctest::Approx(3.0));
    // y = 0: the bound is a2 e^{a1}
    auto z = gronwall_data(0.0, 0.1, std::vector<double>(21, 1.0), std::vector<double>(21, 2.0),
                           std::vector<double>(21, 0.0), 0.5);
    CHECK(uniform_gronwall_bound(z) == doctest::Approx(1.0 * std::exp(0.5)));
  }

  TEST_CASE("GronwallData rejects inconsistent input") {
    auto d = gronwall_data(0.0, 0.1, std::vector<double>(11, 1.0), std::vector<double>(11, 1.0),
                           std::vector<double>(11, 1.0), 0.2);
    d.a1 = 0.1;
    CHECK_THROWS_AS(d.check(), InvalidArgument);
    std::vector<double> neg(11, 1.0);
    neg[3] = -1.0;
    CHECK_THROWS_AS(gronwall_data(0.0, 0.1, neg, neg, neg, 0.2), InvalidArgument);
  }

  TEST_CASE("uniform Gronwall holds for exact solutions of y' = g y + h") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const double g0 = 0.5 * U(rng), g1 = 0.5 * U(rng), w = 1 + 3 * U(rng), h0 = U(rng), y0 = 2 * U(rng);
      auto g = [&](double t) { return g0 * (1 + std::sin(w * t)) + g1; };
      auto h = [&](double t) { return h0 * (1 + std::cos(2 * w * t)); };
      // y(t) = e^{G(t)} (y0 + int_0^t e^{-G} h), integrated by RK4 on a fine grid
      const double dt = 1e-3;
      const std::size_t n = 3001;
      std::vector<double> gs(n), hs(n), ys(n);
      double y = y0;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = i * dt;
        gs[i] = g(t);
        hs[i] = h(t);
        ys[i] = y;
        auto rate = [&](double s, double v) { return g(s) * v + h(s); };
        const double k1 = rate(t, y), k2 = rate(t + dt / 2, y + dt / 2 * k1), k3 = rate(t + dt / 2, y + dt / 2 * k2),
                     k4 = rate(t + dt, y + dt * k3);
        y += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      }
      const double r = 0.5;
      auto data = gronwall_data(0.0, dt, gs, hs, ys, r);
      const double bound = uniform_gronwall_bound(data);
      for (std::size_t i = static_cast<std::size_t>(r / dt); i < n; ++i) CHECK(ys[i] <= bound);
    }
  }

  TEST_CASE("energy bound holds on a forced 1D run") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 32);
    auto f = sample(basis, 1, [](int, double x, double) { return 0.3 * std::sin(2 * x); });
    BurgersProblem p{.nu = 0.5, .u0 = sine_preset(basis, 1), .forcing = Forcing(f)};
    auto traj = integrate(p, {.m = 32, .dt = 1e-3, .t_end = 2.0, .record_every = 20});
    auto rep = gronwall_bound_eq14(traj, p);
    CHECK_FALSE(rep.violated);
    CHECK_FALSE(rep.conditional);
    CHECK(rep.worst_margin >= 0.0);
    CHECK(rep.bound.front() == doctest::Approx(oracle::pi));
    CHECK(rep.measured.front() == doctest::Approx(oracle::pi));
  }

  TEST_CASE("energy bound preconditions") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::periodic, true), 8);
    BurgersProblem p{.nu = 0.5, .u0 = SpectralField(basis, 1)};
    auto traj = integrate(p, {.m = 8, .dt = 0.1, .t_end = 0.3});
    CHECK_THROWS_AS(gronwall_bound_eq14(traj, p), InvalidArgument);
  }

  TEST_CASE("2D energy reports are conditional") {
    auto basis = unit_square(12);
    BurgersProblem p{.nu = 0.2, .u0 = random_preset(basis, 2, 5)};
    auto traj = integrate(p, {.m = 12, .dt = 1e-3, .t_end = 0.1});
    auto rep = gronwall_bound_eq14(traj, p);
    CHECK(rep.conditional);
    bool has_defect = false;
    for (const auto& [name, value] : rep.annotations) has_defect = has_defect || name == "max_abs_skew_defect";
    CHECK(has_defect);
  }

  TEST_CASE("make_report tolerances") {
    auto rep = make_report("q", {0.0, 1.0}, {1.0, 2.0 + 1e-10}, {1.0, 2.0}, 1e-8, 0.0);
    CHECK_FALSE(rep.violated);
    CHECK(rep.worst_margin == doctest::Approx(-1e-10));
    auto bad = make_report("q", {0.0}, {1.1}, {1.0}, 1e-8, 0.0);
    CHECK(bad.violated);
    CHECK(bad.margins().front() == doctest::Approx(-0.1));
  }

  TEST_CASE("Poincare ratio is 1 on the first mode and at most 1 otherwise") {
    auto basis = unit_square(20);
    CHECK(poincare_ratio(SpectralField::unit(basis, 0)) == doctest::Approx(1.0));
    CHECK(poincare_ratio(SpectralField::unit(basis, 7)) < 1.0);
    for (std::uint64_t s = 1; s <= 30; ++s) CHECK(poincare_ratio(random_preset(basis, 1, s)) <= 1.0 + 1e-12);
  }

  TEST_CASE("Agmon ratio of sin(pi x) sin(pi y)") {
    auto basis = unit_square(10);
    auto u = sine_preset(basis, 1);
    // ||u||_inf = 1, ||u|| = 1/2, ||Au|| = pi^2
    CHECK(agmon_ratio(u, AgmonVariant::h2) <= std::sqrt(2.0) / oracle::pi);
    CHECK(agmon_ratio(u, AgmonVariant::h2) == doctest::Approx(std::sqrt(2.0) / oracle::pi).epsilon(2e-2));
    CHECK(agmon_ratio(3.0 * u, AgmonVariant::h2) == doctest::Approx(agmon_ratio(u, AgmonVariant::h2)));
    CHECK(embedding_ratio(2.0 * u) == doctest::Approx(embedding_ratio(u)));
  }

  TEST_CASE("fitted constants bound their own family") {
    auto basis = unit_square(30);
    auto c = fit_constant(ConstantKind::agmon_h2, basis, 50, 100);
    CHECK(c.samples == 50);
    CHECK(c.seed == 100);
    CHECK(c.name == "agmon_h2");
    for (std::uint64_t i = 0; i < 50; ++i)
      CHECK(agmon_ratio(random_preset(basis, 1, 100 + i), AgmonVariant::h2) <= c.value);
    CHECK(fit_constant(ConstantKind::agmon_h2, basis, 50, 100).value == c.value);
  }

  TEST_CASE("truncated Green's function sequence") {
    double prev_h1 = 0.0;
    for (int K : {4, 8, 16}) {
      auto u = agmon_divergent_sequence(K);
      const double h1 = agmon_ratio(u, AgmonVariant::h1);
      CHECK(h1 > prev_h1);
      CHECK(agmon_ratio(u, AgmonVariant::h2) < 0.6);
      prev_h1 = h1;
    }
    CHECK_THROWS_AS(agmon_divergent_sequence(0), InvalidArgument);
  }

  TEST_CASE("enstrophy trace of the zero solution") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 16);
    BurgersProblem p{.nu = 0.2, .u0 = SpectralField(basis, 1)};
    auto traj = integrate(p, {.m = 16, .dt = 0.01, .t_end = 1.0});
    auto rep = enstrophy_trace(traj, p, {.fit_samples = 20});
    CHECK_FALSE(rep.violated);
    for (double v : rep.measured) CHECK(v == 0.0);
    CHECK(rep.times.front() >= 0.1 - 1e-12);
  }

  TEST_CASE("enstrophy bound holds on a decaying run") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 32);
    BurgersProblem p{.nu = 0.3, .u0 = sine_preset(basis, 1)};
    auto traj = integrate(p, {.m = 32, .dt = 1e-3, .t_end = 2.0, .record_every = 10});
    auto rep = enstrophy_trace(traj, p, {.r = 0.2, .fit_samples = 50});
    CHECK_FALSE(rep.violated);
    CHECK(rep.measured.size() == rep.bound.size());
  }

  TEST_CASE("zero perturbation gives zero difference") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 16);
    BurgersProblem p{.nu = 0.2, .u0 = sine_preset(basis, 1)};
    auto res = uniqueness_experiment(p, SpectralField(basis, 1), {.m = 16, .dt = 0.01, .t_end = 0.5}, 1e-2, 20);
    CHECK(res.sup_difference == 0.0);
    CHECK_FALSE(res.report.violated);
    auto big = random_preset(basis, 1, 3, 1.0);
    CHECK_THROWS_AS(uniqueness_experiment(p, big, {.m = 16, .dt = 0.01, .t_end = 0.5}), InvalidArgument);
  }

  TEST_CASE("linear response to a forcing change") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 8);
    SpectralField df(basis, 1, {1e-3, 0.0, -2e-3, 0.0, 0.0, 0.0, 0.0, 5e-4});
    BurgersProblem p{.nu = 0.1, .u0 = sine_preset(basis, 1), .advection = false};
    auto res = continuous_dependence_experiment(p, df, {.m = 8, .dt = 1e-3, .t_end = 1.0, .record_every = 100});
    for (std::size_t s = 0; s < res.times.size(); ++s) {
      double sq = 0.0;
      for (std::size_t j = 0; j < 8; ++j) {
        const double r = 0.1 * basis->eigenvalue(j);
        const double d = df(0, j) * (1.0 - std::exp(-r * res.times[s])) / r;
        sq += d * d;
      }
      CHECK(res.difference[s] == doctest::Approx(std::sqrt(sq)).epsilon(1e-8).scale(1e-12));
    }
    CHECK(res.halving_ratio == doctest::Approx(0.5).epsilon(1e-8));
  }

  TEST_CASE("convergence study of a band-limited linear flow") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 32);
    BurgersProblem p{.nu = 0.1, .u0 = project(random_preset(basis, 1, 1), 4), .advection = false};
    auto rows = convergence_study(p, {.dt = 1e-2, .t_end = 0.5}, {4, 8, 16}, 2);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.error < 1e-14);
    CHECK_THROWS_AS(convergence_study(p, {.dt = 1e-2, .t_end = 0.5}, {8, 4}), InvalidArgument);
    CHECK_THROWS_AS(convergence_study(p, {.dt = 1e-2, .t_end = 0.5}, {32}), InvalidArgument);
  }

  TEST_CASE("convergence study is independent of the thread count") {
    auto basis = build_basis(Domain::interval(2.0 * oracle::pi, Boundary::periodic), 32);
    BurgersProblem p{.nu = 0.1, .u0 = sine_preset(basis, 1)};
    SolverConfig c{.dt = 1e-2, .t_end = 0.5};
    auto a = convergence_study(p, c, {4, 8, 16}, 1);
    auto b = convergence_study(p, c, {4, 8, 16}, 3);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].error == b[i].error);
  }

  TEST_CASE("energy identity residual is small for the heat flow") {
    auto basis = build_basis(Domain::interval(1.0, Boundary::dirichlet), 8);
    BurgersProblem p{.nu = 0.05, .u0 = random_preset(basis, 1, 2), .advection = false};
    auto res = energy_identity_residual(p, {.m = 8, .dt = 1e-3, .t_end = 0.5});
    CHECK(res.max_abs < 1e-4);
    CHECK(res.rate.size() == res.balance.size());
  }
}
