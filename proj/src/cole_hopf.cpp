#include "burgers/cole_hopf.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "burgers/error.hpp"

namespace burgers {
namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffers {
  int n;
  double* real;
  fftw_complex* spec;
  fftw_plan forward;
  fftw_plan backward;

  explicit FftwBuffers(int size) : n(size) {
    std::lock_guard lock(planner_mutex());
    real = fftw_alloc_real(static_cast<std::size_t>(n));
    spec = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
    forward = fftw_plan_dft_r2c_1d(n, real, spec, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(n, spec, real, FFTW_ESTIMATE);
  }
  ~FftwBuffers() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward);
    fftw_destroy_plan(backward);
    fftw_free(real);
    fftw_free(spec);
  }
  FftwBuffers(const FftwBuffers&) = delete;
  FftwBuffers& operator=(const FftwBuffers&) = delete;
};

int oracle_points(std::size_t m) {
  int n = 512;
  while (static_cast<std::size_t>(n) < 8 * m) n *= 2;
  return n;
}

}  // namespace

SpectralField cole_hopf_oracle(const SpectralField& u0, double nu, double t, BasisPtr target) {
  const Domain& d = u0.basis().domain();
  if (d.dimension() != 1 || !d.periodic()) throw InvalidArgument("cole_hopf_oracle: 1D periodic domain required");
  if (u0.components() != 1) throw InvalidArgument("cole_hopf_oracle: scalar field required");
  if (!(nu > 0.0)) throw InvalidArgument("cole_hopf_oracle: nu must be > 0");
  if (!(t >= 0.0)) throw InvalidArgument("cole_hopf_oracle: t must be >= 0");
  if (!target) target = u0.basis_ptr();
  if (!(target->domain() == d)) throw InvalidArgument("cole_hopf_oracle: target basis on a different domain");
  if (t == 0.0) return resize(u0, target);

  const double L = d.length(0);
  const int n = oracle_points(std::max(u0.modes(), target->size()));
  const double h = L / n;
  const double c = mean(u0);

  // Potential U(x) = int_0^x (u0 - c), in closed form per mode.
  std::vector<double> pot(static_cast<std::size_t>(n), 0.0);
  const double amp = std::sqrt(2.0 / L);
  for (std::size_t j = 0; j < u0.modes(); ++j) {
    const double a = u0(0, j);
    const AxisMode f = u0.basis().mode(j).axis[0];
    if (a == 0.0 || f.kind == Trig::constant) continue;
    const double w = 2.0 * std::numbers::pi * f.k / L;
    for (int i = 0; i < n; ++i) {
      const double x = i * h;
      pot[static_cast<std::size_t>(i)] +=
          f.kind == Trig::sine ? a * amp * (1.0 - std::cos(w * x)) / w : a * amp * std::sin(w * x) / w;
    }
  }
  const auto [lo, hi] = std::minmax_element(pot.begin(), pot.end());
  const double centre = 0.5 * (*lo + *hi);
  if ((*hi - *lo) / (2.0 * nu) > 645.0) throw InvalidArgument("cole_hopf_oracle: nu too small for the data range");

  FftwBuffers buf(n);
  for (int i = 0; i < n; ++i) buf.real[i] = std::exp(-(pot[static_cast<std::size_t>(i)] - centre) / (2.0 * nu));
  fftw_execute(buf.forward);

  // Heat flow and Galilean shift x -> x - c t, then phi and phi_x.
  const int nk = n / 2 + 1;
  std::vector<std::complex<double>> phi(static_cast<std::size_t>(nk));
  for (int k = 0; k < nk; ++k) {
    const double w = 2.0 * std::numbers::pi * k / L;
    const std::complex<double> z(buf.spec[k][0], buf.spec[k][1]);
    phi[static_cast<std::size_t>(k)] = z * std::exp(-nu * w * w * t) * std::polar(1.0, -w * c * t) / static_cast<double>(n);
  }
  // Nyquist derivative is dropped; its amplitude is far below round-off here.
  std::vector<double> phi_x(static_cast<std::size_t>(n));
  for (int k = 0; k < nk; ++k) {
    const double w = k == n / 2 ? 0.0 : 2.0 * std::numbers::pi * k / L;
    const auto z = phi[static_cast<std::size_t>(k)] * std::complex<double>(0.0, w);
    buf.spec[k][0] = z.real();
    buf.spec[k][1] = z.imag();
  }
  fftw_execute(buf.backward);
  std::copy(buf.real, buf.real + n, phi_x.begin());
  for (int k = 0; k < nk; ++k) {
    buf.spec[k][0] = phi[static_cast<std::size_t>(k)].real();
    buf.spec[k][1] = phi[static_cast<std::size_t>(k)].imag();
  }
  fftw_execute(buf.backward);

  const auto grid = make_grid(d, {n, 1});
  GridField u(grid, 1);
  auto uv = u.component(0);
  for (int i = 0; i < n; ++i) uv[static_cast<std::size_t>(i)] = c - 2.0 * nu * phi_x[static_cast<std::size_t>(i)] / buf.real[i];
  return from_grid(u, target);
}

}  // namespace burgers
