#include "burgers/traffic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "burgers/error.hpp"

namespace burgers {
namespace {

void require_traffic_domain(const Domain& d, const char* op) {
  if (d.dimension() != 1 || !d.periodic() || !d.include_mean())
    throw InvalidArgument(std::string(op) + ": 1D periodic domain with include_mean required");
}

double smoothstep(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * (3.0 - 2.0 * x);
}

double edge(double t, double ramp) { return ramp > 0.0 ? smoothstep(t / ramp) : (t >= 0.0 ? 1.0 : 0.0); }

}  // namespace

SpectralField gaussian_kernel(const BasisPtr& basis, double x0, double sigma) {
  require_traffic_domain(basis->domain(), "gaussian_kernel");
  if (!(sigma > 0.0)) throw InvalidArgument("gaussian_kernel: sigma must be > 0");
  const double L = basis->domain().length(0);
  SpectralField out(basis, 1);
  for (std::size_t j = 0; j < basis->size(); ++j) {
    const AxisMode f = basis->mode(j).axis[0];
    if (f.kind == Trig::constant) {
      out(0, j) = 1.0 / std::sqrt(L);
      continue;
    }
    const double w = 2.0 * std::numbers::pi * f.k / L;
    const double damp = std::exp(-0.5 * w * w * sigma * sigma) * std::sqrt(2.0 / L);
    out(0, j) = damp * (f.kind == Trig::cosine ? std::cos(w * x0) : std::sin(w * x0));
  }
  return out;
}

double smoothed_window(double t, double t_on, double t_off, double ramp) {
  return edge(t - t_on, ramp) - edge(t - t_off, ramp);
}

double smoothed_square_wave(double t, double period, double duty, double ramp) {
  const double tp = t - std::floor(t / period) * period;
  const double on = duty * period;
  // Current period plus the tail of the previous one.
  return smoothed_window(tp, 0.0, on, ramp) + smoothed_window(tp + period, 0.0, on, ramp);
}

Forcing build_source(const std::vector<SourceTerm>& sources, const BasisPtr& basis, double dt) {
  require_traffic_domain(basis->domain(), "build_source");
  if (!(dt > 0.0)) throw InvalidArgument("build_source: dt must be > 0");
  const double L = basis->domain().length(0);
  const double spacing = basis->grid().axes[0].spacing;
  const double ramp = 2.0 * dt;
  auto check_width = [&](double s, const char* what) {
    if (!(s >= 2.0 * spacing * (1.0 - 1e-12))) {
      std::ostringstream os;
      os << "build_source: " << what << " " << s << " below two grid spacings (" << 2.0 * spacing << ")";
      throw InvalidArgument(os.str());
    }
  };

  Forcing forcing;
  double alpha = 0.0;
  for (const auto& src : sources) {
    if (const auto* r = std::get_if<Ramp>(&src)) {
      if (!(r->alpha >= 0.0)) throw InvalidArgument("build_source: ramp alpha must be >= 0");
      alpha += r->alpha;
      if (r->beta != 0.0) {
        SpectralField c(basis, 1);
        c(0, 0) = r->beta * std::sqrt(L);
        forcing.add(std::move(c));
      }
    } else if (const auto* l = std::get_if<TrafficLight>(&src)) {
      if (!(l->period > 0.0)) throw InvalidArgument("build_source: traffic light period must be > 0");
      if (!(l->duty > 0.0 && l->duty < 1.0)) throw InvalidArgument("build_source: traffic light duty must be in (0, 1)");
      check_width(l->sigma, "traffic light sigma");
      if (l->amplitude == 0.0) continue;
      const double period = l->period;
      const double duty = l->duty;
      forcing.add(l->amplitude * gaussian_kernel(basis, l->x_k, l->sigma),
                  [=](double t) { return smoothed_square_wave(t, period, duty, ramp); });
    } else {
      const auto& p = std::get<Pulse>(src);
      if (!(p.t_off >= p.t_on)) throw InvalidArgument("build_source: pulse needs t_off >= t_on");
      check_width(p.width, "pulse width");
      if (p.amplitude == 0.0) continue;
      const double on = p.t_on;
      const double off = p.t_off;
      forcing.add(p.amplitude * gaussian_kernel(basis, p.x0, p.width),
                  [=](double t) { return smoothed_window(t, on, off, ramp); });
    }
  }
  forcing.set_damping(alpha);
  return forcing;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::shock: return "shock";
    case Classification::rarefaction: return "rarefaction";
    case Classification::smooth: return "smooth";
  }
  return "?";
}

ShockDiagnostics detect_shock(const Trajectory& trajectory) {
  ShockDiagnostics out;
  if (trajectory.size() == 0) return out;
  if (trajectory.basis->domain().dimension() != 1) throw InvalidArgument("detect_shock: 1D trajectory required");
  const auto& nodes = trajectory.basis->grid().axes[0].nodes;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const GridField ux = gradient_component(trajectory.states[i], 0);
    const auto v = ux.component(0);
    double best = 0.0;
    double pos = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t p = 0; p < v.size(); ++p) {
      if (std::abs(v[p]) > best) {
        best = std::abs(v[p]);
        pos = nodes[p];
      }
    }
    out.times.push_back(trajectory.times[i]);
    out.max_gradient.push_back(best);
    out.position.push_back(pos);
  }
  const double g0 = out.max_gradient.front();
  double peak = 0.0;
  for (double g : out.max_gradient) peak = std::max(peak, g);
  if (g0 > 0.0) {
    if (peak >= 5.0 * g0)
      out.classification = Classification::shock;
    else if (out.max_gradient.back() <= 0.5 * g0)
      out.classification = Classification::rarefaction;
  }
  return out;
}

std::string describe(const SourceTerm& source) {
  std::ostringstream os;
  if (const auto* r = std::get_if<Ramp>(&source)) {
    os << "ramp(alpha=" << r->alpha << ", beta=" << r->beta << ")";
  } else if (const auto* l = std::get_if<TrafficLight>(&source)) {
    os << "traffic_light(x_k=" << l->x_k << ", sigma=" << l->sigma << ", period=" << l->period << ", duty=" << l->duty
       << ", amplitude=" << l->amplitude << ")";
  } else {
    const auto& p = std::get<Pulse>(source);
    os << "pulse(x0=" << p.x0 << ", width=" << p.width << ", amplitude=" << p.amplitude << ", t_on=" << p.t_on
       << ", t_off=" << p.t_off << ")";
  }
  return os.str();
}

ScenarioReport run_scenario(const std::vector<SourceTerm>& sources, const SpectralField& u0, double nu,
                            const SolverConfig& config) {
  require_traffic_domain(u0.basis().domain(), "run_scenario");
  BurgersProblem problem{.nu = nu, .u0 = u0, .forcing = build_source(sources, u0.basis_ptr(), config.dt)};
  ScenarioReport rep;
  try {
    rep.trajectory = integrate(problem, config);
  } catch (const BlowUpError& e) {
    std::ostringstream os;
    os << e.what() << "; scenario: nu=" << nu;
    for (const auto& s : sources) os << ' ' << describe(s);
    throw BlowUpError(e.step(), e.time(), os.str());
  }
  rep.shock = detect_shock(rep.trajectory);
  for (const auto& s : rep.trajectory.states) rep.mean.push_back(mean(s));
  return rep;
}

}  // namespace burgers
