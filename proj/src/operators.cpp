#include "burgers/operators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "burgers/error.hpp"

namespace burgers {
namespace {

void check_velocity(const SpectralField& u, const char* op) {
  if (u.components() != u.basis().domain().dimension())
    throw InvalidArgument(std::string(op) + ": u needs one component per space dimension");
}

void check_triple(const SpectralField& u, const SpectralField& v, const SpectralField& w, const char* op) {
  check_velocity(u, op);
  if (!u.basis().same_space(v.basis()) || !u.basis().same_space(w.basis()))
    throw InvalidArgument(std::string(op) + ": basis mismatch");
  if (v.components() != w.components()) throw InvalidArgument(std::string(op) + ": v and w component counts differ");
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    const double wt = 2.0 / ((1.0 - z * z) * dp * dp);
    w[static_cast<std::size_t>(i)] = wt;
    w[static_cast<std::size_t>(n - 1 - i)] = wt;
  }
}

struct DenseAxis {
  std::vector<double> nodes;
  std::vector<double> weights;
};

DenseAxis dense_axis(double length, int max_index) {
  constexpr int kOrder = 16;
  const int panels = std::max(4, max_index + 2);
  std::vector<double> gx;
  std::vector<double> gw;
  gauss_legendre(kOrder, gx, gw);
  DenseAxis a;
  const double h = length / panels;
  for (int p = 0; p < panels; ++p) {
    for (int q = 0; q < kOrder; ++q) {
      a.nodes.push_back(h * (p + 0.5 * (gx[static_cast<std::size_t>(q)] + 1.0)));
      a.weights.push_back(0.5 * h * gw[static_cast<std::size_t>(q)]);
    }
  }
  return a;
}

// Field values and gradients at dense quadrature points: axis factors in
// closed form, summed mode by mode at every point.
struct DenseSampler {
  const EigenBasis& basis;
  std::array<DenseAxis, 2> axes;
  std::array<std::vector<double>, 2> value;  // [j * n + i]
  std::array<std::vector<double>, 2> deriv;

  explicit DenseSampler(const EigenBasis& b) : basis(b) {
    const Domain& d = b.domain();
    for (std::size_t a = 0; a < 2; ++a) {
      const int ia = static_cast<int>(a);
      axes[a] = ia < d.dimension() ? dense_axis(d.length(ia), b.max_index(ia)) : DenseAxis{{0.0}, {1.0}};
      const std::size_t n = axes[a].nodes.size();
      value[a].resize(b.size() * n);
      deriv[a].resize(b.size() * n);
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          const double x = axes[a].nodes[i];
          const AxisMode f = b.mode(j).axis[a];
          value[a][j * n + i] = ia < d.dimension() ? axis_value(d.boundary(), d.length(ia), f, x) : 1.0;
          deriv[a][j * n + i] = ia < d.dimension() ? axis_derivative(d.boundary(), d.length(ia), f, x) : 0.0;
        }
      }
    }
  }

  std::size_t size() const { return axes[0].nodes.size() * axes[1].nodes.size(); }
  double weight(std::size_t p) const {
    const std::size_t nx = axes[0].nodes.size();
    return axes[0].weights[p % nx] * axes[1].weights[p / nx];
  }

  // deriv_axis = -1 for values.
  std::vector<double> sample(std::span<const double> coeffs, int deriv_axis) const {
    const std::size_t nx = axes[0].nodes.size();
    const std::size_t ny = axes[1].nodes.size();
    const auto& xt = deriv_axis == 0 ? deriv[0] : value[0];
    const auto& yt = deriv_axis == 1 ? deriv[1] : value[1];
    std::vector<double> out(size(), 0.0);
    for (std::size_t iy = 0; iy < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        double s = 0.0;
        for (std::size_t j = 0; j < basis.size(); ++j) s += coeffs[j] * xt[j * nx + ix] * yt[j * ny + iy];
        out[iy * nx + ix] = s;
      }
    }
    return out;
  }
};

}  // namespace

SpectralField apply_A(const SpectralField& u) {
  SpectralField out = u;
  for (int c = 0; c < u.components(); ++c)
    for (std::size_t j = 0; j < u.modes(); ++j) out(c, j) *= u.basis().eigenvalue(j);
  return out;
}

double trilinear_b(const SpectralField& u, const SpectralField& v, const SpectralField& w) {
  check_triple(u, v, w, "trilinear_b");
  const auto& tr = u.basis().transform();
  const int dim = u.basis().domain().dimension();
  const std::size_t n = tr.grid().size();
  std::vector<double> integrand(n, 0.0);
  std::vector<double> ui(n), dv(n), wc(n);
  for (int c = 0; c < v.components(); ++c) {
    tr.synthesize(w.component(c), -1, wc);
    for (int i = 0; i < dim; ++i) {
      tr.synthesize(u.component(i), -1, ui);
      tr.synthesize(v.component(c), i, dv);
      for (std::size_t p = 0; p < n; ++p) integrand[p] += ui[p] * dv[p] * wc[p];
    }
  }
  return tr.integrate(integrand);
}

TrilinearResult trilinear_b_quadrature(const SpectralField& u, const SpectralField& v, const SpectralField& w) {
  check_triple(u, v, w, "trilinear_b_quadrature");
  const DenseSampler s(u.basis());
  const int dim = u.basis().domain().dimension();
  double acc = 0.0;
  std::vector<std::vector<double>> uu;
  for (int i = 0; i < dim; ++i) uu.push_back(s.sample(u.component(i), -1));
  for (int c = 0; c < v.components(); ++c) {
    const auto wc = s.sample(w.component(c), -1);
    for (int i = 0; i < dim; ++i) {
      const auto dv = s.sample(v.component(c), i);
      for (std::size_t p = 0; p < s.size(); ++p) acc += s.weight(p) * uu[static_cast<std::size_t>(i)][p] * dv[p] * wc[p];
    }
  }
  return {acc, TrilinearMethod::quadrature_oracle};
}

SpectralField apply_B(const SpectralField& u, const SpectralField& v, std::size_t m) {
  check_velocity(u, "apply_B");
  if (!u.basis().same_space(v.basis())) throw InvalidArgument("apply_B: basis mismatch");
  if (m > u.modes()) throw InvalidArgument("apply_B: m exceeds the truncation");
  const auto& tr = u.basis().transform();
  const int dim = u.basis().domain().dimension();
  const std::size_t n = tr.grid().size();
  std::vector<std::vector<double>> ui(static_cast<std::size_t>(dim), std::vector<double>(n));
  for (int i = 0; i < dim; ++i) tr.synthesize(u.component(i), -1, ui[static_cast<std::size_t>(i)]);
  SpectralField out(v.basis_ptr(), v.components());
  std::vector<double> g(n), dv(n);
  for (int c = 0; c < v.components(); ++c) {
    std::fill(g.begin(), g.end(), 0.0);
    for (int i = 0; i < dim; ++i) {
      tr.synthesize(v.component(c), i, dv);
      const auto& uv = ui[static_cast<std::size_t>(i)];
      for (std::size_t p = 0; p < n; ++p) g[p] += uv[p] * dv[p];
    }
    tr.analyze(g, out.component(c).first(m));
  }
  return out;
}

GridField divergence(const SpectralField& u) {
  if (u.basis().domain().dimension() != 2) throw InvalidArgument("divergence: 2D velocity field required");
  check_velocity(u, "divergence");
  const auto& tr = u.basis().transform();
  GridField out(tr.grid_ptr(), 1);
  std::vector<double> tmp(tr.grid().size());
  tr.synthesize(u.component(0), 0, out.component(0));
  tr.synthesize(u.component(1), 1, tmp);
  auto o = out.component(0);
  for (std::size_t p = 0; p < tmp.size(); ++p) o[p] += tmp[p];
  return out;
}

double skew_defect(const SpectralField& u, const SpectralField& v) {
  check_velocity(u, "skew_defect");
  if (!u.basis().same_space(v.basis())) throw InvalidArgument("skew_defect: basis mismatch");
  const auto& tr = u.basis().transform();
  const int dim = u.basis().domain().dimension();
  const std::size_t n = tr.grid().size();
  std::vector<double> div(n, 0.0), tmp(n), vsq(n, 0.0);
  for (int i = 0; i < dim; ++i) {
    tr.synthesize(u.component(i), i, tmp);
    for (std::size_t p = 0; p < n; ++p) div[p] += tmp[p];
  }
  for (int c = 0; c < v.components(); ++c) {
    tr.synthesize(v.component(c), -1, tmp);
    for (std::size_t p = 0; p < n; ++p) vsq[p] += tmp[p] * tmp[p];
  }
  for (std::size_t p = 0; p < n; ++p) tmp[p] = div[p] * vsq[p];
  return -0.5 * tr.integrate(tmp);
}

double skew_defect_quadrature(const SpectralField& u, const SpectralField& v) {
  check_velocity(u, "skew_defect_quadrature");
  if (!u.basis().same_space(v.basis())) throw InvalidArgument("skew_defect_quadrature: basis mismatch");
  const DenseSampler s(u.basis());
  const int dim = u.basis().domain().dimension();
  std::vector<double> div(s.size(), 0.0), vsq(s.size(), 0.0);
  for (int i = 0; i < dim; ++i) {
    const auto d = s.sample(u.component(i), i);
    for (std::size_t p = 0; p < s.size(); ++p) div[p] += d[p];
  }
  for (int c = 0; c < v.components(); ++c) {
    const auto vc = s.sample(v.component(c), -1);
    for (std::size_t p = 0; p < s.size(); ++p) vsq[p] += vc[p] * vc[p];
  }
  double acc = 0.0;
  for (std::size_t p = 0; p < s.size(); ++p) acc += s.weight(p) * div[p] * vsq[p];
  return -0.5 * acc;
}

}  // namespace burgers
