#include "burgers/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "burgers/error.hpp"

namespace burgers {
namespace {

constexpr double kPi = std::numbers::pi;

int parity_rank(Trig t) { return t == Trig::sine ? 0 : 1; }

std::vector<AxisMode> axis_candidates(Boundary b, int kmax) {
  std::vector<AxisMode> out;
  if (b == Boundary::dirichlet) {
    for (int k = 1; k <= kmax; ++k) out.push_back({k, Trig::sine});
  } else {
    out.push_back({0, Trig::constant});
    for (int k = 1; k <= kmax; ++k) {
      out.push_back({k, Trig::sine});
      out.push_back({k, Trig::cosine});
    }
  }
  return out;
}

std::vector<Mode> enumerate(const Domain& d, int kmax) {
  const AxisMode trivial{0, Trig::constant};
  std::vector<Mode> modes;
  const auto xs = axis_candidates(d.boundary(), kmax);
  if (d.dimension() == 1) {
    for (const auto& fx : xs) {
      if (fx.kind == Trig::constant && !d.include_mean()) continue;
      modes.push_back({{fx, trivial}, axis_eigenvalue(d.boundary(), d.length(0), fx.k)});
    }
    return modes;
  }
  const auto ys = axis_candidates(d.boundary(), kmax);
  for (const auto& fx : xs) {
    for (const auto& fy : ys) {
      if (fx.kind == Trig::constant && fy.kind == Trig::constant && !d.include_mean()) continue;
      const double lam = axis_eigenvalue(d.boundary(), d.length(0), fx.k) + axis_eigenvalue(d.boundary(), d.length(1), fy.k);
      modes.push_back({{fx, fy}, lam});
    }
  }
  return modes;
}

// Sort by eigenvalue, then regroup numerically equal eigenvalues so that the
// lexicographic tie-break does not depend on last-bit rounding.
void order_modes(std::vector<Mode>& modes) {
  std::sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.index_tuple() < b.index_tuple();
  });
  std::size_t start = 0;
  while (start < modes.size()) {
    std::size_t end = start + 1;
    while (end < modes.size() &&
           modes[end].eigenvalue - modes[start].eigenvalue <= 1e-12 * std::max(1.0, modes[start].eigenvalue))
      ++end;
    std::sort(modes.begin() + static_cast<std::ptrdiff_t>(start), modes.begin() + static_cast<std::ptrdiff_t>(end),
              [](const Mode& a, const Mode& b) { return a.index_tuple() < b.index_tuple(); });
    const double lam = modes[start].eigenvalue;
    for (std::size_t i = start; i < end; ++i) modes[i].eigenvalue = std::min(modes[i].eigenvalue, lam);
    start = end;
  }
}

AxisGrid periodic_axis(double length, int n) {
  AxisGrid g;
  g.resolution = n;
  g.spacing = length / n;
  g.nodes.resize(static_cast<std::size_t>(n));
  g.weights.assign(static_cast<std::size_t>(n), length / n);
  for (int i = 0; i < n; ++i) g.nodes[static_cast<std::size_t>(i)] = length * i / n;
  return g;
}

// 2N nodes on [0, 2L); weights integrate over (0, L) exactly for
// 2L-periodic trigonometric polynomials of degree <= N-1 in pi x / L:
//   w_i = L/(2N) + (2L/(pi N)) sum_{n odd < N} sin(n pi i / N) / n.
AxisGrid dirichlet_axis(double length, int n) {
  AxisGrid g;
  g.resolution = n;
  g.spacing = length / n;
  const int total = 2 * n;
  g.nodes.resize(static_cast<std::size_t>(total));
  g.weights.resize(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) {
    g.nodes[static_cast<std::size_t>(i)] = length * i / n;
    double s = 0.0;
    for (int k = 1; k <= n - 1; k += 2) {
      const long r = (static_cast<long>(k) * i) % total;
      s += std::sin(kPi * static_cast<double>(r) / n) / k;
    }
    g.weights[static_cast<std::size_t>(i)] = length / (2.0 * n) + 2.0 * length / (kPi * n) * s;
  }
  return g;
}

AxisGrid trivial_axis() {
  AxisGrid g;
  g.resolution = 1;
  g.spacing = 1.0;
  g.nodes = {0.0};
  g.weights = {1.0};
  return g;
}

std::string trig_label(AxisMode f) {
  switch (f.kind) {
    case Trig::sine: return "sin" + std::to_string(f.k);
    case Trig::cosine: return "cos" + std::to_string(f.k);
    case Trig::constant: return "1";
  }
  return "?";
}

}  // namespace

std::array<int, 4> Mode::index_tuple() const {
  return {axis[0].k, axis[1].k, parity_rank(axis[0].kind), parity_rank(axis[1].kind)};
}

std::string Mode::label() const {
  if (axis[1].kind == Trig::constant && axis[1].k == 0 && axis[0].kind != Trig::constant) return trig_label(axis[0]);
  std::ostringstream os;
  os << "(" << trig_label(axis[0]) << "," << trig_label(axis[1]) << ")";
  return os.str();
}

double axis_eigenvalue(Boundary b, double length, int k) {
  const double w = (b == Boundary::dirichlet ? kPi : 2.0 * kPi) * k / length;
  return w * w;
}

double axis_value(Boundary b, double length, AxisMode f, double x) {
  if (b == Boundary::dirichlet) return std::sqrt(2.0 / length) * std::sin(kPi * f.k * x / length);
  const double w = 2.0 * kPi * f.k / length;
  switch (f.kind) {
    case Trig::constant: return 1.0 / std::sqrt(length);
    case Trig::sine: return std::sqrt(2.0 / length) * std::sin(w * x);
    case Trig::cosine: return std::sqrt(2.0 / length) * std::cos(w * x);
  }
  return 0.0;
}

double axis_derivative(Boundary b, double length, AxisMode f, double x) {
  if (b == Boundary::dirichlet) {
    const double w = kPi * f.k / length;
    return std::sqrt(2.0 / length) * w * std::cos(w * x);
  }
  const double w = 2.0 * kPi * f.k / length;
  switch (f.kind) {
    case Trig::constant: return 0.0;
    case Trig::sine: return std::sqrt(2.0 / length) * w * std::cos(w * x);
    case Trig::cosine: return -std::sqrt(2.0 / length) * w * std::sin(w * x);
  }
  return 0.0;
}

int dealiased_resolution(int max_index) { return 3 * max_index + 1; }

std::shared_ptr<const Grid> make_grid(const Domain& domain, std::array<int, 2> resolution) {
  auto g = std::make_shared<Grid>();
  g->dimension = domain.dimension();
  for (int a = 0; a < 2; ++a) {
    auto& axis = g->axes[static_cast<std::size_t>(a)];
    if (a >= domain.dimension()) {
      axis = trivial_axis();
      continue;
    }
    const int n = resolution[static_cast<std::size_t>(a)];
    if (n < 1) throw InvalidArgument("grid resolution must be >= 1");
    axis = domain.periodic() ? periodic_axis(domain.length(a), n) : dirichlet_axis(domain.length(a), n);
  }
  return g;
}

// ---------------------------------------------------------------------------
// GridTransform

GridTransform::GridTransform(const EigenBasis& basis, std::shared_ptr<const Grid> grid)
    : grid_(std::move(grid)), basis_size_(basis.size()) {
  const Domain& d = basis.domain();
  for (int a = 0; a < 2; ++a) {
    auto& t = tables_[static_cast<std::size_t>(a)];
    const auto& ag = grid_->axes[static_cast<std::size_t>(a)];
    const auto fns = basis.axis_functions(a);
    t.n = ag.nodes.size();
    t.value.resize(fns.size() * t.n);
    t.deriv.resize(fns.size() * t.n);
    t.weighted.resize(fns.size() * t.n);
    for (std::size_t f = 0; f < fns.size(); ++f) {
      for (std::size_t i = 0; i < t.n; ++i) {
        double v = 1.0;
        double dv = 0.0;
        if (a < d.dimension()) {
          v = axis_value(d.boundary(), d.length(a), fns[f], ag.nodes[i]);
          dv = axis_derivative(d.boundary(), d.length(a), fns[f], ag.nodes[i]);
        }
        t.value[f * t.n + i] = v;
        t.deriv[f * t.n + i] = dv;
        t.weighted[f * t.n + i] = ag.weights[i] * v;
      }
    }
  }
  const auto fx = basis.axis_function_index(0);
  const auto fy = basis.axis_function_index(1);
  std::vector<int> group_of(basis.axis_functions(1).size(), -1);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto& slot = group_of[static_cast<std::size_t>(fy[j])];
    if (slot < 0) {
      slot = static_cast<int>(groups_.size());
      groups_.push_back({fy[j], {}, {}});
    }
    auto& g = groups_[static_cast<std::size_t>(slot)];
    g.modes.push_back(j);
    g.fx.push_back(fx[j]);
  }
}

void GridTransform::synthesize(std::span<const double> coeffs, int deriv_axis, std::span<double> out) const {
  const auto& tx = tables_[0];
  const auto& ty = tables_[1];
  const std::size_t nx = tx.n;
  const std::size_t ny = ty.n;
  if (out.size() != nx * ny) throw InvalidArgument("synthesize: output size mismatch");
  std::fill(out.begin(), out.end(), 0.0);
  const auto& xtab = deriv_axis == 0 ? tx.deriv : tx.value;
  const auto& ytab = deriv_axis == 1 ? ty.deriv : ty.value;
  std::vector<double> row(nx);
  for (const auto& g : groups_) {
    std::fill(row.begin(), row.end(), 0.0);
    bool any = false;
    for (std::size_t q = 0; q < g.modes.size(); ++q) {
      const std::size_t j = g.modes[q];
      if (j >= coeffs.size()) continue;
      const double a = coeffs[j];
      if (a == 0.0) continue;
      any = true;
      const double* xv = xtab.data() + static_cast<std::size_t>(g.fx[q]) * nx;
      for (std::size_t i = 0; i < nx; ++i) row[i] += a * xv[i];
    }
    if (!any) continue;
    const double* yv = ytab.data() + static_cast<std::size_t>(g.fy) * ny;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double s = yv[iy];
      if (s == 0.0) continue;
      double* o = out.data() + iy * nx;
      for (std::size_t i = 0; i < nx; ++i) o[i] += s * row[i];
    }
  }
}

void GridTransform::analyze(std::span<const double> values, std::span<double> out) const {
  const auto& tx = tables_[0];
  const auto& ty = tables_[1];
  const std::size_t nx = tx.n;
  const std::size_t ny = ty.n;
  if (values.size() != nx * ny) throw InvalidArgument("analyze: input size mismatch");
  if (out.size() > basis_size_) throw InvalidArgument("analyze: more modes requested than the basis holds");
  std::vector<double> col(nx);
  for (const auto& g : groups_) {
    if (g.modes.front() >= out.size()) continue;
    std::fill(col.begin(), col.end(), 0.0);
    const double* yw = ty.weighted.data() + static_cast<std::size_t>(g.fy) * ny;
    for (std::size_t iy = 0; iy < ny; ++iy) {
      const double s = yw[iy];
      const double* v = values.data() + iy * nx;
      for (std::size_t i = 0; i < nx; ++i) col[i] += s * v[i];
    }
    for (std::size_t q = 0; q < g.modes.size(); ++q) {
      const std::size_t j = g.modes[q];
      if (j >= out.size()) continue;
      const double* xw = tx.weighted.data() + static_cast<std::size_t>(g.fx[q]) * nx;
      double acc = 0.0;
      for (std::size_t i = 0; i < nx; ++i) acc += xw[i] * col[i];
      out[j] = acc;
    }
  }
}

double GridTransform::integrate(std::span<const double> values) const {
  const auto& wx = grid_->axes[0].weights;
  const auto& wy = grid_->axes[1].weights;
  const std::size_t nx = wx.size();
  double acc = 0.0;
  for (std::size_t iy = 0; iy < wy.size(); ++iy) {
    double row = 0.0;
    for (std::size_t i = 0; i < nx; ++i) row += wx[i] * values[iy * nx + i];
    acc += wy[iy] * row;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// EigenBasis

EigenBasis::EigenBasis(Domain domain, std::vector<Mode> modes) : domain_(domain), modes_(std::move(modes)) {
  for (int a = 0; a < 2; ++a) {
    auto& fns = axis_functions_[static_cast<std::size_t>(a)];
    for (const auto& m : modes_) fns.push_back(m.axis[static_cast<std::size_t>(a)]);
    std::sort(fns.begin(), fns.end());
    fns.erase(std::unique(fns.begin(), fns.end()), fns.end());
    auto& idx = axis_function_index_[static_cast<std::size_t>(a)];
    for (const auto& m : modes_) {
      const auto it = std::lower_bound(fns.begin(), fns.end(), m.axis[static_cast<std::size_t>(a)]);
      idx.push_back(static_cast<int>(it - fns.begin()));
    }
    int kmax = 0;
    for (const auto& f : fns) kmax = std::max(kmax, f.k);
    max_index_[static_cast<std::size_t>(a)] = kmax;
  }
  const std::array<int, 2> res{dealiased_resolution(max_index_[0]),
                               domain_.dimension() == 2 ? dealiased_resolution(max_index_[1]) : 1};
  transform_ = std::make_unique<GridTransform>(*this, make_grid(domain_, res));
}

std::size_t EigenBasis::find(const Mode& mode) const {
  for (std::size_t j = 0; j < modes_.size(); ++j)
    if (modes_[j].axis == mode.axis) return j;
  return modes_.size();
}

bool EigenBasis::same_space(const EigenBasis& other) const noexcept {
  return this == &other || (domain_ == other.domain_ && modes_.size() == other.modes_.size());
}

BasisPtr build_basis(const Domain& domain, std::size_t m) {
  if (m == 0) throw InvalidArgument("build_basis: m must be >= 1");
  int kmax = domain.dimension() == 1 ? static_cast<int>(m / (domain.periodic() ? 2 : 1)) + 1
                                     : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m)))) + 1;
  for (;;) {
    auto modes = enumerate(domain, kmax);
    if (modes.size() >= m) {
      order_modes(modes);
      // Any mode with an axis index above kmax has eigenvalue at least this.
      double threshold = axis_eigenvalue(domain.boundary(), domain.length(0), kmax + 1);
      if (domain.dimension() == 2)
        threshold = std::min(threshold, axis_eigenvalue(domain.boundary(), domain.length(1), kmax + 1));
      if (modes[m - 1].eigenvalue < threshold * (1.0 - 1e-10)) {
        modes.resize(m);
        return BasisPtr(new EigenBasis(domain, std::move(modes)));
      }
    }
    kmax *= 2;
  }
}

}  // namespace burgers
