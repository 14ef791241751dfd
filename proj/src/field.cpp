#include "burgers/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "burgers/error.hpp"

namespace burgers {

SpectralField::SpectralField(BasisPtr basis, int components)
    : basis_(std::move(basis)), components_(components) {
  if (!basis_) throw InvalidArgument("SpectralField: null basis");
  if (components_ < 1 || components_ > 2) throw InvalidArgument("SpectralField: components must be 1 or 2");
  coefficients_.assign(static_cast<std::size_t>(components_) * basis_->size(), 0.0);
}

SpectralField::SpectralField(BasisPtr basis, int components, std::vector<double> coefficients)
    : SpectralField(std::move(basis), components) {
  if (coefficients.size() != coefficients_.size())
    throw InvalidArgument("SpectralField: coefficient count must equal components x m");
  coefficients_ = std::move(coefficients);
}

SpectralField SpectralField::unit(BasisPtr basis, std::size_t j, int component, int components) {
  SpectralField f(std::move(basis), components);
  if (j >= f.modes() || component >= components) throw InvalidArgument("SpectralField::unit: index out of range");
  f(component, j) = 1.0;
  return f;
}

std::span<const double> SpectralField::component(int c) const {
  return std::span<const double>(coefficients_).subspan(static_cast<std::size_t>(c) * modes(), modes());
}

std::span<double> SpectralField::component(int c) {
  return std::span<double>(coefficients_).subspan(static_cast<std::size_t>(c) * modes(), modes());
}

bool SpectralField::compatible(const SpectralField& other) const noexcept {
  return components_ == other.components_ && basis_->same_space(*other.basis_);
}

bool SpectralField::is_zero() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](double a) { return a == 0.0; });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (!compatible(other)) throw InvalidArgument("field addition: incompatible spaces");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  if (!compatible(other)) throw InvalidArgument("field subtraction: incompatible spaces");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) noexcept {
  for (auto& a : coefficients_) a *= s;
  return *this;
}

SpectralField project(const SpectralField& field, std::size_t m) {
  if (m > field.modes()) throw InvalidArgument("project: m exceeds the source truncation");
  SpectralField out = field;
  for (int c = 0; c < out.components(); ++c) {
    auto comp = out.component(c);
    std::fill(comp.begin() + static_cast<std::ptrdiff_t>(m), comp.end(), 0.0);
  }
  return out;
}

SpectralField resize(const SpectralField& field, BasisPtr target) {
  if (!(target->domain() == field.basis().domain())) throw InvalidArgument("resize: domains differ");
  SpectralField out(target, field.components());
  const std::size_t n = std::min(field.modes(), target->size());
  for (int c = 0; c < field.components(); ++c) {
    auto src = field.component(c);
    auto dst = out.component(c);
    std::copy_n(src.begin(), n, dst.begin());
  }
  return out;
}

double inner(const SpectralField& u, const SpectralField& v) {
  if (!u.compatible(v)) throw InvalidArgument("inner: incompatible spaces");
  const auto a = u.coefficients();
  const auto b = v.coefficients();
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double inner_v(const SpectralField& u, const SpectralField& v) {
  if (!u.compatible(v)) throw InvalidArgument("inner_v: incompatible spaces");
  double acc = 0.0;
  for (int c = 0; c < u.components(); ++c)
    for (std::size_t j = 0; j < u.modes(); ++j) acc += u.basis().eigenvalue(j) * u(c, j) * v(c, j);
  return acc;
}

double mean(const SpectralField& field, int component) {
  const auto& b = field.basis();
  const Mode constant{{AxisMode{0, Trig::constant}, AxisMode{0, Trig::constant}}, 0.0};
  const std::size_t j = b.find(constant);
  if (j == b.size()) return 0.0;
  return field(component, j) / std::sqrt(b.domain().measure());
}

namespace {

double weighted_sum_sq(const SpectralField& f, int power) {
  double acc = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (std::size_t j = 0; j < f.modes(); ++j) {
      const double lam = f.basis().eigenvalue(j);
      const double w = power == 0 ? 1.0 : (power == 1 ? lam : lam * lam);
      acc += w * f(c, j) * f(c, j);
    }
  }
  return acc;
}

}  // namespace

double l2_norm(const SpectralField& field) { return std::sqrt(weighted_sum_sq(field, 0)); }
double v_norm(const SpectralField& field) { return std::sqrt(weighted_sum_sq(field, 1)); }
double h2_norm(const SpectralField& field) { return std::sqrt(weighted_sum_sq(field, 2)); }

double linf_norm(const SpectralField& field) {
  const GridField g = to_grid(field);
  const std::size_t n = g.grid().size();
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int c = 0; c < g.components(); ++c) s += g.component(c)[i] * g.component(c)[i];
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

Norms norms(const SpectralField& field) {
  return {l2_norm(field), v_norm(field), h2_norm(field), linf_norm(field)};
}

// ---------------------------------------------------------------------------

GridField::GridField(std::shared_ptr<const Grid> grid, int components)
    : grid_(std::move(grid)), components_(components) {
  values_.assign(static_cast<std::size_t>(components_) * grid_->size(), 0.0);
}

GridField::GridField(std::shared_ptr<const Grid> grid, int components, std::vector<double> values)
    : GridField(std::move(grid), components) {
  if (values.size() != values_.size()) throw InvalidArgument("GridField: value count mismatch");
  values_ = std::move(values);
}

std::span<const double> GridField::component(int c) const {
  return std::span<const double>(values_).subspan(static_cast<std::size_t>(c) * grid_->size(), grid_->size());
}

std::span<double> GridField::component(int c) {
  return std::span<double>(values_).subspan(static_cast<std::size_t>(c) * grid_->size(), grid_->size());
}

GridField to_grid(const SpectralField& field) {
  const auto& tr = field.basis().transform();
  GridField g(tr.grid_ptr(), field.components());
  for (int c = 0; c < field.components(); ++c) tr.synthesize(field.component(c), -1, g.component(c));
  return g;
}

GridField gradient_component(const SpectralField& field, int axis) {
  if (axis < 0 || axis >= field.basis().domain().dimension()) throw InvalidArgument("gradient_component: bad axis");
  const auto& tr = field.basis().transform();
  GridField g(tr.grid_ptr(), field.components());
  for (int c = 0; c < field.components(); ++c) tr.synthesize(field.component(c), axis, g.component(c));
  return g;
}

SpectralField from_grid(const GridField& grid, BasisPtr basis) {
  const Domain& d = basis->domain();
  const Grid& gr = grid.grid();
  if (gr.dimension != d.dimension()) throw InvalidArgument("from_grid: grid dimension does not match the basis");
  for (int a = 0; a < d.dimension(); ++a) {
    const auto& ax = gr.axes[static_cast<std::size_t>(a)];
    if (ax.resolution < dealiased_resolution(basis->max_index(a)))
      throw InvalidArgument("from_grid: grid under-resolved for the basis (need N >= 3K+1 on every axis)");
    const std::size_t expected = static_cast<std::size_t>(d.periodic() ? ax.resolution : 2 * ax.resolution);
    if (ax.nodes.size() != expected || std::abs(ax.spacing - d.length(a) / ax.resolution) > 1e-14 * d.length(a))
      throw InvalidArgument("from_grid: grid does not belong to this domain");
  }
  const bool own = grid.grid_ptr() == basis->grid_ptr();
  std::unique_ptr<GridTransform> local;
  if (!own) local = std::make_unique<GridTransform>(*basis, grid.grid_ptr());
  const GridTransform& tr = own ? basis->transform() : *local;
  SpectralField out(basis, grid.components());
  for (int c = 0; c < grid.components(); ++c) tr.analyze(grid.component(c), out.component(c));
  return out;
}

}  // namespace burgers
