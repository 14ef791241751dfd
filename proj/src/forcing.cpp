#include "burgers/forcing.hpp"

#include <cmath>

#include "burgers/error.hpp"

namespace burgers {

Forcing::Forcing(SpectralField steady) { add(std::move(steady)); }

void Forcing::add(SpectralField shape, TimeProfile profile) {
  if (!terms_.empty() && !(terms_.front().shape.basis().domain() == shape.basis().domain()))
    throw InvalidArgument("Forcing: all terms must share a domain");
  terms_.push_back({std::move(shape), std::move(profile)});
}

void Forcing::set_damping(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("Forcing: damping must be >= 0");
  damping_ = alpha;
}

bool Forcing::time_independent() const noexcept {
  for (const auto& t : terms_)
    if (t.profile) return false;
  return true;
}

SpectralField Forcing::at(double t, const BasisPtr& basis, int components) const {
  SpectralField out(basis, components);
  for (const auto& term : terms_) {
    if (term.shape.components() != components) throw InvalidArgument("Forcing: component count mismatch");
    const double s = term.profile ? term.profile(t) : 1.0;
    if (s == 0.0) continue;
    const SpectralField r = resize(term.shape, basis);
    auto dst = out.coefficients();
    const auto src = r.coefficients();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
  }
  return out;
}

SpectralField Forcing::steady(const BasisPtr& basis, int components) const {
  if (!time_independent()) throw InvalidArgument("Forcing: time-dependent forcing has no steady field");
  return at(0.0, basis, components);
}

}  // namespace burgers
