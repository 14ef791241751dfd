#include "burgers/domain.hpp"

#include <cmath>

#include "burgers/error.hpp"

namespace burgers {

std::string to_string(Boundary b) { return b == Boundary::dirichlet ? "dirichlet" : "periodic"; }

Boundary boundary_from_string(const std::string& s) {
  if (s == "dirichlet") return Boundary::dirichlet;
  if (s == "periodic") return Boundary::periodic;
  throw InvalidArgument("unknown boundary '" + s + "' (expected dirichlet|periodic)");
}

Domain::Domain(int dimension, std::array<double, 2> lengths, Boundary boundary, bool include_mean)
    : dimension_(dimension), lengths_(lengths), boundary_(boundary), include_mean_(include_mean) {
  for (int a = 0; a < dimension_; ++a) {
    const double l = lengths_[static_cast<std::size_t>(a)];
    if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("domain lengths must be positive and finite");
  }
  if (include_mean_ && boundary_ == Boundary::dirichlet)
    throw InvalidArgument("Dirichlet domains carry no constant mode (include_mean must be false)");
}

Domain Domain::interval(double length, Boundary boundary, bool include_mean) {
  return Domain(1, {length, 1.0}, boundary, include_mean);
}

Domain Domain::rectangle(double l1, double l2, Boundary boundary, bool include_mean) {
  return Domain(2, {l1, l2}, boundary, include_mean);
}

double Domain::measure() const noexcept { return dimension_ == 1 ? lengths_[0] : lengths_[0] * lengths_[1]; }

}  // namespace burgers
