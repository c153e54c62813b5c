#include "arexit/errors.hpp"

#include <sstream>

namespace arexit {

namespace {
std::string contained_message(double x, double fx, double h) {
  std::ostringstream os;
  os.precision(10);
  os << "map not contained in (-h, h): f(" << x << ") = " << fx << " with h = " << h;
  return os.str();
}
}  // namespace

MapNotContained::MapNotContained(double x, double fx, double half_width)
    : DomainError(contained_message(x, fx, half_width)), x_(x), fx_(fx) {}

}  // namespace arexit
