#include "teich2/errors.hpp"

#include <cstdio>

namespace teich2 {

const char* to_string(DomainBound which) noexcept {
  switch (which) {
    case DomainBound::lower_a: return "lower_a";
    case DomainBound::upper_a: return "upper_a";
    case DomainBound::alpha_range: return "alpha_range";
  }
  return "unknown";
}

namespace {

std::string describe(DomainBound which, double bound, double value) {
  char buf[160];
  switch (which) {
    case DomainBound::lower_a:
      std::snprintf(buf, sizeof buf, "a = %.17g must exceed the lower bound %.17g", value, bound);
      break;
    case DomainBound::upper_a:
      std::snprintf(buf, sizeof buf, "a = %.17g must be below the upper bound %.17g", value, bound);
      break;
    case DomainBound::alpha_range:
      std::snprintf(buf, sizeof buf, "|alpha_tilde| = %.17g must be below %.17g", value, bound);
      break;
  }
  return std::string("out of domain (") + to_string(which) + "): " + buf;
}

}  // namespace

OutOfDomain::OutOfDomain(DomainBound which, double bound, double value)
    : DomainError(describe(which, bound, value)), which_(which), bound_(bound), value_(value) {}

}  // namespace teich2
