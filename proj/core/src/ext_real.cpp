#include "convsec/ext_real.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace convsec {

double ExtReal::value() const {
  if (!is_finite()) throw std::logic_error("ExtReal::value() on an infinite value");
  return value_;
}

double ExtReal::to_double() const {
  switch (kind_) {
    case Kind::pos_inf: return std::numeric_limits<double>::infinity();
    case Kind::neg_inf: return -std::numeric_limits<double>::infinity();
    default: return value_;
  }
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::pos_inf: return "inf";
    case Kind::neg_inf: return "-inf";
    default: break;
  }
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

}  // namespace convsec
