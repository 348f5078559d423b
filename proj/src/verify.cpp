#include "circrob/verify.hpp"

namespace circrob {

std::string_view to_string(RobinsonClass c) noexcept {
  switch (c) {
    case RobinsonClass::Quasi: return "quasi";
    case RobinsonClass::StrictQuasi: return "strict-quasi";
    case RobinsonClass::Circular: return "circular";
    case RobinsonClass::StrictCircular: return "strict-circular";
  }
  return "unknown";
}

RobinsonClass parse_robinson_class(std::string_view text) {
  for (auto c : {RobinsonClass::Quasi, RobinsonClass::StrictQuasi, RobinsonClass::Circular,
                 RobinsonClass::StrictCircular}) {
    if (text == to_string(c)) return c;
  }
  throw InputError("unknown class '" + std::string(text) +
                   "' (expected quasi, strict-quasi, circular or strict-circular)");
}

}  // namespace circrob
