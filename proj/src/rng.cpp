#include "sgvar/rng.hpp"

#include <sstream>

namespace sgvar {

std::string Rng::serialize() const {
  std::ostringstream os;
  os << engine_;
  return os.str();
}

Rng Rng::deserialize(const std::string& state) {
  Rng r(0);
  std::istringstream is(state);
  is >> r.engine_;
  if (is.fail()) throw std::runtime_error("Rng: malformed serialized state");
  return r;
}

}  // namespace sgvar
