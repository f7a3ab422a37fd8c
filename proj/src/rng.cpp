#include "reef/rng.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace reef {

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform_index: n must be positive");
  }
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = gen_();
  while (rem != 0 && x > std::numeric_limits<std::uint64_t>::max() - rem) {
    x = gen_();
  }
  return x % n;
}

double Rng::normal(double mean, double stddev) {
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * mag * std::cos(2.0 * std::numbers::pi * u2);
}

std::string Rng::save_state() const {
  std::ostringstream os;
  os << gen_;
  return os.str();
}

void Rng::load_state(const std::string& state) {
  std::istringstream is(state);
  is >> gen_;
  if (is.fail()) {
    throw std::invalid_argument("Rng::load_state: malformed state string");
  }
}

}  // namespace reef
