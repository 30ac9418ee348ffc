#include "trcalc/integer.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace trcalc {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer pow_int(std::int64_t p, int e) {
  if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
  Integer result = 1;
  Integer base = p;
  unsigned k = static_cast<unsigned>(e);
  while (k != 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

int valuation(const Integer& x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("valuation of zero");
  Integer y = abs(x);
  int v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

int valuation_capped(const Integer& x, std::int64_t p, int cap) {
  Integer r = mod_floor(x, pow_int(p, cap));
  if (r == 0) return cap;
  return valuation(r, p);
}

std::string to_string(const Integer& x) { return x.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

int to_int(const Integer& x) {
  if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min()) {
    throw std::overflow_error("integer " + x.str() + " does not fit in int");
  }
  return static_cast<int>(x);
}

}  // namespace trcalc
