#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace trcalc {

// Arbitrary-precision signed integer used for every exact quantity in the
// library: representation-ring coefficients, dimensions, matrix entries.
using Integer = boost::multiprecision::cpp_int;

bool is_prime(std::int64_t n);

// p^e for e >= 0.
Integer pow_int(std::int64_t p, int e);

// Largest v with p^v | x.  x must be nonzero.
int valuation(const Integer& x, std::int64_t p);

// Representative of x mod m in [0, m).  m > 0.
Integer mod_floor(const Integer& x, const Integer& m);

// p-adic valuation of x viewed in Z/p^cap: returns cap when x == 0 mod p^cap.
int valuation_capped(const Integer& x, std::int64_t p, int cap);

std::string to_string(const Integer& x);

// Parses an optionally signed decimal literal; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

// Narrowing conversion that throws std::overflow_error when out of range.
int to_int(const Integer& x);

}  // namespace trcalc
