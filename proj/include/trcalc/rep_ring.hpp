#pragma once

// The representation ring R(S^1) = Z[t, t^-1] and the dimension data the
// TR computation consumes.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trcalc/integer.hpp"

namespace trcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A virtual S^1-representation: a Laurent polynomial with integer
/// coefficients, where t^i is the character of winding number i.
/// Zero coefficients are never stored.
class VirtualRep {
 public:
  using Terms = std::map<Integer, Integer>;  // exponent -> coefficient

  VirtualRep() = default;
  explicit VirtualRep(const Terms& terms);

  static VirtualRep monomial(const Integer& coefficient, const Integer& exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Coefficient of t^exponent (zero when absent).
  Integer coefficient(const Integer& exponent) const;

  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

  // Canonical text, terms by ascending exponent, e.g. "3 - 2t^5".
  std::string render() const;

 private:
  void add_term(const Integer& exponent, const Integer& coefficient);

  Terms terms_;
};

/// The dimension sequence (|a|, |a'|, ..., |a^(n-1)|) at a prime p.
/// dims[k] is the dimension after k prime operations; the tower's level j
/// consumes dims[n - j].
struct DimSeq {
  int p = 2;
  std::vector<Integer> dims;

  int n() const noexcept { return static_cast<int>(dims.size()); }

  // Dimension consumed by level j (1 <= j <= n).
  const Integer& for_level(int j) const { return dims.at(dims.size() - static_cast<std::size_t>(j)); }

  friend bool operator==(const DimSeq&, const DimSeq&) = default;
};

/// Parses `expr := term (('+'|'-') term)*` with
/// `term := int | int '*'? 't' ('^' int)? | 't' ('^' int)?`.
/// Whitespace between tokens is ignored; the first term may carry a sign.
VirtualRep parse_rep(std::string_view text);

Integer dim(const VirtualRep& r);

/// (t^i)' = t^{i/p} when p | i, otherwise 0; extended additively.
VirtualRep prime_op(const VirtualRep& r, int p);

DimSeq dim_sequence(const VirtualRep& r, int p, int n);

/// Returns sum_k b_k t^{p^k} with b_{n-1} = d_{n-1} and b_k = d_k - d_{k+1},
/// so that dim_sequence(realize(d), d.p, d.n()) == d.
VirtualRep realize(const DimSeq& d);

}  // namespace trcalc
