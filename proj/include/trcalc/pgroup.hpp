#pragma once

// Finite abelian p-groups Z/p^{l_1} + ... + Z/p^{l_m} and homomorphisms
// between them, with exact kernels and pullbacks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trcalc/integer.hpp"
#include "trcalc/matrix.hpp"

namespace trcalc {

class PGroup {
 public:
  PGroup() = default;
  PGroup(int p, std::vector<int> lengths);

  static PGroup trivial(int p) { return PGroup(p, {}); }
  static PGroup cyclic(int p, int length) { return PGroup(p, {length}); }

  int p() const noexcept { return p_; }
  const std::vector<int>& lengths() const noexcept { return lengths_; }
  std::size_t size() const noexcept { return lengths_.size(); }
  int length(std::size_t i) const { return lengths_.at(i); }

  // Sorted non-increasing with zero lengths dropped.
  PGroup canonical() const;
  bool is_canonical() const;
  int order_length() const;
  bool is_trivial() const noexcept { return order_length() == 0; }

  // p^{l_i}
  Integer modulus(std::size_t i) const { return pow_int(p_, lengths_.at(i)); }

  // "Z/2^2 + Z/2", or "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const PGroup&, const PGroup&) = default;

 private:
  int p_ = 2;
  std::vector<int> lengths_;
};

// Throws std::invalid_argument when the primes differ.
bool is_isomorphic(const PGroup& a, const PGroup& b);

/// A homomorphism source -> target given by integer representatives:
/// entries(j, i) is the image of source generator i in target summand j.
/// Well-definedness, p^{src_i} * entries(j, i) == 0 mod p^{tgt_j}, is checked
/// on construction.  Entries are kept as given; equality compares residues.
class Hom {
 public:
  Hom() = default;
  Hom(PGroup source, PGroup target, IntMatrix entries);

  static Hom zero(const PGroup& source, const PGroup& target);
  static Hom identity(const PGroup& g);

  const PGroup& source() const noexcept { return source_; }
  const PGroup& target() const noexcept { return target_; }
  const IntMatrix& entries() const noexcept { return entries_; }
  const Integer& entry(std::size_t j, std::size_t i) const { return entries_(j, i); }

  // Entries reduced into [0, p^{tgt_j}).
  Hom reduced() const;
  bool is_zero() const;

  friend bool operator==(const Hom& a, const Hom& b);

 private:
  PGroup source_;
  PGroup target_;
  IntMatrix entries_;
};

class HomShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// second o first, reduced modulo the target.  first.target() must equal
/// second.source() summand for summand.
Hom compose(const Hom& first, const Hom& second);

struct KernelResult {
  PGroup group;  // canonical
  Hom inclusion;  // group -> f.source()
};

KernelResult kernel(const Hom& f);

// order_length(source) - order_length(kernel)
int image_length(const Hom& f);

struct PullbackResult {
  PGroup group;
  Hom projA;
  Hom projB;
};

/// Pullback of f: A -> C and g: B -> C, computed as the kernel of
/// (f, -g): A + B -> C.
PullbackResult pullback(const Hom& f, const Hom& g);

inline constexpr std::uint64_t kBruteForceCap = 4096;

/// Enumerates {(a, b) : f(a) = g(b)} element by element and decomposes it by
/// repeatedly splitting off an element of maximal order.  Requires
/// |A| * |B| <= kBruteForceCap.
PGroup brute_force_pullback(const Hom& f, const Hom& g);

struct CyclicDiagonalization {
  std::vector<int> valuations;  // f(e_i') = p^{a_i}, a_i = N for the zero map
  Hom basis;                    // source -> source, columns are the e_i'
};

/// f maps into a single cyclic summand Z/p^N.  Returns a basis of the source,
/// with the same summand lengths, in which f is diagonal with unit 1.
CyclicDiagonalization diagonalize_to_cyclic(const Hom& f);

/// A Hom from the given source to Z/p^N sending e_i to p^{a_i}.
Hom cyclic_valuation_hom(const PGroup& source, int N, const std::vector<int>& valuations);

}  // namespace trcalc
