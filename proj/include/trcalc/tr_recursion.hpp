#pragma once

// Closed-form recursion for the groups TR^j_{a^(n-j)}(F_p; p), j = 1..n.

#include <stdexcept>
#include <vector>

#include "trcalc/integer.hpp"
#include "trcalc/pgroup.hpp"
#include "trcalc/rep_ring.hpp"

namespace trcalc {

struct Summand {
  int length = 0;  // l
  int kernel = 0;  // k, length of the kernel of this summand's Gamma-hat component

  int gap() const noexcept { return length - kernel; }  // g = l - k

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// One level of the recursion.  Summands are positional (j of them at level
/// j, zero lengths included) and sorted ascending by kernel length, ties in
/// the order the recursion produced them.  tau and w describe how this level
/// was built from the previous one; indices are 0-based into the previous
/// level's summands.
struct LevelState {
  int p = 2;
  int j = 1;
  Integer dim;  // the dimension this level consumes
  Integer r;    // min(j, dim + 1)
  int w = 0;
  std::vector<int> tau;
  std::vector<Summand> summands;
  std::vector<int> gamma_hat_valuations;  // Gamma-hat(e_i) = p^{a_i} in Z/p^j
  // position_of[s] is the position, in the recursion's own indexing, of the
  // summand stored at sorted position s.
  std::vector<int> position_of;

  PGroup raw_group() const;
  PGroup group() const { return raw_group().canonical(); }
  Hom gamma_hat() const;
};

struct TRTower {
  DimSeq input;
  std::vector<LevelState> levels;  // levels[j-1] is level j
  std::vector<PGroup> groups;      // canonical
  std::vector<Hom> restrictions;   // restrictions[j-2]: level j -> level j-1, raw bases
  std::vector<Hom> gamma_hat;      // gamma_hat[j-1]: level j -> Z/p^j, raw basis

  const PGroup& final_group() const { return groups.back(); }
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// min(j, d + 1)
Integer r_value(int j, const Integer& d);

LevelState base_case(const Integer& d, int p);

struct TauSelection {
  std::vector<int> tau;
  int w = 0;
};

/// The k >= r block ascending by k, then the k < r block descending by g,
/// ties by ascending index.  w is the size of the first block.
TauSelection select_tau(const std::vector<Summand>& summands, const Integer& r);

LevelState step(const LevelState& prev, const Integer& d, int j);

/// Level j consumes d.dims[n - j].
TRTower tower(const DimSeq& d);

/// The restriction level j -> level j-1 in the two states' stored bases.
Hom restriction_matrix(const LevelState& state, const LevelState& prev);

/// Length L of the cyclic final group when the dims are non-increasing with
/// d_0 >= 0.  Throws PreconditionError otherwise.
int corollary_plus(const DimSeq& d);

/// Exponent m of the cyclic final group when the dims are non-decreasing.
/// Throws PreconditionError otherwise.
int corollary_minus(const DimSeq& d);

}  // namespace trcalc
