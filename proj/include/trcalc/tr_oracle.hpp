#pragma once

// Ground truth for the tower: every level is built as an explicit pullback
// of p-group homomorphisms, with Gamma-hat tracked through generators.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trcalc/pgroup.hpp"
#include "trcalc/rep_ring.hpp"
#include "trcalc/tr_recursion.hpp"

namespace trcalc {

struct OracleLevel {
  int j = 1;
  Integer r;
  PGroup group;    // canonical
  Hom gamma_hat;   // group -> Z/p^j
  Hom restriction; // group -> previous level's group (empty at level 1)
  // The level's defining pullback as produced, before Gamma-hat is re-based
  // (absent at level 1 and at levels with r_j < 1).
  std::optional<PullbackResult> raw;
};

struct OracleOptions {
  // When set, every Gamma-hat entry is multiplied by a random unit before it
  // feeds the next pullback.
  std::optional<std::uint64_t> unit_twist_seed;
};

std::vector<OracleLevel> oracle_tower(const DimSeq& d, const OracleOptions& options = {});

struct LevelCheck {
  int j = 1;
  PGroup recursion_group;
  PGroup oracle_group;
  bool groups_match = false;
  PGroup recursion_gamma_kernel;
  PGroup oracle_gamma_kernel;
  bool gamma_kernels_match = false;
  // Level 1 has no square; reported as true.
  bool square_commutes = false;
  // (Gamma-hat, R) maps the level isomorphically onto the pullback it
  // should be (r_j >= 1), or R is an isomorphism and Gamma-hat is the
  // phi-twisted previous one (r_j < 1).
  bool embedding_ok = false;

  bool ok() const { return groups_match && gamma_kernels_match && square_commutes && embedding_ok; }
};

struct CrossCheckReport {
  DimSeq input;
  std::vector<LevelCheck> levels;
  std::optional<int> first_divergent_level;
  bool pass() const { return !first_divergent_level.has_value(); }
};

CrossCheckReport cross_check(const DimSeq& d);

}  // namespace trcalc
