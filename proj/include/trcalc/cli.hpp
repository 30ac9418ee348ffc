#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trcalc/rep_ring.hpp"

namespace trcalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDivergence = 1;
inline constexpr int kExitUsage = 2;

struct CampaignConfig {
  std::vector<int> primes{2, 3, 5};
  int max_n = 6;
  long long lo = -4;
  long long hi = 4;
  std::uint64_t cases = 1000;
  std::uint64_t seed = 7;
  unsigned threads = 0;  // 0: TRCALC_THREADS or the hardware count
};

struct CaseOutcome {
  std::uint64_t index = 0;
  DimSeq dims;
  bool groups_match = true;  // every level's group agrees with the oracle
  bool pass = true;          // every check in the cross-check report
  std::optional<int> first_divergent_level;
  int max_length = 0;        // largest l_{i,j} over all levels
  bool length_bound = true;  // every l_{i,j} <= j
  int final_sum = 0;         // order length of the final group
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<CaseOutcome> cases;  // ordered by index
  std::uint64_t failures = 0;
  bool length_bound_holds = true;
  std::optional<std::uint64_t> sum_exceeds_witness;  // first case with sum of l_{i,n} > n

  bool pass() const { return failures == 0; }
};

// The random case drawn for a given index; independent of thread count.
DimSeq campaign_case(const CampaignConfig& config, std::uint64_t index);

CampaignResult run_campaign(const CampaignConfig& config);

// The suffix (d_{n-L}, ..., d_{n-1}) reproducing levels 1..L.
DimSeq reproducer(const DimSeq& d, int level);

/// Entry point shared by the executable and the tests; never calls exit().
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trcalc
