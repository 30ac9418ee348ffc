#pragma once

// Structured tower reports: plain data, JSON (integers as decimal strings)
// and human-readable text.

#include <string>
#include <vector>

#include <json.hpp>

#include "trcalc/integer.hpp"
#include "trcalc/matrix.hpp"
#include "trcalc/tr_recursion.hpp"

namespace trcalc {

struct LevelReport {
  int j = 1;
  Integer dim;
  Integer r;
  std::vector<int> lengths;
  std::vector<int> kernels;
  std::vector<int> gamma_hat_valuations;
  IntMatrix restriction;  // previous level x this level; 0 x 0 at level 1

  friend bool operator==(const LevelReport&, const LevelReport&) = default;
};

struct TowerReport {
  int prime = 2;
  int n = 1;
  std::vector<Integer> dims;
  std::vector<LevelReport> levels;
  std::vector<int> final_group;

  friend bool operator==(const TowerReport&, const TowerReport&) = default;
};

TowerReport make_report(const TRTower& t);

nlohmann::json to_json(const TowerReport& r);
// Throws std::invalid_argument on schema violations.
TowerReport tower_report_from_json(const nlohmann::json& j);

std::string render_text(const TowerReport& r);

}  // namespace trcalc
