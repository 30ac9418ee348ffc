#include "trcalc/report.hpp"

#include <sstream>

#include "trcalc/pgroup.hpp"

namespace trcalc {

using nlohmann::json;

TowerReport make_report(const TRTower& t) {
  TowerReport r;
  r.prime = t.input.p;
  r.n = t.input.n();
  r.dims = t.input.dims;
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    const LevelState& s = t.levels[i];
    LevelReport lr;
    lr.j = s.j;
    lr.dim = s.dim;
    lr.r = s.r;
    for (const auto& x : s.summands) {
      lr.lengths.push_back(x.length);
      lr.kernels.push_back(x.kernel);
    }
    lr.gamma_hat_valuations = s.gamma_hat_valuations;
    if (i > 0) lr.restriction = t.restrictions[i - 1].reduced().entries();
    r.levels.push_back(std::move(lr));
  }
  r.final_group = t.final_group().lengths();
  return r;
}

namespace {

json int_array(const std::vector<int>& xs) {
  json a = json::array();
  for (int x : xs) a.push_back(std::to_string(x));
  return a;
}

json big_array(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.str());
  return a;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw std::invalid_argument(std::string("report: missing field '") + key + "'");
  return obj.at(key);
}

Integer big_value(const json& v) {
  if (!v.is_string()) throw std::invalid_argument("report: integers must be decimal strings");
  return parse_integer(v.get<std::string>());
}

int int_value(const json& v) { return to_int(big_value(v)); }

std::vector<int> int_list(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("report: expected an array");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(int_value(x));
  return out;
}

IntMatrix matrix_value(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("report: matrix must be an array of rows");
  const std::size_t rows = v.size();
  const std::size_t cols = rows == 0 ? 0 : v.at(0).size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v.at(i).is_array() || v.at(i).size() != cols) throw std::invalid_argument("report: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = big_value(v.at(i).at(c));
  }
  return m;
}

std::string list_text(const std::vector<int>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
  return out + ")";
}

}  // namespace

json to_json(const TowerReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"j", std::to_string(l.j)},
                      {"dim", l.dim.str()},
                      {"r", l.r.str()},
                      {"lengths", int_array(l.lengths)},
                      {"kernels", int_array(l.kernels)},
                      {"gammaHatValuations", int_array(l.gamma_hat_valuations)},
                      {"restriction", matrix_json(l.restriction)}});
  }
  return {{"prime", std::to_string(r.prime)},
          {"n", std::to_string(r.n)},
          {"dims", big_array(r.dims)},
          {"levels", std::move(levels)},
          {"finalGroup", int_array(r.final_group)}};
}

TowerReport tower_report_from_json(const json& j) {
  TowerReport r;
  r.prime = int_value(field(j, "prime"));
  r.n = int_value(field(j, "n"));
  for (const auto& d : field(j, "dims")) r.dims.push_back(big_value(d));
  for (const auto& lv : field(j, "levels")) {
    LevelReport l;
    l.j = int_value(field(lv, "j"));
    l.dim = big_value(field(lv, "dim"));
    l.r = big_value(field(lv, "r"));
    l.lengths = int_list(field(lv, "lengths"));
    l.kernels = int_list(field(lv, "kernels"));
    l.gamma_hat_valuations = int_list(field(lv, "gammaHatValuations"));
    l.restriction = matrix_value(field(lv, "restriction"));
    r.levels.push_back(std::move(l));
  }
  r.final_group = int_list(field(j, "finalGroup"));
  return r;
}

std::string render_text(const TowerReport& r) {
  std::ostringstream out;
  out << "p = " << r.prime << ", n = " << r.n << ", dims (|a|, |a'|, ...) = (";
  for (std::size_t i = 0; i < r.dims.size(); ++i) out << (i ? ", " : "") << r.dims[i];
  out << ")\n";
  for (const auto& l : r.levels) {
    const PGroup g = PGroup(r.prime, l.lengths).canonical();
    out << "level " << l.j << ": dim " << l.dim << ", r = " << l.r << ", group " << g.to_string() << "\n";
    out << "  lengths " << list_text(l.lengths) << "  kernels " << list_text(l.kernels)
        << "  gamma-hat valuations " << list_text(l.gamma_hat_valuations) << "\n";
    if (l.j > 1) out << "  restriction to level " << l.j - 1 << ": " << l.restriction.to_string() << "\n";
  }
  out << "final group: " << PGroup(r.prime, r.final_group).to_string() << "\n";
  return out.str();
}

}  // namespace trcalc
