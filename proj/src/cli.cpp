#include "trcalc/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "trcalc/norm_restriction.hpp"
#include "trcalc/report.hpp"
#include "trcalc/tr_oracle.hpp"
#include "trcalc/tr_recursion.hpp"

namespace trcalc {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

Integer parse_big(const std::string& text, const std::string& what) {
  try {
    return parse_integer(trim(text));
  } catch (const std::invalid_argument&) {
    throw UsageError(what + ": '" + text + "' is not an integer");
  }
}

long long parse_ll(const std::string& text, const std::string& what) {
  const Integer v = parse_big(text, what);
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    throw UsageError(what + ": '" + text + "' is out of range");
  }
  return static_cast<long long>(v);
}

std::pair<long long, long long> parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(what + ": expected a..b, got '" + text + "'");
  const long long a = parse_ll(text.substr(0, dots), what);
  const long long b = parse_ll(text.substr(dots + 2), what);
  if (a > b) throw UsageError(what + ": empty range '" + text + "'");
  return {a, b};
}

int parse_prime(const std::string& text) {
  const long long p = parse_ll(text, "prime");
  if (p > std::numeric_limits<int>::max() || !is_prime(p)) throw UsageError("'" + text + "' is not a prime");
  return static_cast<int>(p);
}

// CLI11 would read "-4..4" or "-1,2" as an option name, so values of these
// options are glued to their flag before parsing.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> value_flags{"--dims", "--range", "--shift", "--degree", "--window", "--rep"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = std::find(value_flags.begin(), value_flags.end(), args[i]) != value_flags.end();
    if (takes_value && i + 1 < args.size() && !args[i + 1].empty() && args[i + 1][0] == '-' &&
        args[i + 1].rfind("--", 0) != 0) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_file);
  if (!f) throw UsageError("cannot open '" + out_file + "' for writing");
  f << text;
}

unsigned thread_count(unsigned requested) {
  unsigned n = requested;
  if (n == 0) {
    n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TRCALC_THREADS")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
  }
  return std::max(1u, n);
}

std::string dims_text(const std::vector<Integer>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + dims[i].str();
  return out + ")";
}

json dims_json(const std::vector<Integer>& dims) {
  json a = json::array();
  for (const auto& d : dims) a.push_back(d.str());
  return a;
}

}  // namespace

DimSeq campaign_case(const CampaignConfig& config, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> pick(0, config.primes.size() - 1);
  std::uniform_int_distribution<int> level(1, config.max_n);
  std::uniform_int_distribution<long long> value(config.lo, config.hi);
  DimSeq d;
  d.p = config.primes[pick(rng)];
  const int n = level(rng);
  for (int k = 0; k < n; ++k) d.dims.emplace_back(value(rng));
  return d;
}

DimSeq reproducer(const DimSeq& d, int level) {
  DimSeq out;
  out.p = d.p;
  out.dims.assign(d.dims.end() - level, d.dims.end());
  return out;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.cases > 0 && (config.primes.empty() || config.max_n < 1)) {
    throw std::invalid_argument("campaign needs at least one prime and max_n >= 1");
  }
  CampaignResult result;
  result.config = config;
  result.cases.resize(config.cases);

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < config.cases; i = next++) {
      CaseOutcome c;
      c.index = i;
      c.dims = campaign_case(config, i);
      const TRTower t = tower(c.dims);
      const CrossCheckReport rep = cross_check(c.dims);
      c.pass = rep.pass();
      c.first_divergent_level = rep.first_divergent_level;
      c.groups_match = std::all_of(rep.levels.begin(), rep.levels.end(), [](const LevelCheck& l) { return l.groups_match; });
      for (const auto& s : t.levels) {
        for (const auto& x : s.summands) {
          c.max_length = std::max(c.max_length, x.length);
          if (x.length > s.j) c.length_bound = false;
        }
      }
      c.final_sum = t.final_group().order_length();
      result.cases[i] = std::move(c);
    }
  };
  const unsigned threads = std::min<std::uint64_t>(thread_count(config.threads), std::max<std::uint64_t>(1, config.cases));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& c : result.cases) {
    if (!c.pass) ++result.failures;
    if (!c.length_bound) result.length_bound_holds = false;
    if (!result.sum_exceeds_witness && c.final_sum > c.dims.n()) result.sum_exceeds_witness = c.index;
  }
  return result;
}

namespace {

DimSeq read_dims(int p, int n, const std::string& rep, const std::string& dims, bool have_n) {
  if (!rep.empty() && !dims.empty()) throw UsageError("give either --rep or --dims, not both");
  if (rep.empty() && dims.empty()) throw UsageError("one of --rep or --dims is required");
  if (!rep.empty()) {
    if (!have_n) throw UsageError("--rep needs -n");
    VirtualRep a;
    try {
      a = parse_rep(rep);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--rep: ") + e.what());
    }
    return dim_sequence(a, p, n);
  }
  DimSeq d;
  d.p = p;
  for (const auto& item : split(dims, ',')) d.dims.push_back(parse_big(item, "--dims"));
  if (d.dims.empty()) throw UsageError("--dims is empty");
  if (have_n && d.n() != n) {
    throw UsageError("--dims has " + std::to_string(d.n()) + " entries but -n is " + std::to_string(n));
  }
  return d;
}

int cmd_compute(int p_raw, int n, bool have_n, const std::string& rep, const std::string& dims, bool as_json,
                const std::string& out_file, std::ostream& out) {
  const int p = parse_prime(std::to_string(p_raw));
  if (have_n && n < 1) throw UsageError("-n must be >= 1");
  const DimSeq d = read_dims(p, n, rep, dims, have_n);
  const TowerReport report = make_report(tower(d));
  emit(as_json ? to_json(report).dump(2) + "\n" : render_text(report), out_file, out);
  return kExitOk;
}

int cmd_check(const CampaignConfig& config, bool as_json, const std::string& out_file, std::ostream& out) {
  const CampaignResult res = run_campaign(config);
  std::ostringstream text;
  if (as_json) {
    json failures = json::array();
    for (const auto& c : res.cases) {
      if (c.pass) continue;
      const DimSeq small = reproducer(c.dims, *c.first_divergent_level);
      failures.push_back({{"case", std::to_string(c.index)},
                          {"prime", std::to_string(c.dims.p)},
                          {"n", std::to_string(c.dims.n())},
                          {"dims", dims_json(c.dims.dims)},
                          {"firstDivergentLevel", std::to_string(*c.first_divergent_level)},
                          {"reproducer", {{"prime", std::to_string(small.p)}, {"dims", dims_json(small.dims)}}}});
    }
    json witness = nullptr;
    if (res.sum_exceeds_witness) {
      const auto& c = res.cases[*res.sum_exceeds_witness];
      witness = {{"case", std::to_string(c.index)},
                 {"prime", std::to_string(c.dims.p)},
                 {"dims", dims_json(c.dims.dims)},
                 {"finalLength", std::to_string(c.final_sum)}};
    }
    json primes = json::array();
    for (int p : config.primes) primes.push_back(std::to_string(p));
    json doc = {{"config",
                 {{"primes", primes},
                  {"maxN", std::to_string(config.max_n)},
                  {"range", std::to_string(config.lo) + ".." + std::to_string(config.hi)},
                  {"cases", std::to_string(config.cases)},
                  {"seed", std::to_string(config.seed)}}},
                {"cases", std::to_string(res.cases.size())},
                {"passed", std::to_string(res.cases.size() - res.failures)},
                {"failed", std::to_string(res.failures)},
                {"pass", res.pass()},
                {"lengthBoundHolds", res.length_bound_holds},
                {"sumExceedsLevel", witness},
                {"failures", failures}};
    text << doc.dump(2) << "\n";
  } else {
    text << "cases " << res.cases.size() << ", passed " << res.cases.size() - res.failures << ", failed "
         << res.failures << "\n";
    for (const auto& c : res.cases) {
      if (c.pass) continue;
      const DimSeq small = reproducer(c.dims, *c.first_divergent_level);
      text << "  case " << c.index << ": p = " << c.dims.p << ", dims " << dims_text(c.dims.dims)
           << " diverges at level " << *c.first_divergent_level << "; reproducer dims " << dims_text(small.dims)
           << "\n";
    }
    text << "length bound l <= j: " << (res.length_bound_holds ? "holds" : "VIOLATED") << "\n";
    if (res.sum_exceeds_witness) {
      const auto& c = res.cases[*res.sum_exceeds_witness];
      text << "total length above n: case " << c.index << ", p = " << c.dims.p << ", dims "
           << dims_text(c.dims.dims) << " has length " << c.final_sum << " > " << c.dims.n() << "\n";
    }
    text << (res.pass() ? "PASS" : "FAIL") << "\n";
  }
  emit(text.str(), out_file, out);
  return res.pass() ? kExitOk : kExitDivergence;
}

std::string cyclic_name(int k) {
  if (k == 0) return "0";
  if (k == 1) return "Z/p";
  return "Z/p^" + std::to_string(k);
}

int cmd_ss(int n, long long shift, const std::string& variant_text, long long degree, const std::string& window_text,
           bool as_json, std::ostream& out, std::ostream& err) {
  if (n < 1) throw UsageError("-n must be >= 1");
  if (shift % 2 != 0) throw UsageError("--shift must be even");
  const auto variant = parse_variant(variant_text);
  if (!variant) throw UsageError("--variant must be tate, orbit or fixed");

  SWindow window;
  if (!window_text.empty()) {
    const auto [a, b] = parse_range(window_text, "--window");
    window = {a, b};
  } else if (auto need = required_window(n, shift, *variant, degree)) {
    window = {need->s_min - 2 * n, need->s_max + 2 * n};
  } else {
    window = {degree - 2 * n, degree + 2 * n};
  }

  SSResult res;
  try {
    res = ss_window(n, shift, *variant, window, degree);
  } catch (const WindowTooSmall& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const int expected = closed_form_length(n, shift, *variant, degree);
  const bool match = expected == res.rank_einf;

  if (as_json) {
    json cells = json::array();
    for (const auto& c : res.cells) {
      cells.push_back({{"s", std::to_string(c.s)},
                       {"t", std::to_string(c.t)},
                       {"e2", std::to_string(c.e2)},
                       {"einf", std::to_string(c.einf)}});
    }
    json doc = {{"n", std::to_string(n)},
                {"variant", std::string(to_string(*variant))},
                {"shift", std::to_string(shift)},
                {"degree", std::to_string(degree)},
                {"window", {std::to_string(window.s_min), std::to_string(window.s_max)}},
                {"rankE2", std::to_string(res.rank_e2)},
                {"rankEinf", std::to_string(res.rank_einf)},
                {"closedFormLength", std::to_string(expected)},
                {"matches", match},
                {"cells", cells}};
    out << doc.dump(2) << "\n";
  } else {
    out << "n = " << n << ", variant " << to_string(*variant) << ", shift " << shift << ", total degree " << degree
        << ", window s in [" << window.s_min << ", " << window.s_max << "]\n";
    out << std::setw(6) << "s" << std::setw(6) << "t" << std::setw(5) << "E2" << std::setw(6) << "Einf" << "\n";
    for (const auto& c : res.cells) {
      if (c.e2 == 0) continue;
      out << std::setw(6) << c.s << std::setw(6) << c.t << std::setw(5) << c.e2 << std::setw(6) << c.einf << "\n";
    }
    out << "rank E2 " << res.rank_e2 << ", rank Einf " << res.rank_einf << "\n";
    if (match) {
      out << "matches " << cyclic_name(expected) << "\n";
    } else {
      out << "MISMATCH: closed form gives " << cyclic_name(expected) << "\n";
    }
  }
  return match ? kExitOk : kExitDivergence;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact TR-group towers of the prime field, by recursion and by explicit pullbacks", "trcalc"};
  app.require_subcommand(1);

  int p = 2, n = 0;
  std::string rep, dims, out_file;
  bool as_json = false;
  auto* compute = app.add_subcommand("compute", "Compute the tower for one dimension sequence");
  compute->add_option("-p,--prime", p, "Prime")->required();
  auto* n_opt = compute->add_option("-n,--level", n, "Level n");
  compute->add_option("--rep", rep, "Virtual representation, e.g. \"3 - 2t^5\"");
  compute->add_option("--dims", dims, "Dimensions |a|,|a'|,...,|a^(n-1)|");
  compute->add_flag("--json", as_json, "JSON output");
  compute->add_option("--out", out_file, "Write output to a file");

  std::string primes_text = "2,3,5", range_text = "-4..4";
  int max_n = 6;
  std::uint64_t cases = 1000, seed = 7;
  auto* check = app.add_subcommand("check", "Cross-check recursion against the pullback oracle on random cases");
  check->add_option("--primes", primes_text, "Comma-separated primes");
  check->add_option("--max-n", max_n, "Largest level");
  check->add_option("--range", range_text, "Dimension range a..b");
  check->add_option("--cases", cases, "Number of cases");
  check->add_option("--seed", seed, "Campaign seed");
  check->add_flag("--json", as_json, "JSON output");
  check->add_option("--out", out_file, "Write output to a file");

  int ss_n = 1;
  std::string shift_text = "0", degree_text = "0", window_text, variant_text = "tate";
  auto* ss = app.add_subcommand("ss", "Spectral-sequence rank count in one total degree");
  ss->add_option("-n,--level", ss_n, "Level n")->required();
  ss->add_option("--variant", variant_text, "tate, orbit or fixed");
  ss->add_option("--shift", shift_text, "Degree shift -2|a| (even)");
  ss->add_option("--degree", degree_text, "Total degree");
  ss->add_option("--window", window_text, "s-window a..b");
  ss->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> args = glue_negative_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(p, n, n_opt->count() > 0, rep, dims, as_json, out_file, out);
    if (*check) {
      CampaignConfig config;
      config.primes.clear();
      for (const auto& item : split(primes_text, ',')) config.primes.push_back(parse_prime(item));
      if (config.primes.empty()) throw UsageError("--primes is empty");
      if (max_n < 1) throw UsageError("--max-n must be >= 1");
      std::tie(config.lo, config.hi) = parse_range(range_text, "--range");
      config.max_n = max_n;
      config.cases = cases;
      config.seed = seed;
      return cmd_check(config, as_json, out_file, out);
    }
    if (*ss) {
      return cmd_ss(ss_n, parse_ll(shift_text, "--shift"), variant_text, parse_ll(degree_text, "--degree"),
                    window_text, as_json, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trcalc
