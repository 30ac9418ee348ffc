#include "trcalc/tr_recursion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace trcalc {

PGroup LevelState::raw_group() const {
  std::vector<int> lengths;
  lengths.reserve(summands.size());
  for (const auto& s : summands) lengths.push_back(s.length);
  return PGroup(p, std::move(lengths));
}

Hom LevelState::gamma_hat() const { return cyclic_valuation_hom(raw_group(), j, gamma_hat_valuations); }

Integer r_value(int j, const Integer& d) {
  if (j < 1) throw std::invalid_argument("r_value: level must be >= 1");
  Integer r = d + 1;
  return r < j ? r : Integer(j);
}

namespace {

// r clamped to [-j, j]; below -j every use of r saturates.
int clamped_r(const Integer& r, int j) {
  if (r < -j) return -j;
  return to_int(r);
}

void check_state(const LevelState& s) {
  for (const auto& x : s.summands) {
    if (!(0 <= x.kernel && x.kernel <= x.length && x.length <= s.j)) {
      throw std::logic_error("recursion invariant 0 <= k <= l <= j violated at level " + std::to_string(s.j));
    }
  }
}

void finish(LevelState& s) {
  s.gamma_hat_valuations.clear();
  for (const auto& x : s.summands) s.gamma_hat_valuations.push_back(s.j - x.length + x.kernel);
  check_state(s);
}

enum class Origin { First, Copied, Eta, Nu, Last };

// The level-j summands in the recursion's own order, plus where each one
// comes from in the previous level.
struct Layout {
  std::vector<Summand> summands;
  std::vector<Origin> origin;
  std::vector<int> source;   // previous position feeding this summand (-1 if none)
  std::vector<int> partner;  // for Nu: the position tau(m')
};

Layout layout(const std::vector<Summand>& prev, const TauSelection& sel, int r, int j) {
  const auto& tau = sel.tau;
  const int w = sel.w;
  Layout out;
  auto push = [&](Summand s, Origin o, int src, int partner) {
    out.summands.push_back(s);
    out.origin.push_back(o);
    out.source.push_back(src);
    out.partner.push_back(partner);
  };

  if (w == j - 1) {
    push({std::max(0, r), 0}, Origin::First, -1, -1);
  } else {
    const int first = tau[static_cast<std::size_t>(w)];
    push({std::min(j, r + prev[static_cast<std::size_t>(first)].gap()), 0}, Origin::First, first, -1);
  }
  for (int m = 1; m <= w; ++m) {
    const int t = tau[static_cast<std::size_t>(m - 1)];
    const Summand& s = prev[static_cast<std::size_t>(t)];
    push({s.length, std::min(s.length, s.kernel - r)}, Origin::Copied, t, -1);
  }
  for (int m = w + 2; m <= j - 1; ++m) {
    const int t = tau[static_cast<std::size_t>(m - 1)];
    int smallest = t;
    bool has_smaller = false;
    for (int v = w + 1; v < m; ++v) {
      const int tv = tau[static_cast<std::size_t>(v - 1)];
      if (tv < t) has_smaller = true;
      if (v == w + 1 || tv < smallest) smallest = tv;
    }
    const Summand& s = prev[static_cast<std::size_t>(t)];
    const int l = has_smaller ? s.length : s.gap() + prev[static_cast<std::size_t>(smallest)].kernel;
    // eta needs Gamma-hat to vanish on e_{tau(m)}; otherwise it is the nu generator.
    if (has_smaller && s.kernel == s.length) {
      push({l, l}, Origin::Eta, t, -1);
    } else {
      push({l, l}, Origin::Nu, t, smallest);
    }
  }
  if (w < j - 1) {
    if (prev.front().kernel != 0) throw std::logic_error("recursion invariant k_1 = 0 violated");
    push({0, 0}, Origin::Last, -1, -1);
  }
  return out;
}

}  // namespace

LevelState base_case(const Integer& d, int p) {
  if (!is_prime(p)) throw std::invalid_argument("base_case: p must be prime");
  LevelState s;
  s.p = p;
  s.j = 1;
  s.dim = d;
  s.r = r_value(1, d);
  s.summands = {{d >= 0 ? 1 : 0, 0}};
  s.position_of = {0};
  finish(s);
  return s;
}

TauSelection select_tau(const std::vector<Summand>& summands, const Integer& r) {
  std::vector<int> high, low;
  for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
    (summands[static_cast<std::size_t>(i)].kernel >= r ? high : low).push_back(i);
  }
  auto at = [&](int i) -> const Summand& { return summands[static_cast<std::size_t>(i)]; };
  std::stable_sort(high.begin(), high.end(), [&](int a, int b) { return at(a).kernel < at(b).kernel; });
  std::stable_sort(low.begin(), low.end(), [&](int a, int b) { return at(a).gap() > at(b).gap(); });
  TauSelection sel;
  sel.w = static_cast<int>(high.size());
  sel.tau = high;
  sel.tau.insert(sel.tau.end(), low.begin(), low.end());
  return sel;
}

LevelState step(const LevelState& prev, const Integer& d, int j) {
  if (prev.j != j - 1 || static_cast<int>(prev.summands.size()) != j - 1) {
    throw std::invalid_argument("step: previous state is not level " + std::to_string(j - 1));
  }
  LevelState s;
  s.p = prev.p;
  s.j = j;
  s.dim = d;
  s.r = r_value(j, d);
  const int r = clamped_r(s.r, j);
  const TauSelection sel = select_tau(prev.summands, s.r);
  s.w = sel.w;
  s.tau = sel.tau;

  const Layout lay = layout(prev.summands, sel, r, j);
  std::vector<int> order(lay.summands.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return lay.summands[static_cast<std::size_t>(a)].kernel < lay.summands[static_cast<std::size_t>(b)].kernel;
  });
  s.position_of = order;
  for (int idx : order) s.summands.push_back(lay.summands[static_cast<std::size_t>(idx)]);
  finish(s);
  return s;
}

Hom restriction_matrix(const LevelState& state, const LevelState& prev) {
  const int j = state.j;
  const int p = state.p;
  if (prev.j != j - 1) throw std::invalid_argument("restriction_matrix: states are not adjacent levels");
  const int r = clamped_r(state.r, j);
  const Layout lay = layout(prev.summands, {state.tau, state.w}, r, j);

  IntMatrix positional(prev.summands.size(), lay.summands.size());
  for (std::size_t c = 0; c < lay.summands.size(); ++c) {
    const int src = lay.source[c];
    switch (lay.origin[c]) {
      case Origin::First:
        if (src >= 0) {
          const int excess = r + prev.summands[static_cast<std::size_t>(src)].gap() - j;
          positional(static_cast<std::size_t>(src), c) = excess <= 0 ? Integer(1) : pow_int(p, excess);
        }
        break;
      case Origin::Copied:
      case Origin::Eta:
        positional(static_cast<std::size_t>(src), c) = 1;
        break;
      case Origin::Nu: {
        const auto mate = static_cast<std::size_t>(lay.partner[c]);
        positional(static_cast<std::size_t>(src), c) = -1;
        positional(mate, c) = pow_int(p, prev.summands[mate].gap() - prev.summands[static_cast<std::size_t>(src)].gap());
        break;
      }
      case Origin::Last:
        positional(0, c) = pow_int(p, prev.summands.front().gap());
        break;
    }
  }

  IntMatrix sorted(positional.rows(), positional.cols());
  for (std::size_t s = 0; s < state.position_of.size(); ++s) {
    const auto c = static_cast<std::size_t>(state.position_of[s]);
    for (std::size_t row = 0; row < positional.rows(); ++row) sorted(row, s) = positional(row, c);
  }
  return Hom(state.raw_group(), prev.raw_group(), std::move(sorted));
}

TRTower tower(const DimSeq& d) {
  const int n = d.n();
  if (n < 1) throw std::invalid_argument("tower: need at least one dimension");
  TRTower t;
  t.input = d;
  t.levels.push_back(base_case(d.for_level(1), d.p));
  for (int j = 2; j <= n; ++j) t.levels.push_back(step(t.levels.back(), d.for_level(j), j));
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    t.groups.push_back(t.levels[i].group());
    t.gamma_hat.push_back(t.levels[i].gamma_hat());
    if (i > 0) t.restrictions.push_back(restriction_matrix(t.levels[i], t.levels[i - 1]));
  }
  return t;
}

int corollary_plus(const DimSeq& d) {
  const int n = d.n();
  if (n < 1) throw PreconditionError("corollary_plus: empty dimension sequence");
  if (d.dims.front() < 0) throw PreconditionError("corollary_plus: |a| must be >= 0");
  for (std::size_t k = 1; k < d.dims.size(); ++k) {
    if (d.dims[k] > d.dims[k - 1]) throw PreconditionError("corollary_plus: dims must be non-increasing");
  }
  const auto nonneg = static_cast<int>(std::count_if(d.dims.begin(), d.dims.end(), [](const Integer& x) { return x >= 0; }));
  // Smallest m whose consumed dim is >= 0 while level m-1's is < 0.
  const int m = n - nonneg + 1;
  int L = to_int(r_value(m, d.for_level(m)));
  for (int j = m + 1; j <= n; ++j) {
    const Integer next = L + r_value(j, d.for_level(j));
    L = next < j ? to_int(next) : j;
  }
  return L;
}

int corollary_minus(const DimSeq& d) {
  if (d.n() < 1) throw PreconditionError("corollary_minus: empty dimension sequence");
  for (std::size_t k = 1; k < d.dims.size(); ++k) {
    if (d.dims[k] < d.dims[k - 1]) throw PreconditionError("corollary_minus: dims must be non-decreasing");
  }
  return static_cast<int>(std::count_if(d.dims.begin(), d.dims.end(), [](const Integer& x) { return x >= 0; }));
}

}  // namespace trcalc
