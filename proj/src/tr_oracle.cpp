#include "trcalc/tr_oracle.hpp"

#include <random>

namespace trcalc {

namespace {

Hom restriction_h(int p, int j, int r) {
  IntMatrix m(1, 1);
  m(0, 0) = pow_int(p, r - 1);
  return Hom(PGroup::cyclic(p, j), PGroup::cyclic(p, j - 1), std::move(m));
}

// phi_j: Z/p^{j-1} -> Z/p^j, 1 -> p^{1-r}, for r <= 0.
Hom phi(int p, int j, const Integer& r) {
  IntMatrix m(1, 1);
  const Integer shift = 1 - r;
  if (shift < j) m(0, 0) = pow_int(p, to_int(shift));
  return Hom(PGroup::cyclic(p, j - 1), PGroup::cyclic(p, j), std::move(m));
}

Hom twist(const Hom& h, std::mt19937_64& rng) {
  const int p = h.source().p();
  IntMatrix m = h.entries();
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  for (std::size_t row = 0; row < m.rows(); ++row) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::int64_t u = dist(rng);
      while (u % p == 0) ++u;
      m(row, c) *= u;
    }
  }
  return Hom(h.source(), h.target(), std::move(m)).reduced();
}

bool is_injective(const Hom& f) { return kernel(f).group.is_trivial(); }

bool is_isomorphism(const Hom& f) {
  return is_injective(f) && f.source().order_length() == f.target().order_length();
}

// (a, b): S -> A + B
Hom pair_map(const Hom& a, const Hom& b) {
  std::vector<int> lengths = a.target().lengths();
  lengths.insert(lengths.end(), b.target().lengths().begin(), b.target().lengths().end());
  return Hom(a.source(), PGroup(a.source().p(), lengths), IntMatrix::vconcat(a.entries(), b.entries()));
}

}  // namespace

std::vector<OracleLevel> oracle_tower(const DimSeq& d, const OracleOptions& options) {
  const int n = d.n();
  const int p = d.p;
  if (n < 1) throw std::invalid_argument("oracle_tower: need at least one dimension");
  std::mt19937_64 rng(options.unit_twist_seed.value_or(0));

  std::vector<OracleLevel> levels;
  {
    OracleLevel first;
    first.j = 1;
    first.r = r_value(1, d.for_level(1));
    if (d.for_level(1) >= 0) {
      first.group = PGroup::cyclic(p, 1);
      first.gamma_hat = Hom(first.group, PGroup::cyclic(p, 1), IntMatrix{{1}});
    } else {
      first.group = PGroup::trivial(p);
      first.gamma_hat = Hom::zero(first.group, PGroup::cyclic(p, 1));
    }
    if (options.unit_twist_seed) first.gamma_hat = twist(first.gamma_hat, rng);
    levels.push_back(std::move(first));
  }

  for (int j = 2; j <= n; ++j) {
    const OracleLevel& prev = levels.back();
    OracleLevel level;
    level.j = j;
    level.r = r_value(j, d.for_level(j));
    if (level.r >= 1) {
      PullbackResult pb = pullback(restriction_h(p, j, to_int(level.r)), prev.gamma_hat);
      level.group = pb.group;
      level.gamma_hat = pb.projA;
      level.restriction = pb.projB;
      level.raw = std::move(pb);
    } else {
      level.group = prev.group;
      level.gamma_hat = compose(prev.gamma_hat, phi(p, j, level.r));
      level.restriction = Hom::identity(prev.group);
    }
    if (options.unit_twist_seed) level.gamma_hat = twist(level.gamma_hat, rng);
    levels.push_back(std::move(level));
  }
  return levels;
}

CrossCheckReport cross_check(const DimSeq& d) {
  CrossCheckReport report;
  report.input = d;
  const TRTower t = tower(d);
  const std::vector<OracleLevel> o = oracle_tower(d);
  const int p = d.p;

  for (int j = 1; j <= d.n(); ++j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    const LevelState& state = t.levels[idx];
    LevelCheck c;
    c.j = j;
    c.recursion_group = t.groups[idx];
    c.oracle_group = o[idx].group;
    c.groups_match = is_isomorphic(c.recursion_group, c.oracle_group);
    c.recursion_gamma_kernel = kernel(t.gamma_hat[idx]).group;
    c.oracle_gamma_kernel = kernel(o[idx].gamma_hat).group;
    c.gamma_kernels_match = is_isomorphic(c.recursion_gamma_kernel, c.oracle_gamma_kernel);

    if (j == 1) {
      c.square_commutes = true;
      c.embedding_ok = true;
    } else {
      const Hom& R = t.restrictions[idx - 1];
      const Hom& gh = t.gamma_hat[idx];
      const Hom& gh_prev = t.gamma_hat[idx - 1];
      if (state.r >= 1) {
        const Hom rh = restriction_h(p, j, to_int(state.r));
        c.square_commutes = compose(gh, rh) == compose(R, gh_prev);
        const PullbackResult expected = pullback(rh, gh_prev);
        c.embedding_ok = is_injective(pair_map(gh, R)) &&
                         state.raw_group().order_length() == expected.group.order_length();
      } else {
        c.square_commutes = gh == compose(compose(R, gh_prev), phi(p, j, state.r));
        c.embedding_ok = is_isomorphism(R);
      }
    }
    if (!c.ok() && !report.first_divergent_level) report.first_divergent_level = j;
    report.levels.push_back(std::move(c));
  }
  return report;
}

}  // namespace trcalc
