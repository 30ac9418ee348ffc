#pragma once

// Test-only helpers: random well-defined homomorphisms and an element-level
// enumerator that recovers isomorphism types by counting p^k-torsion.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "trcalc/pgroup.hpp"

namespace trcalc::testing {

inline PGroup random_group(std::mt19937_64& rng, int p, int max_summands, int max_length) {
  std::uniform_int_distribution<int> count(0, max_summands), len(0, max_length);
  std::vector<int> lengths;
  for (int i = count(rng); i > 0; --i) lengths.push_back(len(rng));
  return PGroup(p, lengths);
}

inline Hom random_hom(std::mt19937_64& rng, const PGroup& src, const PGroup& tgt) {
  std::uniform_int_distribution<long long> coeff(-50, 50);
  IntMatrix m(tgt.size(), src.size());
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      const int need = std::max(0, tgt.length(j) - src.length(i));
      m(j, i) = coeff(rng) * pow_int(src.p(), need);
    }
  }
  return Hom(src, tgt, m);
}

// Every element of g as a residue vector.
inline std::vector<std::vector<std::int64_t>> elements(const PGroup& g) {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto q = static_cast<std::int64_t>(g.modulus(i));
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : out) {
      for (std::int64_t v = 0; v < q; ++v) {
        auto y = x;
        y.push_back(v);
        next.push_back(std::move(y));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::int64_t> apply(const Hom& f, const std::vector<std::int64_t>& x) {
  std::vector<std::int64_t> y(f.target().size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    Integer acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += f.entry(j, i) * x[i];
    y[j] = static_cast<std::int64_t>(mod_floor(acc, f.target().modulus(j)));
  }
  return y;
}

// Isomorphism type of a subgroup H of `ambient`, given by a membership test:
// log_p |H[p^k]| = sum_i min(l_i, k) determines the l_i.
inline PGroup subgroup_type(const PGroup& ambient,
                            const std::function<bool(const std::vector<std::int64_t>&)>& member) {
  const int p = ambient.p();
  const auto all = elements(ambient);
  int top = 0;
  for (int l : ambient.lengths()) top = std::max(top, l);
  std::vector<int> torsion_len(static_cast<std::size_t>(top) + 1, 0);
  for (int k = 0; k <= top; ++k) {
    std::uint64_t count = 0;
    for (const auto& x : all) {
      if (!member(x)) continue;
      bool killed = true;
      for (std::size_t i = 0; i < x.size() && killed; ++i) {
        killed = (Integer(x[i]) * pow_int(p, k)) % ambient.modulus(i) == 0;
      }
      if (killed) ++count;
    }
    int len = 0;
    for (std::uint64_t c = count; c > 1; c /= static_cast<std::uint64_t>(p)) ++len;
    torsion_len[static_cast<std::size_t>(k)] = len;
  }
  std::vector<int> lengths;
  for (int k = 1; k <= top; ++k) {
    const int at_least_k = torsion_len[static_cast<std::size_t>(k)] - torsion_len[static_cast<std::size_t>(k - 1)];
    const int at_least_next = k < top ? torsion_len[static_cast<std::size_t>(k + 1)] - torsion_len[static_cast<std::size_t>(k)] : 0;
    for (int c = 0; c < at_least_k - at_least_next; ++c) lengths.push_back(k);
  }
  return PGroup(p, lengths).canonical();
}

inline PGroup brute_kernel_type(const Hom& f) {
  return subgroup_type(f.source(), [&](const std::vector<std::int64_t>& x) {
    for (auto v : apply(f, x)) {
      if (v != 0) return false;
    }
    return true;
  });
}

}  // namespace trcalc::testing
