#include "trcalc/norm_restriction.hpp"

#include <algorithm>

#include "trcalc/tr_recursion.hpp"

namespace trcalc {

namespace {

PGroup cyc(int p, int length) { return length > 0 ? PGroup::cyclic(p, length) : PGroup::trivial(p); }

// The map 1 -> value between groups that are cyclic or trivial.
Hom unit_map(const PGroup& src, const PGroup& tgt, const Integer& value) {
  IntMatrix m(tgt.size(), src.size());
  if (src.size() == 1 && tgt.size() == 1) m(0, 0) = mod_floor(value, tgt.modulus(0));
  return Hom(src, tgt, std::move(m));
}

bool exact_at(const Hom& in, const Hom& out) {
  if (!compose(in, out).is_zero()) return false;
  return kernel(out).group.order_length() == image_length(in);
}

}  // namespace

NormRestrictionRow row(int n, const Integer& dim_alpha, int p) {
  if (n < 1) throw std::invalid_argument("row: n must be >= 1");
  NormRestrictionRow out;
  out.p = p;
  out.n = n;
  out.dim_alpha = dim_alpha;
  out.r = r_value(n, dim_alpha);
  if (dim_alpha >= 0) {
    const int r = to_int(out.r);
    out.orbit = cyc(p, r);
    out.orbit_minus1 = cyc(p, r - 1);
    out.fixed = cyc(p, n);
    out.tate = cyc(p, n - 1);
    out.norm = unit_map(out.orbit, out.fixed, pow_int(p, n - r));
    out.restriction = unit_map(out.fixed, out.tate, pow_int(p, r - 1));
    out.boundary = unit_map(out.tate, out.orbit_minus1, 1);
  } else {
    out.orbit = PGroup::trivial(p);
    out.orbit_minus1 = PGroup::trivial(p);
    out.fixed = cyc(p, n - 1);
    out.tate = cyc(p, n - 1);
    out.norm = unit_map(out.orbit, out.fixed, 0);
    out.restriction = unit_map(out.fixed, out.tate, 1);
    out.boundary = unit_map(out.tate, out.orbit_minus1, 0);
  }
  return out;
}

bool row_is_exact(const NormRestrictionRow& row) {
  return exact_at(row.norm, row.restriction) && exact_at(row.restriction, row.boundary);
}

std::string_view to_string(SSVariant v) {
  switch (v) {
    case SSVariant::Tate: return "tate";
    case SSVariant::Orbit: return "orbit";
    case SSVariant::Fixed: return "fixed";
  }
  return "?";
}

std::optional<SSVariant> parse_variant(std::string_view text) {
  if (text == "tate") return SSVariant::Tate;
  if (text == "orbit") return SSVariant::Orbit;
  if (text == "fixed") return SSVariant::Fixed;
  return std::nullopt;
}

namespace {

long long floor_div2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }
bool is_even(long long x) { return x % 2 == 0; }

// Monomials u^eps t^a sigma^b sit at (-eps - 2a, 2b + shift) in the Tate
// plane.  The orbit variant keeps a <= -1 and reads s one lower.
struct Plane {
  int n;
  long long shift;
  SSVariant variant;

  bool in_region(long long a) const {
    switch (variant) {
      case SSVariant::Tate: return true;
      case SSVariant::Fixed: return a >= 0;
      case SSVariant::Orbit: return a <= -1;
    }
    return false;
  }

  long long tate_degree(long long total) const { return variant == SSVariant::Orbit ? total + 1 : total; }
  long long to_window(long long s_tate) const { return variant == SSVariant::Orbit ? s_tate - 1 : s_tate; }

  // d(u t^a sigma^b) = t^{a+n} sigma^{b+n-1}
  bool survives(int eps, long long a, long long b) const {
    if (eps == 0) return !(b - n + 1 >= 0 && in_region(a - n));
    return !in_region(a + n);
  }
};

struct Monomial {
  int eps;
  long long a;
  long long b;
};

// The unique monomial (if any) at tate-plane position s_tate in tate degree dt.
std::optional<Monomial> monomial_at(const Plane& pl, long long s_tate, long long dt) {
  for (int eps = 0; eps <= 1; ++eps) {
    const long long a2 = -eps - s_tate;
    const long long b2 = dt - s_tate - pl.shift;
    if (!is_even(a2) || !is_even(b2)) continue;
    const long long a = a2 / 2;
    const long long b = b2 / 2;
    if (b < 0 || !pl.in_region(a)) continue;
    return Monomial{eps, a, b};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SWindow> required_window(int n, long long shift, SSVariant variant, long long total_degree) {
  if (n < 1) throw std::invalid_argument("required_window: n must be >= 1");
  const Plane pl{n, shift, variant};
  const long long dt = pl.tate_degree(total_degree);
  const long long eps = ((dt - shift) % 2 + 2) % 2;
  const long long c = floor_div2(dt + eps - shift);
  // Survivors have b <= n - 2 or a <= n - 1, so this range of a covers them.
  const long long lo = -c;
  const long long hi = std::max<long long>(n, n - c) + 1;
  std::optional<SWindow> w;
  for (long long a = lo; a <= hi; ++a) {
    const long long b = a + c;
    if (b < 0 || !pl.in_region(a) || !pl.survives(static_cast<int>(eps), a, b)) continue;
    const long long s = pl.to_window(-eps - 2 * a);
    if (!w) {
      w = SWindow{s, s};
    } else {
      w->s_min = std::min(w->s_min, s);
      w->s_max = std::max(w->s_max, s);
    }
  }
  return w;
}

SSResult ss_window(int n, long long shift, SSVariant variant, SWindow window, long long total_degree) {
  if (n < 1) throw std::invalid_argument("ss_window: n must be >= 1");
  if (window.s_min > window.s_max) throw std::invalid_argument("ss_window: empty window");
  if (shift % 2 != 0) throw std::invalid_argument("ss_window: shift must be even");
  if (auto need = required_window(n, shift, variant, total_degree)) {
    if (need->s_min < window.s_min || need->s_max > window.s_max) {
      throw WindowTooSmall("window [" + std::to_string(window.s_min) + ", " + std::to_string(window.s_max) +
                               "] misses surviving classes; need at least [" + std::to_string(need->s_min) +
                               ", " + std::to_string(need->s_max) + "]",
                           *need);
    }
  }
  const Plane pl{n, shift, variant};
  const long long dt = pl.tate_degree(total_degree);
  SSResult out;
  for (long long s = window.s_min; s <= window.s_max; ++s) {
    SSCell cell{s, total_degree - s, 0, 0};
    const long long s_tate = variant == SSVariant::Orbit ? s + 1 : s;
    if (auto m = monomial_at(pl, s_tate, dt)) {
      cell.e2 = 1;
      cell.einf = pl.survives(m->eps, m->a, m->b) ? 1 : 0;
    }
    out.rank_e2 += cell.e2;
    out.rank_einf += cell.einf;
    out.cells.push_back(cell);
  }
  return out;
}

int closed_form_length(int n, long long shift, SSVariant variant, long long total_degree) {
  if (shift % 2 != 0) throw std::invalid_argument("closed_form_length: shift must be even");
  const long long alpha = -shift / 2;
  const bool even = is_even(total_degree);
  switch (variant) {
    case SSVariant::Tate:
      return even ? n - 1 : 0;
    case SSVariant::Fixed:
      return even ? row(n, alpha + total_degree / 2, 2).fixed.order_length() : 0;
    case SSVariant::Orbit:
      if (even) return row(n, alpha + total_degree / 2, 2).orbit.order_length();
      return row(n, alpha + (total_degree + 1) / 2, 2).orbit_minus1.order_length();
  }
  return 0;
}

}  // namespace trcalc
