#include "trcalc/pgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trcalc {

PGroup::PGroup(int p, std::vector<int> lengths) : p_(p), lengths_(std::move(lengths)) {
  if (!is_prime(p)) throw std::invalid_argument("PGroup: " + std::to_string(p) + " is not prime");
  for (int l : lengths_) {
    if (l < 0) throw std::invalid_argument("PGroup: negative cyclic length");
  }
}

PGroup PGroup::canonical() const {
  std::vector<int> out;
  for (int l : lengths_) {
    if (l > 0) out.push_back(l);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return PGroup(p_, std::move(out));
}

bool PGroup::is_canonical() const {
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] == 0) return false;
    if (i > 0 && lengths_[i] > lengths_[i - 1]) return false;
  }
  return true;
}

int PGroup::order_length() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

std::string PGroup::to_string() const {
  PGroup c = canonical();
  if (c.lengths_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.lengths_.size(); ++i) {
    if (i) out += " + ";
    out += "Z/" + std::to_string(p_);
    if (c.lengths_[i] != 1) out += "^" + std::to_string(c.lengths_[i]);
  }
  return out;
}

bool is_isomorphic(const PGroup& a, const PGroup& b) {
  if (a.p() != b.p()) throw std::invalid_argument("is_isomorphic: groups over different primes");
  return a.canonical().lengths() == b.canonical().lengths();
}

Hom::Hom(PGroup source, PGroup target, IntMatrix entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (source_.p() != target_.p()) throw HomShapeError("Hom: source and target over different primes");
  if (entries_.rows() != target_.size() || entries_.cols() != source_.size()) {
    throw HomShapeError("Hom: matrix is " + std::to_string(entries_.rows()) + "x" +
                        std::to_string(entries_.cols()) + ", expected " + std::to_string(target_.size()) +
                        "x" + std::to_string(source_.size()));
  }
  for (std::size_t j = 0; j < target_.size(); ++j) {
    const Integer mod = target_.modulus(j);
    for (std::size_t i = 0; i < source_.size(); ++i) {
      if ((entries_(j, i) * source_.modulus(i)) % mod != 0) {
        throw std::invalid_argument("Hom: entry (" + std::to_string(j) + "," + std::to_string(i) + ") = " +
                                    entries_(j, i).str() + " is not well defined from Z/p^" +
                                    std::to_string(source_.length(i)) + " to Z/p^" +
                                    std::to_string(target_.length(j)));
      }
    }
  }
}

Hom Hom::zero(const PGroup& source, const PGroup& target) {
  return Hom(source, target, IntMatrix(target.size(), source.size()));
}

Hom Hom::identity(const PGroup& g) { return Hom(g, g, IntMatrix::identity(g.size())); }

Hom Hom::reduced() const {
  IntMatrix m = entries_;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    const Integer mod = target_.modulus(j);
    for (std::size_t i = 0; i < m.cols(); ++i) m(j, i) = mod_floor(m(j, i), mod);
  }
  Hom h;
  h.source_ = source_;
  h.target_ = target_;
  h.entries_ = std::move(m);
  return h;
}

bool Hom::is_zero() const { return reduced().entries_.is_zero(); }

bool operator==(const Hom& a, const Hom& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_) return false;
  return a.reduced().entries_ == b.reduced().entries_;
}

Hom compose(const Hom& first, const Hom& second) {
  if (first.target() != second.source()) {
    throw HomShapeError("compose: target " + first.target().to_string() + " does not match source " +
                        second.source().to_string());
  }
  return Hom(first.source(), second.target(), second.entries() * first.entries()).reduced();
}

namespace {

IntMatrix diagonal_moduli(const PGroup& g) {
  IntMatrix d(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) d(i, i) = g.modulus(i);
  return d;
}

}  // namespace

KernelResult kernel(const Hom& f) {
  const PGroup& src = f.source();
  const PGroup& tgt = f.target();
  const int p = src.p();
  const std::size_t m = src.size();
  if (m == 0) {
    PGroup k = PGroup::trivial(p);
    return {k, Hom(k, src, IntMatrix(0, 0))};
  }

  // Kernel lattice L = {x : M x in diag(p^tgt) Z^k}, which contains diag(p^src) Z^m.
  IntMatrix relation = diagonal_moduli(tgt);
  for (std::size_t j = 0; j < tgt.size(); ++j) relation(j, j) = -relation(j, j);
  const IntMatrix stacked = IntMatrix::hconcat(f.entries(), relation);
  const SmithForm s1 = smith_normal_form(stacked);
  const std::size_t r1 = s1.rank();
  const IntMatrix spanning = s1.V.block(0, r1, m, stacked.cols() - r1);

  const SmithForm s2 = smith_normal_form(spanning);
  if (s2.rank() != m) throw std::logic_error("kernel: lattice is not of full rank");
  IntMatrix basis = s2.U_inv;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t row = 0; row < m; ++row) basis(row, i) *= s2.D(i, i);
  }

  // Coordinates of diag(p^src) in that basis.
  IntMatrix coords = s2.U * diagonal_moduli(src);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      if (coords(i, c) % s2.D(i, i) != 0) throw std::logic_error("kernel: non-integral coordinates");
      coords(i, c) /= s2.D(i, i);
    }
  }

  const SmithForm s3 = smith_normal_form(coords);
  const IntMatrix gens = basis * s3.U_inv;

  struct Gen {
    int length;
    std::size_t column;
  };
  std::vector<Gen> kept;
  for (std::size_t i = 0; i < m; ++i) {
    const Integer& e = s3.D(i, i);
    if (e == 1) continue;
    const int v = valuation(e, p);
    if (pow_int(p, v) != e) throw std::logic_error("kernel: invariant factor is not a power of p");
    kept.push_back({v, i});
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Gen& a, const Gen& b) { return a.length > b.length; });

  std::vector<int> lengths;
  IntMatrix incl(m, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    lengths.push_back(kept[c].length);
    for (std::size_t row = 0; row < m; ++row) {
      incl(row, c) = mod_floor(gens(row, kept[c].column), src.modulus(row));
    }
  }
  PGroup k(p, std::move(lengths));
  return {k, Hom(k, src, std::move(incl))};
}

int image_length(const Hom& f) { return f.source().order_length() - kernel(f).group.order_length(); }

PullbackResult pullback(const Hom& f, const Hom& g) {
  if (f.target() != g.target()) {
    throw HomShapeError("pullback: targets " + f.target().to_string() + " and " + g.target().to_string() +
                        " differ");
  }
  const PGroup& a = f.source();
  const PGroup& b = g.source();
  std::vector<int> lengths = a.lengths();
  lengths.insert(lengths.end(), b.lengths().begin(), b.lengths().end());
  PGroup sum(a.p(), lengths);

  IntMatrix minus_g = g.entries();
  for (std::size_t j = 0; j < minus_g.rows(); ++j) minus_g.negate_row(j);
  Hom difference(sum, f.target(), IntMatrix::hconcat(f.entries(), minus_g));

  KernelResult k = kernel(difference);
  const IntMatrix& incl = k.inclusion.entries();
  Hom projA(k.group, a, incl.block(0, 0, a.size(), incl.cols()));
  Hom projB(k.group, b, incl.block(a.size(), 0, b.size(), incl.cols()));
  return {k.group, std::move(projA), std::move(projB)};
}

namespace {

// Elements of a small group stored as mixed-radix indices.
class SmallGroup {
 public:
  explicit SmallGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    order_ = 1;
    for (auto q : moduli_) order_ *= static_cast<std::uint64_t>(q);
  }

  std::uint64_t order() const { return order_; }
  std::size_t rank() const { return moduli_.size(); }

  std::vector<std::int64_t> element(std::uint64_t index) const {
    std::vector<std::int64_t> x(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      x[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(moduli_[i]));
      index /= static_cast<std::uint64_t>(moduli_[i]);
    }
    return x;
  }

  std::uint64_t index(const std::vector<std::int64_t>& x) const {
    std::uint64_t idx = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(x[i]);
    }
    return idx;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = element(a);
    auto y = element(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % moduli_[i];
    return index(x);
  }

  std::uint64_t scale(std::uint64_t a, std::int64_t c) const {
    auto x = element(a);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * c) % moduli_[i];
    return index(x);
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::uint64_t order_ = 1;
};

std::int64_t residue(const Integer& x, std::int64_t q) {
  return static_cast<std::int64_t>(mod_floor(x, Integer(q)));
}

}  // namespace

PGroup brute_force_pullback(const Hom& f, const Hom& g) {
  if (f.target() != g.target()) throw HomShapeError("brute_force_pullback: targets differ");
  const int p = f.source().p();
  const int total = f.source().order_length() + g.source().order_length();
  if (pow_int(p, total) > kBruteForceCap) {
    throw std::length_error("brute_force_pullback: |A|*|B| = " + pow_int(p, total).str() + " exceeds " +
                            std::to_string(kBruteForceCap));
  }

  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < f.source().size(); ++i) moduli.push_back(static_cast<std::int64_t>(f.source().modulus(i)));
  for (std::size_t i = 0; i < g.source().size(); ++i) moduli.push_back(static_cast<std::int64_t>(g.source().modulus(i)));
  SmallGroup ambient(moduli);
  const std::size_t na = f.source().size();
  const PGroup& c = f.target();

  std::vector<char> in_h(ambient.order(), 0);
  std::vector<std::uint64_t> members;
  for (std::uint64_t idx = 0; idx < ambient.order(); ++idx) {
    const auto x = ambient.element(idx);
    bool equal = true;
    for (std::size_t j = 0; j < c.size() && equal; ++j) {
      const auto q = static_cast<std::int64_t>(c.modulus(j));
      std::int64_t lhs = 0, rhs = 0;
      for (std::size_t i = 0; i < na; ++i) lhs = (lhs + residue(f.entry(j, i), q) * x[i]) % q;
      for (std::size_t i = 0; i < g.source().size(); ++i) rhs = (rhs + residue(g.entry(j, i), q) * x[na + i]) % q;
      equal = lhs == rhs;
    }
    if (equal) {
      in_h[idx] = 1;
      members.push_back(idx);
    }
  }

  std::vector<char> in_c(ambient.order(), 0);
  std::vector<std::uint64_t> sub{0};
  in_c[0] = 1;
  std::vector<int> lengths;
  while (sub.size() < members.size()) {
    int best_e = -1;
    std::uint64_t best = 0;
    for (auto h : members) {
      int e = 0;
      std::uint64_t y = h;
      while (!in_c[y]) {
        y = ambient.scale(y, p);
        ++e;
      }
      if (e > best_e) {
        best_e = e;
        best = h;
      }
    }
    std::vector<std::uint64_t> grown;
    std::uint64_t multiple = 0;
    const std::int64_t steps = static_cast<std::int64_t>(pow_int(p, best_e));
    for (std::int64_t t = 0; t < steps; ++t) {
      for (auto s : sub) {
        auto z = ambient.add(s, multiple);
        if (!in_c[z]) {
          in_c[z] = 1;
          grown.push_back(z);
        }
      }
      multiple = ambient.add(multiple, best);
    }
    sub.insert(sub.end(), grown.begin(), grown.end());
    lengths.push_back(best_e);
  }
  return PGroup(p, lengths).canonical();
}

namespace {

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod_floor(old_s, m);
}

}  // namespace

CyclicDiagonalization diagonalize_to_cyclic(const Hom& f) {
  if (f.target().size() != 1) throw HomShapeError("diagonalize_to_cyclic: target is not cyclic");
  const PGroup& src = f.source();
  const int p = src.p();
  const int N = f.target().length(0);
  const Integer top = pow_int(p, N);
  const std::size_t m = src.size();

  IntMatrix basis = IntMatrix::identity(m);
  std::vector<int> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Integer x = mod_floor(f.entry(0, i), top);
    v[i] = valuation_capped(x, p, N);
    if (v[i] < N) {
      const Integer unit = x / pow_int(p, v[i]);
      basis(i, i) = mod_floor(inverse_mod(unit, top), src.modulus(i));
    }
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(v[a], src.length(a)) < std::pair(v[b], src.length(b));
  });
  std::vector<std::size_t> pivots;
  for (std::size_t j : order) {
    if (v[j] >= N) continue;
    bool eliminated = false;
    for (std::size_t i : pivots) {
      if (v[i] <= v[j] && v[i] + src.length(i) <= v[j] + src.length(j)) {
        basis.add_col_multiple(j, i, -pow_int(p, v[j] - v[i]));
        v[j] = N;
        eliminated = true;
        break;
      }
    }
    if (!eliminated) pivots.push_back(j);
  }

  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t c = 0; c < m; ++c) basis(row, c) = mod_floor(basis(row, c), src.modulus(row));
  }
  return {v, Hom(src, src, std::move(basis))};
}

Hom cyclic_valuation_hom(const PGroup& source, int N, const std::vector<int>& valuations) {
  if (valuations.size() != source.size()) throw HomShapeError("cyclic_valuation_hom: valuation count mismatch");
  IntMatrix m(1, source.size());
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (valuations[i] < N) m(0, i) = pow_int(source.p(), valuations[i]);
  }
  return Hom(source, PGroup::cyclic(source.p(), N), std::move(m));
}

}  // namespace trcalc
