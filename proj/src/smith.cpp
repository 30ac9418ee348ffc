#include "trcalc/matrix.hpp"

namespace trcalc {

namespace {

// Row and column operations applied to the working matrix, mirrored onto
// the transforms so that D = U A V and U * U_inv = V * V_inv = I hold at
// every step.
struct Reducer {
  SmithForm s;

  explicit Reducer(const IntMatrix& a)
      : s{IntMatrix::identity(a.rows()), IntMatrix::identity(a.rows()), a,
          IntMatrix::identity(a.cols()), IntMatrix::identity(a.cols())} {}

  void swap_rows(std::size_t a, std::size_t b) {
    s.D.swap_rows(a, b);
    s.U.swap_rows(a, b);
    s.U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    s.D.swap_cols(a, b);
    s.V.swap_cols(a, b);
    s.V_inv.swap_rows(a, b);
  }
  void add_row(std::size_t a, std::size_t b, const Integer& c) {
    s.D.add_row_multiple(a, b, c);
    s.U.add_row_multiple(a, b, c);
    s.U_inv.add_col_multiple(b, a, -c);
  }
  void add_col(std::size_t a, std::size_t b, const Integer& c) {
    s.D.add_col_multiple(a, b, c);
    s.V.add_col_multiple(a, b, c);
    s.V_inv.add_row_multiple(b, a, -c);
  }
  void negate_row(std::size_t a) {
    s.D.negate_row(a);
    s.U.negate_row(a);
    s.U_inv.negate_col(a);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    const IntMatrix& d = s.D;
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < d.rows(); ++i) {
      for (std::size_t j = t; j < d.cols(); ++j) {
        if (d(i, j) == 0) continue;
        Integer m = abs(d(i, j));
        if (!found || m < best) {
          found = true;
          best = m;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run() {
    const std::size_t limit = std::min(s.D.rows(), s.D.cols());
    for (std::size_t t = 0; t < limit; ++t) {
      if (!place_pivot(t)) break;
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < s.D.rows(); ++i) {
          if (s.D(i, t) == 0) continue;
          Integer q = s.D(i, t) / s.D(t, t);
          add_row(i, t, -q);
          if (s.D(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < s.D.cols(); ++j) {
          if (s.D(t, j) == 0) continue;
          Integer q = s.D(t, j) / s.D(t, t);
          add_col(j, t, -q);
          if (s.D(t, j) != 0) dirty = true;
        }
        if (dirty) {
          place_pivot(t);
          continue;
        }
        // Divisibility chain: fold any offending row into the pivot row.
        bool fixed = false;
        for (std::size_t i = t + 1; i < s.D.rows() && !fixed; ++i) {
          for (std::size_t j = t + 1; j < s.D.cols(); ++j) {
            if (s.D(i, j) % s.D(t, t) != 0) {
              add_row(t, i, 1);
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) break;
      }
      if (s.D(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t limit = std::min(D.rows(), D.cols());
  while (r < limit && D(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  const std::size_t limit = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < limit; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  Reducer r(a);
  r.run();
  return std::move(r.s);
}

}  // namespace trcalc
