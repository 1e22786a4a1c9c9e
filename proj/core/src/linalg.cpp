#include "nlat/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace nlat {

namespace {

using std::size_t;

void row_swap(IntMat& m, size_t i, size_t j) {
  for (size_t k = 0; k < m.cols(); ++k) std::swap(m(i, k), m(j, k));
}

void col_swap(IntMat& m, size_t i, size_t j) {
  for (size_t k = 0; k < m.rows(); ++k) std::swap(m(k, i), m(k, j));
}

// row_i -= q * row_j
void row_sub(IntMat& m, size_t i, size_t j, const Int& q) {
  if (q == 0) return;
  for (size_t k = 0; k < m.cols(); ++k) m(i, k) -= q * m(j, k);
}

void col_sub(IntMat& m, size_t i, size_t j, const Int& q) {
  if (q == 0) return;
  for (size_t k = 0; k < m.rows(); ++k) m(k, i) -= q * m(k, j);
}

void row_negate(IntMat& m, size_t i) {
  for (size_t k = 0; k < m.cols(); ++k) m(i, k) = -m(i, k);
}

// row_i += row_j
void row_add(IntMat& m, size_t i, size_t j) {
  for (size_t k = 0; k < m.cols(); ++k) m(i, k) += m(j, k);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
  const size_t r = m.rows(), c = m.cols();
  IntMat d = m;
  IntMat u = IntMat::identity(r);
  IntMat v = IntMat::identity(c);

  const size_t steps = std::min(r, c);
  for (size_t t = 0; t < steps; ++t) {
    // locate a nonzero entry of minimal magnitude in the trailing block
    auto find_pivot = [&]() -> std::pair<size_t, size_t> {
      size_t bi = r, bj = c;
      Int best = 0;
      for (size_t i = t; i < r; ++i)
        for (size_t j = t; j < c; ++j) {
          if (d(i, j) == 0) continue;
          Int a = boost::multiprecision::abs(d(i, j));
          if (best == 0 || a < best) { best = a; bi = i; bj = j; }
        }
      return {bi, bj};
    };

    auto [pi, pj] = find_pivot();
    if (pi == r) break;  // trailing block is zero
    if (pi != t) { row_swap(d, t, pi); row_swap(u, t, pi); }
    if (pj != t) { col_swap(d, t, pj); col_swap(v, t, pj); }

    for (bool dirty = true; dirty;) {
      dirty = false;
      // clear the pivot column by Euclidean descent
      for (size_t i = t + 1; i < r; ++i) {
        while (d(i, t) != 0) {
          Int q = d(i, t) / d(t, t);
          row_sub(d, i, t, q);
          row_sub(u, i, t, q);
          if (d(i, t) != 0) { row_swap(d, t, i); row_swap(u, t, i); dirty = true; }
        }
      }
      // clear the pivot row
      for (size_t j = t + 1; j < c; ++j) {
        while (d(t, j) != 0) {
          Int q = d(t, j) / d(t, t);
          col_sub(d, j, t, q);
          col_sub(v, j, t, q);
          if (d(t, j) != 0) { col_swap(d, t, j); col_swap(v, t, j); dirty = true; }
        }
      }
      if (dirty) continue;
      // pivot must divide every remaining entry for the divisor chain
      for (size_t i = t + 1; i < r && !dirty; ++i)
        for (size_t j = t + 1; j < c && !dirty; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_add(d, t, i);
            row_add(u, t, i);
            dirty = true;
          }
    }
    if (d(t, t) < 0) { row_negate(d, t); row_negate(u, t); }
  }
  return {u, d, v};
}

HermiteResult hermite_normal_form(const IntMat& m) {
  const size_t r = m.rows(), c = m.cols();
  IntMat h = m;
  IntMat u = IntMat::identity(r);

  size_t row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    // gcd descent within the column among rows >= row
    while (true) {
      size_t best = r;
      Int mag = 0;
      for (size_t i = row; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Int a = boost::multiprecision::abs(h(i, col));
        if (mag == 0 || a < mag) { mag = a; best = i; }
      }
      if (best == r) break;
      if (best != row) { row_swap(h, row, best); row_swap(u, row, best); }
      bool cleared = true;
      for (size_t i = row + 1; i < r; ++i) {
        if (h(i, col) == 0) continue;
        Int q = h(i, col) / h(row, col);
        row_sub(h, i, row, q);
        row_sub(u, i, row, q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) { row_negate(h, row); row_negate(u, row); }
    for (size_t i = 0; i < row; ++i) {
      Int q = floor_div(h(i, col), h(row, col));
      row_sub(h, i, row, q);
      row_sub(u, i, row, q);
    }
    ++row;
  }
  return {h, u};
}

bool is_hermite_form(const IntMat& h) {
  size_t prev_col = h.cols();
  bool seen_zero_row = false;
  bool first = true;
  for (size_t i = 0; i < h.rows(); ++i) {
    size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) { seen_zero_row = true; continue; }
    if (seen_zero_row) return false;
    if (h(i, j) <= 0) return false;
    if (!first && j <= prev_col) return false;
    for (size_t k = 0; k < i; ++k)
      if (h(k, j) < 0 || h(k, j) >= h(i, j)) return false;
    prev_col = j;
    first = false;
  }
  return true;
}

CongruenceResult congruence_diagonalize(const RatMat& g) {
  if (!g.is_square()) throw std::invalid_argument("congruence: matrix not square");
  const size_t n = g.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) throw std::invalid_argument("congruence: matrix not symmetric");

  RatMat a = g;
  RatMat p(n, n);
  for (size_t i = 0; i < n; ++i) p(i, i) = 1;

  auto swap_sym = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
    for (size_t k = 0; k < n; ++k) std::swap(p(k, i), p(k, j));
  };
  // col_i += col_j together with row_i += row_j
  auto fold_sym = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) a(i, k) += a(j, k);
    for (size_t k = 0; k < n; ++k) a(k, i) += a(k, j);
    for (size_t k = 0; k < n; ++k) p(k, i) += p(k, j);
  };
  // col_j -= f col_i with matching row operation
  auto eliminate_sym = [&](size_t i, size_t j, const Rat& f) {
    for (size_t k = 0; k < n; ++k) a(j, k) -= f * a(i, k);
    for (size_t k = 0; k < n; ++k) a(k, j) -= f * a(k, i);
    for (size_t k = 0; k < n; ++k) p(k, j) -= f * p(k, i);
  };

  for (size_t i = 0; i < n; ++i) {
    if (a(i, i) == 0) {
      size_t j = i + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_sym(i, j);
      } else {
        // all remaining diagonal entries vanish; fold in a row with a
        // nonzero off-diagonal pairing if one exists
        size_t k = i + 1;
        while (k < n && a(i, k) == 0) ++k;
        if (k == n) continue;  // null direction
        fold_sym(i, k);
      }
    }
    for (size_t j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      eliminate_sym(i, j, a(i, j) / a(i, i));
    }
  }
  return {p, a};
}

Inertia inertia(const RatMat& g) {
  auto r = congruence_diagonalize(g);
  Inertia out;
  for (size_t i = 0; i < g.rows(); ++i) {
    if (r.d(i, i) > 0) ++out.positive;
    else if (r.d(i, i) < 0) ++out.negative;
    else ++out.zero;
  }
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  const size_t r = m.rows(), c = m.cols();
  auto s = smith_normal_form(m);
  std::vector<size_t> null_cols;
  for (size_t j = 0; j < c; ++j) {
    bool in_diag = j < std::min(r, c);
    if (!in_diag || s.d(j, j) == 0) null_cols.push_back(j);
  }
  IntMat basis(null_cols.size(), c);
  for (size_t i = 0; i < null_cols.size(); ++i)
    for (size_t k = 0; k < c; ++k) basis(i, k) = s.v(k, null_cols[i]);
  if (basis.rows() == 0) return basis;
  return hermite_normal_form(basis).h;
}

Int determinant(const IntMat& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      row_swap(a, k, i);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMat inverse(const RatMat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const size_t n = m.rows();
  RatMat a = m;
  RatMat inv(n, n);
  for (size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::invalid_argument("inverse: singular matrix");
    if (piv != col)
      for (size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(col, k));
        std::swap(inv(piv, k), inv(col, k));
      }
    Rat d = a(col, col);
    for (size_t k = 0; k < n; ++k) { a(col, k) /= d; inv(col, k) /= d; }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (size_t k = 0; k < n; ++k) {
        a(i, k) -= f * a(col, k);
        inv(i, k) -= f * inv(col, k);
      }
    }
  }
  return inv;
}

}  // namespace nlat
