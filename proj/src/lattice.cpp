#include "slidescreen/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <optional>

namespace slidescreen {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

namespace {

// 128-bit checked helpers for the internal workspaces (Bareiss minors and the
// Smith elimination both pass the 64-bit range on inputs whose results fit).
using i128 = __int128;

i128 add128(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow (128-bit)");
  return r;
}

i128 sub128(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow (128-bit)");
  return r;
}

i128 mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow (128-bit)");
  return r;
}

i128 abs128(i128 v) { return v < 0 ? sub128(0, v) : v; }

std::int64_t narrow64(i128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError(what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw DimensionError("matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  if (cols == 0) throw DimensionError("matrix needs at least one column");
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  return a_[r * cols_ + c];
}

void IntMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  a_[r * cols_ + c] = v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.set(r, c, checked_neg(at(r, c)));
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    rows[r].resize(cols_);
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = at(r, c);
  }
  return rows;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[a * cols_ + c], a_[b * cols_ + c]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + a], a_[r * cols_ + b]);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) a_[r * cols_ + c] = checked_neg(a_[r * cols_ + c]);
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, std::int64_t k) {
  for (std::size_t c = 0; c < cols_; ++c)
    a_[a * cols_ + c] = checked_add(a_[a * cols_ + c], checked_mul(k, a_[b * cols_ + c]));
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, std::int64_t k) {
  for (std::size_t r = 0; r < rows_; ++r)
    a_[r * cols_ + a] = checked_add(a_[r * cols_ + a], checked_mul(k, a_[r * cols_ + b]));
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      i128 s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        s = add128(s, mul128(a.at(i, k), b.at(k, j)));
      r.set(i, j, narrow64(s, "integer overflow in matrix product"));
    }
  return r;
}

std::vector<std::int64_t> multiply(const IntMatrix& a, const std::vector<std::int64_t>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  std::vector<std::int64_t> r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a.at(i, k), x[k]));
    r[i] = s;
  }
  return r;
}

std::int64_t determinant(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  // Bareiss elimination; intermediates are exact minors, which can pass the
  // 64-bit range even when the determinant itself does not.
  std::vector<i128> w(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) w[r * n + c] = a.at(r, c);
  int sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && w[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(w[k * n + c], w[piv * n + c]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        // division by the previous pivot is exact
        w[i * n + j] =
            sub128(mul128(w[i * n + j], w[k * n + k]), mul128(w[i * n + k], w[k * n + j])) / prev;
      }
    for (std::size_t i = k + 1; i < n; ++i) w[i * n + k] = 0;
    prev = w[k * n + k];
  }
  const i128 det = sign < 0 ? sub128(0, w[n * n - 1]) : w[n * n - 1];
  return narrow64(det, "determinant exceeds the 64-bit range");
}

bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) return false;
  const std::int64_t d = determinant(a);
  return d == 1 || d == -1;
}

namespace {

// Dense 128-bit workspace for the Smith elimination.  The elimination can
// swell past 64 bits even when input and output are tiny; the final
// decomposition is narrowed (checked) back to 64-bit storage.
struct Work {
  std::size_t rows, cols;
  std::vector<i128> a;

  Work(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  static Work from(const IntMatrix& m) {
    Work w(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) w.at(r, c) = m.at(r, c);
    return w;
  }

  static Work identity(std::size_t n) {
    Work w(n, n);
    for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 1;
    return w;
  }

  i128& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  i128 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  void swap_rows(std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(x, c), at(y, c));
  }
  void swap_cols(std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, x), at(r, y));
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols; ++c) at(r, c) = sub128(0, at(r, c));
  }
  void add_row_multiple(std::size_t x, std::size_t y, i128 k) {
    for (std::size_t c = 0; c < cols; ++c) at(x, c) = add128(at(x, c), mul128(k, at(y, c)));
  }
  void add_col_multiple(std::size_t x, std::size_t y, i128 k) {
    for (std::size_t r = 0; r < rows; ++r) at(r, x) = add128(at(r, x), mul128(k, at(r, y)));
  }

  IntMatrix narrowed(const char* what) const {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, narrow64(at(r, c), what));
    return m;
  }
};

// Quotient with remainder in [-|p|/2, |p|/2): short Euclid chains.
i128 centered_quotient(i128 d, i128 p) {
  i128 q = d / p;
  const i128 r = d - q * p;
  const i128 pa = abs128(p);
  if (add128(r, r) > pa)
    q += (p > 0 ? 1 : -1);
  else if (add128(r, r) <= -pa)
    q -= (p > 0 ? 1 : -1);
  return q;
}

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Pivot {
  std::size_t row, col;
};

// Nonzero entry of minimal absolute value in the trailing submatrix starting
// at (t,t); ties broken by lowest (row, col) lexicographic.
std::optional<Pivot> find_pivot(const Work& d, std::size_t t) {
  std::optional<Pivot> best;
  i128 best_abs = 0;
  for (std::size_t r = t; r < d.rows; ++r)
    for (std::size_t c = t; c < d.cols; ++c) {
      const i128 v = d.at(r, c);
      if (v == 0) continue;
      const i128 av = abs128(v);
      if (!best || av < best_abs) {
        best = Pivot{r, c};
        best_abs = av;
      }
    }
  return best;
}

i128 row_dot(const Work& m, std::size_t x, std::size_t y) {
  i128 s = 0;
  for (std::size_t c = 0; c < m.cols; ++c) s = add128(s, mul128(m.at(x, c), m.at(y, c)));
  return s;
}

i128 col_dot(const Work& m, std::size_t x, std::size_t y) {
  i128 s = 0;
  for (std::size_t r = 0; r < m.rows; ++r) s = add128(s, mul128(m.at(r, x), m.at(r, y)));
  return s;
}

// The pair (U, V) is determined only up to X U, V Y with X D Y = D.  The
// elimination can leave both transforms far larger than necessary, so walk
// back down the gauge orbit with the legal paired moves
//   U.row_i += s*ka*U.row_j   together with   V.col_j -= s*mu*V.col_i
// (and the mirrored V-side family), where ka*d_j = mu*d_i.  D never changes.
// Minimizing one side's norm alone can stall the other, so passes run with
// V-only, then U-only, then joint weights.
void gauge_reduce(const Work& d, Work& u, Work& v) {
  const std::size_t k = std::min(d.rows, d.cols);
  const auto diag = [&](std::size_t i) -> i128 { return i < k ? d.at(i, i) : i128{0}; };

  const auto pass = [&](bool count_u, bool count_v) {
    bool changed = false;

    // family A: mix rows of U, compensated on columns of V
    for (std::size_t i = 0; i < u.rows; ++i)
      for (std::size_t j = 0; j < u.rows; ++j) {
        if (i == j) continue;
        const i128 di = diag(i), dj = diag(j);
        i128 ka, mu;
        if (dj == 0) {
          ka = 1;
          mu = 0;
        } else if (di == 0) {
          continue;
        } else {
          const i128 g = gcd128(di, dj);
          ka = di / g;
          mu = dj / g;
        }
        i128 lin = 0, quad = 0;
        if (count_u) {
          lin = mul128(ka, row_dot(u, i, j));
          quad = mul128(mul128(ka, ka), row_dot(u, j, j));
        }
        if (count_v && mu != 0) {
          lin = sub128(lin, mul128(mu, col_dot(v, j, i)));
          quad = add128(quad, mul128(mul128(mu, mu), col_dot(v, i, i)));
        }
        if (quad == 0) continue;
        const i128 s = sub128(0, centered_quotient(lin, quad));
        if (s == 0) continue;
        const i128 delta = add128(mul128(add128(lin, lin), s), mul128(mul128(s, s), quad));
        if (delta >= 0) continue;
        u.add_row_multiple(i, j, mul128(s, ka));
        if (mu != 0) v.add_col_multiple(j, i, sub128(0, mul128(s, mu)));
        changed = true;
      }

    // family B: mix columns of V, compensated on rows of U
    for (std::size_t i = 0; i < v.cols; ++i)
      for (std::size_t j = 0; j < v.cols; ++j) {
        if (i == j) continue;
        const i128 di = diag(i), dj = diag(j);
        i128 ka, mu;
        if (dj == 0) {
          ka = 1;
          mu = 0;
        } else if (di == 0) {
          continue;
        } else {
          const i128 g = gcd128(di, dj);
          ka = di / g;
          mu = dj / g;
        }
        i128 lin = 0, quad = 0;
        if (count_v) {
          lin = mul128(ka, col_dot(v, i, j));
          quad = mul128(mul128(ka, ka), col_dot(v, j, j));
        }
        if (count_u && mu != 0) {
          lin = sub128(lin, mul128(mu, row_dot(u, j, i)));
          quad = add128(quad, mul128(mul128(mu, mu), row_dot(u, i, i)));
        }
        if (quad == 0) continue;
        const i128 s = sub128(0, centered_quotient(lin, quad));
        if (s == 0) continue;
        const i128 delta = add128(mul128(add128(lin, lin), s), mul128(mul128(s, s), quad));
        if (delta >= 0) continue;
        v.add_col_multiple(i, j, mul128(s, ka));
        if (mu != 0) u.add_row_multiple(j, i, sub128(0, mul128(s, mu)));
        changed = true;
      }
    return changed;
  };

  // Pass counts are capped: every move keeps U*A*V = D exact, so stopping
  // early only costs size, never correctness.
  const int cap = 64 + 16 * static_cast<int>(std::max(u.rows, v.cols));
  for (int round = 0; round < 3; ++round) {
    for (int n = 0; n < cap && pass(false, true); ++n) {
    }
    for (int n = 0; n < cap && pass(true, false); ++n) {
    }
    for (int n = 0; n < cap && pass(true, true); ++n) {
    }
  }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Work d = Work::from(a);
  Work u = Work::identity(rows);
  Work v = Work::identity(cols);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Pivot: nonzero entry of minimal absolute value, ties by lowest
    // (row, col) lexicographic.
    const auto piv = find_pivot(d, t);
    if (!piv) break;  // trailing submatrix is zero; remaining diagonal stays 0
    if (piv->row != t) {
      d.swap_rows(t, piv->row);
      u.swap_rows(t, piv->row);
    }
    if (piv->col != t) {
      d.swap_cols(t, piv->col);
      v.swap_cols(t, piv->col);
    }

    for (;;) {
      // Alternate row/column Euclid locally until both the column below and
      // the row right of the pivot are zero.  The column gcd runs to
      // completion before the row is touched, so row clearing causes no
      // fill-in.
      for (;;) {
        for (;;) {
          bool cleared = true;
          for (std::size_t i = t + 1; i < rows; ++i) {
            if (d.at(i, t) == 0) continue;
            const i128 q = centered_quotient(d.at(i, t), d.at(t, t));
            if (q != 0) {
              d.add_row_multiple(i, t, sub128(0, q));
              u.add_row_multiple(i, t, sub128(0, q));
            }
            if (d.at(i, t) != 0) cleared = false;
          }
          if (cleared) break;
          // a remainder beat the pivot; promote the smallest column entry
          std::size_t best = t;
          for (std::size_t i = t; i < rows; ++i) {
            const i128 cur = d.at(i, t), ref = d.at(best, t);
            if (cur != 0 && (ref == 0 || abs128(cur) < abs128(ref))) best = i;
          }
          if (best != t) {
            d.swap_rows(t, best);
            u.swap_rows(t, best);
          }
        }

        // Column is (pivot, 0, ..., 0); reduce the row with column ops.
        bool row_residue = false;
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d.at(t, j) == 0) continue;
          const i128 q = centered_quotient(d.at(t, j), d.at(t, t));
          if (q != 0) {
            d.add_col_multiple(j, t, sub128(0, q));
            v.add_col_multiple(j, t, sub128(0, q));
          }
          if (d.at(t, j) != 0) row_residue = true;
        }
        if (!row_residue) break;
        std::size_t best = t;
        for (std::size_t j = t; j < cols; ++j) {
          const i128 cur = d.at(t, j), ref = d.at(t, best);
          if (cur != 0 && (ref == 0 || abs128(cur) < abs128(ref))) best = j;
        }
        if (best != t) {
          d.swap_cols(t, best);
          v.swap_cols(t, best);
        }
      }

      // Pivot must divide the whole trailing submatrix for the divisibility
      // chain; if not, pull the offending row up and reduce again.
      bool fixed_up = false;
      for (std::size_t i = t + 1; i < rows && !fixed_up; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed_up; ++j)
          if (d.at(i, j) % d.at(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed_up = true;
          }
      if (!fixed_up) break;
    }
  }

  for (std::size_t t = 0; t < steps; ++t)
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }

  gauge_reduce(d, u, v);

  const char* range = "smith normal form result exceeds the 64-bit range";
  return SmithDecomposition{u.narrowed(range), d.narrowed(range), v.narrowed(range), rows, cols};
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("cokernel invariants need a square matrix");
  const SmithDecomposition snf = smith_normal_form(a);
  AbelianGroupInvariants inv;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::int64_t di = snf.d.at(i, i);
    if (di == 0)
      ++inv.free_rank;
    else if (di >= 2)
      inv.torsion.push_back(di);
  }
  return inv;
}

HomologyClass::HomologyClass(std::vector<std::int64_t> coords) : c_(std::move(coords)) {
  if (c_.empty() || c_.size() % 2 != 0)
    throw DimensionError("homology class needs positive even length");
}

bool HomologyClass::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

HomologyClass HomologyClass::normalized() const {
  for (std::int64_t v : c_) {
    if (v > 0) return *this;
    if (v < 0) return negated();
  }
  return *this;  // zero class
}

HomologyClass HomologyClass::negated() const {
  std::vector<std::int64_t> n(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) n[i] = checked_neg(c_[i]);
  return HomologyClass(std::move(n));
}

IntMatrix standard_symplectic_form(std::size_t genus) {
  IntMatrix j(2 * genus, 2 * genus);
  for (std::size_t g = 0; g < genus; ++g) {
    j.set(2 * g, 2 * g + 1, 1);
    j.set(2 * g + 1, 2 * g, -1);
  }
  return j;
}

std::int64_t symplectic_pairing(const HomologyClass& x, const HomologyClass& y) {
  if (x.size() != y.size()) throw DimensionError("pairing of classes of different length");
  std::int64_t s = 0;
  for (std::size_t g = 0; g < x.genus(); ++g) {
    s = checked_add(s, checked_mul(x[2 * g], y[2 * g + 1]));
    s = checked_sub(s, checked_mul(x[2 * g + 1], y[2 * g]));
  }
  return s;
}

bool is_symplectic(const IntMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw DimensionError("symplectic test needs a square matrix of even dimension");
  const IntMatrix j = standard_symplectic_form(m.rows() / 2);
  return multiply(multiply(m.transposed(), j), m) == j;
}

namespace {
std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}
}  // namespace

bool is_primitive(const HomologyClass& x) {
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < x.size(); ++i) g = std::gcd(g, abs_u64(x[i]));
  return g == 1;
}

}  // namespace slidescreen
