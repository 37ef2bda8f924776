#ifndef SLIDESCREEN_LATTICE_HPP
#define SLIDESCREEN_LATTICE_HPP

// Exact integer linear algebra over Z: dense matrices with checked 64-bit
// arithmetic, Smith normal form, cokernel invariants, the standard symplectic
// pairing and related predicates.  Everything here is immutable after
// construction and safe to share across threads.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidescreen {

// Arithmetic that would leave the int64 range throws instead of wrapping.
struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape mismatches: non-square input, odd symplectic dimension, length
// mismatch between paired vectors.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Semantically invalid values: asymmetric linking matrix, non-symplectic
// monodromy, out-of-range component index, zero class where nonzero required.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

/// Dense row-major integer matrix.  All arithmetic is checked; overflow
/// surfaces as OverflowError, never as a wrapped value.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  std::int64_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t v);

  IntMatrix transposed() const;
  IntMatrix negated() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t r);
  // row[a] += k * row[b]
  void add_row_multiple(std::size_t a, std::size_t b, std::int64_t k);
  void add_col_multiple(std::size_t a, std::size_t b, std::int64_t k);

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> multiply(const IntMatrix& a,
                                   const std::vector<std::int64_t>& x);

/// Exact determinant via fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, nonnegative,
/// each entry dividing the next, zeros last.
struct SmithDecomposition {
  IntMatrix u, d, v;
  std::size_t source_rows, source_cols;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Invariant factors of a finitely generated abelian group: Z^free_rank
/// plus Z/t for each t in torsion, t >= 2, each dividing the next.
struct AbelianGroupInvariants {
  std::vector<std::int64_t> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_free_of_rank(std::size_t n) const {
    return torsion.empty() && free_rank == n;
  }
  friend bool operator==(const AbelianGroupInvariants&,
                         const AbelianGroupInvariants&) = default;
};

/// Invariants of Z^n / A Z^n.  A must be square.
AbelianGroupInvariants cokernel_invariants(const IntMatrix& a);

/// Element of H_1 of a closed orientable surface, written in a symplectic
/// basis grouped as (a_1, b_1, a_2, b_2, ...) with a_i . b_i = +1.
class HomologyClass {
 public:
  explicit HomologyClass(std::vector<std::int64_t> coords);

  std::size_t size() const { return c_.size(); }
  std::size_t genus() const { return c_.size() / 2; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  const std::vector<std::int64_t>& coords() const { return c_; }

  bool is_zero() const;
  /// Flips sign so the first nonzero coordinate is positive.
  HomologyClass normalized() const;
  HomologyClass negated() const;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend bool operator<(const HomologyClass& x, const HomologyClass& y) {
    return x.c_ < y.c_;  // lexicographic
  }

 private:
  std::vector<std::int64_t> c_;
};

/// The standard symplectic form J as a matrix: block-diagonal copies of
/// [[0,1],[-1,0]], so e1 . e2 = +1 on each genus-1 block.
IntMatrix standard_symplectic_form(std::size_t genus);

/// x^T J y; on genus 1 this is x1*y2 - x2*y1.
std::int64_t symplectic_pairing(const HomologyClass& x, const HomologyClass& y);

/// M^T J M == J.
bool is_symplectic(const IntMatrix& m);

/// gcd of coordinates is 1; false for the zero class.
bool is_primitive(const HomologyClass& x);

}  // namespace slidescreen

#endif  // SLIDESCREEN_LATTICE_HPP
