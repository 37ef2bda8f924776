#ifndef SLIDESCREEN_MONODROMY_HPP
#define SLIDESCREEN_MONODROMY_HPP

// Monodromies of fibered manifolds as their action on H_1 of the closed
// fiber: symplectic 2g x 2g integer matrices.  Connected sums along an
// invariant curve are block-diagonal in the (a_1, b_1, a_2, b_2, ...) basis,
// and each monodromy carries a screening form used to test which homology
// classes a surgery curve in the fiber may represent.

#include <cstdint>
#include <vector>

#include "slidescreen/lattice.hpp"

namespace slidescreen {

class FiberedMonodromy {
 public:
  /// Rejects matrices that are not 2g x 2g or do not preserve the
  /// intersection form.
  explicit FiberedMonodromy(IntMatrix action);

  std::size_t genus() const { return m_.rows() / 2; }
  const IntMatrix& matrix() const { return m_; }

  HomologyClass act(const HomologyClass& x) const;
  /// M^-1 = J^T M^T J; exact, no division.
  FiberedMonodromy inverse() const;

  friend bool operator==(const FiberedMonodromy&, const FiberedMonodromy&) = default;

 private:
  IntMatrix m_;
};

/// Genus-1 monodromy of the figure-eight knot's 0-surgery: [[2,1],[1,1]].
FiberedMonodromy make_figure_eight();

/// Genus-1 monodromy of the trefoil's 0-surgery: [[0,1],[-1,1]]; order 6.
FiberedMonodromy make_trefoil();

struct ConnectedSumDecomposition {
  std::vector<FiberedMonodromy> blocks;

  std::size_t total_genus() const;
  /// Block-diagonal assembly, block 1 coordinates first.
  FiberedMonodromy assembled() const;
};

/// Connected sum of fibered monodromies along invariant curves (the curves
/// are implicit in the block boundaries).
ConnectedSumDecomposition connected_sum(std::vector<FiberedMonodromy> parts);

/// Integer quadratic form Q(x) = x^T B x.
class QuadraticForm {
 public:
  explicit QuadraticForm(IntMatrix b);

  std::size_t genus() const { return b_.rows() / 2; }
  const IntMatrix& coefficient_matrix() const { return b_; }
  std::int64_t evaluate(const HomologyClass& x) const;

  /// Genus-1 coefficients (q_m2, q_mn, q_n2) of Q(m,n) = q_m2 m^2 + q_mn mn + q_n2 n^2.
  struct GenusOneCoefficients {
    std::int64_t m2, mn, n2;
  };
  GenusOneCoefficients genus_one_coefficients() const;

 private:
  IntMatrix b_;
};

/// Screening form of a monodromy: Q(x) = pairing(M x, x), i.e. the algebraic
/// intersection of a class with its monodromy image, B = J^T M.  For the
/// figure-eight this is -m^2 + mn + n^2, for the trefoil m^2 - mn + n^2.
/// A curve in the fiber whose surgery yields #_2(S^1 x S^2) must satisfy
/// -1 <= Q <= 1 in each block it crosses.
QuadraticForm screening_form(const FiberedMonodromy& h);

HomologyClass act(const FiberedMonodromy& h, const HomologyClass& x);

}  // namespace slidescreen

#endif  // SLIDESCREEN_MONODROMY_HPP
