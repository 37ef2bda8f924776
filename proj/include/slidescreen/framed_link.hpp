#ifndef SLIDESCREEN_FRAMED_LINK_HPP
#define SLIDESCREEN_FRAMED_LINK_HPP

// Framed links reduced to their framing/linking matrix: diagonal entries are
// framings, off-diagonal entries pairwise linking numbers.  Handle slides act
// as unimodular congruences A -> E^T A E, so everything surgery homology can
// see survives the move.

#include <cstdint>
#include <vector>

#include "slidescreen/lattice.hpp"

namespace slidescreen {

class FramedLink {
 public:
  // Rejects non-square or asymmetric matrices.
  explicit FramedLink(IntMatrix framing_linking);

  std::size_t components() const { return a_.rows(); }
  std::int64_t framing(std::size_t i) const { return a_.at(i, i); }
  std::int64_t linking(std::size_t i, std::size_t j) const { return a_.at(i, j); }
  const IntMatrix& matrix() const { return a_; }

  friend bool operator==(const FramedLink&, const FramedLink&) = default;

 private:
  IntMatrix a_;
};

/// Slide of component `slider` over component `over`; sign +1 is the
/// orientation-coherent band (framing becomes u + v + 2 link), sign -1 the
/// reversed band.
struct SlideMove {
  std::size_t slider;
  std::size_t over;
  int sign;  // +1 or -1

  SlideMove(std::size_t slider, std::size_t over, int sign);
  SlideMove dual() const { return SlideMove(over, slider, sign); }
  SlideMove inverse() const { return SlideMove(slider, over, -sign); }

  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

struct SlideSequence {
  std::vector<SlideMove> moves;

  friend bool operator==(const SlideSequence&, const SlideSequence&) = default;
};

/// A' = E^T A E with E = I + sign * e_{over,slider}.  Component `slider` is
/// replaced in place; indices are stable across slides.
FramedLink apply_slide(const FramedLink& link, const SlideMove& move);

FramedLink apply_slides(const FramedLink& link, const SlideSequence& seq);

/// Necessary condition for surgery to yield #_n(S^1 x S^2): the matrix is
/// identically zero (0-framings, algebraically unlinked).
bool is_gpr_admissible(const FramedLink& link);

/// H_1 of the surgered manifold, i.e. coker of the framing/linking matrix.
AbelianGroupInvariants surgery_homology(const FramedLink& link);

/// Dual of a slide sequence read from the other end of the surgery trace:
/// each (i over j) becomes (j over i) and the order reverses.  Involution.
SlideSequence dual_slide_sequence(const SlideSequence& seq);

}  // namespace slidescreen

#endif  // SLIDESCREEN_FRAMED_LINK_HPP
