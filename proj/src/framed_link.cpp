#include "slidescreen/framed_link.hpp"

#include <algorithm>

namespace slidescreen {

FramedLink::FramedLink(IntMatrix framing_linking) : a_(std::move(framing_linking)) {
  if (!a_.is_square() || a_.rows() == 0)
    throw DimensionError("framing/linking matrix must be square and nonempty");
  if (!a_.is_symmetric()) throw DomainError("framing/linking matrix must be symmetric");
}

SlideMove::SlideMove(std::size_t slider_, std::size_t over_, int sign_)
    : slider(slider_), over(over_), sign(sign_) {
  if (slider == over) throw DomainError("a component cannot slide over itself");
  if (sign != 1 && sign != -1) throw DomainError("slide sign must be +1 or -1");
}

FramedLink apply_slide(const FramedLink& link, const SlideMove& move) {
  const std::size_t n = link.components();
  if (move.slider >= n || move.over >= n)
    throw DomainError("slide move references a component outside the link");
  IntMatrix e = IntMatrix::identity(n);
  e.set(move.over, move.slider, move.sign);
  return FramedLink(multiply(multiply(e.transposed(), link.matrix()), e));
}

FramedLink apply_slides(const FramedLink& link, const SlideSequence& seq) {
  FramedLink cur = link;
  for (const SlideMove& m : seq.moves) cur = apply_slide(cur, m);
  return cur;
}

bool is_gpr_admissible(const FramedLink& link) { return link.matrix().is_zero(); }

AbelianGroupInvariants surgery_homology(const FramedLink& link) {
  return cokernel_invariants(link.matrix());
}

SlideSequence dual_slide_sequence(const SlideSequence& seq) {
  SlideSequence dual;
  dual.moves.reserve(seq.moves.size());
  for (auto it = seq.moves.rbegin(); it != seq.moves.rend(); ++it)
    dual.moves.push_back(it->dual());
  return dual;
}

}  // namespace slidescreen
