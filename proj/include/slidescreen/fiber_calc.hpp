#ifndef SLIDESCREEN_FIBER_CALC_HPP
#define SLIDESCREEN_FIBER_CALC_HPP

// Genus bookkeeping for fiber-framed surgery: compressing the fiber along an
// essential curve, the genus-drop comparison, and the decision table for a
// surgery curve whose monodromy image is isotopic to the curve itself.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slidescreen/lattice.hpp"

namespace slidescreen {

/// Closed orientable surface, possibly disconnected; one genus per component.
class FiberSurface {
 public:
  explicit FiberSurface(std::vector<std::int64_t> component_genera);
  static FiberSurface closed(std::int64_t genus) { return FiberSurface({genus}); }

  std::size_t components() const { return genera_.size(); }
  const std::vector<std::int64_t>& genera() const { return genera_; }
  std::int64_t genus_of(std::size_t component) const { return genera_.at(component); }

  std::int64_t euler_characteristic() const;
  /// 1 - chi/2; equals the genus for a connected surface and drops by exactly
  /// one under a single compression whether or not the surface splits.
  std::int64_t total_genus() const { return 1 - euler_characteristic() / 2; }

  friend bool operator==(const FiberSurface&, const FiberSurface&) = default;

 private:
  std::vector<std::int64_t> genera_;
};

/// Essential simple closed curve on a connected fiber, described by the data
/// the structural results consume.
struct CurveOnFiber {
  bool separating = false;
  // present iff separating: genera of the two complementary sides
  std::optional<std::pair<std::int64_t, std::int64_t>> split;
  // is h(c) isotopic to c?
  std::optional<bool> isotopy_class_fixed;
  // does that isotopy preserve the orientation of c?
  std::optional<bool> orientation_preserved;

  void validate() const;
};

/// Surgery the fiber along the curve: one component of genus g-1 if the
/// curve is non-separating, otherwise the two sides (each side must carry
/// genus, or the curve would bound a disk and not be essential).
FiberSurface compress(const FiberSurface& f, const CurveOnFiber& c);

/// genus(F'') < genus(F), the comparison that makes a fibered
/// counterexample non-minimal.
bool genus_drop_check(std::int64_t genus_before, std::int64_t genus_after);

enum class IsotopicSurgeryCase {
  kNonSeparating,
  kSeparatingOrientationReversing,
  kSeparatingOrientationPreserving,
};

struct IsotopicClassification {
  IsotopicSurgeryCase surgery_case;
  std::string conclusion;       // structural description of the surgered manifold
  FiberSurface fiber_after;     // the compressed fiber F'
  // Consequence for the target #_2(S^1 x S^2): the fiber must be a torus.
  bool fiber_is_torus;
  bool two_s1xs2_target_possible;
  std::vector<std::string> notes;
};

/// Decision table for the case h(c) isotopic to c.  Errors unless
/// isotopy_class_fixed is present and true, and (for separating curves) the
/// orientation behaviour of the isotopy is given.
IsotopicClassification isotopic_case_classify(const FiberSurface& f, const CurveOnFiber& c);

}  // namespace slidescreen

#endif  // SLIDESCREEN_FIBER_CALC_HPP
