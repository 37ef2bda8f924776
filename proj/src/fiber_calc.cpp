#include "slidescreen/fiber_calc.hpp"

namespace slidescreen {

FiberSurface::FiberSurface(std::vector<std::int64_t> component_genera)
    : genera_(std::move(component_genera)) {
  if (genera_.empty()) throw DomainError("surface needs at least one component");
  for (std::int64_t g : genera_)
    if (g < 0) throw DomainError("component genus must be >= 0");
}

std::int64_t FiberSurface::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::int64_t g : genera_) chi = checked_add(chi, checked_sub(2, checked_mul(2, g)));
  return chi;
}

void CurveOnFiber::validate() const {
  if (separating != split.has_value())
    throw DomainError("split genera must be given exactly for separating curves");
  if (split) {
    if (split->first < 0 || split->second < 0) throw DomainError("split genera must be >= 0");
    if (split->first == 0 || split->second == 0)
      throw DomainError("an essential separating curve has genus on both sides");
  }
}

FiberSurface compress(const FiberSurface& f, const CurveOnFiber& c) {
  c.validate();
  if (f.components() != 1)
    throw DomainError("compression acts on a connected fiber");
  const std::int64_t g = f.genus_of(0);
  if (g < 1) throw DomainError("the sphere carries no essential curve to compress along");
  if (!c.separating) return FiberSurface({g - 1});
  if (c.split->first + c.split->second != g)
    throw DomainError("split genera must sum to the fiber genus");
  return FiberSurface({c.split->first, c.split->second});
}

bool genus_drop_check(std::int64_t genus_before, std::int64_t genus_after) {
  if (genus_before < 0 || genus_after < 0) throw DomainError("genus must be >= 0");
  return genus_after < genus_before;
}

IsotopicClassification isotopic_case_classify(const FiberSurface& f, const CurveOnFiber& c) {
  c.validate();
  if (!c.isotopy_class_fixed.has_value() || !*c.isotopy_class_fixed)
    throw DomainError("classification applies only when h(c) is isotopic to c");
  if (c.separating && !c.orientation_preserved.has_value())
    throw DomainError("separating case needs the orientation behaviour of the isotopy");

  const FiberSurface after = compress(f, c);
  const std::int64_t g = f.genus_of(0);

  IsotopicClassification out{IsotopicSurgeryCase::kNonSeparating,
                             "",
                             after,
                             g == 1,
                             g == 1,
                             {}};

  if (!c.separating) {
    out.surgery_case = IsotopicSurgeryCase::kNonSeparating;
    out.conclusion =
        "surgery yields N # (S^1 x S^2), where N fibers over the circle with fiber F'";
  } else if (!*c.orientation_preserved) {
    // The monodromy exchanges the two sides, so they must match.
    if (c.split->first != c.split->second)
      throw DomainError(
          "an orientation-reversing isotopy forces the monodromy to exchange the two sides, "
          "so the split genera must be equal");
    out.surgery_case = IsotopicSurgeryCase::kSeparatingOrientationReversing;
    out.conclusion =
        "surgery yields N # (S^1 x S^2), where N fibers over the circle with fiber a "
        "component of F' (the monodromy exchanges the two components)";
  } else {
    out.surgery_case = IsotopicSurgeryCase::kSeparatingOrientationPreserving;
    out.conclusion =
        "surgery yields M_1 # M_2, where M_i fibers over the circle with fiber F_i";
  }

  if (out.two_s1xs2_target_possible) {
    out.notes.push_back(
        "target #_2(S^1 x S^2) is consistent: the fiber is a torus and F' is a sphere");
  } else {
    out.notes.push_back(
        "target #_2(S^1 x S^2) is impossible: it would force S^1 x S^2 to fiber with a "
        "fiber of positive genus; only a torus fiber qualifies");
  }
  if (g == 2) {
    out.notes.push_back(
        "for a genus-2 fiber with h(c) disjoint from but not isotopic to c, a reducible "
        "surgery decomposes as L # M' with L one of {S^3, S^1 x S^2, Lens space} and M' "
        "either S^1 x S^2 or a torus bundle over the circle");
  }
  return out;
}

}  // namespace slidescreen
