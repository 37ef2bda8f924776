#ifndef SLIDESCREEN_SCREEN_HPP
#define SLIDESCREEN_SCREEN_HPP

// Enumeration of homology classes passing the screening constraint
// -1 <= Q(x) <= 1: exhaustive box search (the oracle), the Fibonacci
// parametrization of the figure-eight solutions, descent to orbit
// representatives, and the pairing test for simultaneous families.

#include <cstdint>
#include <vector>

#include "slidescreen/lattice.hpp"
#include "slidescreen/monodromy.hpp"

namespace slidescreen {

struct ScreenConstraint {
  std::int64_t lower = -1;
  std::int64_t upper = 1;

  ScreenConstraint() = default;
  ScreenConstraint(std::int64_t lo, std::int64_t hi);
  bool contains(std::int64_t v) const { return lower <= v && v <= upper; }

  friend bool operator==(const ScreenConstraint&, const ScreenConstraint&) = default;
};

struct ScreenOptions {
  // The zero class and imprimitive classes never bound essential simple
  // closed curves, so they are skipped unless explicitly allowed.
  bool allow_zero = false;
  bool allow_imprimitive = false;
  // 0 = pick automatically.  Output is identical for every worker count.
  unsigned workers = 0;
};

/// Sign-normalized, lexicographically sorted, duplicate-free solution list
/// with the form value of each class.
struct SolutionSet {
  std::vector<HomologyClass> classes;
  std::vector<std::int64_t> values;
  std::int64_t bound = 0;
  ScreenConstraint constraint;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// Every class x with all |coords| <= bound and Q(x) in the constraint
/// window.  This exhaustive scan is the oracle the parametrized enumerators
/// are tested against.
SolutionSet brute_force_solutions(const QuadraticForm& q, std::int64_t bound,
                                  ScreenConstraint c = {}, ScreenOptions opts = {});

/// Consecutive-Fibonacci candidate classes (f_0 = 0, f_1 = 1): the pairs
/// (f_{k+1}, f_k) with m*n >= 0 and (f_k, -f_{k+1}) with m*n <= 0, for
/// k = 0 .. max_index - 1, sign-normalized.
struct FibonacciFamily {
  std::size_t max_index;

  std::vector<HomologyClass> classes() const;
};

/// The predicted figure-eight solution set inside the box: the Fibonacci
/// candidates whose coordinates fit, sorted and deduplicated.
SolutionSet fibonacci_solutions(std::int64_t bound);

/// Reduces a nonzero class on a genus-1 fiber by applying h or h^-1 while
/// max(|m|,|n|) strictly drops, then canonicalizes within the equal-norm
/// plateau of the orbit (lexicographically largest sign-normalized class).
/// The result is the orbit's terminal representative; Q is preserved.
HomologyClass descent_reduce(const FiberedMonodromy& h, const HomologyClass& x);

struct FamilyPairingTable {
  IntMatrix table;  // table[i][j] = pairing(class_i, class_j)
  // Necessary condition for simultaneous disjoint arc representatives:
  // all off-diagonal pairings in {-1, 0, 1}.  Not claimed sufficient.
  bool admissible = false;
};

FamilyPairingTable family_pairing_table(const std::vector<HomologyClass>& classes);

/// Screening report for a connected-sum fiber: each class is evaluated
/// against its own block's form.
struct BlockScreenEntry {
  std::size_t block = 0;
  HomologyClass cls;
  std::int64_t value = 0;
  bool pass = false;
};

struct BlockScreenReport {
  std::vector<BlockScreenEntry> entries;
  ScreenConstraint constraint;
  bool pass = true;  // vacuously true for empty families
};

BlockScreenReport screen_connected_sum(const ConnectedSumDecomposition& d,
                                       const std::vector<std::vector<HomologyClass>>& per_block,
                                       ScreenConstraint c = {});

}  // namespace slidescreen

#endif  // SLIDESCREEN_SCREEN_HPP
