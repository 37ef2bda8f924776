// Acceptance suite: every criterion prints exactly one PASS/FAIL line and the
// process exits nonzero if any criterion fails.  Numeric checks are exact
// (integer arithmetic throughout); the two runtime budgets are wall-clock.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "slidescreen/fiber_calc.hpp"
#include "slidescreen/framed_link.hpp"
#include "slidescreen/lattice.hpp"
#include "slidescreen/monodromy.hpp"
#include "slidescreen/screen.hpp"
#include "test_support.hpp"

namespace ss = slidescreen;
using json = nlohmann::json;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define REQUIRE_TRUE(cond, msg)                 \
  do {                                          \
    if (!(cond)) throw Failure(msg);            \
  } while (0)

int g_failures = 0;

void criterion(int num, const std::string& name, const std::function<std::string()>& body) {
  try {
    const std::string detail = body();
    std::printf("PASS criterion %d: %s%s%s\n", num, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
  } catch (const std::exception& e) {
    ++g_failures;
    std::printf("FAIL criterion %d: %s -- %s\n", num, name.c_str(), e.what());
  }
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json cli_solutions(const std::string& args) {
  const auto r = sstest::run_command(sstest::cli_path() + " " + args + " 2>/dev/null");
  REQUIRE_TRUE(r.exit_code == 0, "CLI failed: " + args);
  return json::parse(r.output);
}

std::set<std::vector<std::int64_t>> as_set(const json& solutions) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& s : solutions) out.insert(s.get<std::vector<std::int64_t>>());
  return out;
}

// --------------------------------------------------------------------------

std::string trefoil_catalog() {
  const std::set<std::vector<std::int64_t>> expected{{0, 1}, {1, 0}, {1, 1}};
  double b1000_time = 0;
  for (const std::int64_t b : {1, 10, 100, 1000}) {
    const auto t0 = std::chrono::steady_clock::now();
    const json rep = cli_solutions("screen brute --monodromy trefoil --bound " + std::to_string(b));
    if (b == 1000) b1000_time = seconds_since(t0);
    REQUIRE_TRUE(as_set(rep["solutions"]) == expected,
                 "default catalog wrong at bound " + std::to_string(b));

    const json paper = cli_solutions("screen brute --monodromy trefoil --bound " +
                                     std::to_string(b) + " --paper-form");
    REQUIRE_TRUE(paper["solutions"].size() == 3,
                 "paper-form catalog size wrong at bound " + std::to_string(b));
    // the printed form is the matrix-derived one under n -> -n
    std::set<std::vector<std::int64_t>> mirrored;
    for (const auto& sol : expected) {
      const ss::HomologyClass m{{sol[0], -sol[1]}};
      mirrored.insert(m.normalized().coords());
    }
    REQUIRE_TRUE(as_set(paper["solutions"]) == mirrored,
                 "paper-form catalog not the n -> -n mirror at bound " + std::to_string(b));
  }
  REQUIRE_TRUE(b1000_time < 5.0, "bound-1000 run exceeded 5 s");
  std::ostringstream os;
  os << "3 classes at B=1,10,100,1000, paper-form mirrored; B=1000 took " << b1000_time << " s";
  return os.str();
}

std::string fibonacci_equivalence() {
  const ss::QuadraticForm q = ss::screening_form(ss::make_figure_eight());
  const auto t0 = std::chrono::steady_clock::now();
  for (std::int64_t b = 1; b <= 200; ++b) {
    const ss::SolutionSet brute = ss::brute_force_solutions(q, b);
    const ss::SolutionSet fib = ss::fibonacci_solutions(b);
    if (!(brute == fib)) throw Failure("sets differ at bound " + std::to_string(b));
  }
  const double t = seconds_since(t0);
  REQUIRE_TRUE(t < 10.0, "bounds 1..200 exceeded 10 s");
  std::ostringstream os;
  os << "brute force equals the Fibonacci set for every B in 1..200 (" << t << " s)";
  return os.str();
}

std::string descent_orbits() {
  const ss::FiberedMonodromy fig8 = ss::make_figure_eight();
  const ss::QuadraticForm q = ss::screening_form(fig8);
  const ss::SolutionSet sols = ss::brute_force_solutions(q, 200);
  std::set<ss::HomologyClass> terminals;
  for (const auto& x : sols.classes) {
    const ss::HomologyClass r = ss::descent_reduce(fig8, x);
    REQUIRE_TRUE(q.evaluate(r) == q.evaluate(x), "descent changed the form value");
    terminals.insert(r);
  }
  REQUIRE_TRUE(terminals.size() == 2, "expected exactly 2 terminal classes, got " +
                                          std::to_string(terminals.size()));
  std::ostringstream os;
  os << sols.classes.size() << " solutions at B=200 reduce to 2 terminals, Q preserved";
  return os.str();
}

std::string fibonacci_family() {
  auto mk = [](std::vector<std::int64_t> v) { return ss::HomologyClass{std::move(v)}; };
  const ss::FamilyPairingTable good =
      ss::family_pairing_table({mk({1, 2}), mk({2, 3}), mk({3, 5})});
  REQUIRE_TRUE(good.admissible, "three consecutive Fibonacci pairs must be admissible");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) {
        const std::int64_t p = good.table.at(i, j);
        REQUIRE_TRUE(p == 1 || p == -1, "off-diagonal pairing outside {-1,1}");
      }
  const ss::FamilyPairingTable bad =
      ss::family_pairing_table({mk({1, 2}), mk({3, 5}), mk({2, 0})});
  REQUIRE_TRUE(!bad.admissible, "appending (2,0) must break admissibility");
  return "pairings in {-1,1} and admissible; (2,0) appended is rejected";
}

std::string framing_formula() {
  const ss::FramedLink worked(ss::IntMatrix::from_rows({{1, 3}, {3, 2}}));
  const ss::FramedLink slid = ss::apply_slide(worked, ss::SlideMove(0, 1, +1));
  REQUIRE_TRUE(slid.framing(0) == 9, "worked example framing is not 1 + 2 + 2*3");

  std::mt19937 rng(260810);
  int tested = 0;
  while (tested < 1000) {
    const std::size_t n = static_cast<std::size_t>(sstest::rand_int(rng, 2, 6));
    const ss::FramedLink l(sstest::random_symmetric(rng, n, -9, 9));
    const ss::SlideMove m = sstest::random_move(rng, n);
    if (!(ss::apply_slide(ss::apply_slide(l, m), m.inverse()) == l))
      throw Failure("slide followed by its inverse did not restore the link");
    ++tested;
  }
  return "worked example gives framing 9; 1000 random slide round-trips restore exactly";
}

std::string gpr_necessity() {
  std::mt19937 rng(55);
  auto verdict = [](const ss::FramedLink& l) {
    return ss::surgery_homology(l).is_free_of_rank(l.components());
  };

  const ss::FramedLink zero2(ss::IntMatrix(2, 2));
  REQUIRE_TRUE(verdict(zero2) && ss::is_gpr_admissible(zero2), "zero matrix must pass");

  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(sstest::rand_int(rng, 1, 5));
    const ss::FramedLink l(sstest::random_symmetric(rng, n, -9, 9));
    if (verdict(l) != l.matrix().is_zero())
      throw Failure("free rank n with no torsion must coincide with the zero matrix");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(sstest::rand_int(rng, 2, 5));
    const ss::FramedLink l = sstest::rand_int(rng, 0, 3) == 0
                                 ? ss::FramedLink(ss::IntMatrix(n, n))
                                 : ss::FramedLink(sstest::random_symmetric(rng, n, -9, 9));
    const ss::FramedLink end = ss::apply_slides(l, sstest::random_sequence(rng, n, 10));
    if (verdict(end) != verdict(l) || ss::is_gpr_admissible(end) != ss::is_gpr_admissible(l))
      throw Failure("verdict changed along a slide sequence");
  }
  return "verdict iff zero matrix on 1000 random links; slide-invariant on 1000 sequences";
}

std::string dual_involution() {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const ss::SlideSequence s = sstest::random_sequence(rng, 6, 20);
    if (!(ss::dual_slide_sequence(ss::dual_slide_sequence(s)) == s))
      throw Failure("dual(dual(s)) differs from s");
  }
  return "dual(dual(s)) = s on 1000 random sequences of length <= 20";
}

std::string snf_certification() {
  std::mt19937 rng(88);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(sstest::rand_int(rng, 1, 5));
    const std::size_t cols = static_cast<std::size_t>(sstest::rand_int(rng, 1, 5));
    const ss::IntMatrix a = sstest::random_matrix(rng, rows, cols, -9, 9);
    const ss::SmithDecomposition d = ss::smith_normal_form(a);
    if (!(ss::multiply(ss::multiply(d.u, a), d.v) == d.d)) throw Failure("U*A*V != D");
    if (!ss::is_unimodular(d.u) || !ss::is_unimodular(d.v)) throw Failure("U or V not unimodular");
    const std::size_t k = std::min(rows, cols);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      const std::int64_t cur = d.d.at(i, i), nxt = d.d.at(i + 1, i + 1);
      if (cur < 0 || (cur == 0 && nxt != 0) || (cur != 0 && nxt % cur != 0))
        throw Failure("divisibility chain violated");
    }
  }
  return "U*A*V = D, divisibility chain and unimodularity on 1000 random matrices";
}

std::string compression_bookkeeping() {
  using namespace slidescreen;
  for (std::int64_t g = 1; g <= 10; ++g) {
    const FiberSurface f = FiberSurface::closed(g);
    CurveOnFiber ns;
    const FiberSurface a = compress(f, ns);
    REQUIRE_TRUE(a.euler_characteristic() == f.euler_characteristic() + 2, "chi not conserved");
    REQUIRE_TRUE(a.total_genus() == f.total_genus() - 1, "total genus must drop by one");
    REQUIRE_TRUE(genus_drop_check(g, a.genus_of(0)), "genus drop fails (non-separating)");
    for (std::int64_t g1 = 1; g1 < g; ++g1) {
      CurveOnFiber sep;
      sep.separating = true;
      sep.split = {g1, g - g1};
      const FiberSurface b = compress(f, sep);
      REQUIRE_TRUE(b.euler_characteristic() == f.euler_characteristic() + 2, "chi not conserved");
      REQUIRE_TRUE(b.total_genus() == f.total_genus() - 1, "total genus must drop by one");
      REQUIRE_TRUE(genus_drop_check(g, b.genus_of(0)) && genus_drop_check(g, b.genus_of(1)),
                   "each side must have lower genus");
    }
  }

  CurveOnFiber fixed_ns;
  fixed_ns.isotopy_class_fixed = true;
  const IsotopicClassification c1 = isotopic_case_classify(FiberSurface::closed(2), fixed_ns);
  REQUIRE_TRUE(c1.surgery_case == IsotopicSurgeryCase::kNonSeparating &&
                   c1.conclusion.find("N # (S^1 x S^2)") != std::string::npos,
               "non-separating branch wrong");

  CurveOnFiber pres;
  pres.separating = true;
  pres.split = {1, 1};
  pres.isotopy_class_fixed = true;
  pres.orientation_preserved = true;
  const IsotopicClassification c2 = isotopic_case_classify(FiberSurface::closed(2), pres);
  REQUIRE_TRUE(c2.surgery_case == IsotopicSurgeryCase::kSeparatingOrientationPreserving &&
                   c2.conclusion.find("M_1 # M_2") != std::string::npos,
               "separating/preserving branch wrong");

  CurveOnFiber rev = pres;
  rev.orientation_preserved = false;
  const IsotopicClassification c3 = isotopic_case_classify(FiberSurface::closed(2), rev);
  REQUIRE_TRUE(c3.surgery_case == IsotopicSurgeryCase::kSeparatingOrientationReversing &&
                   c3.conclusion.find("N # (S^1 x S^2)") != std::string::npos,
               "separating/reversing branch wrong");

  REQUIRE_TRUE(isotopic_case_classify(FiberSurface::closed(1), fixed_ns).two_s1xs2_target_possible,
               "torus fiber must be consistent with the two-summand target");
  for (std::int64_t g = 2; g <= 10; ++g)
    REQUIRE_TRUE(
        !isotopic_case_classify(FiberSurface::closed(g), fixed_ns).two_s1xs2_target_possible,
        "genus >= 2 must be flagged impossible for the two-summand target");

  return "chi/genus bookkeeping on all g <= 10; decision table matches on all 3 branches";
}

}  // namespace

int main() {
  criterion(1, "trefoil catalog", trefoil_catalog);
  criterion(2, "figure-eight Fibonacci equivalence", fibonacci_equivalence);
  criterion(3, "descent orbits", descent_orbits);
  criterion(4, "three-Fibonacci family", fibonacci_family);
  criterion(5, "framing formula", framing_formula);
  criterion(6, "GPR necessity", gpr_necessity);
  criterion(7, "dual involution", dual_involution);
  criterion(8, "SNF certification", snf_certification);
  criterion(9, "compression bookkeeping", compression_bookkeeping);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
