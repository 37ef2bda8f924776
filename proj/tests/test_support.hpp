#ifndef SLIDESCREEN_TEST_SUPPORT_HPP
#define SLIDESCREEN_TEST_SUPPORT_HPP

// Shared helpers for the test binaries: seeded random generators for
// matrices, links and slide sequences, plus a tiny subprocess runner for
// driving the CLI binary.

#include <cstdio>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include "slidescreen/framed_link.hpp"
#include "slidescreen/lattice.hpp"

namespace sstest {

inline std::int64_t rand_int(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline slidescreen::IntMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                                            std::size_t cols, std::int64_t lo, std::int64_t hi) {
  slidescreen::IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rand_int(rng, lo, hi));
  return m;
}

inline slidescreen::IntMatrix random_symmetric(std::mt19937& rng, std::size_t n,
                                               std::int64_t lo, std::int64_t hi) {
  slidescreen::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      const std::int64_t v = rand_int(rng, lo, hi);
      m.set(r, c, v);
      m.set(c, r, v);
    }
  return m;
}

// Product of elementary shears, swaps and sign flips; |det| = 1 by build.
inline slidescreen::IntMatrix random_unimodular(std::mt19937& rng, std::size_t n,
                                                unsigned ops = 8) {
  slidescreen::IntMatrix m = slidescreen::IntMatrix::identity(n);
  for (unsigned k = 0; k < ops; ++k) {
    const std::size_t a = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
    std::size_t b = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
    switch (rand_int(rng, 0, 2)) {
      case 0:
        if (a != b) m.add_row_multiple(a, b, rand_int(rng, -2, 2));
        break;
      case 1:
        m.swap_rows(a, b);
        break;
      default:
        m.negate_row(a);
        break;
    }
  }
  return m;
}

inline slidescreen::FramedLink random_link(std::mt19937& rng, std::size_t max_components,
                                           std::int64_t lo = -9, std::int64_t hi = 9) {
  const std::size_t n = static_cast<std::size_t>(rand_int(rng, 1, max_components));
  return slidescreen::FramedLink(random_symmetric(rng, n, lo, hi));
}

inline slidescreen::SlideMove random_move(std::mt19937& rng, std::size_t n) {
  if (n < 2) throw std::invalid_argument("random_move needs at least two components");
  const std::size_t slider = static_cast<std::size_t>(rand_int(rng, 0, n - 1));
  std::size_t over = static_cast<std::size_t>(rand_int(rng, 0, n - 2));
  if (over >= slider) ++over;
  return slidescreen::SlideMove(slider, over, rand_int(rng, 0, 1) == 0 ? 1 : -1);
}

inline slidescreen::SlideSequence random_sequence(std::mt19937& rng, std::size_t n,
                                                  std::size_t max_len) {
  slidescreen::SlideSequence seq;
  const std::size_t len = static_cast<std::size_t>(rand_int(rng, 0, max_len));
  for (std::size_t i = 0; i < len; ++i) seq.moves.push_back(random_move(rng, n));
  return seq;
}

struct CommandResult {
  int exit_code;
  std::string output;
};

inline CommandResult run_command(const std::string& cmd) {
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

inline std::string cli_path() {
  const char* p = std::getenv("SLIDE_SCREEN_BIN");
  if (p == nullptr || *p == '\0')
    throw std::runtime_error("SLIDE_SCREEN_BIN is not set; run through ctest");
  return p;
}

}  // namespace sstest

#endif  // SLIDESCREEN_TEST_SUPPORT_HPP
