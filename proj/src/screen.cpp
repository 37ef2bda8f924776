#include "slidescreen/screen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>
#include <utility>

namespace slidescreen {

ScreenConstraint::ScreenConstraint(std::int64_t lo, std::int64_t hi) : lower(lo), upper(hi) {
  if (lower > upper) throw DomainError("constraint lower bound exceeds upper bound");
}

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? checked_neg(v) : v; }

using Entry = std::pair<std::vector<std::int64_t>, std::int64_t>;  // (coords, value)

std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

std::vector<std::int64_t> sign_normalized(const std::vector<std::int64_t>& x) {
  for (std::int64_t v : x) {
    if (v > 0) return x;
    if (v < 0) {
      std::vector<std::int64_t> n(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) n[i] = checked_neg(x[i]);
      return n;
    }
  }
  return x;
}

// Scans the slab first_lo <= x_0 <= first_hi of the box |x_i| <= bound.
void scan_slab(const QuadraticForm& q, std::int64_t bound, const ScreenConstraint& c,
               const ScreenOptions& opts, std::int64_t first_lo, std::int64_t first_hi,
               std::vector<Entry>& out) {
  const std::size_t dim = 2 * q.genus();
  const auto b = q.coefficient_matrix().to_rows();
  std::vector<std::int64_t> x(dim, -bound);
  x[0] = first_lo;
  if (first_lo > first_hi) return;
  for (;;) {
    std::uint64_t gcd = 0;
    for (std::int64_t v : x) gcd = std::gcd(gcd, abs_u64(v));
    const bool wanted =
        gcd == 0 ? opts.allow_zero : (opts.allow_imprimitive || gcd == 1);
    if (wanted) {
      std::int64_t val = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        std::int64_t row = 0;
        for (std::size_t j = 0; j < dim; ++j) row = checked_add(row, checked_mul(b[i][j], x[j]));
        val = checked_add(val, checked_mul(x[i], row));
      }
      if (c.contains(val)) out.emplace_back(sign_normalized(x), val);
    }
    // odometer, most significant digit first
    std::size_t i = dim;
    while (i > 0) {
      --i;
      const std::int64_t hi = (i == 0) ? first_hi : bound;
      if (x[i] < hi) {
        ++x[i];
        break;
      }
      if (i == 0) return;
      x[i] = -bound;
    }
  }
}

SolutionSet finish(std::vector<Entry> found, std::int64_t bound, ScreenConstraint c) {
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  SolutionSet out;
  out.bound = bound;
  out.constraint = c;
  out.classes.reserve(found.size());
  out.values.reserve(found.size());
  for (auto& e : found) {
    out.classes.emplace_back(std::move(e.first));
    out.values.push_back(e.second);
  }
  return out;
}

}  // namespace

SolutionSet brute_force_solutions(const QuadraticForm& q, std::int64_t bound,
                                  ScreenConstraint c, ScreenOptions opts) {
  if (bound < 1) throw DomainError("box bound must be >= 1");

  const std::int64_t slots = 2 * bound + 1;
  unsigned workers = opts.workers;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, 8u);
  }
  workers = static_cast<unsigned>(
      std::min<std::int64_t>(workers, slots));

  std::vector<std::vector<Entry>> parts(workers);
  if (workers == 1) {
    scan_slab(q, bound, c, opts, -bound, bound, parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t lo = -bound + static_cast<std::int64_t>(w) * slots / workers;
      const std::int64_t hi = -bound + static_cast<std::int64_t>(w + 1) * slots / workers - 1;
      pool.emplace_back([&, lo, hi, w] { scan_slab(q, bound, c, opts, lo, hi, parts[w]); });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<Entry> found;
  for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
  return finish(std::move(found), bound, c);
}

std::vector<HomologyClass> FibonacciFamily::classes() const {
  std::vector<HomologyClass> out;
  std::int64_t fk = 0, fk1 = 1;
  for (std::size_t k = 0; k < max_index; ++k) {
    out.push_back(HomologyClass{{fk1, fk}}.normalized());
    out.push_back(HomologyClass{{fk, checked_neg(fk1)}}.normalized());
    const std::int64_t next = checked_add(fk, fk1);
    fk = fk1;
    fk1 = next;
  }
  return out;
}

SolutionSet fibonacci_solutions(std::int64_t bound) {
  if (bound < 1) throw DomainError("box bound must be >= 1");
  const QuadraticForm q = screening_form(make_figure_eight());

  // enough pairs that f_{k+1} outgrows the box
  std::size_t depth = 1;
  for (std::int64_t fk = 0, fk1 = 1; fk1 <= bound; ++depth) {
    const std::int64_t next = checked_add(fk, fk1);
    fk = fk1;
    fk1 = next;
  }

  std::vector<Entry> found;
  for (const HomologyClass& cls : FibonacciFamily{depth}.classes()) {
    if (cls[0] > bound || cls[1] > bound || cls[1] < -bound) continue;
    found.emplace_back(cls.coords(), q.evaluate(cls));
  }
  return finish(std::move(found), bound, ScreenConstraint{});
}

namespace {

std::int64_t sup_norm(const HomologyClass& x) {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) n = std::max(n, abs64(x[i]));
  return n;
}

}  // namespace

HomologyClass descent_reduce(const FiberedMonodromy& h, const HomologyClass& x) {
  if (h.genus() != 1) throw DomainError("descent is defined per genus-1 block");
  if (x.size() != 2) throw DimensionError("descent needs a genus-1 class");
  if (x.is_zero()) throw DomainError("descent needs a nonzero class");

  const FiberedMonodromy hinv = h.inverse();
  HomologyClass cur = x;

  for (;;) {
    // strict descent
    for (;;) {
      const std::int64_t n = sup_norm(cur);
      if (const HomologyClass fwd = h.act(cur); sup_norm(fwd) < n) {
        cur = fwd;
        continue;
      }
      if (const HomologyClass bwd = hinv.act(cur); sup_norm(bwd) < n) {
        cur = bwd;
        continue;
      }
      break;
    }

    // Walk the equal-norm plateau of the orbit in both directions and pick a
    // canonical representative; drop back into descent if the orbit dips
    // lower further along (each restart strictly lowers the norm).
    const std::int64_t n = sup_norm(cur);
    std::set<HomologyClass> plateau{cur.normalized()};
    bool restarted = false;
    for (const FiberedMonodromy* dir : {&h, &hinv}) {
      HomologyClass y = dir->act(cur);
      while (sup_norm(y) == n) {
        const HomologyClass ny = y.normalized();
        if (!plateau.insert(ny).second) break;  // cycled around the orbit
        y = dir->act(y);
      }
      if (sup_norm(y) < n) {
        cur = y;
        restarted = true;
        break;
      }
    }
    if (!restarted) return *plateau.rbegin();  // lexicographically largest
  }
}

FamilyPairingTable family_pairing_table(const std::vector<HomologyClass>& classes) {
  if (classes.empty()) return FamilyPairingTable{IntMatrix(0, 0), true};  // vacuous
  for (const auto& c : classes)
    if (c.size() != classes.front().size())
      throw DimensionError("family classes must share one fiber");
  const std::size_t n = classes.size();
  FamilyPairingTable out{IntMatrix(n, n), true};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t p = symplectic_pairing(classes[i], classes[j]);
      out.table.set(i, j, p);
      if (i != j && (p < -1 || p > 1)) out.admissible = false;
    }
  return out;
}

BlockScreenReport screen_connected_sum(const ConnectedSumDecomposition& d,
                                       const std::vector<std::vector<HomologyClass>>& per_block,
                                       ScreenConstraint c) {
  if (per_block.size() != d.blocks.size())
    throw DimensionError("one class list per connected-sum block required");
  BlockScreenReport report;
  report.constraint = c;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const QuadraticForm q = screening_form(d.blocks[b]);
    for (const HomologyClass& cls : per_block[b]) {
      const std::int64_t v = q.evaluate(cls);  // throws on length mismatch
      const bool ok = c.contains(v);
      report.entries.push_back({b, cls, v, ok});
      if (!ok) report.pass = false;
    }
  }
  return report;
}

}  // namespace slidescreen
