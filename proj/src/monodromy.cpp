#include "slidescreen/monodromy.hpp"

namespace slidescreen {

FiberedMonodromy::FiberedMonodromy(IntMatrix action) : m_(std::move(action)) {
  if (!m_.is_square() || m_.rows() == 0 || m_.rows() % 2 != 0)
    throw DimensionError("monodromy matrix must be 2g x 2g with g >= 1");
  if (!is_symplectic(m_))
    throw DomainError("monodromy matrix must preserve the intersection form");
}

HomologyClass FiberedMonodromy::act(const HomologyClass& x) const {
  if (x.size() != m_.rows()) throw DimensionError("class length does not match fiber genus");
  return HomologyClass(multiply(m_, x.coords()));
}

FiberedMonodromy FiberedMonodromy::inverse() const {
  const IntMatrix j = standard_symplectic_form(genus());
  return FiberedMonodromy(multiply(multiply(j.transposed(), m_.transposed()), j));
}

FiberedMonodromy make_figure_eight() {
  return FiberedMonodromy(IntMatrix::from_rows({{2, 1}, {1, 1}}));
}

FiberedMonodromy make_trefoil() {
  return FiberedMonodromy(IntMatrix::from_rows({{0, 1}, {-1, 1}}));
}

std::size_t ConnectedSumDecomposition::total_genus() const {
  std::size_t g = 0;
  for (const auto& b : blocks) g += b.genus();
  return g;
}

FiberedMonodromy ConnectedSumDecomposition::assembled() const {
  const std::size_t dim = 2 * total_genus();
  IntMatrix m(dim, dim);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    const IntMatrix& bm = b.matrix();
    for (std::size_t r = 0; r < bm.rows(); ++r)
      for (std::size_t c = 0; c < bm.cols(); ++c) m.set(off + r, off + c, bm.at(r, c));
    off += bm.rows();
  }
  return FiberedMonodromy(std::move(m));
}

ConnectedSumDecomposition connected_sum(std::vector<FiberedMonodromy> parts) {
  if (parts.empty()) throw DomainError("connected sum needs at least one monodromy");
  return ConnectedSumDecomposition{std::move(parts)};
}

QuadraticForm::QuadraticForm(IntMatrix b) : b_(std::move(b)) {
  if (!b_.is_square() || b_.rows() == 0 || b_.rows() % 2 != 0)
    throw DimensionError("form matrix must be 2g x 2g with g >= 1");
}

std::int64_t QuadraticForm::evaluate(const HomologyClass& x) const {
  if (x.size() != b_.rows()) throw DimensionError("class length does not match form");
  const std::vector<std::int64_t> bx = multiply(b_, x.coords());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < bx.size(); ++i) s = checked_add(s, checked_mul(x[i], bx[i]));
  return s;
}

QuadraticForm::GenusOneCoefficients QuadraticForm::genus_one_coefficients() const {
  if (genus() != 1) throw DimensionError("coefficient view is genus-1 only");
  return {b_.at(0, 0), checked_add(b_.at(0, 1), b_.at(1, 0)), b_.at(1, 1)};
}

QuadraticForm screening_form(const FiberedMonodromy& h) {
  const IntMatrix j = standard_symplectic_form(h.genus());
  return QuadraticForm(multiply(j.transposed(), h.matrix()));
}

HomologyClass act(const FiberedMonodromy& h, const HomologyClass& x) { return h.act(x); }

}  // namespace slidescreen
