#include "exact_matrix.hpp"

namespace primrank {

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).get_num() * (scale / m(i, j).get_den());
  return out;
}

Integer CheckedInt128::to_integer() const {
  const bool neg = v_ < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v_) : v_;
  Integer hi(static_cast<unsigned long>(mag >> 64));
  Integer lo(static_cast<unsigned long>(mag & 0xffffffffffffffffULL));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

std::size_t exact_rank(const IntegerMatrix& m) { return bareiss_rank(m); }

std::size_t exact_rank(const RationalMatrix& m) { return exact_rank(clear_denominators(m)); }

std::optional<FractionFreeSolution> solve_fraction_free(IntegerMatrix a, std::vector<Integer> b) {
  return bareiss_solve(std::move(a), std::move(b));
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col) == 0) ++pivot;
    if (pivot == r.rows()) continue;
    r.swap_rows(row, pivot);
    const Rational inv = 1 / r(row, col);
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Rational f = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < r.cols(); ++free) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<Rational> v(r.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw InvalidArgument("solve needs a square system");
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const IntegerMatrix scaled = clear_denominators(aug);
  IntegerMatrix lhs(n, n);
  std::vector<Integer> rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lhs(i, j) = scaled(i, j);
    rhs[i] = scaled(i, n);
  }
  auto sol = solve_fraction_free(std::move(lhs), std::move(rhs));
  if (!sol) throw InvalidArgument("singular system");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Rational(sol->scaled[i], sol->det);
    x[i].canonicalize();
  }
  return x;
}

}  // namespace primrank
