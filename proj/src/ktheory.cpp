#include "sofic/ktheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sofic {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto &row : rows) {
    if (row.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    for (long x : row)
      data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from(const EdgeMatrix &b) {
  IntMatrix m(b.size, b.size);
  for (std::size_t r = 0; r < b.size; ++r)
    for (std::size_t c = 0; c < b.size; ++c)
      m(r, c) = b.at(r, c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class &a = (*this)(r, k);
      if (a == 0)
        continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out(r, c) += a * rhs(k, c);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix dimensions do not match");
  IntMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    out.data_[k] = data_[k] - rhs.data_[k];
  return out;
}

bool IntMatrix::operator==(const IntMatrix &rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src,
                        const mpz_class &factor) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src,
                        const mpz_class &factor) {
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c)
      out << (c ? " " : "") << (*this)(r, c);
    out << '\n';
  }
  return out.str();
}

mpz_class determinant(const IntMatrix &m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k)
    if (d(k, k) != 0)
      ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix &m) {
  SmithForm out{IntMatrix::identity(m.rows()), m,
                IntMatrix::identity(m.cols())};
  IntMatrix &d = out.d;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 &&
              (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows)
        return out; // trailing block is zero
      d.swap_rows(t, pr);
      out.u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      out.v.swap_cols(t, pc);

      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row(i, t, q);
        out.u.add_row(i, t, q);
        remainder = remainder || d(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col(j, t, q);
        out.v.add_col(j, t, q);
        remainder = remainder || d(t, j) != 0;
      }
      if (remainder)
        continue;

      // Pivot must divide the rest of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows)
        break;
      d.add_row(t, bad, 1);
      out.u.add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
  }
  return out;
}

std::string render(const AbelianGroup &g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1)
    parts.emplace_back("Z");
  else if (g.free_rank > 1)
    parts.push_back("Z^" + std::to_string(g.free_rank));
  for (const auto &d : g.invariant_factors)
    parts.push_back("Z/" + d.get_str());
  if (parts.empty())
    return "0";
  std::string out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k)
    out += " ⊕ " + parts[k];
  return out;
}

AbelianGroup cokernel(const IntMatrix &m) {
  const SmithForm snf = smith_normal_form(m);
  AbelianGroup g;
  const std::size_t diag = std::min(m.rows(), m.cols());
  g.free_rank = m.rows() - diag;
  for (std::size_t k = 0; k < diag; ++k) {
    const mpz_class &x = snf.d(k, k);
    if (x == 0)
      ++g.free_rank;
    else if (x >= 2)
      g.invariant_factors.push_back(x);
  }
  return g;
}

KGroups k_groups(const IntMatrix &b) {
  if (b.rows() != b.cols())
    throw std::invalid_argument("K-groups need a square matrix");
  const IntMatrix m = IntMatrix::identity(b.rows()) - b.transpose();
  const SmithForm snf = smith_normal_form(m);
  KGroups out;
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const mpz_class &x = snf.d(k, k);
    if (x == 0)
      ++out.k0.free_rank;
    else if (x >= 2)
      out.k0.invariant_factors.push_back(x);
  }
  out.k1.free_rank = m.cols() - snf.rank();
  return out;
}

KGroups k_groups(const EdgeMatrix &b) { return k_groups(IntMatrix::from(b)); }

} // namespace sofic
