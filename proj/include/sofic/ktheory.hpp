#pragma once

// Exact integer matrices, Smith normal form, and the K-groups
// K0 = coker(I - B^T), K1 = ker(I - B^T) of a Cuntz-Krieger algebra O_B.
// Matrices act on column vectors.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sofic/krieger.hpp"

namespace sofic {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from(const EdgeMatrix &b);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class &operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const mpz_class &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix &rhs) const;
  IntMatrix operator-(const IntMatrix &rhs) const;
  bool operator==(const IntMatrix &rhs) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class &factor);
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const mpz_class &factor);
  void negate_row(std::size_t r);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntMatrix &m);

/// D = U * M * V with U, V unimodular and D diagonal, nonnegative, and
/// d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

/// Z^free_rank ⊕ Z/d_1 ⊕ ... with d_k >= 2 and d_k | d_{k+1}.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> invariant_factors;

  bool is_trivial() const noexcept {
    return free_rank == 0 && invariant_factors.empty();
  }
  bool operator==(const AbelianGroup &) const = default;
};

/// "Z^2 ⊕ Z/3", "Z", "0".
std::string render(const AbelianGroup &g);

/// Cokernel of a matrix acting on column vectors.
AbelianGroup cokernel(const IntMatrix &m);

struct KGroups {
  AbelianGroup k0;
  AbelianGroup k1;
};

KGroups k_groups(const IntMatrix &b);
KGroups k_groups(const EdgeMatrix &b);

} // namespace sofic
