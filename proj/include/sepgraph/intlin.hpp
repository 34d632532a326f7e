#ifndef SEPGRAPH_INTLIN_HPP
#define SEPGRAPH_INTLIN_HPP

#include <string>
#include <vector>

#include "sepgraph/errors.hpp"
#include "sepgraph/scalar.hpp"

namespace sepgraph {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_((size_t)rows * cols, BigInt(0)) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& at(int r, int c) { return entries_[(size_t)r * cols_ + c]; }
  const BigInt& at(int r, int c) const { return entries_[(size_t)r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void add_row_multiple(int dst, int src, const BigInt& q); // row dst += q*src
  void add_col_multiple(int dst, int src, const BigInt& q);
  void negate_row(int i);
  void negate_col(int i);

  BigInt determinant() const; // fraction-free elimination; square only
  int rank() const;           // fraction-free Gaussian elimination

  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<BigInt> entries_;
};

/// U*A*V = D with U,V unimodular, D diagonal, nonnegative, d_i | d_{i+1}.
struct SmithDecomposition {
  IntMatrix u, d, v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group: Z^rank + sum Z/d_i, with the classes of
/// distinguished ambient basis vectors. Image coordinates list the rank free
/// coordinates first, then one coordinate per invariant factor (reduced mod
/// that factor).
struct AbelianGroupPresentation {
  int rank = 0;
  std::vector<BigInt> invariant_factors;         // each >= 2, divisibility chain
  std::vector<std::string> generator_labels;     // ambient basis labels
  std::vector<std::vector<BigInt>> generator_images;

  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  /// "0", "Z", "Z^2 + Z/3", ...
  std::string group_str() const;
};

/// Presentation of Z^rows / image(A), rows labeled by row_labels.
AbelianGroupPresentation cokernel(const IntMatrix& a,
                                  const std::vector<std::string>& row_labels);

/// Basis of { x in Z^cols : A x = 0 }.
std::vector<std::vector<BigInt>> kernel(const IntMatrix& a);

/// Rank and invariant factors are a complete isomorphism invariant.
bool groups_isomorphic(const AbelianGroupPresentation& g1,
                       const AbelianGroupPresentation& g2);

} // namespace sepgraph

#endif
