#include "sepgraph/intlin.hpp"

#include <cstdlib>

namespace sepgraph {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0)
        continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int i, int j) {
  for (int c = 0; c < cols_; ++c)
    std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  for (int r = 0; r < rows_; ++r)
    std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const BigInt& q) {
  for (int c = 0; c < cols_; ++c)
    at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const BigInt& q) {
  for (int r = 0; r < rows_; ++r)
    at(r, dst) += q * at(r, src);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c)
    at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int i) {
  for (int r = 0; r < rows_; ++r)
    at(r, i) = -at(r, i);
}

// Bareiss fraction-free elimination; returns (rank, determinant-if-square).
static std::pair<int, BigInt> bareiss(IntMatrix m) {
  int n = m.rows(), c = m.cols();
  BigInt prev = 1;
  int row = 0;
  int sign = 1;
  for (int col = 0; col < c && row < n; ++col) {
    int pivot = -1;
    for (int i = row; i < n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      continue;
    if (pivot != row) {
      m.swap_rows(pivot, row);
      sign = -sign;
    }
    for (int i = row + 1; i < n; ++i) {
      for (int j = col + 1; j < c; ++j)
        m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
      m.at(i, col) = 0;
    }
    prev = m.at(row, col);
    ++row;
  }
  BigInt det = 0;
  if (n == c)
    det = (row == n) ? BigInt(sign) * prev : BigInt(0);
  return {row, det};
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_)
    throw Error(ErrorKind::InvalidParameters, "determinant of non-square matrix");
  if (rows_ == 0)
    return 1;
  return bareiss(*this).second;
}

int IntMatrix::rank() const { return bareiss(*this).first; }

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& x) const {
  std::vector<BigInt> y(rows_, BigInt(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      y[i] += at(i, j) * x[j];
  return y;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  int n = a.rows(), m = a.cols();
  SmithDecomposition s{IntMatrix::identity(n), a, IntMatrix::identity(m)};
  IntMatrix& d = s.d;
  IntMatrix& u = s.u;
  IntMatrix& v = s.v;

  auto row_op = [&](int dst, int src, const BigInt& q) {
    d.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
  };
  auto col_op = [&](int dst, int src, const BigInt& q) {
    d.add_col_multiple(dst, src, q);
    v.add_col_multiple(dst, src, q);
  };

  int t = 0;
  while (t < n && t < m) {
    // pivot: smallest nonzero absolute value in the trailing submatrix
    int pi = -1, pj = -1;
    BigInt best = 0;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j) {
        if (d.at(i, j) == 0)
          continue;
        BigInt mag = abs(d.at(i, j));
        if (pi < 0 || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0)
      break; // trailing submatrix is zero
    if (pi != t) {
      d.swap_rows(pi, t);
      u.swap_rows(pi, t);
    }
    if (pj != t) {
      d.swap_cols(pj, t);
      v.swap_cols(pj, t);
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (d.at(i, t) == 0)
          continue;
        BigInt q = d.at(i, t) / d.at(t, t);
        row_op(i, t, -q);
        if (d.at(i, t) != 0) {
          // remainder smaller than the pivot; promote it
          d.swap_rows(i, t);
          u.swap_rows(i, t);
          clean = false;
        }
      }
      for (int j = t + 1; j < m; ++j) {
        if (d.at(t, j) == 0)
          continue;
        BigInt q = d.at(t, j) / d.at(t, t);
        col_op(j, t, -q);
        if (d.at(t, j) != 0) {
          d.swap_cols(j, t);
          v.swap_cols(j, t);
          clean = false;
        }
      }
    }

    // divisibility: pivot must divide every remaining entry
    bool restart = false;
    for (int i = t + 1; i < n && !restart; ++i)
      for (int j = t + 1; j < m && !restart; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          row_op(t, i, 1);
          restart = true;
        }
    if (restart)
      continue;

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }
  return s;
}

std::string AbelianGroupPresentation::group_str() const {
  if (is_trivial())
    return "0";
  std::string s;
  if (rank == 1)
    s = "Z";
  else if (rank > 1)
    s = "Z^" + std::to_string(rank);
  for (const auto& f : invariant_factors) {
    if (!s.empty())
      s += " + ";
    s += "Z/" + f.str();
  }
  return s;
}

AbelianGroupPresentation cokernel(const IntMatrix& a,
                                  const std::vector<std::string>& row_labels) {
  if ((int)row_labels.size() != a.rows())
    throw Error(ErrorKind::LabelCountMismatch,
                std::to_string(row_labels.size()) + " labels for " +
                    std::to_string(a.rows()) + " rows");
  SmithDecomposition s = smith_normal_form(a);
  int n = a.rows(), m = a.cols();

  // coordinate role per row of D: drop (d=1), torsion (d>=2), free (d=0)
  std::vector<int> free_rows, torsion_rows;
  std::vector<BigInt> factors;
  for (int i = 0; i < n; ++i) {
    BigInt di = (i < m) ? s.d.at(i, i) : BigInt(0);
    if (di == 0)
      free_rows.push_back(i);
    else if (di >= 2) {
      torsion_rows.push_back(i);
      factors.push_back(di);
    }
  }

  AbelianGroupPresentation p;
  p.rank = (int)free_rows.size();
  p.invariant_factors = factors;
  p.generator_labels = row_labels;
  for (int j = 0; j < n; ++j) {
    // class of delta_j in Z^n/im(A) is U*delta_j = column j of U
    std::vector<BigInt> coords;
    for (int i : free_rows)
      coords.push_back(s.u.at(i, j));
    for (size_t k = 0; k < torsion_rows.size(); ++k) {
      BigInt c = s.u.at(torsion_rows[k], j) % factors[k];
      if (c < 0)
        c += factors[k];
      coords.push_back(c);
    }
    p.generator_images.push_back(std::move(coords));
  }
  return p;
}

std::vector<std::vector<BigInt>> kernel(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  int n = a.rows(), m = a.cols();
  std::vector<std::vector<BigInt>> basis;
  for (int j = 0; j < m; ++j) {
    BigInt dj = (j < n) ? s.d.at(j, j) : BigInt(0);
    if (dj != 0)
      continue;
    std::vector<BigInt> x(m);
    for (int i = 0; i < m; ++i)
      x[i] = s.v.at(i, j);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool groups_isomorphic(const AbelianGroupPresentation& g1,
                       const AbelianGroupPresentation& g2) {
  return g1.rank == g2.rank && g1.invariant_factors == g2.invariant_factors;
}

} // namespace sepgraph
