#include <doctest.h>

#include <random>

#include "sepgraph/intlin.hpp"

using namespace sepgraph;

namespace {

IntMatrix make(int r, int c, std::initializer_list<int> vals) {
  IntMatrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = *it++;
  return m;
}

bool unimodular(const IntMatrix& m) {
  BigInt d = m.determinant();
  return d == 1 || d == -1;
}

void certify(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  CHECK(s.u * a * s.v == s.d);
  CHECK(unimodular(s.u));
  CHECK(unimodular(s.v));
  int t = std::min(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j)
        CHECK(s.d.at(i, j) == 0);
  for (int i = 0; i + 1 < t; ++i) {
    CHECK(s.d.at(i, i) >= 0);
    if (s.d.at(i + 1, i + 1) != 0) {
      REQUIRE(s.d.at(i, i) != 0);
      CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
  }
}

} // namespace

TEST_CASE("determinant and rank") {
  CHECK(make(2, 2, {1, 1, -3, -2}).determinant() == 1);
  CHECK(make(2, 2, {1, 1, -2, -2}).determinant() == 0);
  CHECK(make(3, 3, {2, 0, 0, 0, 3, 0, 0, 0, 5}).determinant() == 30);
  CHECK(make(2, 2, {1, 1, -2, -2}).rank() == 1);
  CHECK(make(2, 3, {1, 2, 3, 2, 4, 6}).rank() == 1);
  CHECK(IntMatrix(0, 0).determinant() == 1);
  CHECK_THROWS_AS(make(2, 3, {1, 2, 3, 4, 5, 6}).determinant(), Error);
}

TEST_CASE("smith normal form of known matrices") {
  {
    SmithDecomposition s = smith_normal_form(make(1, 1, {-2}));
    CHECK(s.d.at(0, 0) == 2);
  }
  {
    SmithDecomposition s = smith_normal_form(make(2, 2, {1, 1, -3, -2}));
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 1);
  }
  {
    // classic: diag(2,6) is already in normal form, diag(4,6) is not
    SmithDecomposition s = smith_normal_form(make(2, 2, {4, 0, 0, 6}));
    CHECK(s.d.at(0, 0) == 2);
    CHECK(s.d.at(1, 1) == 12);
  }
  certify(make(3, 2, {2, 4, 6, 8, 10, 12}));
  certify(IntMatrix(2, 3));
  certify(IntMatrix(0, 2));
}

TEST_CASE("cokernel presentations") {
  {
    AbelianGroupPresentation p = cokernel(make(1, 1, {-2}), {"v"});
    CHECK(p.group_str() == "Z/2");
    CHECK(p.generator_images[0].size() == 1);
    CHECK(p.generator_images[0][0] == 1);
  }
  {
    AbelianGroupPresentation p = cokernel(make(2, 2, {1, 1, -3, -2}), {"v", "w"});
    CHECK(p.is_trivial());
    CHECK(p.group_str() == "0");
  }
  {
    AbelianGroupPresentation p = cokernel(make(2, 2, {1, 1, -2, -2}), {"v", "w"});
    CHECK(p.rank == 1);
    CHECK(p.invariant_factors.empty());
    CHECK(p.group_str() == "Z");
  }
  {
    AbelianGroupPresentation p = cokernel(IntMatrix(2, 0), {"v", "w"});
    CHECK(p.group_str() == "Z^2");
  }
  CHECK_THROWS_AS(cokernel(IntMatrix(2, 2), {"v"}), Error);
}

TEST_CASE("mixed free and torsion cokernel") {
  // Z^3 / <(2,0,0),(0,3,0)> = Z/6 + Z (gcd 1 merges the two cyclic parts)
  IntMatrix a = make(3, 2, {2, 0, 0, 3, 0, 0});
  AbelianGroupPresentation p = cokernel(a, {"x", "y", "z"});
  CHECK(p.rank == 1);
  REQUIRE(p.invariant_factors.size() == 1);
  CHECK(p.invariant_factors[0] == 6);
  // z generates the free part, so its image has a unit free coordinate
  CHECK(abs(p.generator_images[2][0]) == 1);
}

TEST_CASE("kernel vectors") {
  IntMatrix a = make(2, 2, {1, 1, -2, -2});
  auto basis = kernel(a);
  REQUIRE(basis.size() == 1);
  auto y = a.apply(basis[0]);
  CHECK(y[0] == 0);
  CHECK(y[1] == 0);
  CHECK(!(basis[0][0] == 0 && basis[0][1] == 0));

  CHECK(kernel(make(2, 2, {1, 1, -3, -2})).empty());
  CHECK(kernel(IntMatrix(0, 2)).size() == 2);
}

TEST_CASE("random SNF certification with cokernel cardinality oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMatrix a(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        a.at(i, j) = entry(rng);
    certify(a);

    if (r == 2 && c == 2 && a.determinant() != 0) {
      // brute-force residue count: D*Z^2 lies in the image, so classes of
      // the box [0,D)^2 are equidistributed; b is in the image iff
      // adj(A)*b == 0 mod D
      BigInt D = abs(a.determinant());
      long d = (long)D;
      long in_image = 0;
      for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y) {
          BigInt r0 = a.at(1, 1) * x - a.at(0, 1) * y;
          BigInt r1 = -a.at(1, 0) * x + a.at(0, 0) * y;
          if (r0 % D == 0 && r1 % D == 0)
            ++in_image;
        }
      REQUIRE(in_image > 0);
      BigInt classes = D * D / in_image;
      AbelianGroupPresentation p = cokernel(a, {"x", "y"});
      CHECK(p.rank == 0);
      BigInt order = 1;
      for (const BigInt& f : p.invariant_factors)
        order *= f;
      CHECK(order == classes);
      CHECK(classes == D);
    }
  }
}

TEST_CASE("group isomorphism invariant") {
  AbelianGroupPresentation a = cokernel(make(1, 1, {-2}), {"v"});
  AbelianGroupPresentation b = cokernel(make(1, 1, {2}), {"w"});
  CHECK(groups_isomorphic(a, b));
  AbelianGroupPresentation c = cokernel(make(1, 1, {3}), {"w"});
  CHECK(!groups_isomorphic(a, c));
}
