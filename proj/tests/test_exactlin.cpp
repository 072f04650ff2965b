#include "kronbrist/matrix.hpp"
#include "kronbrist/rng.hpp"
#include "kronbrist/subspace.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kronbrist;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);
const FieldSpec gf5 = FieldSpec::prime(5);
const FieldSpec qq = FieldSpec::rationals();

Matrix ints(FieldSpec f, std::size_t r, std::size_t c, std::initializer_list<long long> e) {
  const std::vector<long long> v(e);
  return Matrix::from_ints(f, r, c, v);
}

Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.scalar(f));
  return m;
}

Subspace random_subspace(FieldSpec f, std::size_t d, Rng& rng) {
  return Subspace::row_span(random_matrix(f, rng.between(0, d), d, rng));
}

}  // namespace

TEST_SUITE("exactlin") {
  TEST_CASE("field construction and canonical scalars") {
    CHECK_THROWS_AS(FieldSpec::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::prime(2147483648ULL), std::invalid_argument);
    CHECK(FieldSpec::prime(2147483647ULL).characteristic() == 2147483647U);
    CHECK(gf5.cardinality() == 5);
    CHECK(Scalar(gf5, -1LL).residue() == 4);
    CHECK((Scalar(gf5, 2LL) * Scalar(gf5, 3LL)).residue() == 1);
    CHECK(Scalar(gf5, 3LL).inverse() == Scalar(gf5, 2LL));
    CHECK(Scalar(qq, Rational(6) / Rational(-4)).to_string() == "-3/2");
    CHECK((Scalar(qq, Rational(1, 3)) + Scalar(qq, Rational(1, 6))).to_string() == "1/2");
    CHECK_THROWS(Scalar::zero(gf5).inverse());
  }

  TEST_CASE("large prime arithmetic does not overflow") {
    const FieldSpec big = FieldSpec::prime(2147483647ULL);
    const Scalar a(big, 2147483646LL);
    CHECK((a * a).is_one());  // (-1)^2
    CHECK((a + a).residue() == 2147483645U);
    CHECK((a * a.inverse()).is_one());
  }

  TEST_CASE("rref examples") {
    const RrefResult id = rref(Matrix::identity(gf5, 3));
    CHECK(id.reduced == Matrix::identity(gf5, 3));
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1, 2});
    CHECK(id.rank == 3);

    const RrefResult z = rref(Matrix::zeros(qq, 2, 4));
    CHECK(z.rank == 0);
    CHECK(z.pivot_cols.empty());
    CHECK(z.reduced.is_zero());

    const RrefResult r = rref(ints(gf5, 2, 2, {1, 2, 2, 4}));
    CHECK(r.reduced == ints(gf5, 2, 2, {1, 2, 0, 0}));
    CHECK(r.rank == 1);

    CHECK(rref(Matrix::zeros(gf5, 0, 3)).rank == 0);
    CHECK(rref(Matrix::zeros(gf5, 3, 0)).rank == 0);
  }

  TEST_CASE("rref over the rationals keeps lowest terms") {
    const RrefResult r = rref(ints(qq, 2, 3, {2, 4, 1, 3, 6, 5}));
    CHECK(r.rank == 2);
    CHECK(r.reduced.at(0, 1).to_string() == "2");
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 2});
  }

  TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(gf5, 3)).is_zero());
    CHECK(kernel_basis(Matrix::zeros(qq, 2, 4)).is_full());
    const Matrix a = ints(gf2, 1, 3, {1, 1, 0});
    const Subspace k = kernel_basis(a);
    CHECK(k.dim() == 2);
    CHECK(k.contains(oracle::from_bits(0b011, 3)));
    CHECK(k.contains(oracle::from_bits(0b100, 3)));
    CHECK(oracle::kernel_set(a).size() == 4);
  }

  TEST_CASE("solve examples") {
    Rng rng(1);
    const Vector b{Scalar(gf5, 1LL), Scalar(gf5, 4LL), Scalar(gf5, 2LL)};
    CHECK(solve(Matrix::identity(gf5, 3), b) == b);
    CHECK_FALSE(solve(Matrix::zeros(gf5, 1, 1), Vector{Scalar(gf5, 1LL)}).has_value());
    const auto x = solve(ints(gf5, 1, 1, {2}), Vector{Scalar(gf5, 3LL)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(gf5, 4LL));
    CHECK_THROWS_AS(solve(Matrix::identity(gf5, 2), b), std::invalid_argument);
    // free variables are set to zero
    const auto y = solve(ints(qq, 1, 2, {0, 2}), Vector{Scalar(qq, 1LL)});
    REQUIRE(y.has_value());
    CHECK((*y)[0].is_zero());
    CHECK((*y)[1].to_string() == "1/2");
  }

  TEST_CASE("subspace sum and intersection examples") {
    const Subspace u = Subspace::span(gf2, 2, {oracle::from_bits(0b01, 2)});
    const Subspace v = Subspace::span(gf2, 2, {oracle::from_bits(0b11, 2)});
    CHECK(subspace_sum(u, v).is_full());
    CHECK(subspace_sum(u, Subspace::zero(gf2, 2)) == u);
    CHECK(subspace_sum(u, u) == u);
    CHECK(subspace_intersection(u, Subspace::full(gf2, 2)) == u);
    CHECK(subspace_intersection(Subspace::span(gf2, 2, {oracle::from_bits(0b01, 2)}),
                                Subspace::span(gf2, 2, {oracle::from_bits(0b10, 2)}))
              .is_zero());
    CHECK_THROWS_AS(subspace_sum(u, Subspace::zero(gf2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(subspace_intersection(u, Subspace::zero(gf2, 3)), std::invalid_argument);
  }

  TEST_CASE("two generic planes in GF(5)^3 meet in a line, as a full scan confirms") {
    const Subspace u = Subspace::row_span(ints(gf5, 2, 3, {1, 0, 2, 0, 1, 3}));
    const Subspace v = Subspace::row_span(ints(gf5, 2, 3, {1, 1, 0, 0, 1, 1}));
    const Subspace w = subspace_intersection(u, v);
    CHECK(w.dim() == 1);
    std::size_t common = 0;
    for (long long a = 0; a < 5; ++a)
      for (long long b = 0; b < 5; ++b)
        for (long long c = 0; c < 5; ++c) {
          const Vector x{Scalar(gf5, a), Scalar(gf5, b), Scalar(gf5, c)};
          const bool in_both = u.contains(x) && v.contains(x);
          CHECK(in_both == w.contains(x));
          common += in_both;
        }
    CHECK(common == 5);
  }

  TEST_CASE("GF(2) sum and intersection agree with the exhaustive set oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t d = rng.between(1, 6);
      const Subspace u = random_subspace(gf2, d, rng), v = random_subspace(gf2, d, rng);
      std::vector<oracle::Bits> gu, gv;
      for (std::size_t r = 0; r < u.dim(); ++r) gu.push_back(oracle::to_bits(u.basis().row(r)));
      for (std::size_t r = 0; r < v.dim(); ++r) gv.push_back(oracle::to_bits(v.basis().row(r)));
      const auto su = oracle::span_set(gu), sv = oracle::span_set(gv);
      std::vector<oracle::Bits> both = gu;
      both.insert(both.end(), gv.begin(), gv.end());
      const auto ssum = oracle::span_set(both);
      std::set<oracle::Bits> sint;
      for (oracle::Bits x : su)
        if (sv.count(x)) sint.insert(x);

      const Subspace sum = subspace_sum(u, v), inter = subspace_intersection(u, v);
      CHECK((std::size_t{1} << sum.dim()) == ssum.size());
      CHECK((std::size_t{1} << inter.dim()) == sint.size());
      for (oracle::Bits x = 0; x < (oracle::Bits{1} << d); ++x) {
        const Vector vx = oracle::from_bits(x, d);
        CHECK(sum.contains(vx) == (ssum.count(x) == 1));
        CHECK(inter.contains(vx) == (sint.count(x) == 1));
      }
    }
  }

  TEST_CASE("GF(2) kernels agree with exhaustive search") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix a = random_matrix(gf2, rng.between(0, 4), rng.between(1, 6), rng);
      const auto brute = oracle::kernel_set(a);
      const Subspace k = kernel_basis(a);
      CHECK((std::size_t{1} << k.dim()) == brute.size());
      for (oracle::Bits x : brute) CHECK(k.contains(oracle::from_bits(x, a.cols())));
    }
  }

  TEST_CASE("properties: idempotent rref, rank-nullity, modularity, canonicality") {
    for (FieldSpec f : {gf2, gf5, FieldSpec::prime(7), qq}) {
      Rng rng(f.characteristic() + 11);
      for (int trial = 0; trial < 60; ++trial) {
        const Matrix a = random_matrix(f, rng.between(0, 5), rng.between(0, 5), rng);
        const RrefResult r = rref(a);
        CHECK(rref(r.reduced).reduced == r.reduced);
        CHECK(r.rank + kernel_basis(a).dim() == a.cols());
        CHECK(Subspace::row_span(a) == Subspace::row_span(r.reduced));

        const std::size_t d = rng.between(1, 5);
        const Subspace u = random_subspace(f, d, rng), v = random_subspace(f, d, rng);
        CHECK(subspace_sum(u, v).dim() + subspace_intersection(u, v).dim() == u.dim() + v.dim());

        // A different spanning set of the same space gives the same basis.
        Matrix mixed = random_matrix(f, u.dim() + 2, u.dim(), rng) * u.basis();
        if (u.dim() > 0) {
          const Matrix twice = Matrix::vstack({mixed, u.basis()}, f, d);
          CHECK(Subspace::row_span(twice) == u);
        }
      }
    }
  }

  TEST_CASE("solve returns a solution whenever one exists") {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix a = random_matrix(gf5, rng.between(1, 4), rng.between(1, 4), rng);
      Vector x;
      for (std::size_t k = 0; k < a.cols(); ++k) x.push_back(rng.scalar(gf5));
      const Vector b = a.apply(x);
      const auto y = solve(a, b);
      REQUIRE(y.has_value());
      CHECK(a.apply(*y) == b);
    }
  }

  TEST_CASE("preimage, image and quotient coordinates") {
    const Matrix a = ints(gf5, 2, 3, {1, 0, 0, 0, 1, 0});
    CHECK(image(a).is_full());
    CHECK(preimage(a, Subspace::zero(gf5, 2)) == kernel_basis(a));
    const Subspace u = Subspace::span(gf5, 3, {Vector{Scalar(gf5, 1LL), Scalar(gf5, 1LL), Scalar::zero(gf5)}});
    const QuotientCoordinates qc = quotient_coordinates(u);
    CHECK(qc.projection.rows() == 2);
    CHECK(qc.section.cols() == 2);
    CHECK((qc.projection * qc.section) == Matrix::identity(gf5, 2));
    CHECK((qc.projection * u.basis_columns()).is_zero());
  }

  TEST_CASE("matrix helpers") {
    const Matrix a = ints(gf5, 2, 2, {1, 2, 3, 4});
    CHECK(Matrix::unvec(a.vec(), 2, 2) == a);
    CHECK(a.transpose().transpose() == a);
    CHECK(Matrix::kronecker(Matrix::identity(gf5, 2), a).rows() == 4);
    CHECK(Matrix::block_diag(a, a).block(2, 2, 2, 2) == a);
    CHECK(is_invertible(a));
    CHECK_FALSE(is_invertible(ints(gf5, 2, 2, {1, 2, 2, 4})));
    CHECK_THROWS(a * Matrix::identity(gf5, 3));
    CHECK_THROWS(a + Matrix::identity(FieldSpec::prime(7), 2));
  }
}
