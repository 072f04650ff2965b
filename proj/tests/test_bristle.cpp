#include "kronbrist/bristle.hpp"
#include "kronbrist/families.hpp"
#include "kronbrist/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace kronbrist;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);
const FieldSpec gf3 = FieldSpec::prime(3);
const FieldSpec gf5 = FieldSpec::prime(5);
const FieldSpec qq = FieldSpec::rationals();

std::vector<std::string> names(const std::vector<BristlePoint>& points) {
  std::vector<std::string> out;
  for (const BristlePoint& p : points) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_SUITE("bristle") {
  TEST_CASE("points normalize and reject zero") {
    const BristlePoint p = BristlePoint::from_ints(gf5, {0, 2, 4});
    CHECK(p.to_string() == "(0:1:2)");
    CHECK(p == BristlePoint::from_ints(gf5, {0, 3, 1}));
    CHECK(BristlePoint::from_ints(qq, {0, -2, 3}).to_string() == "(0:1:-3/2)");
    CHECK_THROWS_AS(BristlePoint::from_ints(gf5, {0, 0, 5}), std::invalid_argument);
  }

  TEST_CASE("bristle modules") {
    const KroneckerModule b1 = bristle(BristlePoint::from_ints(gf5, {1, 0, 0}));
    CHECK(b1.dims() == DimensionVector{1, 1});
    CHECK(b1.alpha(0).at(0, 0).is_one());
    CHECK(b1.alpha(1).is_zero());
    CHECK(bristle(BristlePoint::from_ints(gf5, {0, 1, 1})) == bristle(bristle_point(3, gf5, 2, 3)));
    CHECK(bristle(BristlePoint::from_ints(gf5, {0, 2, 2})) == bristle(bristle_point(3, gf5, 2, 3)));
  }

  TEST_CASE("canonical sets") {
    CHECK(names(canonical_set(CanonicalSet::b0, 3, gf5)) ==
          std::vector<std::string>{"(0:1:0)", "(0:0:1)", "(1:1:0)", "(0:1:1)", "(1:0:1)"});
    const auto b0p = canonical_set(CanonicalSet::b0_prime, 3, gf5);
    CHECK(b0p.size() == 4);
    CHECK(std::find(b0p.begin(), b0p.end(), bristle_point(3, gf5, 2, 3)) == b0p.end());
    CHECK(names(canonical_set(CanonicalSet::b1_prime, 3, gf5)) ==
          std::vector<std::string>{"(1:0:0)", "(1:1:0)", "(0:1:1)", "(1:0:1)"});
    for (std::size_t n : {4u, 5u}) {
      CHECK(canonical_set(CanonicalSet::b0, n, gf5).size() == n + 2);
      CHECK(canonical_set(CanonicalSet::b0_prime, n, gf5).size() == n + 1);
      CHECK(canonical_set(CanonicalSet::b1_prime, n, gf5).size() == n + 1);
    }
    CHECK_THROWS_AS(canonical_set(CanonicalSet::b0, 2, gf5), std::invalid_argument);
  }

  TEST_CASE("enumeration matches an exhaustive scaling oracle") {
    CHECK(enumerate_bristles(2, gf2).size() == 3);
    CHECK(enumerate_bristles(3, gf2).size() == 7);
    CHECK(enumerate_bristles(2, gf3).size() == 4);
    CHECK(enumerate_bristles(3, gf5).size() == 31);
    CHECK_THROWS_AS(enumerate_bristles(3, qq), std::invalid_argument);

    // Classes of nonzero vectors of GF(3)^3 under scaling, computed directly.
    std::set<std::vector<int>> classes;
    for (int a = 0; a < 3; ++a)
      for (int bb = 0; bb < 3; ++bb)
        for (int c = 0; c < 3; ++c) {
          if (a == 0 && bb == 0 && c == 0) continue;
          std::vector<int> v{a, bb, c}, w{(2 * a) % 3, (2 * bb) % 3, (2 * c) % 3};
          classes.insert(std::min(v, w));
        }
    const auto points = enumerate_bristles(3, gf3);
    CHECK(points.size() == classes.size());
    std::set<std::string> distinct;
    for (const BristlePoint& p : points) distinct.insert(p.to_string());
    CHECK(distinct.size() == points.size());
    CHECK(std::is_sorted(points.begin(), points.end(), [](const BristlePoint& x, const BristlePoint& y) {
      std::vector<std::uint32_t> a, c;
      for (const Scalar& s : x.coords()) a.push_back(s.residue());
      for (const Scalar& s : y.coords()) c.push_back(s.residue());
      return a < c;
    }));
  }

  TEST_CASE("bristles are pairwise orthogonal bricks with Ext^1(B,B) = n-1") {
    for (FieldSpec f : {gf2, gf3}) {
      const auto all = bristle_modules(enumerate_bristles(3, f));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) CHECK(hom_dim(all[i], all[j]) == (i == j ? 1u : 0u));
    }
    for (FieldSpec f : {gf2, gf3, gf5})
      for (const KroneckerModule& x : bristle_modules(enumerate_bristles(3, f))) {
        CHECK(ext1_dim(x, x) == 2);
        CHECK(ext1_dim_via_resolution(x, x) == 2);
      }
  }

  TEST_CASE("bristle vectors") {
    const KroneckerModule b1 = bristle(bristle_point(3, gf5, 1));
    CHECK(is_bristle_vector(b1, {Scalar(gf5, 3LL)}));
    CHECK_THROWS_AS(is_bristle_vector(b1, {Scalar::zero(gf5)}), std::invalid_argument);
    const KroneckerModule p1 = KroneckerModule::projective1(3, gf5);
    CHECK_FALSE(is_bristle_vector(p1, {Scalar::one(gf5)}));
    for (std::size_t t = 1; t <= 4; ++t) {
      const KroneckerModule it = n2_preinjective(t, gf5);
      for (const auto& c : n2_parameters(gf5)) CHECK(is_bristle_vector(it, n2_bristle_generator(t, gf5, c)));
    }
  }

  TEST_CASE("bristle variety examples") {
    const BristlePoint p = BristlePoint::from_ints(gf5, {1, 2, 3});
    const auto single = bristle_variety(bristle(p));
    REQUIRE(single.size() == 1);
    CHECK(single[0].type == p);
    CHECK(bristle_variety(KroneckerModule::simple2(3, gf5)).empty());
    const auto two = bristle_variety(direct_sum(bristle(bristle_point(3, gf5, 1)), bristle(bristle_point(3, gf5, 2))));
    REQUIRE(two.size() == 2);
    CHECK(two[0].type.to_string() == "(0:1:0)");
    CHECK(two[1].type.to_string() == "(1:0:0)");
    CHECK_THROWS_AS(bristle_variety(bristle(BristlePoint::from_ints(qq, {1, 0, 0}))), std::invalid_argument);
  }

  TEST_CASE("bristle variety agrees with a GF(2) scan of all lines") {
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
      const KroneckerModule m = random_module(3, gf2, rng.between(1, 4), rng.between(1, 3), rng);
      // Lines of M1 modulo the common kernel whose images span a line.
      Matrix stacked = Matrix::vstack(m.alphas(), gf2, m.dim1());
      const auto common = oracle::kernel_set(stacked);
      std::set<std::set<oracle::Bits>> cosets;
      for (oracle::Bits u = 1; u < (oracle::Bits{1} << m.dim1()); ++u) {
        if (common.count(u)) continue;
        const Vector vu = oracle::from_bits(u, m.dim1());
        std::vector<oracle::Bits> images;
        for (const Matrix& a : m.alphas()) images.push_back(oracle::to_bits(a.apply(vu)));
        if (oracle::span_set(images).size() != 2) continue;
        std::set<oracle::Bits> coset;
        for (oracle::Bits k : common) coset.insert(u ^ k);
        cosets.insert(coset);
      }
      CHECK(bristle_variety(m).size() == cosets.size());
    }
  }

  TEST_CASE("maximal bristled submodule examples") {
    const KroneckerModule s1 = KroneckerModule::simple1(3, gf5);
    CHECK(maximal_bristled_submodule(s1) == whole_module(s1));
    const KroneckerModule p1 = KroneckerModule::projective1(3, gf5);
    const SubmodulePair mb = maximal_bristled_submodule(p1);
    CHECK(mb.u1.is_zero());
    CHECK(mb.u2.is_full());
    CHECK_FALSE(is_bristled(p1));
    for (FieldSpec f : {gf2, gf3})
      for (std::size_t t = 0; t <= 4; ++t) CHECK(is_bristled(preinjective(2, t, f)) == (t <= f.cardinality()));
  }

  TEST_CASE("saturation examples") {
    for (std::size_t t = 0; t <= 4; ++t) CHECK(is_saturated(preinjective(3, t, gf5)));
    CHECK_FALSE(is_saturated(KroneckerModule::simple2(3, gf5)));
    const KroneckerModule b1 = bristle(bristle_point(3, gf5, 1));
    CHECK_FALSE(is_saturated(ar_translate_power(b1, 1)));
    CHECK(is_saturated(ar_translate_power(b1, 2)));
    CHECK_THROWS_AS(is_saturated(bristle(BristlePoint::from_ints(qq, {1, 0, 0}))), std::invalid_argument);
    CHECK(is_saturated_against({bristle(BristlePoint::from_ints(qq, {1, 0, 0}))}, preinjective(3, 2, qq)));
  }

  TEST_CASE("the (3,2) fixture pair") {
    for (FieldSpec f : {gf2, gf5}) {
      const KroneckerModule left = zigzag_bristled_fixture(f), right = star_unbristled_fixture(f);
      CHECK(left.dims() == DimensionVector{3, 2});
      CHECK(right.dims() == DimensionVector{3, 2});
      CHECK(is_bristled(left));
      CHECK_FALSE(is_bristled(right));
      CHECK(end_dim(left) == 1);
    }
  }

  TEST_CASE("bristled indecomposables: |top| >= |soc| and homogeneous socle") {
    std::vector<KroneckerModule> fixtures{zigzag_bristled_fixture(gf5)};
    for (std::size_t n : {2u, 3u})
      for (std::size_t t = 0; t <= 3; ++t) fixtures.push_back(preinjective(n, t, gf5));
    for (const KroneckerModule& m : fixtures) {
      REQUIRE(is_bristled(m));
      const Layers l = layers(m);
      CHECK(l.top_dims.a + l.top_dims.b >= l.soc_dims.a + l.soc_dims.b);
      CHECK((l.soc_dims.a == 0 || l.soc_dims.b == 0));
    }
  }
}
