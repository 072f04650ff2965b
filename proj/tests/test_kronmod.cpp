#include "kronbrist/bristle.hpp"
#include "kronbrist/families.hpp"
#include "kronbrist/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kronbrist;

namespace {

const FieldSpec gf2 = FieldSpec::prime(2);
const FieldSpec gf3 = FieldSpec::prime(3);
const FieldSpec gf5 = FieldSpec::prime(5);
const FieldSpec qq = FieldSpec::rationals();

KroneckerModule b(std::size_t n, FieldSpec f, std::size_t r) { return bristle(bristle_point(n, f, r)); }

bool iso(const KroneckerModule& x, const KroneckerModule& y) {
  return find_isomorphism(x, y).status == IsoResult::Status::verified_iso;
}

}  // namespace

TEST_SUITE("kronmod") {
  TEST_CASE("construction validates shapes") {
    CHECK_THROWS_AS(KroneckerModule(2, gf5, 1, 1, {Matrix::identity(gf5, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(KroneckerModule(1, gf5, 2, 1, {Matrix::identity(gf5, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(KroneckerModule(1, gf5, 1, 1, {Matrix::identity(gf3, 1)}), std::invalid_argument);
    CHECK_THROWS_AS(KroneckerModule(0, gf5, 0, 0, {}), std::invalid_argument);
    CHECK(KroneckerModule::projective1(3, gf5).dims() == DimensionVector{1, 3});
    CHECK(KroneckerModule::injective2(3, gf5).dims() == DimensionVector{3, 1});
  }

  TEST_CASE("Euler form examples") {
    CHECK(euler_form({1, 1}, {1, 1}, 3) == -1);
    CHECK(euler_form({1, 1}, {8, 3}, 3) == 2);
    CHECK(euler_form({1, 1}, {21, 8}, 3) == 5);
    CHECK(euler_form({1, 0}, {0, 1}, 3) == -3);
  }

  TEST_CASE("Coxeter transformation examples") {
    CHECK(coxeter_apply({1, 0}, 3, 1) == DimensionVector{8, 3});
    CHECK(coxeter_apply({1, 1}, 3, 1) == DimensionVector{5, 2});
    CHECK(coxeter_apply({1, 1}, 4, 1) == DimensionVector{11, 3});
    // Hand iteration of Phi(a,b) = (8a - 3b, 3a - b) for n = 3.
    CHECK(coxeter_apply({3, 1}, 3, 1) == DimensionVector{21, 8});
    CHECK(coxeter_apply({8, 3}, 3, 1) == DimensionVector{55, 21});
    CHECK(coxeter_apply({5, 2}, 3, 1) == DimensionVector{34, 13});
    for (std::size_t n : {2u, 3u, 4u})
      for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t bb = -3; bb <= 3; ++bb) {
          const DimensionVector x{a, bb};
          CHECK(coxeter_apply(coxeter_apply(x, n, 1), n, -1) == x);
          CHECK(coxeter_apply(x, n, 3) == coxeter_apply(coxeter_apply(x, n, 2), n, 1));
        }
    CHECK_THROWS_AS(coxeter_apply({1, 0}, 1000, 40), std::overflow_error);
  }

  TEST_CASE("Hom examples") {
    CHECK(hom_dim(b(3, gf5, 1), b(3, gf5, 1)) == 1);
    CHECK(hom_dim(b(3, gf5, 1), b(3, gf5, 2)) == 0);
    CHECK(hom_dim(b(3, gf5, 1), preinjective(3, 2, gf5)) == 2);
    CHECK_THROWS_AS(hom_dim(b(3, gf5, 1), b(3, gf3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(hom_dim(b(3, gf5, 1), b(2, gf5, 1)), std::invalid_argument);
  }

  TEST_CASE("Hom dimensions agree with brute-force enumeration over GF(2) and GF(3)") {
    for (FieldSpec f : {gf2, gf3}) {
      Rng rng(f.characteristic() * 101);
      int checked = 0;
      while (checked < 80) {
        const std::size_t n = rng.between(1, 3);
        const KroneckerModule m = random_module(n, f, rng.between(0, 2), rng.between(0, 2), rng);
        const KroneckerModule x = random_module(n, f, rng.between(0, 2), rng.between(0, 2), rng);
        if (m.dim1() * x.dim1() + m.dim2() * x.dim2() > (f == gf2 ? 10u : 6u)) continue;
        CHECK(hom_dim(m, x) == oracle::hom_dim_bruteforce(m, x));
        ++checked;
      }
    }
  }

  TEST_CASE("every Hom basis element intertwines") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const KroneckerModule m = random_module(3, gf5, rng.between(0, 3), rng.between(0, 3), rng);
      const KroneckerModule x = random_module(3, gf5, rng.between(0, 3), rng.between(0, 3), rng);
      for (const Morphism& f : hom_basis(m, x)) CHECK(f.intertwines());
    }
    for (const Morphism& f : hom_basis(b(3, gf5, 1), preinjective(3, 3, gf5))) CHECK(f.intertwines());
  }

  TEST_CASE("Ext examples") {
    const KroneckerModule b1 = b(3, gf5, 1);
    CHECK(ext1_dim(b1, b1) == 2);
    CHECK(ext1_dim_via_resolution(b1, b1) == 2);
    CHECK(ext1_dim(b1, preinjective(3, 3, gf5)) == 0);
    CHECK(ext1_dim(b1, ar_translate(b1, Translate::tau)) == 1);
    const KroneckerModule s1 = KroneckerModule::simple1(3, gf5), s2 = KroneckerModule::simple2(3, gf5);
    CHECK(ext1_dim_via_resolution(s1, s2) == 3);
    CHECK(ext1_dim(s1, s2) == 3);
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      const KroneckerModule x = random_module(3, gf5, rng.between(0, 3), rng.between(0, 3), rng);
      CHECK(ext1_dim_via_resolution(KroneckerModule::projective1(3, gf5), x) == 0);
      CHECK(ext1_dim(KroneckerModule::projective1(3, gf5), x) == 0);
    }
  }

  TEST_CASE("Euler-form Ext agrees with the resolution oracle on random pairs") {
    for (FieldSpec f : {gf5, gf2, qq}) {
      Rng rng(f.characteristic() + 99);
      for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = rng.between(1, 4);
        const KroneckerModule m = random_module(n, f, rng.between(0, 4), rng.between(0, 4), rng);
        const KroneckerModule x = random_module(n, f, rng.between(0, 4), rng.between(0, 4), rng);
        const std::size_t e = ext1_dim(m, x);
        CHECK(e == ext1_dim_via_resolution(m, x));
        CHECK(static_cast<std::int64_t>(hom_dim(m, x)) - static_cast<std::int64_t>(e) ==
              euler_form(m.dims(), x.dims(), n));
      }
    }
  }

  TEST_CASE("trace and generation examples") {
    const KroneckerModule b1 = b(3, gf5, 1);
    CHECK(trace_submodule({b1}, b1) == whole_module(b1));
    CHECK(is_generated_by(bristle_modules(canonical_set(CanonicalSet::b0, 3, gf5)), preinjective(3, 2, gf5)));
    for (const BristlePoint& p : enumerate_bristles(3, gf3))
      CHECK(is_generated_by({bristle(p)}, KroneckerModule::simple1(3, gf3)));
    CHECK_FALSE(is_generated_by({b1}, KroneckerModule::projective1(3, gf5)));
    CHECK(trace_submodule({b1}, KroneckerModule::projective1(3, gf5)).u1.is_zero());
    const KroneckerModule i2 = preinjective(3, 2, gf5);
    CHECK(is_generated_by({i2}, i2));
  }

  TEST_CASE("trace is closed and monotone") {
    Rng rng(8);
    const auto all = bristle_modules(enumerate_bristles(3, gf2));
    for (int trial = 0; trial < 30; ++trial) {
      const KroneckerModule m = random_module(3, gf2, rng.between(0, 4), rng.between(0, 3), rng);
      const SubmodulePair small = trace_submodule({all[trial % all.size()]}, m);
      const SubmodulePair big = trace_submodule({all[trial % all.size()], all[(trial + 3) % all.size()]}, m);
      CHECK(is_submodule(m, small));
      CHECK(is_submodule(m, big));
      CHECK(submodule_contains(big, small));
    }
  }

  TEST_CASE("AR translation examples") {
    const KroneckerModule s1 = KroneckerModule::simple1(3, gf5);
    const KroneckerModule ts1 = ar_translate(s1, Translate::tau);
    CHECK(ts1.dims() == DimensionVector{8, 3});
    CHECK(iso(ts1, preinjective(3, 2, gf5)));
    CHECK(ar_translate(KroneckerModule::projective1(3, gf5), Translate::tau).is_zero());
    CHECK(ar_translate(KroneckerModule::simple2(3, gf5), Translate::tau).is_zero());
    CHECK(ar_translate(KroneckerModule::injective2(3, gf5), Translate::tau_inverse).is_zero());
    CHECK(ar_translate(b(3, gf5, 1), Translate::tau).dims() == DimensionVector{5, 2});
  }

  TEST_CASE("AR translation: dimension law, round trips and additivity") {
    for (FieldSpec f : {gf5, qq}) {
      for (std::size_t n : {2u, 3u}) {
        std::vector<KroneckerModule> fixtures;
        for (std::size_t t = 0; t <= 3; ++t) fixtures.push_back(preinjective(n, t, f));
        fixtures.push_back(b(n, f, 1));
        fixtures.push_back(ar_translate_power(b(n, f, 1), 2));
        for (const KroneckerModule& m : fixtures) {
          const KroneckerModule t = ar_translate(m, Translate::tau);
          CHECK(t.dims() == coxeter_apply(m.dims(), n, 1));
          CHECK(iso(ar_translate(t, Translate::tau_inverse), m));
        }
      }
    }
    const KroneckerModule b1 = b(3, gf5, 1), b2 = b(3, gf5, 2);
    CHECK(iso(ar_translate(direct_sum(b1, b2), Translate::tau),
              direct_sum(ar_translate(b1, Translate::tau), ar_translate(b2, Translate::tau))));
    // The Auslander-Reiten formula Ext^1(M, X) = D Hom(X, tau M).
    Rng rng(4);
    const KroneckerModule tb = ar_translate(b1, Translate::tau);
    for (int trial = 0; trial < 40; ++trial) {
      const KroneckerModule x = random_module(3, gf5, rng.between(0, 3), rng.between(0, 3), rng);
      CHECK(ext1_dim_via_resolution(b1, x) == hom_dim(x, tb));
    }
  }

  TEST_CASE("Hom(tau^t B, B') vanishes for bristles, t = 1, 2") {
    const auto all = bristle_modules(enumerate_bristles(3, gf5));
    for (std::int64_t t : {1, 2})
      for (const KroneckerModule& x : all) {
        const KroneckerModule tx = ar_translate_power(x, t);
        for (const KroneckerModule& y : all) CHECK(hom_dim(tx, y) == 0);
      }
  }

  TEST_CASE("duality") {
    CHECK(dual(KroneckerModule::simple1(3, gf5)) == KroneckerModule::simple2(3, gf5));
    CHECK(dual(b(3, gf5, 2)) == b(3, gf5, 2));
    CHECK(dual(preinjective(3, 2, gf5)).dims() == DimensionVector{3, 8});
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
      const KroneckerModule m = random_module(3, qq, rng.between(0, 3), rng.between(0, 3), rng);
      CHECK(dual(dual(m)) == m);
    }
  }

  TEST_CASE("layers") {
    const Layers s1 = layers(KroneckerModule::simple1(3, gf5));
    CHECK(s1.soc_dims == DimensionVector{1, 0});
    CHECK(s1.top_dims == DimensionVector{1, 0});
    const Layers i1 = layers(preinjective(3, 1, gf5));
    CHECK(i1.soc_dims == DimensionVector{0, 1});
    const Layers i3 = layers(preinjective(3, 3, gf5));
    CHECK(i3.top_dims.a + i3.top_dims.b == 21);
  }

  TEST_CASE("faithfulness") {
    CHECK_FALSE(is_faithful(KroneckerModule::simple1(3, gf5)));
    CHECK_FALSE(is_faithful(b(3, gf5, 1)));
    CHECK(is_faithful(preinjective(3, 2, gf5)));
    CHECK(is_faithful(b(1, gf5, 1)));
  }

  TEST_CASE("endomorphism dimensions") {
    CHECK(end_dim(KroneckerModule::simple1(3, gf5)) == 1);
    CHECK(end_dim(direct_sum(b(3, gf5, 1), b(3, gf5, 1))) == 4);
    CHECK(end_dim(preinjective(3, 2, gf5)) == 1);
  }

  TEST_CASE("direct sums") {
    const KroneckerModule b1 = b(3, gf5, 1), b2 = b(3, gf5, 2);
    CHECK(direct_sum(b1, KroneckerModule::zero(3, gf5)) == b1);
    CHECK(direct_sum(b1, b2).dims() == DimensionVector{2, 2});
    const KroneckerModule i2 = preinjective(3, 2, gf5);
    CHECK(hom_dim(direct_sum(b1, b2), i2) == hom_dim(b1, i2) + hom_dim(b2, i2));
    CHECK_THROWS_AS(direct_sum(b1, b(3, gf3, 1)), std::invalid_argument);
  }

  TEST_CASE("quotients") {
    const KroneckerModule b1 = b(3, gf5, 1);
    CHECK(iso(quotient(b1, zero_submodule(b1)).module, b1));
    const SubmodulePair soc{Subspace::zero(gf5, 1), Subspace::full(gf5, 1)};
    CHECK(quotient(b1, soc).module == KroneckerModule::simple1(3, gf5));
    const KroneckerModule i1 = preinjective(3, 1, gf5);
    const Quotient q = quotient(i1, layers(i1).socle);
    CHECK(q.module.dims() == DimensionVector{3, 0});
    CHECK(q.projection.intertwines());
    const SubmodulePair bad{Subspace::full(gf5, 1), Subspace::zero(gf5, 1)};
    CHECK_THROWS_WITH_AS(quotient(b1, bad), "not a submodule", std::invalid_argument);
  }

  TEST_CASE("isomorphism search is tri-state") {
    const KroneckerModule i2 = preinjective(3, 2, gf5);
    const IsoResult self = find_isomorphism(i2, i2);
    CHECK(self.status == IsoResult::Status::verified_iso);
    REQUIRE(self.iso.has_value());
    CHECK(self.iso->is_isomorphism());
    CHECK(self.iso->intertwines());
    CHECK(find_isomorphism(b(3, gf5, 1), b(3, gf5, 2)).status == IsoResult::Status::verified_non_iso);
    CHECK(find_isomorphism(b(3, gf5, 1), i2).status == IsoResult::Status::verified_non_iso);
    CHECK(std::string(to_string(IsoResult::Status::unknown)) == "unknown");
    // A random change of basis is recognized.
    Rng rng(12);
    Matrix g1(gf5, 8, 8), g2(gf5, 3, 3);
    do {
      for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) g1.set(r, c, rng.scalar(gf5));
    } while (!is_invertible(g1));
    do {
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) g2.set(r, c, rng.scalar(gf5));
    } while (!is_invertible(g2));
    std::vector<Matrix> conj;
    const Matrix g1_inv = [&] {
      Matrix inv(gf5, 8, 8);
      for (std::size_t c = 0; c < 8; ++c) {
        const auto col = solve(g1, unit_vector(gf5, 8, c));
        for (std::size_t r = 0; r < 8; ++r) inv.set(r, c, (*col)[r]);
      }
      return inv;
    }();
    for (const Matrix& a : i2.alphas()) conj.push_back(g2 * a * g1_inv);
    CHECK(iso(KroneckerModule(3, gf5, 8, 3, conj), i2));
  }

  TEST_CASE("submodules") {
    const KroneckerModule i1 = preinjective(3, 1, gf5);
    const Vector u = unit_vector(gf5, 3, 0);
    const SubmodulePair g = generated_submodule(i1, u);
    CHECK(g.dims() == DimensionVector{1, 1});
    CHECK(is_submodule(i1, g));
    CHECK(iso(submodule_as_module(i1, g), b(3, gf5, 1)));
    CHECK(submodule_sum(g, zero_submodule(i1)) == g);
    CHECK(submodule_contains(whole_module(i1), g));
  }
}
