#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsemi/enumerate.hpp"
#include "rsemi/error.hpp"
#include "rsemi/inverse.hpp"
#include "rsemi/iso.hpp"

using namespace rsemi;

TEST_CASE("PBij literals round trip and reject bad input") {
  auto f = PBij::parse("[0>1,2>2]", 3);
  CHECK(f(0) == 1);
  CHECK_FALSE(f.defined(1));
  CHECK(f(2) == 2);
  CHECK(f.to_string() == "[0>1,2>2]");
  CHECK(PBij::parse("[]", 2).empty());
  CHECK_THROWS_AS(PBij::parse("[0>1,1>1]", 2), Error);
  CHECK_THROWS_AS(PBij::parse("[0>2]", 2), Error);
  CHECK_THROWS_AS(PBij::parse("0>1", 2), Error);
}

TEST_CASE("PBij operations match plain maps") {
  auto const all = oracle::all_pmaps(3);
  auto       to  = [](oracle::PMap const& m) {
    std::vector<std::pair<Elem, Elem>> p;
    for (std::size_t x = 0; x < m.size(); ++x) {
      if (m[x] >= 0) p.emplace_back(static_cast<Elem>(x), static_cast<Elem>(m[x]));
    }
    return PBij::from_pairs(m.size(), p);
  };
  for (auto const& a : all) {
    auto const f = to(a);
    CHECK(oracle::from(f.inverse()) == oracle::inv(a));
    CHECK(oracle::from(f.star()) == oracle::dom_id(a));
    CHECK(oracle::from(f.plus()) == oracle::ran_id(a));
    for (auto const& b : all) {
      auto const g = to(b);
      CHECK(oracle::from(f * g) == oracle::comp(a, b));
      CHECK(leq(f, g) == oracle::restricts(a, b));
    }
  }
}

TEST_CASE("symmetric inverse monoids have the expected orders") {
  for (std::size_t k = 0; k <= 3; ++k) {
    auto I = symmetric_inverse(k);
    CHECK(I.algebra.size() == oracle::symmetric_inverse_order(k));
    CHECK(I.algebra.projections().size() == (std::size_t{1} << k));
    CHECK(std::is_sorted(I.elements.begin(), I.elements.end(), canonical_less));
    for (Elem e : I.algebra.projections()) {
      CHECK(I.elements[e].is_partial_identity());
    }
  }
  CHECK(symmetric_inverse(0).algebra.size() == 1);
  auto I1 = symmetric_inverse(1).algebra;
  CHECK(I1.size() == 2);
  CHECK(I1.projections().size() == 2);
  CHECK_THROWS_AS(symmetric_inverse(4, 100), SizeLimit);
}

TEST_CASE("compatibility in I(k) is agreement of maps and of inverses") {
  for (std::size_t k = 1; k <= 3; ++k) {
    auto I = symmetric_inverse(k);
    for (Elem s = 0; s < I.algebra.size(); ++s) {
      for (Elem t = 0; t < I.algebra.size(); ++t) {
        auto a = oracle::from(I.elements[s]);
        auto b = oracle::from(I.elements[t]);
        bool agree = true;
        for (std::size_t x = 0; x < k; ++x) {
          if (a[x] >= 0 && b[x] >= 0 && a[x] != b[x]) agree = false;
        }
        auto ia = oracle::inv(a), ib = oracle::inv(b);
        for (std::size_t y = 0; y < k; ++y) {
          if (ia[y] >= 0 && ib[y] >= 0 && ia[y] != ib[y]) agree = false;
        }
        CHECK(I.algebra.compatible(s, t) == agree);
        CHECK(compatible(I.elements[s], I.elements[t]) == agree);
      }
    }
  }
}

TEST_CASE("from_inverse") {
  CHECK(from_inverse(1, {0}, {0}).same_tables(fixture::trivial()));
  CHECK(from_inverse(2, {0, 0, 0, 1}, {0, 1}).same_tables(fixture::y2()));
  auto I2  = fixture::i2();
  auto inv = inverse_table(I2);
  REQUIRE(inv.has_value());
  CHECK(from_inverse(7, I2.mul_table(), *inv).same_tables(I2));
  // Sa is a semilattice as a semigroup, but a* = 1 differs from a^-1 a = a
  CHECK_FALSE(inverse_table(fixture::sa()).has_value());
  CHECK_THROWS_AS(from_inverse(2, {0, 1, 1, 1}, {1, 0}), NotInverse);
}

TEST_CASE("downsets") {
  auto Y = fixture::y2_lattice();
  CHECK(Y.downset(0) == 0);
  CHECK(Y.downset(singleton(1)) == Y.all());
  // 0 < 1 < 3 and 0 < 2
  auto T = Semilattice::from_meet(4, {0, 0, 0, 0,
                                      0, 1, 0, 1,
                                      0, 0, 2, 0,
                                      0, 1, 0, 3});
  Subset expected = 0;
  for (Elem x = 0; x < 4; ++x) {
    if (T.meet(x, 3) == x) expected |= singleton(x);
  }
  CHECK(T.downset(singleton(3)) == expected);
  CHECK(T.downset(T.downset(singleton(3) | singleton(2))) == T.downset(singleton(3) | singleton(2)));
}

TEST_CASE("Munn semigroups of every semilattice with at most 4 points") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& Y : enumerate_semilattices(n, true)) {
      auto M = munn_semigroup(Y);
      CHECK(M.algebra.size() == oracle::munn_order(Y));
      CHECK(identity_element(M.algebra).has_value() == Y.top().has_value());
      CHECK(M.algebra.projections().size() == n);
      for (Elem e : M.algebra.projections()) {
        CHECK(M.elements[e].is_partial_identity());
      }
      for (auto const& f : M.elements) {
        CHECK(M.index.count(f.inverse()) == 1);
      }
    }
  }
  CHECK(munn_semigroup(fixture::y2_lattice()).algebra.size() == 2);
  auto V = Semilattice::from_meet(3, {0, 0, 0, 0, 1, 0, 0, 0, 2});
  CHECK(munn_semigroup(V).algebra.size() == oracle::munn_order(V));
}

TEST_CASE("the Munn representation is a morphism on every semigroup up to order 5") {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_restriction_semigroup(n, true, [&](RSemigroup const& S) {
      auto rep = munn_representation(S);
      CHECK(oracle::is_morphism(oracle::of(S), oracle::of(rep.munn.algebra), rep.alpha.map));
      ++count;
    });
  }
  CHECK(count > 0);
  auto Y   = fixture::y2();
  auto rep = munn_representation(Y);
  auto maps = munn_maps(Y);
  CHECK(maps[0].to_string() == "[0>0]");
  CHECK(maps[1].to_string() == "[0>0,1>1]");
}
