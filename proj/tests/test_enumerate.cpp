#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsemi/enumerate.hpp"
#include "rsemi/error.hpp"
#include "rsemi/iso.hpp"

using namespace rsemi;

TEST_CASE("semilattice counts match a poset-based count") {
  CHECK(enumerate_semilattices(1, true).size() == 1);
  CHECK(enumerate_semilattices(2, true).size() == 1);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(enumerate_semilattices(n, true).size() == oracle::semilattice_classes(n));
  }
}

TEST_CASE("restriction semigroup counts of order <= 3 match exhaustive tables") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(enumerate_restriction_semigroups(n, true).size() == oracle::restriction_classes(n));
  }
}

TEST_CASE("labelled and up-to-isomorphism enumerations are consistent up to order 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto classes = enumerate_restriction_semigroups(n, true);
    std::set<std::vector<Elem>> keys;
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    std::size_t orbit_total = 0;
    for (auto const& S : classes) {
      CHECK_FALSE(oracle::restriction_failure(oracle::of(S)).has_value());
      keys.insert(canonical_key(S));
      orbit_total += fact / oracle::automorphism_count(oracle::of(S));
    }
    CHECK(keys.size() == classes.size());
    auto labelled = enumerate_restriction_semigroups(n, false);
    CHECK(labelled.size() == orbit_total);
    std::set<std::vector<Elem>> labelled_keys;
    for (auto const& S : labelled) labelled_keys.insert(canonical_key(S));
    CHECK(labelled_keys == keys);
  }
}

TEST_CASE("order 2 contains Y2 and Sa") {
  auto two = enumerate_restriction_semigroups(2, true);
  auto has = [&](RSemigroup const& S) {
    for (auto const& T : two) {
      if (is_isomorphic(S, T)) return true;
    }
    return false;
  };
  CHECK(has(fixture::y2()));
  CHECK(has(fixture::sa()));
}

TEST_CASE("premorphisms from the trivial monoid are the partial identities") {
  auto T = fixture::trivial();
  for (std::size_t k = 0; k <= 3; ++k) {
    auto ps = enumerate_premorphisms(T, k);
    CHECK(ps.size() == oracle::all_premorphisms(oracle::of(T), k).size());
    CHECK(ps.size() == (std::size_t{1} << k));
  }
  auto with_fixture = enumerate_premorphisms(fixture::sa(), 2);
  CHECK(std::count(with_fixture.begin(), with_fixture.end(), fixture::sa_y2().phi) == 1);
}

TEST_CASE("proper extensions of tiny targets") {
  auto T = fixture::trivial();
  CHECK(enumerate_proper_extensions(1, T).size() == 1);
  auto two = enumerate_proper_extensions(2, T);
  REQUIRE(two.size() == 1);
  CHECK(is_isomorphic(two[0].source, fixture::y2()));
}

TEST_CASE("limits are enforced") {
  CHECK_THROWS_AS(enumerate_restriction_semigroups(4, true, 5), SizeLimit);
  CHECK_THROWS_AS(enumerate_semilattices(4, false, 2), SizeLimit);
}
