#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsemi/enumerate.hpp"
#include "rsemi/error.hpp"
#include "rsemi/iso.hpp"
#include "rsemi/laws.hpp"
#include "rsemi/morphism.hpp"
#include "rsemi/sigma.hpp"

using namespace rsemi;

TEST_CASE("trivial monoid is valid with one projection") {
  auto S = fixture::trivial();
  CHECK(S.size() == 1);
  CHECK(projections(S) == std::vector<Elem>{0});
  CHECK(is_reduced(S));
  CHECK(is_proper(S));
  CHECK(sigma(S).size() == 1);
  CHECK(natural_order(S).count() == 1);
}

TEST_CASE("Y2: every element is a projection, order is the chain") {
  auto S = fixture::y2();
  CHECK(projections(S) == std::vector<Elem>{0, 1});
  auto le = natural_order(S);
  CHECK(le(0, 1));
  CHECK_FALSE(le(1, 0));
  CHECK_FALSE(is_reduced(S));
  CHECK(is_proper(S));
  CHECK(sigma(S).size() == 1);
  auto q = sigma_quotient(S);
  CHECK(q.algebra.size() == 1);
  CHECK(is_reduced(q.algebra));
}

TEST_CASE("Sa is reduced and proper") {
  auto S = fixture::sa();
  CHECK(is_reduced(S));
  CHECK(is_proper(S));
  CHECK(sigma(S).size() == 2);
}

TEST_CASE("dimension and range errors") {
  CHECK_THROWS_AS(validate_restriction(2, {0, 0, 0}, {0, 1}, {0, 1}), DimensionMismatch);
  CHECK_THROWS_AS(validate_restriction(2, {0, 0, 0, 1}, {0, 2}, {0, 1}), DimensionMismatch);
}

// Every single-entry perturbation of Y2: the library accepts exactly when the
// oracle does, and a reported witness really breaks the named identity.
TEST_CASE("perturbations of Y2 are judged like the oracle judges them") {
  auto const base   = oracle::of(fixture::y2());
  bool       seen_violation = false;
  for (std::size_t cell = 0; cell < 8; ++cell) {
    for (Elem v = 0; v < 2; ++v) {
      auto A = base;
      Elem& slot = cell < 4 ? A.mul[cell] : (cell < 6 ? A.star[cell - 4] : A.plus[cell - 6]);
      if (slot == v) continue;
      slot = v;
      bool const oracle_ok = !oracle::restriction_failure(A).has_value();
      try {
        validate_restriction(2, A.mul, A.star, A.plus);
        CHECK(oracle_ok);
      } catch (AxiomViolation const& e) {
        CHECK_FALSE(oracle_ok);
        seen_violation = true;
        if (e.axiom() == "(xy)+x=xy+") {
          auto x = e.witness()[0], y = e.witness()[1];
          CHECK(A.m(A.pl(A.m(x, y)), x) != A.m(x, A.pl(y)));
        }
      }
    }
  }
  CHECK(seen_violation);
}

TEST_CASE("I2: 7 elements, 4 projections, order and sigma from brute force") {
  auto S = fixture::i2();
  auto A = oracle::of(S);
  CHECK(S.size() == 7);
  CHECK(S.projections().size() == 4);
  std::size_t strict = 0;
  for (Elem s = 0; s < 7; ++s) {
    for (Elem t = 0; t < 7; ++t) {
      CHECK(natural_order(S)(s, t) == oracle::leq(A, s, t));
      CHECK(compatibility(S)(s, t) == oracle::compat(A, s, t));
      strict += (s != t && oracle::leq(A, s, t)) ? 1 : 0;
    }
  }
  CHECK(natural_order(S).count() == strict + 7);
  auto sig    = sigma(S);
  auto labels = oracle::sigma_labels(A);
  CHECK(sig.size() == oracle::count_classes(labels));
  for (Elem s = 0; s < 7; ++s) {
    for (Elem t = 0; t < 7; ++t) {
      CHECK(sig.related(s, t) == (labels[s] == labels[t]));
    }
  }
  CHECK(is_proper(S) == oracle::proper(A));
  CHECK_FALSE(is_proper(S));
  auto q = sigma_quotient(S);
  CHECK(q.algebra.size() == sig.size());
}

TEST_CASE("laws, sigma and properness agree with the oracle up to order 4") {
  for (auto const& S : restriction_semigroups_up_to(4)) {
    auto A = oracle::of(S);
    REQUIRE_FALSE(oracle::restriction_failure(A).has_value());
    CHECK_FALSE(check_all_laws(S).has_value());
    CHECK_FALSE(oracle::law_failure(A).has_value());
    CHECK(sigma(S).size() == oracle::count_classes(oracle::sigma_labels(A)));
    CHECK(is_proper(S) == oracle::proper(A));
    auto P = oracle::projections(A);
    CHECK(std::vector<Elem>(P.begin(), P.end()) == projections(S));
  }
}

TEST_CASE("morphism checks") {
  auto Y = fixture::y2();
  auto id = check_rsmorphism(Y, Y, {0, 1});
  CHECK(id.surjective);
  CHECK(id.proper);
  auto collapse = check_rsmorphism(Y, fixture::trivial(), {0, 0});
  CHECK(collapse.surjective);
  CHECK(collapse.proper);
  // x -> 1, y -> a does not preserve xy = x
  CHECK_THROWS_AS(check_rsmorphism(Y, fixture::sa(), {0, 1}), NotAMorphism);
  // Sa onto the trivial monoid identifies incompatible elements
  auto f = check_rsmorphism(fixture::sa(), fixture::trivial(), {0, 0});
  CHECK(f.surjective);
  CHECK_FALSE(f.proper);
}

TEST_CASE("isomorphism search and canonical forms") {
  auto S = fixture::i2();
  for (auto const& perm : std::vector<std::vector<Elem>>{{6, 5, 4, 3, 2, 1, 0},
                                                         {1, 0, 3, 2, 5, 4, 6}}) {
    auto R = relabel(S, perm);
    CHECK(is_isomorphic(S, R));
    CHECK(canonical_key(S) == canonical_key(R));
  }
  CHECK(automorphisms(S).size() == oracle::automorphism_count(oracle::of(S)));
  CHECK_FALSE(is_isomorphic(fixture::y2(), fixture::sa()));
}
