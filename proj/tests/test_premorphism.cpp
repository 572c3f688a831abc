#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsemi/enumerate.hpp"
#include "rsemi/error.hpp"
#include "rsemi/inverse.hpp"

using namespace rsemi;

namespace {

  std::map<std::string, bool> named(PremorphReport const& r) {
    std::map<std::string, bool> out;
    for (auto const& [k, v] : r.entries()) {
      if (k != "Inv") out[k] = v;
    }
    return out;
  }

}  // namespace

TEST_CASE("fixture premorphisms are accepted") {
  auto T = fixture::trivial();
  CHECK_NOTHROW(check_premorphism(T, 2, {PBij::identity(2)}));
  auto t = fixture::sa_y2();
  CHECK(t.phi.maps[1].to_string() == "[0>0]");
  auto r = classify(t.phi);
  CHECK(r.premorphism());
  CHECK(r.op);
}

TEST_CASE("PM violations name the condition and the first pair") {
  auto S = fixture::sa();
  // a acts as a swap: phi_a phi_a = id is not below phi_a
  try {
    check_premorphism(S, 2, {PBij::identity(2), fixture::pb("[0>1,1>0]", 2)});
    FAIL("expected PMViolation");
  } catch (PMViolation const& e) {
    CHECK(e.condition() == "PM1");
    CHECK(e.witness() == std::vector<std::uint32_t>{1, 1});
  }
  // phi_1 empty but phi_a defined: PM1 holds, phi_a* is not below phi_{a*}
  try {
    check_premorphism(S, 2, {PBij(2), fixture::pb("[0>0]", 2)});
    FAIL("expected PMViolation");
  } catch (PMViolation const& e) {
    CHECK(e.condition() == "PM2");
    CHECK(e.witness() == std::vector<std::uint32_t>{1});
  }
}

TEST_CASE("Munn representation of I2 is multiplicative") {
  auto I2  = fixture::i2();
  auto rep = munn_representation(I2);
  auto phi = check_premorphism(I2, I2.projections().size(), munn_maps(I2));
  auto r   = classify(phi);
  for (auto const& [k, v] : r.entries()) {
    CHECK_MESSAGE(v, k);
  }
}

TEST_CASE("a premorphism that is not strong reports a witness") {
  // Sa acting on {0, 1}: a sends 0 to 1, so phi_a phi_a is empty.
  auto S   = fixture::sa();
  auto phi = check_premorphism(S, 2, {PBij::identity(2), fixture::pb("[0>1]", 2)});
  auto r   = classify(phi);
  auto A   = oracle::of(S);
  auto pm  = oracle::from(phi.maps);
  CHECK(named(r) == oracle::flags(A, pm).named());
  CHECK_FALSE(r.sr);
  CHECK_FALSE(r.strong());
  REQUIRE(r.witnesses.count("Sr") == 1);
  auto const w = r.witnesses.at("Sr");
  CHECK(oracle::comp(pm[w[0]], pm[w[1]])
        != oracle::comp(pm[A.m(w[0], w[1])], oracle::dom_id(pm[w[1]])));
}

TEST_CASE("classification matches the oracle on every premorphism, sources <= 3, carriers <= 3") {
  std::size_t checked = 0;
  for (auto const& S : restriction_semigroups_up_to(3)) {
    auto const A = oracle::of(S);
    for (std::size_t k = 0; k <= 3; ++k) {
      auto const brute = oracle::all_premorphisms(A, k);
      std::set<std::vector<oracle::PMap>> expected(brute.begin(), brute.end());
      std::set<std::vector<oracle::PMap>> got;
      for_each_premorphism(S, k, [&](Premorph const& phi) {
        auto const maps = oracle::from(phi.maps);
        got.insert(maps);
        auto r = classify(phi);
        CHECK(named(r) == oracle::flags(A, maps).named());
        CHECK(r.inv == oracle::inverse_flag(A, maps));
        ++checked;
      });
      CHECK(got == expected);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("filters select exactly the flagged premorphisms") {
  auto S = fixture::i2();
  std::size_t strong = 0, inverse_ok = 0;
  for_each_premorphism(S, 2, [&](Premorph const& phi) {
    auto r = classify(phi);
    ++strong;
    CHECK(r.strong());
    REQUIRE(r.inv.has_value());
    inverse_ok += *r.inv ? 1 : 0;
  }, {"strong"});
  CHECK(strong == inverse_ok);
  CHECK_THROWS_AS(for_each_premorphism(S, 1, [](Premorph const&) {}, {"nonsense"}), Error);
}

TEST_CASE("maps with PM1 and both primed locally strong conditions are premorphisms") {
  for (auto const& S : restriction_semigroups_up_to(3)) {
    auto const A = oracle::of(S);
    for (std::size_t k = 1; k <= 2; ++k) {
      for_each_pm1_map(S, k, [&](std::vector<PBij> const& maps) {
        auto F = oracle::flags(A, oracle::from(maps));
        CHECK(F.pm1);
        if (F.lsr1 && F.lsl1) {
          CHECK(F.pm2);
          CHECK(F.pm3);
        }
      });
    }
  }
}

TEST_CASE("left and right actions round trip") {
  for (auto const& S : restriction_semigroups_up_to(3)) {
    for_each_premorphism(S, 2, [&](Premorph const& phi) {
      auto left  = premorph_to_left_action(phi);
      auto right = left_to_right_action(S, left);
      CHECK(right_to_left_action(S, right) == left);
      CHECK(left_action_to_premorph(S, left) == phi);
      for (Elem s = 0; s < S.size(); ++s) {
        for (Elem x = 0; x < 2; ++x) {
          CHECK(right[s][x] == phi.maps[s].preimage(x));
        }
      }
    });
  }
  auto t    = fixture::sa_y2();
  auto left = premorph_to_left_action(t.phi);
  CHECK(left[1][0] == 0);
  CHECK(left[1][1] == PBij::kUndef);
}

TEST_CASE("action conditions on fixtures") {
  auto flags = check_action_conditions(fixture::sa_y2());
  CHECK(flags.basic());
  CHECK(flags.a5);
  auto empty = check_action_conditions(fixture::sa_y2("[]"));
  CHECK_FALSE(empty.a4);
  auto I2  = fixture::i2();
  auto phi = check_premorphism(I2, I2.projections().size(), munn_maps(I2));
  std::vector<Elem> q = I2.projections();
  auto munn = check_action_conditions(make_action_triple(phi, q, projection_semilattice(I2)));
  CHECK(munn.basic());
  CHECK(munn.a3a);
  CHECK(munn.a3b);
  CHECK_THROWS_AS(make_action_triple(fixture::sa_y2().phi, {0, 1}, fixture::y2_lattice()),
                  Error);
}

TEST_CASE("action triples agree with a brute-force search") {
  auto S = fixture::s3();
  auto A = oracle::of(S);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& Y : enumerate_semilattices(n, true)) {
      std::set<std::pair<std::vector<oracle::PMap>, std::vector<Elem>>> got;
      for_each_action_triple(S, Y, [&](ActionTriple const& t) {
        got.insert({oracle::from(t.phi.maps), t.q});
      });
      std::size_t expected = 0;
      for (auto const& q : semilattice_morphisms(Y, projection_semilattice(S))) {
        std::vector<Elem> qe;
        for (Elem y : q) qe.push_back(S.projections()[y]);
        for (auto const& maps : oracle::all_premorphisms(A, n)) {
          std::vector<PBij> fs;
          for (auto const& m : maps) {
            std::vector<std::pair<Elem, Elem>> p;
            for (std::size_t x = 0; x < n; ++x) {
              if (m[x] >= 0) p.emplace_back(x, m[x]);
            }
            fs.push_back(PBij::from_pairs(n, p));
          }
          auto t = make_action_triple(check_premorphism(S, n, fs), qe, Y);
          bool const basic = oracle::a1_to_a4(A, maps, qe, Y.meet_table());
          CHECK(check_action_conditions(t).basic() == basic);
          if (basic) {
            ++expected;
            CHECK(got.count({maps, qe}) == 1);
          }
        }
      }
      CHECK(got.size() == expected);
    }
  }
}

TEST_CASE("question 1 search: trivial and inverse cases are exhausted") {
  CHECK_FALSE(search_question1(1, 3).witness.has_value());
  CHECK_FALSE(search_question1(3, 2, true).witness.has_value());
  CHECK_THROWS_AS(search_question1(3, 3, false, 10), SizeLimit);
}
