#pragma once

#include <string>
#include <vector>

#include "rsemi/inverse.hpp"
#include "rsemi/pbij.hpp"
#include "rsemi/premorphism.hpp"
#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"

namespace fixture {

  using rsemi::Elem;

  inline rsemi::RSemigroup trivial() {
    return rsemi::validate_restriction(1, {0}, {0}, {0});
  }

  // x = 0 < y = 1, multiplication is the meet.
  inline rsemi::RSemigroup y2() {
    return rsemi::validate_restriction(2, {0, 0, 0, 1}, {0, 1}, {0, 1}, {"x", "y"});
  }

  inline rsemi::Semilattice y2_lattice() {
    return rsemi::Semilattice::from_meet(2, {0, 0, 0, 1});
  }

  // The monoid {1, a} with aa = a; reduced.
  inline rsemi::RSemigroup sa() {
    return rsemi::validate_restriction(2, {0, 1, 1, 1}, {0, 0}, {0, 0}, {"1", "a"});
  }

  // Sa with a zero adjoined as a second projection: 1, a, 0.
  inline rsemi::RSemigroup s3() {
    return rsemi::validate_restriction(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, {0, 0, 2}, {0, 0, 2},
                                       {"1", "a", "0"});
  }

  inline rsemi::RSemigroup i2() {
    return rsemi::symmetric_inverse(2).algebra;
  }

  inline rsemi::PBij pb(std::string const& text, std::size_t carrier) {
    return rsemi::PBij::parse(text, carrier);
  }

  // Sa acting on Y2: 1 by the identity, a by the identity on {x}; q == 1.
  inline rsemi::ActionTriple sa_y2(std::string const& phi_a = "[0>0]") {
    auto phi = rsemi::check_premorphism(sa(), 2, {pb("[0>0,1>1]", 2), pb(phi_a, 2)});
    return rsemi::make_action_triple(phi, {0, 0}, y2_lattice());
  }

  inline std::string data(std::string const& name) {
    return std::string(RSEMI_TEST_DATA) + "/" + name;
  }

}  // namespace fixture
