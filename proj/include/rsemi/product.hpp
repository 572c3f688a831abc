#pragma once

#include <utility>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/premorphism.hpp"
#include "rsemi/rsemigroup.hpp"

namespace rsemi {

  /// Y x| S: elements are the pairs (y, s) with y in ran phi_s and
  /// q(y) = s+, numbered in lexicographic order of (y, s).
  struct ProductRS {
    RSemigroup                         algebra;
    std::vector<std::pair<Elem, Elem>> pairs;
    RSMorphism                         psi;

    /// Index of the pair (y, s), or kNone.
    Elem index_of(Elem y, Elem s) const;
  };

  /// Builds the product of a triple satisfying A1-A4 (PreconditionFailed
  /// naming the first failed condition otherwise). The result is validated,
  /// and the description of its projections, order and compatibility in
  /// terms of Y and S is checked, as is properness of the projection onto S.
  ProductRS partial_action_product(ActionTriple const& t);

  RSMorphism const& projection_psi(ProductRS const& p);

  /// y -> index of (y, q(y)): the isomorphism Y -> P(Y x| S).
  std::vector<Elem> lattice_embedding(ProductRS const& p, ActionTriple const& t);

}  // namespace rsemi
