#pragma once

#include <vector>

#include "rsemi/rsemigroup.hpp"

namespace rsemi {

  /// A (2,1,1)-morphism between finite restriction semigroups.
  struct RSMorphism {
    RSemigroup        source;
    RSemigroup        target;
    std::vector<Elem> map;
    bool              surjective      = false;
    bool              proper          = false;
    bool              projection_pure = false;

    Elem operator()(Elem s) const { return map[s]; }
  };

  /// Checks multiplication (pairs in lexicographic order), then star, then
  /// plus; throws NotAMorphism naming the first failure. Sets all flags.
  RSMorphism check_rsmorphism(RSemigroup const& S,
                              RSemigroup const& T,
                              std::vector<Elem> map);

  RSMorphism identity_morphism(RSemigroup const& S);

  /// g o f.
  RSMorphism compose(RSMorphism const& g, RSMorphism const& f);

  /// Every map S -> T preserving all three operations, lexicographic in the
  /// image tuple.
  std::vector<std::vector<Elem>> all_morphism_maps(RSemigroup const& S,
                                                   RSemigroup const& T);

}  // namespace rsemi
