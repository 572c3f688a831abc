#pragma once

#include <optional>
#include <vector>

#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"

namespace rsemi {

  /// Relabel S so that old element a becomes perm[a]. Labels follow their
  /// elements.
  RSemigroup relabel(RSemigroup const& S, std::vector<Elem> const& perm);

  /// A relabelling of S to its canonical form: the permutation minimizing the
  /// concatenated (star, plus, mul) tables among those that respect an
  /// isomorphism-invariant colouring of the elements (projections first).
  std::vector<Elem> canonical_labelling(RSemigroup const& S);

  RSemigroup canonical_form(RSemigroup const& S);

  /// Concatenated tables of the canonical form; equal keys iff isomorphic.
  std::vector<Elem> canonical_key(RSemigroup const& S);
  std::vector<Elem> canonical_key(Semilattice const& Y);

  /// An isomorphism S -> T as an index map, if one exists.
  std::optional<std::vector<Elem>> find_isomorphism(RSemigroup const& S,
                                                    RSemigroup const& T);

  bool is_isomorphic(RSemigroup const& S, RSemigroup const& T);

  /// Every automorphism of S.
  std::vector<std::vector<Elem>> automorphisms(RSemigroup const& S);

}  // namespace rsemi
