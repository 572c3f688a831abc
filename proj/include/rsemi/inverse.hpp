#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/pbij.hpp"
#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"

namespace rsemi {

  inline constexpr std::size_t kDefaultMaxElements = 1U << 16;

  /// Turns an inverse semigroup into a restriction semigroup with
  /// s* = s^{-1}s and s+ = ss^{-1}. The inverse table is verified to give
  /// the unique inverse of every element; throws NotInverse otherwise.
  RSemigroup from_inverse(std::size_t              n,
                          std::vector<Elem> const& mul,
                          std::vector<Elem> const& inverse,
                          std::vector<std::string> labels = {});

  /// If S is an inverse semigroup whose star and plus are s^{-1}s and ss^{-1},
  /// the inverse of every element.
  std::optional<std::vector<Elem>> inverse_table(RSemigroup const& S);

  /// A restriction semigroup whose elements are partial bijections, with the
  /// element list in canonical order and a lookup back to indices.
  struct PBijSemigroup {
    std::vector<PBij>                            elements;
    RSemigroup                                   algebra;
    std::unordered_map<PBij, Elem, PBijHash>     index;

    Elem index_of(PBij const& f) const;
  };

  /// The symmetric inverse monoid I(k). Throws SizeLimit if it would have
  /// more than max_elements elements.
  PBijSemigroup symmetric_inverse(std::size_t k,
                                  std::size_t max_elements = kDefaultMaxElements);

  /// The Munn semigroup of Y: order isomorphisms between principal ideals.
  PBijSemigroup munn_semigroup(Semilattice const& Y,
                               std::size_t        max_elements = kDefaultMaxElements);

  /// alpha_s for each s, as partial bijections of the projection semilattice
  /// (point i is S.projections()[i]): dom alpha_s = (s*)v, alpha_s(e) = (se)+.
  std::vector<PBij> munn_maps(RSemigroup const& S);

  struct MunnRepresentation {
    PBijSemigroup munn;
    RSMorphism    alpha;
  };

  /// s -> alpha_s as a morphism into the Munn semigroup of P(S).
  MunnRepresentation munn_representation(RSemigroup const& S);

  /// Whether the algebra has a two-sided identity.
  std::optional<Elem> identity_element(RSemigroup const& S);

}  // namespace rsemi
