#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/premorphism.hpp"
#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"
#include "rsemi/sigma.hpp"

namespace rsemi {

  struct EnumConfig {
    std::size_t max_semigroup_order = 4;
    std::size_t max_carrier         = 3;
    bool        up_to_iso           = true;
    std::size_t count_limit         = 10'000'000;
  };

  inline constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);

  /// Every meet semilattice on n points (one per isomorphism class if
  /// up_to_iso), in a deterministic order. Throws SizeLimit after `limit`.
  void for_each_semilattice(std::size_t                                    n,
                            bool                                           up_to_iso,
                            std::function<void(Semilattice const&)> const& visit,
                            std::size_t                                    limit = kNoLimit);

  std::vector<Semilattice> enumerate_semilattices(std::size_t n,
                                                  bool        up_to_iso,
                                                  std::size_t limit = kNoLimit);

  /// Every restriction semigroup of order n (canonical forms, one per
  /// isomorphism class if up_to_iso; all labelled tables otherwise).
  void for_each_restriction_semigroup(std::size_t                                   n,
                                      bool                                          up_to_iso,
                                      std::function<void(RSemigroup const&)> const& visit,
                                      std::size_t limit = kNoLimit);

  std::vector<RSemigroup> enumerate_restriction_semigroups(std::size_t n,
                                                           bool        up_to_iso,
                                                           std::size_t limit = kNoLimit);

  /// Restriction semigroups of every order 1..max_order, up to isomorphism.
  std::vector<RSemigroup> restriction_semigroups_up_to(std::size_t max_order,
                                                       std::size_t limit = kNoLimit);

  /// Names accepted by premorphism filters: the entry names of
  /// PremorphReport ("OP", "strong", "LSr'", "Inv", ...).
  bool premorph_flag(PremorphReport const& r, std::string const& name);

  /// Every premorphism S -> I(carrier) whose report has all `filters` true.
  void for_each_premorphism(RSemigroup const&                           S,
                            std::size_t                                 carrier,
                            std::function<void(Premorph const&)> const& visit,
                            std::vector<std::string> const&             filters = {},
                            std::size_t                                 limit   = kNoLimit);

  std::vector<Premorph> enumerate_premorphisms(RSemigroup const&               S,
                                               std::size_t                     carrier,
                                               std::vector<std::string> const& filters = {},
                                               std::size_t limit = kNoLimit);

  /// Every map S -> I(carrier) satisfying PM1 only (no PM2/PM3 pruning).
  void for_each_pm1_map(RSemigroup const&                                    S,
                        std::size_t                                          carrier,
                        std::function<void(std::vector<PBij> const&)> const& visit,
                        std::size_t limit = kNoLimit);

  /// Every triple (phi, q, Y) over the given S and Y satisfying A1-A4.
  void for_each_action_triple(RSemigroup const&                               S,
                              Semilattice const&                              Y,
                              std::function<void(ActionTriple const&)> const& visit,
                              std::size_t                                     limit = kNoLimit);

  /// Action triples with A1-A4 for every semilattice (up to isomorphism) with
  /// 1..max_carrier points.
  std::vector<ActionTriple> enumerate_action_triples(RSemigroup const& S,
                                                     std::size_t       max_carrier,
                                                     std::size_t       limit = kNoLimit);

  /// Congruences on T contained in the compatibility relation, i.e. the
  /// kernels of proper morphisms out of T.
  std::vector<CongruencePartition> proper_congruences(RSemigroup const& T);

  /// The proper extensions T -> T/rho for every T of order n (up to
  /// isomorphism) and every proper congruence rho.
  void for_each_proper_quotient(std::size_t                                   n,
                                std::function<void(RSMorphism const&)> const& visit,
                                std::size_t limit = kNoLimit);

  /// Every proper surjective morphism onto S from a restriction semigroup of
  /// order t_order (sources up to isomorphism, all maps).
  std::vector<RSMorphism> enumerate_proper_extensions(std::size_t       t_order,
                                                      RSemigroup const& S,
                                                      std::size_t       limit = kNoLimit);

}  // namespace rsemi
