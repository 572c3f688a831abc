#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/rsemigroup.hpp"

namespace rsemi {

  /// A partition of the elements of a restriction semigroup that is a
  /// congruence for multiplication, star and plus. Blocks are sorted and
  /// listed in order of their least element.
  struct CongruencePartition {
    enum class Kind { sigma, kernel, other };

    std::vector<std::vector<Elem>> blocks;
    std::vector<std::size_t>       block_of;
    Kind                           kind = Kind::other;

    bool related(Elem a, Elem b) const { return block_of[a] == block_of[b]; }
    std::size_t size() const noexcept { return blocks.size(); }
  };

  /// Normalizes an arbitrary block labelling into a CongruencePartition
  /// (without checking the congruence property).
  CongruencePartition partition_from_labels(std::vector<std::size_t> const& labels,
                                            CongruencePartition::Kind      kind);

  bool is_congruence(RSemigroup const& S, std::vector<std::size_t> const& labels);

  /// Least (2,1,1)-congruence containing the given pairs, by worklist
  /// closure.
  CongruencePartition congruence_closure(RSemigroup const&                         S,
                                         std::vector<std::pair<Elem, Elem>> const& pairs);

  /// The least congruence identifying all projections. Computed from
  /// "es = et for some projection e" and cross-checked against the closure of
  /// P x P and against "se = te"; throws OracleMismatch if they differ.
  CongruencePartition sigma(RSemigroup const& S);

  CongruencePartition kernel(RSMorphism const& f);

  struct Quotient {
    RSemigroup algebra;
    RSMorphism projection;
  };

  /// S/rho with elements numbered by block; throws PreconditionFailed if rho
  /// is not a congruence.
  Quotient quotient(RSemigroup const& S, CongruencePartition const& rho);

  /// S/sigma; asserts the quotient is reduced.
  Quotient sigma_quotient(RSemigroup const& S);

  /// Whether compatibility coincides with sigma; cross-checked against the
  /// two cancellation conditions (equal star or equal plus plus sigma-related
  /// implies equal).
  bool is_proper(RSemigroup const& S);

}  // namespace rsemi
