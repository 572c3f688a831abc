#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rsemi/rsemigroup.hpp"
#include "rsemi/types.hpp"

namespace rsemi {

  /// A finite meet semilattice on at most 64 points, given by its meet table.
  class Semilattice {
   public:
    /// The one-point semilattice.
    Semilattice();

    /// Validates idempotence, commutativity and associativity; throws
    /// AxiomViolation (or DimensionMismatch / SizeLimit).
    static Semilattice from_meet(std::size_t n, std::vector<Elem> meet);

    /// Semilattice whose order is the given relation, which must be a partial
    /// order in which every pair has a greatest lower bound.
    static Semilattice from_order(Relation const& leq);

    std::size_t size() const noexcept { return _n; }
    Elem meet(Elem a, Elem b) const { return _meet[a * _n + b]; }
    std::vector<Elem> const& meet_table() const noexcept { return _meet; }

    bool leq(Elem a, Elem b) const { return meet(a, b) == a; }

    Elem bottom() const noexcept { return _bottom; }
    std::optional<Elem> top() const noexcept { return _top; }

    Subset all() const noexcept { return full_subset(_n); }
    Subset principal(Elem a) const { return _down[a]; }
    Subset downset(Subset B) const;
    bool is_order_ideal(Subset B) const { return downset(B) == B; }

    bool operator==(Semilattice const& other) const {
      return _n == other._n && _meet == other._meet;
    }

   private:
    std::size_t         _n = 1;
    std::vector<Elem>   _meet{0};
    std::vector<Subset> _down{1};
    Elem                _bottom = 0;
    std::optional<Elem> _top    = 0;
  };

  Subset downset(Semilattice const& Y, Subset B);

  /// The semilattice of projections of S; point i stands for
  /// S.projections()[i].
  Semilattice projection_semilattice(RSemigroup const& S);

  /// Y as a restriction semigroup with s* = s+ = s.
  RSemigroup as_rsemigroup(Semilattice const& Y);

  bool is_semilattice_morphism(Semilattice const&       Y,
                               Semilattice const&       Z,
                               std::vector<Elem> const& f);

  /// Every map f: Y -> Z preserving meets, in lexicographic order of the
  /// image tuple.
  std::vector<std::vector<Elem>> semilattice_morphisms(Semilattice const& Y,
                                                       Semilattice const& Z);

}  // namespace rsemi
