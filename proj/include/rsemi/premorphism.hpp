#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rsemi/conditions.hpp"
#include "rsemi/pbij.hpp"
#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"

namespace rsemi {

  /// A premorphism S -> I(X) with X = {0..carrier-1}: one partial bijection
  /// phi_s per element of S.
  struct Premorph {
    RSemigroup        source;
    std::size_t       carrier = 0;
    std::vector<PBij> maps;

    PBij const& operator[](Elem s) const { return maps[s]; }
    bool operator==(Premorph const& o) const {
      return carrier == o.carrier && maps == o.maps && source.same_tables(o.source);
    }
  };

  /// Validates PM1 (pairs in lexicographic order), then PM2, then PM3 and
  /// throws PMViolation on the first failure. Also checks that projections
  /// act as partial identities and that compatible elements go to compatible
  /// maps.
  Premorph check_premorphism(RSemigroup const& S, std::size_t carrier, std::vector<PBij> maps);

  /// All conditions of the premorphism ladder, without checking the
  /// implications between them. Works on arbitrary maps.
  PremorphReport evaluate(RSemigroup const& S, std::vector<PBij> const& maps);

  /// evaluate() plus a check of every implication that must hold.
  PremorphReport classify(Premorph const& phi);

  /// Partial action tables: entry [s][x] is the image or PBij::kUndef.
  using ActionTable = std::vector<std::vector<Elem>>;

  /// s.x = phi_s(x); checks the left action axioms.
  ActionTable premorph_to_left_action(Premorph const& phi);

  /// x o s = phi_s^{-1}(x), from a left action table; checks the right
  /// action axioms and (s.x) o s = x.
  ActionTable left_to_right_action(RSemigroup const& S, ActionTable const& left);

  ActionTable right_to_left_action(RSemigroup const& S, ActionTable const& right);

  Premorph left_action_to_premorph(RSemigroup const& S, ActionTable const& left);

  /// (phi, q, Y): a premorphism into I(Y) and a semilattice morphism
  /// q: Y -> P(S), stored as element indices of S.
  struct ActionTriple {
    Premorph          phi;
    std::vector<Elem> q;
    Semilattice       lattice;

    RSemigroup const& source() const { return phi.source; }
    bool operator==(ActionTriple const& o) const {
      return phi == o.phi && q == o.q && lattice == o.lattice;
    }
  };

  /// Checks sizes and that q is a meet-preserving map into the projections;
  /// throws NotSemilatticeMorphism or DimensionMismatch.
  ActionTriple make_action_triple(Premorph phi, std::vector<Elem> q, Semilattice lattice);

  struct ActionFlags {
    bool a1 = true, a2 = true, a3 = true, a4 = true, a5 = true, a3a = true, a3b = true;
    std::map<std::string, std::vector<Elem>> witnesses;

    bool basic() const { return a1 && a2 && a3 && a4; }
    std::vector<std::pair<std::string, bool>> entries() const;
  };

  /// Decides A1-A5, A3a, A3b; when A1-A4 hold, also checks the consequences
  /// for domains of projections, order preservation and how q moves along
  /// phi_s.
  ActionFlags check_action_conditions(ActionTriple const& t);

  struct Question1Result {
    std::optional<Premorph> witness;
    std::size_t             sources  = 0;
    std::size_t             examined = 0;
  };

  /// Searches premorphisms from restriction semigroups of order <= max_order
  /// (up to isomorphism) into I(k), k <= max_carrier, for a map satisfying
  /// a double-primed locally strong condition but not the matching primed
  /// one. Throws SizeLimit past `limit` examined premorphisms.
  Question1Result search_question1(std::size_t max_order,
                                   std::size_t max_carrier,
                                   bool        inverse_only = false,
                                   std::size_t limit        = 50'000'000);

}  // namespace rsemi
