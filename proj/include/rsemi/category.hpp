#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/premorphism.hpp"
#include "rsemi/product.hpp"

namespace rsemi {

  /// An object of A(S): a triple satisfying A1-A4, tagged with membership
  /// of the full subcategories defined by A3a (hat) and A3b (tilde).
  struct AObject {
    ActionTriple triple;
    bool         in_hat   = false;
    bool         in_tilde = false;

    std::size_t carrier() const { return triple.lattice.size(); }
    bool operator==(AObject const& o) const { return triple == o.triple; }
  };

  /// Throws PreconditionFailed unless A1-A4 hold.
  AObject make_aobject(ActionTriple t);

  /// A semilattice map between carriers with the morphism conditions.
  struct AMorphism {
    AObject           from, to;
    std::vector<Elem> f;
    bool m1 = false, m2 = false, m2r = false, m3 = false, m3r = false;
    std::map<std::string, std::vector<Elem>> witnesses;

    bool valid() const { return m1 && m2; }
  };

  /// Throws NotSemilatticeMorphism if f does not preserve meets, and
  /// EquivalenceViolation if M2 and M2r (or, for a morphism, M3 and M3r)
  /// disagree.
  AMorphism check_amorphism(AObject const& a, AObject const& b, std::vector<Elem> f);

  /// Extension of domains: phi^_s is the union of phi_t over t <= s.
  AObject hat_F(AObject const& a);

  /// Restriction of domains to {x in dom phi_s : p(x) = s*} down-set.
  AObject tilde_F(AObject const& a);

  /// Psi: X x| S -> S.
  RSMorphism functor_U(AObject const& a);

  /// (x, s) -> (f(x), s); checks that it commutes with the projections onto
  /// S and that it is surjective exactly when f satisfies M3.
  RSMorphism functor_U_mor(AMorphism const& f);

  /// (psi^, psi|P(T), P(T)).
  AObject functor_G_hat(RSMorphism const& psi);

  /// gamma restricted to projections, as a map P(T1) -> P(T2) in the
  /// numbering of projection_semilattice. Checks psi2 . gamma = psi1 and
  /// that M3 holds exactly when gamma is surjective.
  AMorphism functor_G_hat_mor(RSMorphism const& psi1,
                              RSMorphism const& psi2,
                              RSMorphism const& gamma);

  struct AdjunctionReport {
    bool        unit_is_morphism   = false;
    bool        counit_is_morphism = false;
    bool        hat_round_trip     = true;  // F^(F~(a)) = a when a is in the hat subcategory
    bool        tilde_round_trip   = true;  // F~(F^(a)) = a when a is in the tilde subcategory
    std::size_t hat_factorizations   = 0;   // g: a -> b checked for the reflection
    std::size_t tilde_factorizations = 0;   // g: b -> a checked for the coreflection
  };

  /// Unit id: a -> F^(a) and counit id: F~(a) -> a; every morphism from a
  /// into a hat object of `family` factors uniquely through the unit, and
  /// every morphism from a tilde object of `family` into a factors uniquely
  /// through the counit (all semilattice maps between carriers are tried).
  /// Throws UniversalityFailure on the first failure.
  AdjunctionReport verify_adjunction_instance(AObject const&              a,
                                              std::vector<AObject> const& family);

  /// f valid as a -> b implies f valid as F^(a) -> F^(b) and F~(a) -> F~(b).
  bool functors_preserve(AMorphism const& f);

  struct EquivalenceReport {
    bool unit_iso   = false;  // x -> (x, p(x)) : a ~ G^U(a)
    bool counit_iso = false;  // eta^ : psi ~ U G^(psi)
    std::size_t unit_squares   = 0;
    std::size_t counit_squares = 0;
  };

  /// The two isomorphisms for one object of each category, plus naturality
  /// along each of the given morphisms (between hat objects, and between
  /// proper extensions as (psi1, psi2, gamma)).
  struct ExtensionArrow {
    RSMorphism psi1, psi2, gamma;
  };

  EquivalenceReport verify_equivalence_instance(RSMorphism const&                  psi,
                                                AObject const&                     a,
                                                std::vector<AMorphism> const&      arrows,
                                                std::vector<ExtensionArrow> const& ext_arrows);

  /// x -> index of (x, p(x)) in P(X x| S), numbered as projection_semilattice.
  std::vector<Elem> unit_map(AObject const& a, ProductRS const& product);

  /// All morphisms a -> b that are valid (M1 and M2).
  std::vector<AMorphism> amorphisms(AObject const& a, AObject const& b);

}  // namespace rsemi
