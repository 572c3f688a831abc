#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsemi/conditions.hpp"
#include "rsemi/morphism.hpp"
#include "rsemi/premorphism.hpp"
#include "rsemi/product.hpp"

namespace rsemi {

  /// Surjective and psi(s) = psi(t) => s ~ t. Also decides injectivity on
  /// the classes of a+ = b+ and of a* = b*, which must give the same answer,
  /// and for proper maps checks s ~ t <=> psi(s) ~ psi(t).
  bool is_proper_morphism(RSMorphism const& f);

  /// The upper underlying premorphism (phi^, p, P(T)) of a proper morphism
  /// psi: T -> S. P(T) is numbered as in projection_semilattice(T).
  ActionTriple upper_underlying(RSMorphism const& psi);

  /// The lower underlying premorphism (phi~, p, P(T)).
  ActionTriple lower_underlying(RSMorphism const& psi);

  struct Decomposition {
    ProductRS  product;        // built from the upper premorphism
    ProductRS  lower_product;  // built from the lower premorphism
    RSMorphism eta;            // t -> (t+, psi(t)), an isomorphism T -> product
  };

  /// T as a partial action product of P(T) by S. Checks that eta is a
  /// bijective morphism with Psi . eta = psi, and that both underlying
  /// premorphisms give identical products.
  Decomposition decompose(RSMorphism const& psi);

  /// The fibre maxima tau(s) = max psi^{-1}(s) and the premorphism report
  /// of tau: S -> T.
  struct Tau {
    std::vector<Elem> map;
    PremorphReport    report;
  };

  /// An element of S whose fibre has no maximum.
  struct NoMaxima {
    Elem s;
  };

  std::variant<Tau, NoMaxima> tau(RSMorphism const& psi);

  struct ExtensionReport {
    bool order_proper = false;
    bool extra_proper = false;
    bool perfect      = false;
    bool has_fiber_maxima = false;
    /// Only defined when every fibre has a maximum.
    std::optional<bool> f_morphism, fa_morphism, perfect_f;
    std::map<std::string, std::vector<Elem>> witnesses;

    std::vector<std::pair<std::string, std::string>> entries() const;
  };

  /// Decides each class in every way the theory allows and throws
  /// EquivalenceViolation if two of them disagree.
  ExtensionReport classify_extension(RSMorphism const& psi);

  /// T is proper and the sigma-classes multiply exactly:
  /// (a sigma)(b sigma) = (ab) sigma as sets.
  bool is_almost_perfect(RSemigroup const& T);

  /// For a surjective morphism: does every fibre have a maximum? When it
  /// does, checks that the morphism is proper.
  bool fiber_maxima_imply_proper(RSMorphism const& f);

}  // namespace rsemi
