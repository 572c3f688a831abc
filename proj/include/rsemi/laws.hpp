#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsemi/rsemigroup.hpp"

namespace rsemi {

  /// A universally quantified law that failed, with its first witness.
  struct LawViolation {
    std::string       law;
    std::vector<Elem> witness;
  };

  /// The eight order/compatibility facts: the order via s = tf agrees with
  /// s = ts* and s = s+t; it is compatible with multiplication and with * and
  /// +; comparable or commonly bounded elements are compatible; compatible
  /// elements with comparable (equal) star or plus are comparable (equal).
  std::optional<LawViolation> check_order_laws(RSemigroup const& S);

  /// e <= (st)* implies (te)+ <= s*; and s~t, q<=s, r<=t imply q~r.
  std::optional<LawViolation> check_auxiliary_laws(RSemigroup const& S);

  /// es = s(es)*, se = (se)+s, (se)* = s*e, (es)+ = es+, (st)* = (s*t)*,
  /// (st)+ = (st+)+.
  std::optional<LawViolation> check_projection_identities(RSemigroup const& S);

  /// s ~ t implies s sigma t.
  std::optional<LawViolation> check_compatible_in_sigma(RSemigroup const& S);

  /// All of the above, in that order.
  std::optional<LawViolation> check_all_laws(RSemigroup const& S);

}  // namespace rsemi
