#include "rsemi/laws.hpp"

#include "rsemi/sigma.hpp"

namespace rsemi {

  namespace {

    // s <= t iff s = tf for some projection f, straight from the definition
    // (RSemigroup::leq uses the s = ts* shortcut instead).
    Relation order_by_definition(RSemigroup const& S) {
      Relation r(S.size());
      for (Elem s = 0; s < S.size(); ++s) {
        for (Elem t = 0; t < S.size(); ++t) {
          for (Elem f : S.projections()) {
            if (S.mul(t, f) == s) {
              r.set(s, t);
              break;
            }
          }
        }
      }
      return r;
    }

  }  // namespace

  std::optional<LawViolation> check_order_laws(RSemigroup const& S) {
    std::size_t const n   = S.size();
    Relation const    le  = order_by_definition(S);
    Relation const    cmp = compatibility(S);

    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        bool const a = le(s, t);
        if (a != (s == S.mul(t, S.star(s))) || a != (s == S.mul(S.plus(s), t))) {
          return LawViolation{"s<=t iff s=ts* iff s=s+t", {s, t}};
        }
      }
    }
    if (!le.is_partial_order()) {
      return LawViolation{"natural order is a partial order", {}};
    }
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (!le(s, t)) {
          continue;
        }
        for (Elem u = 0; u < n; ++u) {
          if (!le(S.mul(s, u), S.mul(t, u)) || !le(S.mul(u, s), S.mul(u, t))) {
            return LawViolation{"s<=t implies su<=tu and us<=ut", {s, t, u}};
          }
        }
        if (!le(S.star(s), S.star(t)) || !le(S.plus(s), S.plus(t))) {
          return LawViolation{"s<=t implies s*<=t* and s+<=t+", {s, t}};
        }
        if (!cmp(s, t)) {
          return LawViolation{"s<=t implies s~t", {s, t}};
        }
      }
    }
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        for (Elem u = 0; u < n; ++u) {
          if (le(s, u) && le(t, u) && !cmp(s, t)) {
            return LawViolation{"s,t<=u implies s~t", {s, t, u}};
          }
        }
      }
    }
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (!cmp(s, t)) {
          continue;
        }
        bool const below = le(S.star(s), S.star(t)) || le(S.plus(s), S.plus(t));
        if (below && !le(s, t)) {
          return LawViolation{"s~t and s*<=t* (or s+<=t+) imply s<=t", {s, t}};
        }
        bool const same = S.star(s) == S.star(t) || S.plus(s) == S.plus(t);
        if (same && s != t) {
          return LawViolation{"s~t and s*=t* (or s+=t+) imply s=t", {s, t}};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<LawViolation> check_auxiliary_laws(RSemigroup const& S) {
    std::size_t const n   = S.size();
    Relation const    le  = order_by_definition(S);
    Relation const    cmp = compatibility(S);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        for (Elem e : S.projections()) {
          if (le(e, S.star(S.mul(s, t))) && !le(S.plus(S.mul(t, e)), S.star(s))) {
            return LawViolation{"e<=(st)* implies (te)+<=s*", {s, t, e}};
          }
        }
      }
    }
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (!cmp(s, t)) {
          continue;
        }
        for (Elem q = 0; q < n; ++q) {
          if (!le(q, s)) {
            continue;
          }
          for (Elem r = 0; r < n; ++r) {
            if (le(r, t) && !cmp(q, r)) {
              return LawViolation{"s~t, q<=s, r<=t imply q~r", {s, t, q, r}};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<LawViolation> check_projection_identities(RSemigroup const& S) {
    std::size_t const n = S.size();
    for (Elem s = 0; s < n; ++s) {
      for (Elem e : S.projections()) {
        Elem const es = S.mul(e, s);
        Elem const se = S.mul(s, e);
        if (es != S.mul(s, S.star(es))) {
          return LawViolation{"es=s(es)*", {s, e}};
        }
        if (se != S.mul(S.plus(se), s)) {
          return LawViolation{"se=(se)+s", {s, e}};
        }
        if (S.star(se) != S.mul(S.star(s), e)) {
          return LawViolation{"(se)*=s*e", {s, e}};
        }
        if (S.plus(es) != S.mul(e, S.plus(s))) {
          return LawViolation{"(es)+=es+", {s, e}};
        }
      }
      for (Elem t = 0; t < n; ++t) {
        if (S.star(S.mul(s, t)) != S.star(S.mul(S.star(s), t))) {
          return LawViolation{"(st)*=(s*t)*", {s, t}};
        }
        if (S.plus(S.mul(s, t)) != S.plus(S.mul(s, S.plus(t)))) {
          return LawViolation{"(st)+=(st+)+", {s, t}};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<LawViolation> check_compatible_in_sigma(RSemigroup const& S) {
    auto const sg = sigma(S);
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        if (S.compatible(s, t) && !sg.related(s, t)) {
          return LawViolation{"s~t implies s sigma t", {s, t}};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<LawViolation> check_all_laws(RSemigroup const& S) {
    if (auto v = check_order_laws(S)) {
      return v;
    }
    if (auto v = check_auxiliary_laws(S)) {
      return v;
    }
    if (auto v = check_projection_identities(S)) {
      return v;
    }
    return check_compatible_in_sigma(S);
  }

}  // namespace rsemi
