#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsemi/pbij.hpp"
#include "rsemi/rsemigroup.hpp"

namespace rsemi {

  /// Every condition on a map phi: S -> T that the premorphism ladder talks
  /// about, evaluated by brute quantification. Names with a trailing ' or ''
  /// are the local variants restricted to s* <= t+ (t+ <= s*) and s* = t+.
  struct PremorphReport {
    bool pm1 = true, pm2 = true, pm3 = true;
    bool op = true;
    bool sr = true, sl = true;
    bool lsr = true, lsl = true;
    bool lsr1 = true, lsl1 = true;
    bool lsr2 = true, lsl2 = true;
    bool m = true, lm = true, lm1 = true, lmr = true, lml = true;
    /// phi(s^{-1}) = phi(s)^{-1}; only when source and target are inverse.
    std::optional<bool> inv;

    /// First failing witness (s) or (s,t) for each false condition.
    std::map<std::string, std::vector<Elem>> witnesses;

    bool premorphism() const { return pm1 && pm2 && pm3; }
    bool strong() const { return sr && sl; }
    bool locally_strong() const { return lsr && lsl; }
    bool multiplicative() const { return m; }
    bool locally_multiplicative() const { return lm; }

    /// A map satisfying the s* = t+ form of a locally strong condition but
    /// not its s* <= t+ (t+ <= s*) form.
    bool question1_witness() const {
      return (lsr2 && !lsr1) || (lsl2 && !lsl1);
    }

    /// (name, value) pairs in a fixed order, for reports.
    std::vector<std::pair<std::string, bool>> entries() const;
  };

  /// I(X) as a target.
  struct PBijTarget {
    using Value = PBij;

    Value mul(Value const& a, Value const& b) const { return a * b; }
    Value star(Value const& a) const { return a.star(); }
    Value plus(Value const& a) const { return a.plus(); }
    bool  leq(Value const& a, Value const& b) const { return rsemi::leq(a, b); }
    std::optional<Value> inverse(Value const& a) const { return a.inverse(); }
    bool  is_inverse() const { return true; }
  };

  /// A finite restriction semigroup as a target.
  struct TableTarget {
    using Value = Elem;

    RSemigroup                       T;
    std::optional<std::vector<Elem>> inv;

    Value mul(Value a, Value b) const { return T.mul(a, b); }
    Value star(Value a) const { return T.star(a); }
    Value plus(Value a) const { return T.plus(a); }
    bool  leq(Value a, Value b) const { return T.leq(a, b); }
    std::optional<Value> inverse(Value a) const {
      return inv ? std::optional<Value>((*inv)[a]) : std::nullopt;
    }
    bool is_inverse() const { return inv.has_value(); }
  };

  /// Evaluates every condition of PremorphReport. `source_inverse` is the
  /// inverse table of S when S is an inverse semigroup.
  template <typename Target>
  PremorphReport evaluate_conditions(RSemigroup const&                        S,
                                     Target const&                            T,
                                     std::vector<typename Target::Value> const& phi,
                                     std::optional<std::vector<Elem>> const& source_inverse) {
    PremorphReport r;
    auto fail = [&r](bool& flag, char const* name, std::vector<Elem> w) {
      if (flag) {
        flag = false;
        r.witnesses.emplace(name, std::move(w));
      }
    };
    std::size_t const n = S.size();
    for (Elem s = 0; s < n; ++s) {
      if (!T.leq(T.star(phi[s]), phi[S.star(s)])) {
        fail(r.pm2, "PM2", {s});
      }
      if (!T.leq(T.plus(phi[s]), phi[S.plus(s)])) {
        fail(r.pm3, "PM3", {s});
      }
    }
    for (Elem s = 0; s < n; ++s) {
      auto const& fs = phi[s];
      for (Elem t = 0; t < n; ++t) {
        auto const& ft   = phi[t];
        Elem const  st   = S.mul(s, t);
        auto const& fst  = phi[st];
        auto const  prod = T.mul(fs, ft);

        if (!T.leq(prod, fst)) {
          fail(r.pm1, "PM1", {s, t});
        }
        if (S.leq(s, t) && !T.leq(fs, ft)) {
          fail(r.op, "OP", {s, t});
        }
        auto const right  = T.mul(fst, T.star(ft));
        auto const left   = T.mul(T.plus(fs), fst);
        bool const sr_eq  = prod == right;
        bool const sl_eq  = prod == left;
        Elem const s_star = S.star(s);
        Elem const t_plus = S.plus(t);

        if (!sr_eq) {
          fail(r.sr, "Sr", {s, t});
        }
        if (!sl_eq) {
          fail(r.sl, "Sl", {s, t});
        }
        auto const& f_st_plus = phi[S.mul(s, t_plus)];
        auto const& f_sstar_t = phi[S.mul(s_star, t)];
        if (!(T.mul(f_st_plus, ft) == right)) {
          fail(r.lsr, "LSr", {s, t});
        }
        if (!(T.mul(fs, f_sstar_t) == left)) {
          fail(r.lsl, "LSl", {s, t});
        }
        if (S.leq(s_star, t_plus) && !sr_eq) {
          fail(r.lsr1, "LSr'", {s, t});
        }
        if (S.leq(t_plus, s_star) && !sl_eq) {
          fail(r.lsl1, "LSl'", {s, t});
        }
        if (s_star == t_plus && !sr_eq) {
          fail(r.lsr2, "LSr''", {s, t});
        }
        if (s_star == t_plus && !sl_eq) {
          fail(r.lsl2, "LSl''", {s, t});
        }
        if (!(prod == fst)) {
          fail(r.m, "M", {s, t});
          if (s_star == t_plus) {
            fail(r.lm1, "LM'", {s, t});
          }
        }
        if (!(T.mul(f_st_plus, f_sstar_t) == fst)) {
          fail(r.lm, "LM", {s, t});
        }
        if (!(T.mul(f_st_plus, ft) == fst)) {
          fail(r.lmr, "LMr", {s, t});
        }
        if (!(T.mul(fs, f_sstar_t) == fst)) {
          fail(r.lml, "LMl", {s, t});
        }
      }
    }
    if (source_inverse && T.is_inverse()) {
      r.inv = true;
      for (Elem s = 0; s < n; ++s) {
        if (!(phi[(*source_inverse)[s]] == *T.inverse(phi[s]))) {
          r.inv = false;
          r.witnesses.emplace("Inv", std::vector<Elem>{s});
          break;
        }
      }
    }
    return r;
  }

  /// Checks the implications and equivalences between the flags that hold
  /// for every premorphism (and, with `inverse_case`, for premorphisms
  /// between inverse semigroups; with `reduced_source`, for premorphisms
  /// from a reduced semigroup, whose natural order is trivial). Throws
  /// EquivalenceViolation naming the first failure. The s* = t+ variants are
  /// not required to imply the s* <= t+ ones.
  void verify_condition_implications(PremorphReport const& r,
                                     bool                  inverse_case,
                                     bool                  reduced_source);

}  // namespace rsemi
