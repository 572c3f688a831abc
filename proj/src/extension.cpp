#include "rsemi/extension.hpp"

#include <string>

#include "rsemi/error.hpp"
#include "rsemi/inverse.hpp"
#include "rsemi/semilattice.hpp"
#include "rsemi/sigma.hpp"

namespace rsemi {

  namespace {

    using ElemSet = std::vector<bool>;

    void require_proper(RSMorphism const& psi) {
      if (!psi.surjective || !psi.proper) {
        throw PreconditionFailed("expected a proper (surjective) morphism");
      }
    }

    void bug_unless(bool ok, std::string const& what) {
      if (!ok) {
        throw OracleMismatch(what);
      }
    }

    // phi^ (upper) or phi~ (lower) straight from the definition: scan every
    // t with psi(t) <= s (resp. = s) and every projection e <= t*, and
    // check that all witnesses agree on (te)+.
    std::vector<PBij> underlying_maps(RSMorphism const& psi, bool upper) {
      RSemigroup const& T = psi.source;
      RSemigroup const& S = psi.target;
      auto const&       P = T.projections();
      if (P.size() > PBij::kMaxCarrier) {
        throw SizeLimit("underlying premorphism: |P(T)| exceeds the PBij carrier bound");
      }
      std::vector<PBij> maps(S.size(), PBij(P.size()));
      for (Elem s = 0; s < S.size(); ++s) {
        PBij& f = maps[s];
        for (Elem t = 0; t < T.size(); ++t) {
          if (upper ? !S.leq(psi(t), s) : psi(t) != s) {
            continue;
          }
          for (Elem i = 0; i < P.size(); ++i) {
            if (!T.leq(P[i], T.star(t))) {
              continue;
            }
            auto const v = static_cast<Elem>(T.projection_index(T.plus(T.mul(t, P[i]))));
            if (f.defined(i)) {
              bug_unless(f(i) == v, "underlying premorphism value depends on the witness");
            } else {
              bug_unless(f.preimage(v) == PBij::kUndef, "underlying premorphism is not injective");
              f.set(i, v);
            }
          }
        }
        if (S.is_projection(s)) {
          bug_unless(f.is_partial_identity(),
                     "underlying premorphism of a projection is not a partial identity");
        }
      }
      // Compatible elements act alike on common domains.
      for (Elem s = 0; s < S.size(); ++s) {
        for (Elem t = 0; t < S.size(); ++t) {
          if (!S.compatible(s, t)) {
            continue;
          }
          for (Elem e : members(maps[s].domain() & maps[t].domain())) {
            bug_unless(maps[s](e) == maps[t](e),
                       "compatible elements act differently on a common domain");
          }
        }
      }
      return maps;
    }

    ActionTriple underlying(RSMorphism const& psi, bool upper) {
      require_proper(psi);
      RSemigroup const& T     = psi.source;
      auto const        hat   = underlying_maps(psi, true);
      auto const        tilde = underlying_maps(psi, false);
      for (Elem s = 0; s < hat.size(); ++s) {
        bug_unless(leq(tilde[s], hat[s]), "lower underlying map is not below the upper one");
      }
      std::vector<Elem> p(T.projections().size());
      for (Elem i = 0; i < p.size(); ++i) {
        p[i] = psi(T.projections()[i]);
      }
      auto t = make_action_triple(
          check_premorphism(psi.target, p.size(), upper ? hat : tilde), p,
          projection_semilattice(T));
      auto const flags = check_action_conditions(t);
      bug_unless(flags.basic(), "underlying premorphism fails A1-A4");
      bug_unless(upper ? flags.a3a : flags.a3b, "underlying premorphism fails its A3 variant");
      return t;
    }

    std::vector<ElemSet> fibres(RSMorphism const& psi) {
      std::vector<ElemSet> out(psi.target.size(), ElemSet(psi.source.size(), false));
      for (Elem t = 0; t < psi.source.size(); ++t) {
        out[psi(t)][t] = true;
      }
      return out;
    }

    // psi^{-1}(s down-set) in T.
    ElemSet below_preimage(RSMorphism const& psi, Elem s) {
      ElemSet out(psi.source.size(), false);
      for (Elem t = 0; t < psi.source.size(); ++t) {
        out[t] = psi.target.leq(psi(t), s);
      }
      return out;
    }

    ElemSet down(RSemigroup const& T, ElemSet const& X) {
      ElemSet out(T.size(), false);
      for (Elem u = 0; u < T.size(); ++u) {
        for (Elem v = 0; v < T.size() && !out[u]; ++v) {
          out[u] = X[v] && T.leq(u, v);
        }
      }
      return out;
    }

    std::vector<std::optional<Elem>> fibre_maxima(RSMorphism const& f) {
      RSemigroup const& T = f.source;
      std::vector<std::optional<Elem>> out(f.target.size());
      auto const fib = fibres(f);
      for (Elem s = 0; s < f.target.size(); ++s) {
        for (Elem m = 0; m < T.size() && !out[s]; ++m) {
          if (!fib[s][m]) {
            continue;
          }
          bool top = true;
          for (Elem u = 0; u < T.size() && top; ++u) {
            top = !fib[s][u] || T.leq(u, m);
          }
          if (top) {
            out[s] = m;
          }
        }
      }
      return out;
    }

    void require_agree(std::vector<std::pair<char const*, bool>> const& forms,
                       std::string const&                               what) {
      for (auto const& [name, value] : forms) {
        if (value != forms.front().second) {
          std::string msg = what + " characterizations disagree:";
          for (auto const& [n, v] : forms) {
            msg += std::string(" ") + n + "=" + (v ? "true" : "false");
          }
          throw EquivalenceViolation(msg);
        }
      }
    }

  }  // namespace

  bool is_proper_morphism(RSMorphism const& f) {
    if (!f.surjective) {
      return false;
    }
    RSemigroup const& S = f.source;
    RSemigroup const& T = f.target;
    bool by_definition = true, r_injective = true, l_injective = true;
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        if (f(s) != f(t) || s == t) {
          continue;
        }
        by_definition = by_definition && S.compatible(s, t);
        r_injective   = r_injective && S.plus(s) != S.plus(t);
        l_injective   = l_injective && S.star(s) != S.star(t);
      }
    }
    bug_unless(by_definition == (r_injective && l_injective),
               "properness by definition and by injectivity on classes disagree");
    if (by_definition) {
      for (Elem s = 0; s < S.size(); ++s) {
        for (Elem t = 0; t < S.size(); ++t) {
          bug_unless(S.compatible(s, t) == T.compatible(f(s), f(t)),
                     "proper morphism does not reflect compatibility");
        }
      }
    }
    return by_definition;
  }

  ActionTriple upper_underlying(RSMorphism const& psi) {
    return underlying(psi, true);
  }

  ActionTriple lower_underlying(RSMorphism const& psi) {
    return underlying(psi, false);
  }

  Decomposition decompose(RSMorphism const& psi) {
    RSemigroup const& T = psi.source;
    Decomposition     d;
    d.product       = partial_action_product(upper_underlying(psi));
    d.lower_product = partial_action_product(lower_underlying(psi));
    bug_unless(d.product.pairs == d.lower_product.pairs
                   && d.product.algebra.same_tables(d.lower_product.algebra),
               "upper and lower products differ");

    std::vector<Elem> eta(T.size());
    std::vector<bool> hit(d.product.pairs.size(), false);
    for (Elem t = 0; t < T.size(); ++t) {
      eta[t] = d.product.index_of(static_cast<Elem>(T.projection_index(T.plus(t))), psi(t));
      bug_unless(eta[t] != static_cast<Elem>(RSemigroup::kNone), "(t+, psi(t)) is not in the product");
      bug_unless(!hit[eta[t]], "eta is not injective");
      hit[eta[t]] = true;
    }
    bug_unless(T.size() == d.product.pairs.size(), "eta is not surjective");
    try {
      d.eta = check_rsmorphism(T, d.product.algebra, std::move(eta));
    } catch (NotAMorphism const& e) {
      throw OracleMismatch(std::string("eta is not a morphism: ") + e.what());
    }
    for (Elem t = 0; t < T.size(); ++t) {
      bug_unless(d.product.psi(d.eta(t)) == psi(t), "Psi . eta != psi");
    }
    return d;
  }

  std::variant<Tau, NoMaxima> tau(RSMorphism const& psi) {
    if (!psi.surjective) {
      throw PreconditionFailed("fibre maxima need a surjective morphism");
    }
    RSemigroup const& T   = psi.source;
    RSemigroup const& S   = psi.target;
    auto const        max = fibre_maxima(psi);
    Tau               out;
    for (Elem s = 0; s < S.size(); ++s) {
      if (!max[s]) {
        return NoMaxima{s};
      }
      out.map.push_back(*max[s]);
    }
    bug_unless(is_proper_morphism(psi), "fibre maxima exist but the morphism is not proper");
    auto const inv_t = inverse_table(T);
    out.report = evaluate_conditions(S, TableTarget{T, inv_t}, out.map, inverse_table(S));
    bug_unless(out.report.premorphism(), "fibre-maximum map is not a premorphism");

    // The lower underlying premorphism factors through the Munn
    // representation of T, and shares every condition with tau.
    auto const lower = lower_underlying(psi);
    auto const munn  = munn_maps(T);
    for (Elem s = 0; s < S.size(); ++s) {
      bug_unless(munn[out.map[s]] == lower.phi[s], "lower premorphism != Munn . tau");
    }
    auto const rl = evaluate(S, lower.phi.maps);
    auto const& rt = out.report;
    if (rt.op != rl.op || rt.lsr != rl.lsr || rt.lsl != rl.lsl || rt.strong() != rl.strong()
        || rt.lm != rl.lm || rt.m != rl.m) {
      throw EquivalenceViolation("tau and the lower underlying premorphism differ on a condition");
    }
    return out;
  }

  std::vector<std::pair<std::string, std::string>> ExtensionReport::entries() const {
    auto b   = [](bool v) { return std::string(v ? "true" : "false"); };
    auto opt = [&](std::optional<bool> v) { return v ? b(*v) : std::string("n/a"); };
    return {{"order_proper", b(order_proper)},
            {"extra_proper", b(extra_proper)},
            {"perfect", b(perfect)},
            {"has_fiber_maxima", b(has_fiber_maxima)},
            {"F_morphism", opt(f_morphism)},
            {"FA_morphism", opt(fa_morphism)},
            {"perfect_F", opt(perfect_f)}};
  }

  ExtensionReport classify_extension(RSMorphism const& psi) {
    require_proper(psi);
    RSemigroup const& T     = psi.source;
    RSemigroup const& S     = psi.target;
    auto const        hat   = upper_underlying(psi);
    auto const        tilde = lower_underlying(psi);
    auto const        rh    = evaluate(S, hat.phi.maps);
    auto const        rt    = evaluate(S, tilde.phi.maps);
    auto const        fib   = fibres(psi);
    ExtensionReport   r;

    bug_unless(rh.op, "upper underlying premorphism is not order-preserving");

    // Order-proper.
    bool lift = true;
    for (Elem s = 0; s < S.size() && lift; ++s) {
      for (Elem t = 0; t < S.size() && lift; ++t) {
        if (!S.leq(s, t)) {
          continue;
        }
        for (Elem u = 0; u < T.size() && lift; ++u) {
          if (!fib[s][u]) {
            continue;
          }
          bool found = false;
          for (Elem v = 0; v < T.size() && !found; ++v) {
            found = fib[t][v] && T.leq(u, v);
          }
          if (!found) {
            lift = false;
            r.witnesses.emplace("order_proper", std::vector<Elem>{s, t, u});
          }
        }
      }
    }
    bool down_closed = true;
    for (Elem s = 0; s < S.size() && down_closed; ++s) {
      down_closed = below_preimage(psi, s) == down(T, fib[s]);
    }
    require_agree({{"lower order-preserving", rt.op},
                   {"lower == upper", hat.phi.maps == tilde.phi.maps},
                   {"fibres lift along the order", lift},
                   {"preimage of down-sets", down_closed}},
                  "order-proper");
    r.order_proper = rt.op;

    // Extra proper, one side at a time.
    require_agree({{"upper LSr", rh.lsr}, {"upper Sr", rh.sr}, {"lower LSr", rt.lsr}},
                  "extra proper (right)");
    require_agree({{"upper LSl", rh.lsl}, {"upper Sl", rh.sl}, {"lower LSl", rt.lsl}},
                  "extra proper (left)");
    r.extra_proper = rt.lsr && rt.lsl;
    if (!r.extra_proper) {
      r.witnesses.emplace("extra_proper",
                          rt.witnesses.at(rt.lsr ? "LSl" : "LSr"));
    }

    // Perfect.
    bool products = true;
    for (Elem s = 0; s < S.size() && products; ++s) {
      auto const A = below_preimage(psi, s);
      for (Elem t = 0; t < S.size() && products; ++t) {
        auto const B = below_preimage(psi, t);
        ElemSet    AB(T.size(), false);
        for (Elem a = 0; a < T.size(); ++a) {
          for (Elem b = 0; b < T.size(); ++b) {
            if (A[a] && B[b]) {
              AB[T.mul(a, b)] = true;
            }
          }
        }
        if (AB != below_preimage(psi, S.mul(s, t))) {
          products = false;
          r.witnesses.emplace("perfect", std::vector<Elem>{s, t});
        }
      }
    }
    require_agree({{"upper M", rh.m},
                   {"upper LM", rh.lm},
                   {"lower LM", rt.lm},
                   {"preimages of down-sets multiply", products}},
                  "perfect");
    r.perfect = rh.m;
    if (is_reduced(S)) {
      bug_unless(is_proper(T), "extension of a reduced semigroup with improper source");
      require_agree({{"perfect", r.perfect}, {"almost perfect source", is_almost_perfect(T)}},
                    "perfect over a reduced semigroup");
    }

    auto const tv = tau(psi);
    if (auto const* t = std::get_if<Tau>(&tv)) {
      r.has_fiber_maxima = true;
      r.f_morphism       = t->report.op;
      r.fa_morphism      = t->report.op && t->report.locally_strong();
      r.perfect_f        = t->report.op && r.perfect;
    } else {
      r.witnesses.emplace("has_fiber_maxima", std::vector<Elem>{std::get<NoMaxima>(tv).s});
    }
    return r;
  }

  bool is_almost_perfect(RSemigroup const& T) {
    if (!is_proper(T)) {
      return false;
    }
    auto const sg = sigma(T);
    for (Elem a = 0; a < T.size(); ++a) {
      for (Elem b = 0; b < T.size(); ++b) {
        ElemSet prod(T.size(), false);
        for (Elem x : sg.blocks[sg.block_of[a]]) {
          for (Elem y : sg.blocks[sg.block_of[b]]) {
            prod[T.mul(x, y)] = true;
          }
        }
        for (Elem z = 0; z < T.size(); ++z) {
          if (prod[z] != sg.related(z, T.mul(a, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool fiber_maxima_imply_proper(RSMorphism const& f) {
    if (!f.surjective) {
      throw PreconditionFailed("fibre maxima need a surjective morphism");
    }
    for (auto const& m : fibre_maxima(f)) {
      if (!m) {
        return false;
      }
    }
    bug_unless(is_proper_morphism(f), "fibre maxima exist but the morphism is not proper");
    return true;
  }

}  // namespace rsemi
