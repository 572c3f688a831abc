#include "rsemi/premorphism.hpp"

#include <string>

#include "rsemi/enumerate.hpp"
#include "rsemi/error.hpp"
#include "rsemi/inverse.hpp"

namespace rsemi {

  std::vector<std::pair<std::string, bool>> PremorphReport::entries() const {
    std::vector<std::pair<std::string, bool>> out{
        {"premorphism", premorphism()},
        {"OP", op},
        {"Sr", sr},
        {"Sl", sl},
        {"strong", strong()},
        {"LSr", lsr},
        {"LSl", lsl},
        {"LSr'", lsr1},
        {"LSl'", lsl1},
        {"LSr''", lsr2},
        {"LSl''", lsl2},
        {"locally_strong", locally_strong()},
        {"M", m},
        {"LM", lm},
        {"LM'", lm1},
        {"LMr", lmr},
        {"LMl", lml},
        {"multiplicative", multiplicative()},
        {"locally_multiplicative", locally_multiplicative()},
    };
    if (inv) {
      out.emplace_back("Inv", *inv);
    }
    return out;
  }

  void verify_condition_implications(PremorphReport const& r,
                                     bool                  inverse_case,
                                     bool                  reduced_source) {
    auto require = [](bool ok, char const* what) {
      if (!ok) {
        throw EquivalenceViolation(std::string("premorphism flags violate: ") + what);
      }
    };
    if (!r.premorphism()) {
      throw PreconditionFailed("flag implications are only claimed for premorphisms");
    }
    require(!r.m || r.lm, "M => LM");
    require(!r.m || r.op, "M => OP");
    require(!r.strong() || (r.lsr && r.lsl), "strong => LSr and LSl");
    require(r.strong() == (r.locally_strong() && r.op), "strong <=> locally strong and OP");
    require(r.sr == (r.lsr && r.op), "Sr <=> LSr and OP");
    require(r.sl == (r.lsl && r.op), "Sl <=> LSl and OP");
    require(r.lsr == r.lsr1, "LSr <=> LSr'");
    require(r.lsl == r.lsl1, "LSl <=> LSl'");
    require(!r.lsr1 || r.lsr2, "LSr' => LSr''");
    require(!r.lsl1 || r.lsl2, "LSl' => LSl''");
    require(r.m == (r.lm && r.op), "M <=> LM and OP");
    require(r.m == (r.lmr && r.op), "M <=> LMr and OP");
    require(r.m == (r.lml && r.op), "M <=> LMl and OP");
    require(r.lm == r.lm1, "LM <=> LM'");
    if (reduced_source) {
      require(r.op, "premorphisms from a reduced semigroup are order-preserving");
      require(r.locally_strong() == r.strong(), "reduced source: locally strong <=> strong");
    }
    if (inverse_case) {
      if (!r.inv) {
        throw PreconditionFailed("inverse case without an Inv flag");
      }
      bool const inv = *r.inv;
      require(r.sr == r.sl && r.sl == r.strong(), "inverse: Sr <=> Sl <=> strong");
      require(r.lsr1 == inv, "inverse: LSr' <=> Inv");
      require(r.lsl1 == inv, "inverse: LSl' <=> Inv");
      require(r.lsr2 == inv, "inverse: LSr'' <=> Inv");
      require(r.lsl2 == inv, "inverse: LSl'' <=> Inv");
      require(r.locally_strong() == inv, "inverse: locally strong <=> Inv");
      require(r.strong() == (inv && r.op), "inverse: strong <=> Inv and OP");
    }
  }

  Premorph check_premorphism(RSemigroup const& S, std::size_t carrier, std::vector<PBij> maps) {
    if (maps.size() != S.size()) {
      throw DimensionMismatch("premorphism needs one partial bijection per element");
    }
    for (auto const& f : maps) {
      if (f.carrier() != carrier) {
        throw DimensionMismatch("partial bijection on the wrong carrier");
      }
    }
    std::size_t const n = S.size();
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (!leq(maps[s] * maps[t], maps[S.mul(s, t)])) {
          throw PMViolation("PM1", {s, t});
        }
      }
    }
    for (Elem s = 0; s < n; ++s) {
      if (!leq(maps[s].star(), maps[S.star(s)])) {
        throw PMViolation("PM2", {s});
      }
    }
    for (Elem s = 0; s < n; ++s) {
      if (!leq(maps[s].plus(), maps[S.plus(s)])) {
        throw PMViolation("PM3", {s});
      }
    }
    for (Elem e : S.projections()) {
      if (!maps[e].is_partial_identity()) {
        throw OracleMismatch("a projection does not act as a partial identity");
      }
    }
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (S.compatible(s, t) && !compatible(maps[s], maps[t])) {
          throw OracleMismatch("compatible elements act by incompatible maps");
        }
      }
    }
    return Premorph{S, carrier, std::move(maps)};
  }

  PremorphReport evaluate(RSemigroup const& S, std::vector<PBij> const& maps) {
    return evaluate_conditions(S, PBijTarget{}, maps, inverse_table(S));
  }

  PremorphReport classify(Premorph const& phi) {
    auto const inv = inverse_table(phi.source);
    auto       r   = evaluate_conditions(phi.source, PBijTarget{}, phi.maps, inv);
    verify_condition_implications(r, inv.has_value(), is_reduced(phi.source));
    return r;
  }

  ActionTable premorph_to_left_action(Premorph const& phi) {
    RSemigroup const& S = phi.source;
    std::size_t const k = phi.carrier;
    ActionTable       act(S.size(), std::vector<Elem>(k, PBij::kUndef));
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem x = 0; x < k; ++x) {
        act[s][x] = phi[s](x);
      }
    }
    auto def  = [&](Elem s, Elem x) { return act[s][x] != PBij::kUndef; };
    auto fail = [](char const* what) {
      throw OracleMismatch(std::string("left action axiom fails: ") + what);
    };
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem x = 0; x < k; ++x) {
        if (!def(s, x)) {
          continue;
        }
        for (Elem y = 0; y < k; ++y) {
          if (y != x && def(s, y) && act[s][x] == act[s][y]) {
            fail("each element acts injectively");
          }
        }
        Elem const sx = act[s][x];
        for (Elem t = 0; t < S.size(); ++t) {
          if (def(t, sx)) {
            Elem const ts = S.mul(t, s);
            if (!def(ts, x) || act[ts][x] != act[t][sx]) {
              fail("t.(s.x) = ts.x");
            }
          }
        }
        if (!def(S.star(s), x) || act[S.star(s)][x] != x) {
          fail("s*.x = x");
        }
        if (!def(S.plus(s), sx)) {
          fail("s+.(s.x) defined");
        }
      }
    }
    return act;
  }

  namespace {

    ActionTable invert_rows(ActionTable const& table) {
      ActionTable out(table.size());
      for (std::size_t s = 0; s < table.size(); ++s) {
        out[s].assign(table[s].size(), PBij::kUndef);
        for (Elem x = 0; x < table[s].size(); ++x) {
          if (table[s][x] != PBij::kUndef) {
            out[s][table[s][x]] = x;
          }
        }
      }
      return out;
    }

  }  // namespace

  ActionTable left_to_right_action(RSemigroup const& S, ActionTable const& left) {
    ActionTable const right = invert_rows(left);
    auto def  = [&](Elem x, Elem s) { return right[s][x] != PBij::kUndef; };
    auto fail = [](char const* what) {
      throw OracleMismatch(std::string("right action axiom fails: ") + what);
    };
    std::size_t const k = right.empty() ? 0 : right.front().size();
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem x = 0; x < k; ++x) {
        if (left[s][x] != PBij::kUndef && right[s][left[s][x]] != x) {
          fail("(s.x) o s = x");
        }
        if (!def(x, s)) {
          continue;
        }
        for (Elem y = 0; y < k; ++y) {
          if (y != x && def(y, s) && right[s][x] == right[s][y]) {
            fail("each element acts injectively");
          }
        }
        Elem const xs = right[s][x];
        for (Elem t = 0; t < S.size(); ++t) {
          if (def(xs, t)) {
            Elem const st = S.mul(s, t);
            if (!def(x, st) || right[st][x] != right[t][xs]) {
              fail("(x o s) o t = x o st");
            }
          }
        }
        if (!def(x, S.plus(s)) || right[S.plus(s)][x] != x) {
          fail("x o s+ = x");
        }
        if (!def(xs, S.star(s))) {
          fail("(x o s) o s* defined");
        }
      }
    }
    return right;
  }

  ActionTable right_to_left_action(RSemigroup const& /*S*/, ActionTable const& right) {
    return invert_rows(right);
  }

  Premorph left_action_to_premorph(RSemigroup const& S, ActionTable const& left) {
    if (left.size() != S.size()) {
      throw DimensionMismatch("action table needs one row per element");
    }
    std::size_t const k = left.empty() ? 0 : left.front().size();
    std::vector<PBij> maps;
    for (auto const& row : left) {
      if (row.size() != k) {
        throw DimensionMismatch("ragged action table");
      }
      PBij f(k);
      for (Elem x = 0; x < k; ++x) {
        if (row[x] != PBij::kUndef) {
          f.set(x, row[x]);
        }
      }
      maps.push_back(f);
    }
    return check_premorphism(S, k, std::move(maps));
  }

  ActionTriple make_action_triple(Premorph phi, std::vector<Elem> q, Semilattice lattice) {
    RSemigroup const& S = phi.source;
    if (lattice.size() != phi.carrier || q.size() != phi.carrier) {
      throw DimensionMismatch("semilattice, q and carrier sizes differ");
    }
    for (Elem y = 0; y < q.size(); ++y) {
      if (q[y] >= S.size() || !S.is_projection(q[y])) {
        throw NotSemilatticeMorphism("q(" + std::to_string(y) + ") is not a projection");
      }
    }
    for (Elem x = 0; x < q.size(); ++x) {
      for (Elem y = 0; y < q.size(); ++y) {
        if (q[lattice.meet(x, y)] != S.mul(q[x], q[y])) {
          throw NotSemilatticeMorphism("q does not preserve the meet of " + std::to_string(x)
                                       + " and " + std::to_string(y));
        }
      }
    }
    return ActionTriple{std::move(phi), std::move(q), std::move(lattice)};
  }

  std::vector<std::pair<std::string, bool>> ActionFlags::entries() const {
    return {{"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},
            {"A5", a5}, {"A3a", a3a}, {"A3b", a3b}};
  }

  ActionFlags check_action_conditions(ActionTriple const& t) {
    RSemigroup const&  S = t.source();
    Semilattice const& Y = t.lattice;
    auto const&        q = t.q;
    auto const&        phi = t.phi;
    ActionFlags        f;
    auto fail = [&f](bool& flag, char const* name, std::vector<Elem> w) {
      if (flag) {
        flag = false;
        f.witnesses.emplace(name, std::move(w));
      }
    };
    // q^{-1}(e) and q^{-1}(e v) as subsets of Y.
    auto fibre = [&](Elem e) {
      Subset r = 0;
      for (Elem y = 0; y < Y.size(); ++y) {
        if (q[y] == e) {
          r |= singleton(y);
        }
      }
      return r;
    };
    auto fibre_below = [&](Elem e) {
      Subset r = 0;
      for (Elem y = 0; y < Y.size(); ++y) {
        if (S.leq(q[y], e)) {
          r |= singleton(y);
        }
      }
      return r;
    };

    for (Elem s = 0; s < S.size(); ++s) {
      PBij const&  fs  = phi[s];
      Subset const dom = fs.domain();
      Subset const ran = fs.range();
      if (!Y.is_order_ideal(dom) || !Y.is_order_ideal(ran)) {
        fail(f.a1, "A1", {s});
      }
      for (Elem x : members(dom)) {
        for (Elem y : members(dom)) {
          if (Y.leq(x, y) != Y.leq(fs(x), fs(y))) {
            fail(f.a2, "A2", {s, x, y});
          }
        }
      }
      if ((dom & fibre(S.star(s))) == 0) {
        fail(f.a4, "A4", {s});
      }
      if (!is_subset(dom, phi[S.star(s)].domain())
          || !is_subset(ran, phi[S.plus(s)].range())) {
        fail(f.a5, "A5", {s});
      }
      Subset by_smaller = 0;
      for (Elem u = 0; u < S.size(); ++u) {
        if (S.leq(u, s)) {
          by_smaller |= phi[u].domain() & fibre(S.star(u));
        }
      }
      if (dom != by_smaller) {
        fail(f.a3a, "A3a", {s});
      }
      if (dom != Y.downset(dom & fibre(S.star(s)))) {
        fail(f.a3b, "A3b", {s});
      }
    }
    for (Elem e : S.projections()) {
      Subset const dom = phi[e].domain();
      if (!is_subset(Y.downset(fibre(e)), dom) || !is_subset(dom, fibre_below(e))) {
        fail(f.a3, "A3", {e});
      }
    }
    if (!f.a5) {
      throw OracleMismatch("A5 fails for a premorphism");
    }
    if (!f.basic()) {
      return f;
    }

    auto require = [](bool ok, char const* what) {
      if (!ok) {
        throw OracleMismatch(std::string("action triple consequence fails: ") + what);
      }
    };
    for (Elem e : S.projections()) {
      Subset const dom = phi[e].domain();
      if (f.a3a) {
        require(dom == fibre_below(e), "A3a => dom phi_e = q^{-1}(e v)");
      }
      if (f.a3b) {
        require(dom == Y.downset(fibre(e)), "A3b => dom phi_e = (q^{-1}(e))v");
      }
    }
    if (f.a3a) {
      for (Elem s = 0; s < S.size(); ++s) {
        for (Elem u = 0; u < S.size(); ++u) {
          if (S.leq(s, u)) {
            require(leq(phi[s], phi[u]), "A3a => order-preserving");
          }
        }
      }
    }
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem y : members(phi[s].domain())) {
        Elem const img = phi[s](y);
        require(q[img] == S.plus(S.mul(s, q[y])), "q(phi_s(y)) = (s q(y))+");
        require(q[y] == S.star(S.mul(q[img], s)), "q(y) = (q(phi_s(y)) s)*");
      }
    }
    return f;
  }

  Question1Result search_question1(std::size_t max_order,
                                   std::size_t max_carrier,
                                   bool        inverse_only,
                                   std::size_t limit) {
    Question1Result result;
    for (std::size_t n = 1; n <= max_order && !result.witness; ++n) {
      for (auto const& S : enumerate_restriction_semigroups(n, true)) {
        auto const inv = inverse_table(S);
        if (inverse_only && !inv) {
          continue;
        }
        ++result.sources;
        for (std::size_t k = 1; k <= max_carrier && !result.witness; ++k) {
          for_each_premorphism(S, k, [&](Premorph const& phi) {
            if (result.witness) {
              return;
            }
            if (++result.examined > limit) {
              throw SizeLimit("question 1 search exceeded " + std::to_string(limit)
                              + " premorphisms");
            }
            auto r = evaluate_conditions(S, PBijTarget{}, phi.maps, inv);
            verify_condition_implications(r, inv.has_value(), is_reduced(S));
            if (r.question1_witness()) {
              result.witness = phi;
            }
          });
        }
        if (result.witness) {
          break;
        }
      }
    }
    return result;
  }

}  // namespace rsemi
