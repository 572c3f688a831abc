#include "rsemi/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rsemi/error.hpp"
#include "rsemi/inverse.hpp"
#include "rsemi/iso.hpp"

namespace rsemi {

  namespace {

    class Counter {
     public:
      Counter(std::size_t limit, char const* what) : _limit(limit), _what(what) {}

      void tick() {
        if (++_count > _limit) {
          throw SizeLimit(std::string("enumeration of ") + _what + " exceeded "
                          + std::to_string(_limit) + " items");
        }
      }

     private:
      std::size_t _limit;
      std::size_t _count = 0;
      char const* _what;
    };

    std::vector<std::vector<Elem>> all_permutations(std::size_t n) {
      std::vector<Elem> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<Elem>> out;
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    // --- semilattices -----------------------------------------------------

    // One representative per isomorphism class of n-point meet
    // semilattices, as canonical-key -> semilattice. Every finite meet
    // semilattice arises from a smaller one by adding a new maximal element
    // m whose strict down-set D is a nonempty order ideal such that each
    // D n x-down has a greatest element (which becomes m meet x).
    std::map<std::vector<Elem>, Semilattice> semilattice_classes(std::size_t n) {
      std::map<std::vector<Elem>, Semilattice> out;
      if (n == 0) {
        return out;
      }
      if (n == 1) {
        Semilattice Y;
        out.emplace(canonical_key(Y), Y);
        return out;
      }
      for (auto const& [key, Y] : semilattice_classes(n - 1)) {
        std::size_t const k = Y.size();
        for (Subset D = 1; D <= Y.all(); ++D) {
          if (!Y.is_order_ideal(D)) {
            continue;
          }
          std::vector<Elem> meet_m(k);
          bool              ok = true;
          for (Elem x = 0; x < k && ok; ++x) {
            Subset const below = D & Y.principal(x);
            // below is an ideal; it has a greatest element iff it is
            // principal.
            ok = false;
            for (Elem g : members(below)) {
              if (Y.principal(g) == below) {
                meet_m[x] = g;
                ok        = true;
                break;
              }
            }
          }
          if (!ok) {
            continue;
          }
          std::vector<Elem> meet(n * n);
          for (Elem a = 0; a < k; ++a) {
            for (Elem b = 0; b < k; ++b) {
              meet[a * n + b] = Y.meet(a, b);
            }
            meet[a * n + k] = meet_m[a];
            meet[k * n + a] = meet_m[a];
          }
          meet[k * n + k] = static_cast<Elem>(k);
          auto Z          = Semilattice::from_meet(n, std::move(meet));
          auto zkey       = canonical_key(Z);
          out.emplace(std::move(zkey), std::move(Z));
        }
      }
      return out;
    }

    // --- restriction semigroups -------------------------------------------

    class RSemigroupSearch {
     public:
      RSemigroupSearch(Semilattice const& Y, std::size_t n) : _Y(Y), _n(n), _k(Y.size()) {
        _star.assign(n, 0);
        _plus.assign(n, 0);
        for (Elem e = 0; e < _k; ++e) {
          _star[e] = e;
          _plus[e] = e;
        }
      }

      // Calls emit(mul, star, plus) for every solution.
      template <typename Emit>
      void run(Emit&& emit) {
        label_pairs(static_cast<Elem>(_k), 0, emit);
      }

     private:
      static constexpr Elem kUnset = static_cast<Elem>(-1);

      Semilattice const& _Y;
      std::size_t        _n;
      std::size_t        _k;
      std::vector<Elem>  _star, _plus, _mul;
      std::vector<std::pair<Elem, Elem>> _cells;

      bool proj_leq(Elem e, Elem f) const { return _Y.leq(e, f); }
      Elem M(Elem a, Elem b) const { return _mul[a * _n + b]; }
      bool known(Elem a, Elem b) const { return _mul[a * _n + b] != kUnset; }

      // Non-projections get (plus, star) pairs in nondecreasing order; they
      // are otherwise interchangeable.
      template <typename Emit>
      void label_pairs(Elem x, std::size_t min_code, Emit& emit) {
        if (x == _n) {
          start_tables(emit);
          return;
        }
        for (std::size_t code = min_code; code < _k * _k; ++code) {
          _plus[x] = static_cast<Elem>(code / _k);
          _star[x] = static_cast<Elem>(code % _k);
          label_pairs(x + 1, code, emit);
        }
      }

      template <typename Emit>
      void start_tables(Emit& emit) {
        _mul.assign(_n * _n, kUnset);
        bool ok = true;
        auto fix = [&](Elem a, Elem b, Elem c) {
          if (known(a, b) && M(a, b) != c) {
            ok = false;
          }
          _mul[a * _n + b] = c;
        };
        for (Elem e = 0; e < _k; ++e) {
          for (Elem f = 0; f < _k; ++f) {
            fix(e, f, _Y.meet(e, f));
          }
        }
        for (Elem x = static_cast<Elem>(_k); x < _n; ++x) {
          fix(_plus[x], x, x);
          fix(x, _star[x], x);
        }
        if (!ok) {
          return;
        }
        _cells.clear();
        for (Elem a = 0; a < _n; ++a) {
          for (Elem b = 0; b < _n; ++b) {
            if (!known(a, b)) {
              _cells.emplace_back(a, b);
            }
          }
        }
        // The fixed cells must already be consistent.
        for (Elem a = 0; a < _n; ++a) {
          for (Elem b = 0; b < _n; ++b) {
            if (known(a, b) && !associative_around(a, b)) {
              return;
            }
          }
        }
        if (!pair_identities_ok()) {
          return;
        }
        fill(0, emit);
      }

      bool triple_ok(Elem x, Elem y, Elem z) const {
        if (!known(x, y) || !known(y, z)) {
          return true;
        }
        Elem const xy = M(x, y);
        Elem const yz = M(y, z);
        if (!known(xy, z) || !known(x, yz)) {
          return true;
        }
        return M(xy, z) == M(x, yz);
      }

      bool associative_around(Elem a, Elem b) const {
        for (Elem z = 0; z < _n; ++z) {
          if (!triple_ok(a, b, z) || !triple_ok(z, a, b)) {
            return false;
          }
        }
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            if (known(x, y) && M(x, y) == a && !triple_ok(x, y, b)) {
              return false;
            }
            if (known(x, y) && M(x, y) == b && !triple_ok(a, x, y)) {
              return false;
            }
          }
        }
        return true;
      }

      // The defining identities that are not automatic from the fixed
      // cells, checked wherever all their cells are known.
      bool pair_identities_ok() const {
        for (Elem x = 0; x < _n; ++x) {
          for (Elem y = 0; y < _n; ++y) {
            Elem const px = _plus[x];
            Elem const sy = _star[y];
            if (known(px, y) && _plus[M(px, y)] != _Y.meet(px, _plus[y])) {
              return false;
            }
            if (known(x, sy) && _star[M(x, sy)] != _Y.meet(_star[x], sy)) {
              return false;
            }
            if (known(x, y)) {
              Elem const xy = M(x, y);
              if (known(_plus[xy], x) && known(x, _plus[y])
                  && M(_plus[xy], x) != M(x, _plus[y])) {
                return false;
              }
              if (known(y, _star[xy]) && known(_star[x], y)
                  && M(y, _star[xy]) != M(_star[x], y)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename Emit>
      void fill(std::size_t i, Emit& emit) {
        if (i == _cells.size()) {
          emit(_mul, _star, _plus);
          return;
        }
        auto [a, b] = _cells[i];
        for (Elem c = 0; c < _n; ++c) {
          // (ab)+ <= a+ and (ab)* <= b*.
          if (!proj_leq(_plus[c], _plus[a]) || !proj_leq(_star[c], _star[b])) {
            continue;
          }
          _mul[a * _n + b] = c;
          if (associative_around(a, b) && pair_identities_ok()) {
            fill(i + 1, emit);
          }
        }
        _mul[a * _n + b] = kUnset;
      }
    };

    std::map<std::vector<Elem>, RSemigroup> rsemigroup_classes(std::size_t n,
                                                               Counter&    counter) {
      std::map<std::vector<Elem>, RSemigroup> out;
      for (std::size_t k = 1; k <= n; ++k) {
        for (auto const& [ykey, Y] : semilattice_classes(k)) {
          RSemigroupSearch search(Y, n);
          search.run([&](std::vector<Elem> const& mul,
                         std::vector<Elem> const& star,
                         std::vector<Elem> const& plus) {
            auto S   = validate_restriction(n, mul, star, plus);
            auto key = canonical_key(S);
            if (out.find(key) == out.end()) {
              counter.tick();
              out.emplace(std::move(key), canonical_form(S));
            }
          });
        }
      }
      return out;
    }

    // --- premorphisms -------------------------------------------------------

    // Backtracking over phi_s, projections first. `candidates(s)` lists the
    // allowed values of phi_s; `local_ok(s)` checks conditions on a single
    // element once it is assigned; PM1 (and, with `pm23`, PM2/PM3) is checked
    // for every pair as soon as all three values are known.
    template <typename Candidates, typename LocalOk, typename Emit>
    void premorph_search(RSemigroup const& S,
                         bool              pm23,
                         Candidates&&      candidates,
                         LocalOk&&         local_ok,
                         Emit&&            emit) {
      std::size_t const n = S.size();
      std::vector<Elem> order;
      for (Elem e : S.projections()) {
        order.push_back(e);
      }
      for (Elem s = 0; s < n; ++s) {
        if (!S.is_projection(s)) {
          order.push_back(s);
        }
      }
      std::vector<PBij> phi(n);
      std::vector<bool> set(n, false);

      auto consistent = [&](Elem u) {
        for (Elem s = 0; s < n; ++s) {
          if (!set[s]) {
            continue;
          }
          for (Elem t = 0; t < n; ++t) {
            if (!set[t] || (s != u && t != u && S.mul(s, t) != u)) {
              continue;
            }
            Elem const st = S.mul(s, t);
            if (set[st] && !leq(phi[s] * phi[t], phi[st])) {
              return false;
            }
          }
        }
        if (pm23) {
          for (Elem s = 0; s < n; ++s) {
            if (!set[s]) {
              continue;
            }
            if ((s == u || S.star(s) == u) && set[S.star(s)]
                && !leq(phi[s].star(), phi[S.star(s)])) {
              return false;
            }
            if ((s == u || S.plus(s) == u) && set[S.plus(s)]
                && !leq(phi[s].plus(), phi[S.plus(s)])) {
              return false;
            }
          }
        }
        return true;
      };

      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
          emit(phi);
          return;
        }
        Elem const u = order[i];
        for (PBij const& f : candidates(u)) {
          phi[u] = f;
          set[u] = true;
          if (local_ok(u, phi) && consistent(u)) {
            self(self, i + 1);
          }
          set[u] = false;
        }
      };
      rec(rec, 0);
    }

    // Order isomorphisms between order ideals of Y (including the empty map).
    std::vector<PBij> ideal_isomorphisms(Semilattice const& Y) {
      std::vector<Subset> ideals;
      for (Subset D = 0; D <= Y.all(); ++D) {
        if (Y.is_order_ideal(D)) {
          ideals.push_back(D);
        }
      }
      std::vector<PBij> out;
      for (Subset D : ideals) {
        for (Subset R : ideals) {
          auto const src = members(D);
          auto const dst = members(R);
          if (src.size() != dst.size()) {
            continue;
          }
          PBij   f(Y.size());
          Subset used = 0;
          auto rec = [&](auto&& self, std::size_t i) -> void {
            if (i == src.size()) {
              out.push_back(f);
              return;
            }
            for (Elem y : dst) {
              if (contains(used, y)) {
                continue;
              }
              bool ok = true;
              for (std::size_t j = 0; j < i && ok; ++j) {
                Elem const z = src[j];
                ok = Y.leq(z, src[i]) == Y.leq(f(z), y) && Y.leq(src[i], z) == Y.leq(y, f(z));
              }
              if (!ok) {
                continue;
              }
              f.set(src[i], y);
              used |= singleton(y);
              self(self, i + 1);
              used &= ~singleton(y);
              f.erase(src[i]);
            }
          };
          rec(rec, 0);
        }
      }
      std::sort(out.begin(), out.end(), canonical_less);
      return out;
    }

  }  // namespace

  void for_each_semilattice(std::size_t                                    n,
                            bool                                           up_to_iso,
                            std::function<void(Semilattice const&)> const& visit,
                            std::size_t                                    limit) {
    Counter counter(limit, "semilattices");
    auto    classes = semilattice_classes(n);
    if (up_to_iso) {
      for (auto const& [key, Y] : classes) {
        counter.tick();
        visit(Y);
      }
      return;
    }
    std::set<std::vector<Elem>> seen;
    for (auto const& [key, Y] : classes) {
      for (auto const& p : all_permutations(n)) {
        std::vector<Elem> meet(n * n);
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            meet[p[a] * n + p[b]] = p[Y.meet(a, b)];
          }
        }
        seen.insert(meet);
      }
    }
    for (auto const& meet : seen) {
      counter.tick();
      visit(Semilattice::from_meet(n, meet));
    }
  }

  std::vector<Semilattice> enumerate_semilattices(std::size_t n, bool up_to_iso, std::size_t limit) {
    std::vector<Semilattice> out;
    for_each_semilattice(n, up_to_iso, [&](Semilattice const& Y) { out.push_back(Y); }, limit);
    return out;
  }

  void for_each_restriction_semigroup(std::size_t                                   n,
                                      bool                                          up_to_iso,
                                      std::function<void(RSemigroup const&)> const& visit,
                                      std::size_t                                   limit) {
    if (n == 0) {
      return;
    }
    Counter counter(limit, "restriction semigroups");
    Counter unlimited(kNoLimit, "restriction semigroups");
    auto    classes = rsemigroup_classes(n, up_to_iso ? counter : unlimited);
    if (up_to_iso) {
      for (auto const& [key, S] : classes) {
        visit(S);
      }
      return;
    }
    std::set<std::vector<Elem>> seen;
    for (auto const& [key, S] : classes) {
      for (auto const& p : all_permutations(n)) {
        auto const        R = relabel(S, p);
        std::vector<Elem> k(R.star_table());
        k.insert(k.end(), R.plus_table().begin(), R.plus_table().end());
        k.insert(k.end(), R.mul_table().begin(), R.mul_table().end());
        seen.insert(std::move(k));
      }
    }
    for (auto const& k : seen) {
      counter.tick();
      std::vector<Elem> star(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
      std::vector<Elem> plus(k.begin() + static_cast<std::ptrdiff_t>(n),
                             k.begin() + static_cast<std::ptrdiff_t>(2 * n));
      std::vector<Elem> mul(k.begin() + static_cast<std::ptrdiff_t>(2 * n), k.end());
      visit(validate_restriction(n, std::move(mul), std::move(star), std::move(plus)));
    }
  }

  std::vector<RSemigroup> enumerate_restriction_semigroups(std::size_t n,
                                                           bool        up_to_iso,
                                                           std::size_t limit) {
    std::vector<RSemigroup> out;
    for_each_restriction_semigroup(
        n, up_to_iso, [&](RSemigroup const& S) { out.push_back(S); }, limit);
    return out;
  }

  std::vector<RSemigroup> restriction_semigroups_up_to(std::size_t max_order, std::size_t limit) {
    std::vector<RSemigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto& S : enumerate_restriction_semigroups(n, true, limit)) {
        out.push_back(std::move(S));
      }
    }
    return out;
  }

  bool premorph_flag(PremorphReport const& r, std::string const& name) {
    for (auto const& [key, value] : r.entries()) {
      if (key == name) {
        return value;
      }
    }
    if (name == "Inv") {
      return false;
    }
    throw Error("unknown premorphism flag '" + name + "'");
  }

  void for_each_premorphism(RSemigroup const&                           S,
                            std::size_t                                 carrier,
                            std::function<void(Premorph const&)> const& visit,
                            std::vector<std::string> const&             filters,
                            std::size_t                                 limit) {
    {
      // Reject unknown names before searching.
      PremorphReport probe;
      probe.inv = true;
      for (auto const& f : filters) {
        premorph_flag(probe, f);
      }
    }
    Counter    counter(limit, "premorphisms");
    auto const all = symmetric_inverse(carrier).elements;
    std::vector<PBij> idents;
    for (auto const& f : all) {
      if (f.is_partial_identity()) {
        idents.push_back(f);
      }
    }
    auto const inv = inverse_table(S);
    premorph_search(
        S,
        true,
        [&](Elem u) -> std::vector<PBij> const& { return S.is_projection(u) ? idents : all; },
        [](Elem, std::vector<PBij> const&) { return true; },
        [&](std::vector<PBij> const& phi) {
          auto p = check_premorphism(S, carrier, phi);
          if (!filters.empty()) {
            auto r = evaluate_conditions(S, PBijTarget{}, p.maps, inv);
            for (auto const& f : filters) {
              if (!premorph_flag(r, f)) {
                return;
              }
            }
          }
          counter.tick();
          visit(p);
        });
  }

  std::vector<Premorph> enumerate_premorphisms(RSemigroup const&               S,
                                               std::size_t                     carrier,
                                               std::vector<std::string> const& filters,
                                               std::size_t                     limit) {
    std::vector<Premorph> out;
    for_each_premorphism(
        S, carrier, [&](Premorph const& p) { out.push_back(p); }, filters, limit);
    return out;
  }

  void for_each_pm1_map(RSemigroup const&                                    S,
                        std::size_t                                          carrier,
                        std::function<void(std::vector<PBij> const&)> const& visit,
                        std::size_t                                          limit) {
    Counter    counter(limit, "PM1 maps");
    auto const all = symmetric_inverse(carrier).elements;
    premorph_search(
        S,
        false,
        [&](Elem) -> std::vector<PBij> const& { return all; },
        [](Elem, std::vector<PBij> const&) { return true; },
        [&](std::vector<PBij> const& phi) {
          counter.tick();
          visit(phi);
        });
  }

  void for_each_action_triple(RSemigroup const&                               S,
                              Semilattice const&                              Y,
                              std::function<void(ActionTriple const&)> const& visit,
                              std::size_t                                     limit) {
    Counter    counter(limit, "action triples");
    auto const PS   = projection_semilattice(S);
    auto const isos = ideal_isomorphisms(Y);
    std::vector<PBij> idents;
    for (auto const& f : isos) {
      if (f.is_partial_identity()) {
        idents.push_back(f);
      }
    }
    for (auto const& qp : semilattice_morphisms(Y, PS)) {
      std::vector<Elem> q(Y.size());
      for (Elem y = 0; y < Y.size(); ++y) {
        q[y] = S.projections()[qp[y]];
      }
      auto fibre = [&](Elem e, bool below) {
        Subset r = 0;
        for (Elem y = 0; y < Y.size(); ++y) {
          if (below ? S.leq(q[y], e) : q[y] == e) {
            r |= singleton(y);
          }
        }
        return r;
      };
      // A4 forces q to be onto the projections.
      bool onto = true;
      for (Elem e : S.projections()) {
        onto = onto && fibre(e, false) != 0;
      }
      if (!onto) {
        continue;
      }
      premorph_search(
          S,
          true,
          [&](Elem u) -> std::vector<PBij> const& { return S.is_projection(u) ? idents : isos; },
          [&](Elem u, std::vector<PBij> const& phi) {
            Subset const dom = phi[u].domain();
            if ((dom & fibre(S.star(u), false)) == 0) {
              return false;
            }
            if (S.is_projection(u)) {
              return is_subset(Y.downset(fibre(u, false)), dom) && is_subset(dom, fibre(u, true));
            }
            return true;
          },
          [&](std::vector<PBij> const& phi) {
            auto t = make_action_triple(check_premorphism(S, Y.size(), phi), q, Y);
            if (!check_action_conditions(t).basic()) {
              throw OracleMismatch("generated action triple fails A1-A4");
            }
            counter.tick();
            visit(t);
          });
    }
  }

  std::vector<ActionTriple> enumerate_action_triples(RSemigroup const& S,
                                                     std::size_t       max_carrier,
                                                     std::size_t       limit) {
    std::vector<ActionTriple> out;
    for (std::size_t k = 1; k <= max_carrier; ++k) {
      for (auto const& Y : enumerate_semilattices(k, true)) {
        for_each_action_triple(
            S, Y, [&](ActionTriple const& t) { out.push_back(t); }, limit);
      }
    }
    return out;
  }

  std::vector<CongruencePartition> proper_congruences(RSemigroup const& T) {
    std::size_t const                n = T.size();
    std::vector<CongruencePartition> out;
    std::vector<std::size_t>         lab(n, 0);
    std::vector<std::vector<Elem>>   blocks;
    auto rec = [&](auto&& self, Elem a) -> void {
      if (a == n) {
        if (is_congruence(T, lab)) {
          out.push_back(partition_from_labels(lab, CongruencePartition::Kind::kernel));
        }
        return;
      }
      for (std::size_t b = 0; b <= blocks.size(); ++b) {
        if (b < blocks.size()) {
          bool ok = true;
          for (Elem x : blocks[b]) {
            ok = ok && T.compatible(a, x);
          }
          if (!ok) {
            continue;
          }
          blocks[b].push_back(a);
        } else {
          blocks.push_back({a});
        }
        lab[a] = b;
        self(self, a + 1);
        if (b < blocks.size() - 1 || blocks[b].size() > 1) {
          blocks[b].pop_back();
        } else {
          blocks.pop_back();
        }
      }
    };
    rec(rec, 0);
    return out;
  }

  void for_each_proper_quotient(std::size_t                                   n,
                                std::function<void(RSMorphism const&)> const& visit,
                                std::size_t                                   limit) {
    Counter counter(limit, "proper extensions");
    for_each_restriction_semigroup(n, true, [&](RSemigroup const& T) {
      for (auto const& rho : proper_congruences(T)) {
        auto q = quotient(T, rho);
        if (!q.projection.proper) {
          throw OracleMismatch("quotient by a congruence inside ~ is not proper");
        }
        counter.tick();
        visit(q.projection);
      }
    });
  }

  std::vector<RSMorphism> enumerate_proper_extensions(std::size_t       t_order,
                                                      RSemigroup const& S,
                                                      std::size_t       limit) {
    Counter                 counter(limit, "proper extensions");
    std::vector<RSMorphism> out;
    for (auto const& T : enumerate_restriction_semigroups(t_order, true)) {
      for (auto& m : all_morphism_maps(T, S)) {
        auto f = check_rsmorphism(T, S, std::move(m));
        if (f.surjective && f.proper) {
          counter.tick();
          out.push_back(std::move(f));
        }
      }
    }
    return out;
  }

}  // namespace rsemi
