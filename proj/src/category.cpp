#include "rsemi/category.hpp"

#include <numeric>
#include <string>

#include "rsemi/error.hpp"
#include "rsemi/extension.hpp"
#include "rsemi/semilattice.hpp"

namespace rsemi {

  namespace {

    void bug_unless(bool ok, std::string const& what) {
      if (!ok) {
        throw OracleMismatch(what);
      }
    }

    Subset image(std::vector<Elem> const& f, Subset A) {
      Subset out = 0;
      for (Elem x : members(A)) {
        out |= singleton(f[x]);
      }
      return out;
    }

    // {x in X : p(x) = e}
    Subset fibre(ActionTriple const& t, Elem e) {
      Subset out = 0;
      for (Elem x = 0; x < t.q.size(); ++x) {
        if (t.q[x] == e) {
          out |= singleton(x);
        }
      }
      return out;
    }

    std::vector<Elem> identity_map(std::size_t n) {
      std::vector<Elem> id(n);
      std::iota(id.begin(), id.end(), 0);
      return id;
    }

    std::vector<Elem> compose_maps(std::vector<Elem> const& g, std::vector<Elem> const& f) {
      std::vector<Elem> out(f.size());
      for (Elem x = 0; x < f.size(); ++x) {
        out[x] = g[f[x]];
      }
      return out;
    }

    AObject rebuild(AObject const& a, std::vector<PBij> maps) {
      auto const& t = a.triple;
      return make_aobject(make_action_triple(
          check_premorphism(t.source(), t.lattice.size(), std::move(maps)), t.q, t.lattice));
    }

  }  // namespace

  AObject make_aobject(ActionTriple t) {
    auto const flags = check_action_conditions(t);
    if (!flags.basic()) {
      throw PreconditionFailed("objects of A(S) must satisfy A1-A4");
    }
    AObject a;
    a.triple   = std::move(t);
    a.in_hat   = flags.a3a;
    a.in_tilde = flags.a3b;
    return a;
  }

  AMorphism check_amorphism(AObject const& a, AObject const& b, std::vector<Elem> f) {
    auto const& ta = a.triple;
    auto const& tb = b.triple;
    RSemigroup const& S = ta.source();
    if (f.size() != a.carrier()) {
      throw DimensionMismatch("morphism map has the wrong length");
    }
    for (Elem y : f) {
      if (y >= b.carrier()) {
        throw DimensionMismatch("morphism map leaves the target carrier");
      }
    }
    if (!is_semilattice_morphism(ta.lattice, tb.lattice, f)) {
      throw NotSemilatticeMorphism("map between carriers does not preserve meets");
    }
    AMorphism m;
    m.from = a;
    m.to   = b;
    m.f    = std::move(f);
    m.m1 = m.m2 = m.m2r = m.m3 = m.m3r = true;
    auto fail = [&m](bool& flag, char const* name, std::vector<Elem> w) {
      if (flag) {
        flag = false;
        m.witnesses.emplace(name, std::move(w));
      }
    };
    auto const& fx = m.f;
    for (Elem x = 0; x < a.carrier(); ++x) {
      if (ta.q[x] != tb.q[fx[x]]) {
        fail(m.m1, "M1", {x});
      }
    }
    for (Elem s = 0; s < S.size(); ++s) {
      PBij const& al = ta.phi[s];
      PBij const& be = tb.phi[s];
      for (Elem e : members(al.domain())) {
        if (!be.defined(fx[e]) || be(fx[e]) != fx[al(e)]) {
          fail(m.m2, "M2", {s, e});
        }
      }
      for (Elem e : members(al.range())) {
        Elem const pre = be.preimage(fx[e]);
        if (pre == PBij::kUndef || pre != fx[al.preimage(e)]) {
          fail(m.m2r, "M2r", {s, e});
        }
      }
      if ((be.domain() & fibre(tb, S.star(s))) != image(fx, al.domain() & fibre(ta, S.star(s)))) {
        fail(m.m3, "M3", {s});
      }
      if ((be.range() & fibre(tb, S.plus(s))) != image(fx, al.range() & fibre(ta, S.plus(s)))) {
        fail(m.m3r, "M3r", {s});
      }
    }
    if (m.m2 != m.m2r) {
      throw EquivalenceViolation("M2 and M2r disagree");
    }
    if (m.valid() && m.m3 != m.m3r) {
      throw EquivalenceViolation("M3 and M3r disagree on a morphism");
    }
    return m;
  }

  AObject hat_F(AObject const& a) {
    auto const&       t = a.triple;
    RSemigroup const& S = t.source();
    std::vector<PBij> maps(S.size(), PBij(a.carrier()));
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem u = 0; u < S.size(); ++u) {
        if (!S.leq(u, s)) {
          continue;
        }
        for (auto const& [x, y] : t.phi[u].pairs()) {
          if (maps[s].defined(x)) {
            bug_unless(maps[s](x) == y, "extension of domains is not well defined");
          } else {
            bug_unless(maps[s].preimage(y) == PBij::kUndef, "extension of domains is not injective");
            maps[s].set(x, y);
          }
        }
      }
    }
    auto out = rebuild(a, std::move(maps));
    bug_unless(out.in_hat, "extension of domains does not satisfy A3a");
    return out;
  }

  AObject tilde_F(AObject const& a) {
    auto const&       t = a.triple;
    RSemigroup const& S = t.source();
    std::vector<PBij> maps;
    for (Elem s = 0; s < S.size(); ++s) {
      Subset const D = t.lattice.downset(t.phi[s].domain() & fibre(t, S.star(s)));
      maps.push_back(t.phi[s].restrict(D));
    }
    auto out = rebuild(a, std::move(maps));
    bug_unless(out.in_tilde, "restriction of domains does not satisfy A3b");
    return out;
  }

  RSMorphism functor_U(AObject const& a) {
    return partial_action_product(a.triple).psi;
  }

  RSMorphism functor_U_mor(AMorphism const& m) {
    if (!m.valid()) {
      throw PreconditionFailed("U is only defined on morphisms (M1 and M2)");
    }
    auto const pa = partial_action_product(m.from.triple);
    auto const pb = partial_action_product(m.to.triple);
    std::vector<Elem> map(pa.pairs.size());
    for (Elem i = 0; i < map.size(); ++i) {
      auto const [x, s] = pa.pairs[i];
      map[i]            = pb.index_of(m.f[x], s);
      bug_unless(map[i] != static_cast<Elem>(RSemigroup::kNone), "U(f) leaves the product");
    }
    RSMorphism u;
    try {
      u = check_rsmorphism(pa.algebra, pb.algebra, std::move(map));
    } catch (NotAMorphism const& e) {
      throw OracleMismatch(std::string("U(f) is not a morphism: ") + e.what());
    }
    for (Elem i = 0; i < pa.pairs.size(); ++i) {
      bug_unless(pb.psi(u(i)) == pa.psi(i), "U(f) does not commute with the projections");
    }
    if (u.surjective != m.m3) {
      throw EquivalenceViolation("M3 of f and surjectivity of U(f) disagree");
    }
    return u;
  }

  AObject functor_G_hat(RSMorphism const& psi) {
    auto a = make_aobject(upper_underlying(psi));
    bug_unless(a.in_hat, "G^ lands outside the hat subcategory");
    return a;
  }

  AMorphism functor_G_hat_mor(RSMorphism const& psi1,
                              RSMorphism const& psi2,
                              RSMorphism const& gamma) {
    RSemigroup const& T1 = psi1.source;
    RSemigroup const& T2 = psi2.source;
    if (gamma.map.size() != T1.size() || !gamma.target.same_tables(T2)) {
      throw PreconditionFailed("gamma must map the source of psi1 to the source of psi2");
    }
    for (Elem t = 0; t < T1.size(); ++t) {
      if (psi2(gamma(t)) != psi1(t)) {
        throw PreconditionFailed("gamma is not a morphism of extensions (psi2 . gamma != psi1)");
      }
    }
    std::vector<Elem> f(T1.projections().size());
    for (Elem i = 0; i < f.size(); ++i) {
      f[i] = static_cast<Elem>(T2.projection_index(gamma(T1.projections()[i])));
    }
    auto m = check_amorphism(functor_G_hat(psi1), functor_G_hat(psi2), std::move(f));
    bug_unless(m.valid(), "G^(gamma) is not a morphism");
    if (m.m3 != gamma.surjective) {
      throw EquivalenceViolation("surjectivity of gamma and M3 of G^(gamma) disagree");
    }
    return m;
  }

  std::vector<AMorphism> amorphisms(AObject const& a, AObject const& b) {
    std::vector<AMorphism> out;
    for (auto& g : semilattice_morphisms(a.triple.lattice, b.triple.lattice)) {
      auto m = check_amorphism(a, b, std::move(g));
      if (m.valid()) {
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  bool functors_preserve(AMorphism const& m) {
    if (!m.valid()) {
      return true;
    }
    return check_amorphism(hat_F(m.from), hat_F(m.to), m.f).valid()
           && check_amorphism(tilde_F(m.from), tilde_F(m.to), m.f).valid();
  }

  AdjunctionReport verify_adjunction_instance(AObject const&              a,
                                              std::vector<AObject> const& family) {
    AdjunctionReport r;
    auto const       id = identity_map(a.carrier());
    auto const       ha = hat_F(a);
    auto const       ta = tilde_F(a);
    r.unit_is_morphism   = check_amorphism(a, ha, id).valid();
    r.counit_is_morphism = check_amorphism(ta, a, id).valid();
    if (!r.unit_is_morphism || !r.counit_is_morphism) {
      throw UniversalityFailure("identity is not a unit/counit morphism");
    }
    for (auto const& b : family) {
      if (b.in_hat) {
        auto const hs = amorphisms(ha, b);
        for (auto const& g : amorphisms(a, b)) {
          std::size_t factorizations = 0;
          for (auto const& h : hs) {
            factorizations += compose_maps(h.f, id) == g.f;
          }
          if (factorizations != 1) {
            throw UniversalityFailure("morphism into a hat object does not factor uniquely: "
                                      + format_witness(g.f));
          }
          ++r.hat_factorizations;
        }
      }
      if (b.in_tilde) {
        auto const hs = amorphisms(b, ta);
        for (auto const& g : amorphisms(b, a)) {
          std::size_t factorizations = 0;
          for (auto const& h : hs) {
            factorizations += compose_maps(id, h.f) == g.f;
          }
          if (factorizations != 1) {
            throw UniversalityFailure("morphism from a tilde object does not factor uniquely: "
                                      + format_witness(g.f));
          }
          ++r.tilde_factorizations;
        }
      }
    }
    if (a.in_hat) {
      r.hat_round_trip = hat_F(ta) == a;
    }
    if (a.in_tilde) {
      r.tilde_round_trip = tilde_F(ha) == a;
    }
    return r;
  }

  std::vector<Elem> unit_map(AObject const& a, ProductRS const& product) {
    auto out = lattice_embedding(product, a.triple);
    for (Elem& x : out) {
      x = static_cast<Elem>(product.algebra.projection_index(x));
    }
    return out;
  }

  EquivalenceReport verify_equivalence_instance(RSMorphism const&                  psi,
                                                AObject const&                     a,
                                                std::vector<AMorphism> const&      arrows,
                                                std::vector<ExtensionArrow> const& ext_arrows) {
    if (!a.in_hat) {
      throw PreconditionFailed("the equivalence is stated for the hat subcategory");
    }
    EquivalenceReport r;

    // a ~ G^U(a) via x -> (x, p(x)).
    auto const prod = partial_action_product(a.triple);
    auto const ga   = functor_G_hat(prod.psi);
    auto const fa   = unit_map(a, prod);
    std::vector<Elem> inv(fa.size(), static_cast<Elem>(RSemigroup::kNone));
    for (Elem x = 0; x < fa.size(); ++x) {
      bug_unless(fa[x] < inv.size() && inv[fa[x]] == static_cast<Elem>(RSemigroup::kNone),
                 "unit map is not a bijection");
      inv[fa[x]] = x;
    }
    bug_unless(ga.carrier() == a.carrier(), "unit map is not a bijection");
    r.unit_iso = check_amorphism(a, ga, fa).valid() && check_amorphism(ga, a, inv).valid();
    bug_unless(r.unit_iso, "x -> (x, p(x)) is not an isomorphism a -> G^U(a)");

    // psi ~ UG^(psi) via eta^.
    auto const d = decompose(psi);
    bug_unless(functor_U(functor_G_hat(psi)).source.same_tables(d.product.algebra),
               "U G^(psi) is not the decomposition product");
    r.counit_iso = true;

    for (auto const& g : arrows) {
      auto const p1 = partial_action_product(g.from.triple);
      auto const p2 = partial_action_product(g.to.triple);
      auto const gu = functor_G_hat_mor(p1.psi, p2.psi, functor_U_mor(g));
      bug_unless(compose_maps(gu.f, unit_map(g.from, p1)) == compose_maps(unit_map(g.to, p2), g.f),
                 "unit is not natural");
      ++r.unit_squares;
    }
    for (auto const& e : ext_arrows) {
      auto const d1 = decompose(e.psi1);
      auto const d2 = decompose(e.psi2);
      auto const ug = functor_U_mor(functor_G_hat_mor(e.psi1, e.psi2, e.gamma));
      bug_unless(compose_maps(ug.map, d1.eta.map) == compose_maps(d2.eta.map, e.gamma.map),
                 "counit is not natural");
      ++r.counit_squares;
    }
    return r;
  }

}  // namespace rsemi
