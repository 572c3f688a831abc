#include "rsemi/product.hpp"

#include <map>
#include <string>

#include "rsemi/error.hpp"

namespace rsemi {

  Elem ProductRS::index_of(Elem y, Elem s) const {
    for (Elem i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first == y && pairs[i].second == s) {
        return i;
      }
    }
    return static_cast<Elem>(RSemigroup::kNone);
  }

  namespace {

    void require_basic(ActionTriple const& t) {
      auto const flags = check_action_conditions(t);
      for (auto const& [name, value] : flags.entries()) {
        if (name != "A1" && name != "A2" && name != "A3" && name != "A4") {
          continue;
        }
        if (!value) {
          auto it = flags.witnesses.find(name);
          throw PreconditionFailed(
              "product needs A1-A4: " + name + " fails at "
              + format_witness(it == flags.witnesses.end() ? std::vector<Elem>{} : it->second));
        }
      }
    }

    void check_lemma(bool ok, std::string const& what) {
      if (!ok) {
        throw OracleMismatch("partial action product: " + what);
      }
    }

  }  // namespace

  ProductRS partial_action_product(ActionTriple const& t) {
    require_basic(t);
    RSemigroup const&  S   = t.source();
    Semilattice const& Y   = t.lattice;
    auto const&        phi = t.phi;

    ProductRS                   p;
    std::map<std::pair<Elem, Elem>, Elem> index;
    for (Elem y = 0; y < Y.size(); ++y) {
      for (Elem s = 0; s < S.size(); ++s) {
        if (contains(phi[s].range(), y) && t.q[y] == S.plus(s)) {
          index.emplace(std::make_pair(y, s), static_cast<Elem>(p.pairs.size()));
          p.pairs.emplace_back(y, s);
        }
      }
    }
    check_lemma(!p.pairs.empty(), "empty product");

    std::size_t const n = p.pairs.size();
    auto lookup = [&](Elem y, Elem s) {
      auto it = index.find({y, s});
      check_lemma(it != index.end(), "operation leaves the admissible pairs");
      return it->second;
    };
    std::vector<Elem> mul(n * n), star(n), plus(n);
    std::vector<std::string> labels(n);
    for (Elem i = 0; i < n; ++i) {
      auto const [y, s] = p.pairs[i];
      Elem const pre    = phi[s].preimage(y);
      for (Elem j = 0; j < n; ++j) {
        auto const [x, u] = p.pairs[j];
        mul[i * n + j]    = lookup(phi[s](Y.meet(pre, x)), S.mul(s, u));
      }
      star[i]   = lookup(pre, S.star(s));
      plus[i]   = lookup(y, S.plus(s));
      labels[i] = "(" + std::to_string(y) + "," + S.label(s) + ")";
    }
    p.algebra = validate_restriction(n, std::move(mul), std::move(star), std::move(plus),
                                     std::move(labels));
    RSemigroup const& P = p.algebra;

    // Projections are exactly the pairs (y, q(y)), and they multiply as Y.
    auto const embed = lattice_embedding(p, t);
    check_lemma(P.projections().size() == Y.size(), "|P(product)| != |Y|");
    for (Elem y = 0; y < Y.size(); ++y) {
      check_lemma(P.is_projection(embed[y]), "(y,q(y)) is not a projection");
      for (Elem z = 0; z < Y.size(); ++z) {
        check_lemma(P.mul(embed[y], embed[z]) == embed[Y.meet(y, z)],
                    "projections do not multiply as Y");
      }
    }
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        auto const [y, s] = p.pairs[i];
        auto const [z, u] = p.pairs[j];
        check_lemma(P.leq(i, j) == (Y.leq(y, z) && S.leq(s, u)), "order is not componentwise");
        check_lemma(P.compatible(i, j) == S.compatible(s, u),
                    "compatibility is not read off the second coordinate");
      }
    }

    std::vector<Elem> second(n);
    for (Elem i = 0; i < n; ++i) {
      second[i] = p.pairs[i].second;
    }
    p.psi = check_rsmorphism(P, S, std::move(second));
    check_lemma(p.psi.surjective && p.psi.proper, "projection onto S is not proper");
    return p;
  }

  RSMorphism const& projection_psi(ProductRS const& p) {
    return p.psi;
  }

  std::vector<Elem> lattice_embedding(ProductRS const& p, ActionTriple const& t) {
    std::vector<Elem> out(t.lattice.size());
    for (Elem y = 0; y < out.size(); ++y) {
      out[y] = p.index_of(y, t.q[y]);
      if (out[y] == static_cast<Elem>(RSemigroup::kNone)) {
        throw OracleMismatch("partial action product: (y,q(y)) is missing");
      }
    }
    return out;
  }

}  // namespace rsemi
