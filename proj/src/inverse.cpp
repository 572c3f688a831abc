#include "rsemi/inverse.hpp"

#include <algorithm>
#include <string>

#include "rsemi/error.hpp"

namespace rsemi {

  namespace {

    std::size_t binomial(std::size_t n, std::size_t k) {
      std::size_t r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
      }
      return r;
    }

    PBijSemigroup from_elements(std::vector<PBij> elems) {
      std::sort(elems.begin(), elems.end(), canonical_less);
      PBijSemigroup out;
      for (Elem i = 0; i < elems.size(); ++i) {
        out.index.emplace(elems[i], i);
      }
      std::size_t const        n = elems.size();
      std::vector<Elem>        mul(n * n), inv(n);
      std::vector<std::string> labels(n);
      auto lookup = [&](PBij const& f) {
        auto it = out.index.find(f);
        if (it == out.index.end()) {
          throw OracleMismatch("partial bijections not closed under composition: "
                               + f.to_string());
        }
        return it->second;
      };
      for (Elem a = 0; a < n; ++a) {
        inv[a]    = lookup(elems[a].inverse());
        labels[a] = elems[a].to_string();
        for (Elem b = 0; b < n; ++b) {
          mul[a * n + b] = lookup(elems[a] * elems[b]);
        }
      }
      out.algebra  = from_inverse(n, mul, inv, std::move(labels));
      out.elements = std::move(elems);
      return out;
    }

    // Every order isomorphism from the ideal `dom` onto `ran`, as partial
    // bijections; backtracking over the points of dom in increasing order.
    void order_isomorphisms(Semilattice const& Y,
                            Subset             dom,
                            Subset             ran,
                            std::vector<PBij>& out) {
      auto const src = members(dom);
      auto const dst = members(ran);
      if (src.size() != dst.size()) {
        return;
      }
      PBij   f(Y.size());
      Subset used = 0;
      auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == src.size()) {
          out.push_back(f);
          return;
        }
        Elem const x = src[i];
        for (Elem y : dst) {
          if (contains(used, y) || cardinality(Y.principal(x)) != cardinality(Y.principal(y))) {
            continue;
          }
          bool ok = true;
          for (std::size_t j = 0; j < i && ok; ++j) {
            Elem const z = src[j];
            ok = Y.leq(z, x) == Y.leq(f(z), y) && Y.leq(x, z) == Y.leq(y, f(z));
          }
          if (!ok) {
            continue;
          }
          f.set(x, y);
          used |= singleton(y);
          self(self, i + 1);
          used &= ~singleton(y);
          f.erase(x);
        }
      };
      rec(rec, 0);
    }

  }  // namespace

  RSemigroup from_inverse(std::size_t              n,
                          std::vector<Elem> const& mul,
                          std::vector<Elem> const& inverse,
                          std::vector<std::string> labels) {
    if (n == 0 || mul.size() != n * n || inverse.size() != n) {
      throw DimensionMismatch("inverse semigroup tables have inconsistent sizes");
    }
    for (Elem v : mul) {
      if (v >= n) {
        throw DimensionMismatch("table entry out of range");
      }
    }
    for (Elem v : inverse) {
      if (v >= n) {
        throw DimensionMismatch("table entry out of range");
      }
    }
    auto m = [&](Elem a, Elem b) { return mul[a * n + b]; };
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (m(m(a, b), c) != m(a, m(b, c))) {
            throw NotInverse("multiplication is not associative", {a, b, c});
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      Elem const i = inverse[a];
      if (m(m(a, i), a) != a || m(m(i, a), i) != i) {
        throw NotInverse("given inverse fails aba=a, bab=b", {a, i});
      }
      for (Elem b = 0; b < n; ++b) {
        if (b != i && m(m(a, b), a) == a && m(m(b, a), b) == b) {
          throw NotInverse("inverse is not unique", {a, b});
        }
      }
    }
    std::vector<Elem> star(n), plus(n);
    for (Elem a = 0; a < n; ++a) {
      star[a] = m(inverse[a], a);
      plus[a] = m(a, inverse[a]);
    }
    auto S = validate_restriction(n, mul, std::move(star), std::move(plus), std::move(labels));
    for (Elem a = 0; a < n; ++a) {
      if ((S.mul(a, a) == a) != S.is_projection(a)) {
        throw OracleMismatch("projections differ from idempotents in an inverse semigroup");
      }
    }
    return S;
  }

  std::optional<std::vector<Elem>> inverse_table(RSemigroup const& S) {
    std::size_t const n = S.size();
    std::vector<Elem> inv(n);
    for (Elem a = 0; a < n; ++a) {
      std::optional<Elem> found;
      for (Elem b = 0; b < n; ++b) {
        if (S.mul(S.mul(a, b), a) == a && S.mul(S.mul(b, a), b) == b) {
          if (found) {
            return std::nullopt;
          }
          found = b;
        }
      }
      if (!found) {
        return std::nullopt;
      }
      if (S.star(a) != S.mul(*found, a) || S.plus(a) != S.mul(a, *found)) {
        return std::nullopt;
      }
      inv[a] = *found;
    }
    return inv;
  }

  Elem PBijSemigroup::index_of(PBij const& f) const {
    auto it = index.find(f);
    if (it == index.end()) {
      throw Error("partial bijection " + f.to_string() + " is not an element");
    }
    return it->second;
  }

  PBijSemigroup symmetric_inverse(std::size_t k, std::size_t max_elements) {
    if (k > PBij::kMaxCarrier) {
      throw SizeLimit("carrier too large");
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      std::size_t term = binomial(k, i) * binomial(k, i);
      for (std::size_t j = 2; j <= i; ++j) {
        term *= j;
      }
      count += term;
      if (count > max_elements) {
        throw SizeLimit("I(" + std::to_string(k) + ") exceeds " + std::to_string(max_elements)
                        + " elements");
      }
    }
    std::vector<PBij> elems;
    elems.reserve(count);
    // Each point is either undefined or sent to an unused image.
    PBij   f(k);
    Subset used = 0;
    auto rec = [&](auto&& self, Elem x) -> void {
      if (x == k) {
        elems.push_back(f);
        return;
      }
      self(self, x + 1);
      for (Elem y = 0; y < k; ++y) {
        if (!contains(used, y)) {
          f.set(x, y);
          used |= singleton(y);
          self(self, x + 1);
          used &= ~singleton(y);
          f.erase(x);
        }
      }
    };
    rec(rec, 0);
    if (elems.size() != count) {
      throw OracleMismatch("I(k) element count differs from the closed formula");
    }
    return from_elements(std::move(elems));
  }

  PBijSemigroup munn_semigroup(Semilattice const& Y, std::size_t max_elements) {
    if (Y.size() > PBij::kMaxCarrier) {
      throw SizeLimit("semilattice too large for the Munn semigroup");
    }
    std::vector<PBij> elems;
    for (Elem e = 0; e < Y.size(); ++e) {
      for (Elem f = 0; f < Y.size(); ++f) {
        order_isomorphisms(Y, Y.principal(e), Y.principal(f), elems);
        if (elems.size() > max_elements) {
          throw SizeLimit("Munn semigroup exceeds " + std::to_string(max_elements)
                          + " elements");
        }
      }
    }
    auto T = from_elements(std::move(elems));
    for (Elem a = 0; a < T.elements.size(); ++a) {
      PBij const& g = T.elements[a];
      if (T.algebra.is_projection(a) != g.is_partial_identity()) {
        throw OracleMismatch("Munn semigroup projections are not the identities on ideals");
      }
    }
    bool const monoid = identity_element(T.algebra).has_value();
    if (monoid != Y.top().has_value()) {
      throw OracleMismatch("Munn semigroup is a monoid iff the semilattice has a top");
    }
    return T;
  }

  std::vector<PBij> munn_maps(RSemigroup const& S) {
    auto const&       P = S.projections();
    std::size_t const k = P.size();
    if (k > PBij::kMaxCarrier) {
      throw SizeLimit("too many projections for the Munn representation");
    }
    std::vector<PBij> out;
    out.reserve(S.size());
    for (Elem s = 0; s < S.size(); ++s) {
      PBij a(k);
      for (std::size_t i = 0; i < k; ++i) {
        Elem const e = P[i];
        if (S.leq(e, S.star(s))) {
          a.set(static_cast<Elem>(i),
                static_cast<Elem>(S.projection_index(S.plus(S.mul(s, e)))));
        }
      }
      out.push_back(a);
    }
    return out;
  }

  MunnRepresentation munn_representation(RSemigroup const& S) {
    auto              T    = munn_semigroup(projection_semilattice(S));
    auto const        maps = munn_maps(S);
    std::vector<Elem> m(S.size());
    for (Elem s = 0; s < S.size(); ++s) {
      m[s] = T.index_of(maps[s]);
    }
    RSMorphism alpha;
    try {
      alpha = check_rsmorphism(S, T.algebra, std::move(m));
    } catch (NotAMorphism const& e) {
      throw OracleMismatch(std::string("Munn representation is not a morphism: ") + e.what());
    }
    return {std::move(T), std::move(alpha)};
  }

  std::optional<Elem> identity_element(RSemigroup const& S) {
    for (Elem e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (Elem x = 0; x < S.size() && ok; ++x) {
        ok = S.mul(e, x) == x && S.mul(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

}  // namespace rsemi
