#include "rsemi/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "rsemi/error.hpp"

namespace rsemi {

  namespace {

    // Isomorphism-invariant colouring by iterated refinement. Colours are
    // ranks of sorted signature tuples, so they do not depend on the input
    // labelling. Projections get the smallest colours.
    std::vector<std::size_t> refined_colours(RSemigroup const& S) {
      std::size_t const        n = S.size();
      std::vector<std::size_t> col(n);
      for (Elem a = 0; a < n; ++a) {
        std::size_t c = S.is_projection(a) ? 0 : 4;
        c += S.mul(a, a) == a ? 0 : 2;
        c += S.star(a) == S.plus(a) ? 0 : 1;
        col[a] = c;
      }
      std::size_t classes = 0;
      while (true) {
        std::vector<std::vector<std::size_t>> sig(n);
        for (Elem a = 0; a < n; ++a) {
          auto& s = sig[a];
          s       = {col[a], col[S.star(a)], col[S.plus(a)]};
          std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> around;
          around.reserve(n);
          for (Elem x = 0; x < n; ++x) {
            around.emplace_back(col[x], col[S.mul(a, x)], col[S.mul(x, a)]);
          }
          std::sort(around.begin(), around.end());
          for (auto [u, v, w] : around) {
            s.push_back(u);
            s.push_back(v);
            s.push_back(w);
          }
        }
        std::vector<std::vector<std::size_t>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (Elem a = 0; a < n; ++a) {
          col[a] = static_cast<std::size_t>(
              std::lower_bound(distinct.begin(), distinct.end(), sig[a]) - distinct.begin());
        }
        if (distinct.size() == classes) {
          return col;
        }
        classes = distinct.size();
      }
    }

    // Calls visit(q) for every bijection q: new index -> old element that
    // lists the colour classes in increasing colour order.
    template <typename Visit>
    void for_each_coloured_order(std::vector<std::size_t> const& col, Visit&& visit) {
      std::size_t const                     n = col.size();
      std::map<std::size_t, std::vector<Elem>> classes;
      for (Elem a = 0; a < n; ++a) {
        classes[col[a]].push_back(a);
      }
      std::vector<std::vector<Elem>> blocks;
      for (auto& [c, members] : classes) {
        blocks.push_back(members);
      }
      std::vector<Elem> q;
      q.reserve(n);
      auto rec = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
          visit(q);
          return;
        }
        auto& block = blocks[b];
        std::sort(block.begin(), block.end());
        do {
          q.insert(q.end(), block.begin(), block.end());
          self(self, b + 1);
          q.resize(q.size() - block.size());
        } while (std::next_permutation(block.begin(), block.end()));
      };
      rec(rec, 0);
    }

  }  // namespace

  RSemigroup relabel(RSemigroup const& S, std::vector<Elem> const& perm) {
    std::size_t const n = S.size();
    if (perm.size() != n) {
      throw DimensionMismatch("relabelling has the wrong length");
    }
    std::vector<Elem>        mul(n * n), star(n), plus(n);
    std::vector<std::string> labels;
    if (S.has_labels()) {
      labels.resize(n);
    }
    for (Elem a = 0; a < n; ++a) {
      star[perm[a]] = perm[S.star(a)];
      plus[perm[a]] = perm[S.plus(a)];
      if (S.has_labels()) {
        labels[perm[a]] = S.labels()[a];
      }
      for (Elem b = 0; b < n; ++b) {
        mul[perm[a] * n + perm[b]] = perm[S.mul(a, b)];
      }
    }
    return validate_restriction(n, std::move(mul), std::move(star), std::move(plus),
                                std::move(labels));
  }

  std::vector<Elem> canonical_labelling(RSemigroup const& S) {
    std::size_t const n   = S.size();
    auto const        col = refined_colours(S);
    std::vector<Elem> best_key;
    std::vector<Elem> best_q;
    std::vector<Elem> p(n);
    std::vector<Elem> key;
    key.reserve(n * n + 2 * n);

    for_each_coloured_order(col, [&](std::vector<Elem> const& q) {
      for (Elem i = 0; i < n; ++i) {
        p[q[i]] = i;
      }
      // Build the key lazily and stop as soon as it exceeds the best one.
      key.clear();
      bool const have_best = !best_key.empty();
      bool       smaller   = !have_best;
      auto push = [&](Elem v) {
        if (!smaller) {
          Elem const b = best_key[key.size()];
          if (v > b) {
            return false;
          }
          if (v < b) {
            smaller = true;
          }
        }
        key.push_back(v);
        return true;
      };
      for (Elem i = 0; i < n; ++i) {
        if (!push(p[S.star(q[i])])) {
          return;
        }
      }
      for (Elem i = 0; i < n; ++i) {
        if (!push(p[S.plus(q[i])])) {
          return;
        }
      }
      for (Elem i = 0; i < n; ++i) {
        for (Elem j = 0; j < n; ++j) {
          if (!push(p[S.mul(q[i], q[j])])) {
            return;
          }
        }
      }
      if (smaller) {
        best_key = key;
        best_q   = q;
      }
    });

    std::vector<Elem> perm(n);
    for (Elem i = 0; i < n; ++i) {
      perm[best_q[i]] = i;
    }
    return perm;
  }

  RSemigroup canonical_form(RSemigroup const& S) {
    return relabel(S, canonical_labelling(S));
  }

  std::vector<Elem> canonical_key(RSemigroup const& S) {
    auto const        C = canonical_form(S);
    std::vector<Elem> key(C.star_table());
    key.insert(key.end(), C.plus_table().begin(), C.plus_table().end());
    key.insert(key.end(), C.mul_table().begin(), C.mul_table().end());
    return key;
  }

  std::vector<Elem> canonical_key(Semilattice const& Y) {
    return canonical_key(as_rsemigroup(Y));
  }

  std::optional<std::vector<Elem>> find_isomorphism(RSemigroup const& S, RSemigroup const& T) {
    if (S.size() != T.size() || S.projections().size() != T.projections().size()) {
      return std::nullopt;
    }
    auto const pS = canonical_labelling(S);
    auto const pT = canonical_labelling(T);
    auto const CS = relabel(S, pS);
    auto const CT = relabel(T, pT);
    if (!CS.same_tables(CT)) {
      return std::nullopt;
    }
    std::vector<Elem> inv_pT(T.size());
    for (Elem a = 0; a < T.size(); ++a) {
      inv_pT[pT[a]] = a;
    }
    std::vector<Elem> iso(S.size());
    for (Elem a = 0; a < S.size(); ++a) {
      iso[a] = inv_pT[pS[a]];
    }
    return iso;
  }

  bool is_isomorphic(RSemigroup const& S, RSemigroup const& T) {
    return find_isomorphism(S, T).has_value();
  }

  std::vector<std::vector<Elem>> automorphisms(RSemigroup const& S) {
    std::size_t const              n = S.size();
    std::vector<std::vector<Elem>> out;
    auto const                     col = refined_colours(S);
    // Automorphisms preserve colours, so they are exactly the maps from one
    // fixed colour-ordered listing to another that preserve the tables.
    std::vector<Elem> q0;
    for_each_coloured_order(col, [&](std::vector<Elem> const& q) {
      if (q0.empty()) {
        q0 = q;
      }
      std::vector<Elem> f(n);
      for (Elem i = 0; i < n; ++i) {
        f[q0[i]] = q[i];
      }
      for (Elem a = 0; a < n; ++a) {
        if (f[S.star(a)] != S.star(f[a]) || f[S.plus(a)] != S.plus(f[a])) {
          return;
        }
        for (Elem b = 0; b < n; ++b) {
          if (f[S.mul(a, b)] != S.mul(f[a], f[b])) {
            return;
          }
        }
      }
      out.push_back(f);
    });
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace rsemi
