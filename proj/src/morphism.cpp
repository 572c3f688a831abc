#include "rsemi/morphism.hpp"

#include <algorithm>
#include <string>

#include "rsemi/error.hpp"
#include "rsemi/extension.hpp"

namespace rsemi {

  RSMorphism check_rsmorphism(RSemigroup const& S, RSemigroup const& T, std::vector<Elem> map) {
    if (map.size() != S.size()) {
      throw DimensionMismatch("morphism map needs " + std::to_string(S.size()) + " entries");
    }
    for (Elem v : map) {
      if (v >= T.size()) {
        throw DimensionMismatch("morphism image out of range");
      }
    }
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        if (map[S.mul(s, t)] != T.mul(map[s], map[t])) {
          throw NotAMorphism("multiplication", {s, t});
        }
      }
    }
    for (Elem s = 0; s < S.size(); ++s) {
      if (map[S.star(s)] != T.star(map[s])) {
        throw NotAMorphism("star", {s});
      }
    }
    for (Elem s = 0; s < S.size(); ++s) {
      if (map[S.plus(s)] != T.plus(map[s])) {
        throw NotAMorphism("plus", {s});
      }
    }

    RSMorphism f{S, T, std::move(map)};
    std::vector<bool> hit(T.size(), false);
    for (Elem v : f.map) {
      hit[v] = true;
    }
    f.surjective      = std::find(hit.begin(), hit.end(), false) == hit.end();
    f.projection_pure = true;
    for (Elem s = 0; s < S.size(); ++s) {
      if (T.is_projection(f.map[s]) && !S.is_projection(s)) {
        f.projection_pure = false;
      }
    }
    f.proper = f.surjective && is_proper_morphism(f);
    return f;
  }

  RSMorphism identity_morphism(RSemigroup const& S) {
    std::vector<Elem> id(S.size());
    for (Elem s = 0; s < S.size(); ++s) {
      id[s] = s;
    }
    return check_rsmorphism(S, S, std::move(id));
  }

  RSMorphism compose(RSMorphism const& g, RSMorphism const& f) {
    if (!f.target.same_tables(g.source)) {
      throw DimensionMismatch("morphisms are not composable");
    }
    std::vector<Elem> m(f.source.size());
    for (Elem s = 0; s < f.source.size(); ++s) {
      m[s] = g.map[f.map[s]];
    }
    return check_rsmorphism(f.source, g.target, std::move(m));
  }

  std::vector<std::vector<Elem>> all_morphism_maps(RSemigroup const& S, RSemigroup const& T) {
    std::vector<std::vector<Elem>> out;
    std::size_t const              n = S.size();
    std::vector<Elem>              f(n, 0);
    std::vector<bool>              set(n, false);
    // Backtracking in index order; a pair or unary constraint is checked as
    // soon as every element it mentions has an image.
    auto ok = [&](Elem k) {
      if (set[S.star(k)] && f[S.star(k)] != T.star(f[k])) {
        return false;
      }
      if (set[S.plus(k)] && f[S.plus(k)] != T.plus(f[k])) {
        return false;
      }
      for (Elem a = 0; a <= k; ++a) {
        Elem const ak = S.mul(a, k);
        Elem const ka = S.mul(k, a);
        if (set[ak] && f[ak] != T.mul(f[a], f[k])) {
          return false;
        }
        if (set[ka] && f[ka] != T.mul(f[k], f[a])) {
          return false;
        }
      }
      for (Elem a = 0; a < k; ++a) {
        for (Elem b = 0; b < k; ++b) {
          Elem const ab = S.mul(a, b);
          if (ab == k && f[k] != T.mul(f[a], f[b])) {
            return false;
          }
        }
        if (S.star(a) == k && f[k] != T.star(f[a])) {
          return false;
        }
        if (S.plus(a) == k && f[k] != T.plus(f[a])) {
          return false;
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, Elem k) -> void {
      if (k == n) {
        out.push_back(f);
        return;
      }
      for (Elem v = 0; v < T.size(); ++v) {
        f[k]   = v;
        set[k] = true;
        if (ok(k)) {
          self(self, k + 1);
        }
        set[k] = false;
      }
    };
    rec(rec, 0);
    return out;
  }

}  // namespace rsemi
