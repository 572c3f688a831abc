#pragma once

// Brute-force reference computations used to derive expected values. They
// work on raw tables and plain vectors and share no code with the library
// beyond reading its tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/pbij.hpp"
#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"

namespace oracle {

  using U  = std::uint32_t;
  using UV = std::vector<U>;

  struct Alg {
    std::size_t n = 0;
    UV          mul, star, plus;

    U m(U a, U b) const { return mul[a * n + b]; }
    U st(U a) const { return star[a]; }
    U pl(U a) const { return plus[a]; }
  };

  inline Alg of(rsemi::RSemigroup const& S) {
    return {S.size(), S.mul_table(), S.star_table(), S.plus_table()};
  }

  // First failing defining identity (associativity included), by name.
  inline std::optional<std::string> restriction_failure(Alg const& A) {
    auto const n = static_cast<U>(A.n);
    for (U x = 0; x < n; ++x) {
      if (A.st(A.pl(x)) != A.pl(x)) return "(x+)*=x+";
      if (A.pl(A.st(x)) != A.st(x)) return "(x*)+=x*";
      if (A.m(A.pl(x), x) != x) return "x+x=x";
      if (A.m(x, A.st(x)) != x) return "xx*=x";
      for (U y = 0; y < n; ++y) {
        if (A.m(A.pl(x), A.pl(y)) != A.m(A.pl(y), A.pl(x))) return "x+y+=y+x+";
        if (A.pl(A.m(A.pl(x), y)) != A.m(A.pl(x), A.pl(y))) return "(x+y)+=x+y+";
        if (A.m(A.pl(A.m(x, y)), x) != A.m(x, A.pl(y))) return "(xy)+x=xy+";
        if (A.m(A.st(x), A.st(y)) != A.m(A.st(y), A.st(x))) return "x*y*=y*x*";
        if (A.st(A.m(x, A.st(y))) != A.m(A.st(x), A.st(y))) return "(xy*)*=x*y*";
        if (A.m(y, A.st(A.m(x, y))) != A.m(A.st(x), y)) return "y(xy)*=x*y";
        for (U z = 0; z < n; ++z) {
          if (A.m(A.m(x, y), z) != A.m(x, A.m(y, z))) return "associativity";
        }
      }
    }
    return std::nullopt;
  }

  inline std::set<U> projections(Alg const& A) {
    std::set<U> p;
    for (U x = 0; x < A.n; ++x) p.insert(A.st(x));
    return p;
  }

  // s <= t iff s = tf for some projection f (the definition, not a shortcut).
  inline bool leq(Alg const& A, U s, U t) {
    for (U f : projections(A)) {
      if (A.m(t, f) == s) return true;
    }
    return false;
  }

  inline bool compat(Alg const& A, U s, U t) {
    return A.m(s, A.st(t)) == A.m(t, A.st(s)) && A.m(A.pl(t), s) == A.m(A.pl(s), t);
  }

  // Least congruence containing P x P, by union-find and repeated closure.
  inline std::vector<std::size_t> sigma_labels(Alg const& A) {
    std::vector<std::size_t> parent(A.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite = [&](std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      parent[std::max(a, b)] = std::min(a, b);
      return true;
    };
    auto P = projections(A);
    for (U e : P) unite(*P.begin(), e);
    for (bool changed = true; changed;) {
      changed = false;
      for (U a = 0; a < A.n; ++a) {
        for (U b = 0; b < A.n; ++b) {
          if (find(a) != find(b)) continue;
          changed |= unite(A.st(a), A.st(b));
          changed |= unite(A.pl(a), A.pl(b));
          for (U c = 0; c < A.n; ++c) {
            changed |= unite(A.m(a, c), A.m(b, c));
            changed |= unite(A.m(c, a), A.m(c, b));
          }
        }
      }
    }
    std::vector<std::size_t> out(A.n);
    for (std::size_t x = 0; x < A.n; ++x) out[x] = find(x);
    return out;
  }

  inline std::size_t count_classes(std::vector<std::size_t> const& labels) {
    return std::set<std::size_t>(labels.begin(), labels.end()).size();
  }

  // The two displayed implications defining properness.
  inline bool proper(Alg const& A) {
    auto sig = sigma_labels(A);
    for (U s = 0; s < A.n; ++s) {
      for (U t = 0; t < A.n; ++t) {
        if (s != t && sig[s] == sig[t] && (A.st(s) == A.st(t) || A.pl(s) == A.pl(t))) {
          return false;
        }
      }
    }
    return true;
  }

  // Order and compatibility facts, the auxiliary facts, the projection
  // identities and s~t => s sigma t, all by direct quantification.
  inline std::optional<std::string> law_failure(Alg const& A) {
    auto const n   = static_cast<U>(A.n);
    auto const P   = projections(A);
    auto const sig = sigma_labels(A);
    auto       L   = [&](U s, U t) { return leq(A, s, t); };
    auto       C   = [&](U s, U t) { return compat(A, s, t); };
    for (U s = 0; s < n; ++s) {
      for (U t = 0; t < n; ++t) {
        bool const le = L(s, t);
        if (le != (s == A.m(t, A.st(s)))) return "order (2a)";
        if (le != (s == A.m(A.pl(s), t))) return "order (2b)";
        if (le) {
          for (U u = 0; u < n; ++u) {
            if (!L(A.m(s, u), A.m(t, u)) || !L(A.m(u, s), A.m(u, t))) return "order (3)";
          }
          if (!L(A.st(s), A.st(t)) || !L(A.pl(s), A.pl(t))) return "order (4)";
          if (!C(s, t)) return "order (5)";
        }
        for (U u = 0; u < n; ++u) {
          if (L(s, u) && L(t, u) && !C(s, t)) return "order (6)";
        }
        if (C(s, t)) {
          if ((L(A.st(s), A.st(t)) || L(A.pl(s), A.pl(t))) && !le) return "order (7)";
          if ((A.st(s) == A.st(t) || A.pl(s) == A.pl(t)) && s != t) return "order (8)";
          if (sig[s] != sig[t]) return "compatible => sigma";
        }
        if (A.st(A.m(s, t)) != A.st(A.m(A.st(s), t))) return "(st)*=(s*t)*";
        if (A.pl(A.m(s, t)) != A.pl(A.m(s, A.pl(t)))) return "(st)+=(st+)+";
        for (U e : P) {
          if (L(e, A.st(A.m(s, t))) && !L(A.pl(A.m(t, e)), A.st(s))) return "aux (1)";
        }
        if (C(s, t)) {
          for (U q = 0; q < n; ++q) {
            for (U r = 0; r < n; ++r) {
              if (L(q, s) && L(r, t) && !C(q, r)) return "aux (2)";
            }
          }
        }
      }
      for (U e : P) {
        if (A.m(e, s) != A.m(s, A.st(A.m(e, s)))) return "es=s(es)*";
        if (A.m(s, e) != A.m(A.pl(A.m(s, e)), s)) return "se=(se)+s";
        if (A.st(A.m(s, e)) != A.m(A.st(s), e)) return "(se)*=s*e";
        if (A.pl(A.m(e, s)) != A.m(e, A.pl(s))) return "(es)+=es+";
      }
    }
    return std::nullopt;
  }

  // --- partial maps as vectors with -1 for undefined -----------------------

  using PMap = std::vector<int>;

  inline PMap from(rsemi::PBij const& f) {
    PMap out(f.carrier(), -1);
    for (auto [x, y] : f.pairs()) out[x] = static_cast<int>(y);
    return out;
  }

  inline std::vector<PMap> from(std::vector<rsemi::PBij> const& fs) {
    std::vector<PMap> out;
    for (auto const& f : fs) out.push_back(from(f));
    return out;
  }

  // f o g: apply g first.
  inline PMap comp(PMap const& f, PMap const& g) {
    PMap out(g.size(), -1);
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g[x] >= 0) out[x] = f[g[x]];
    }
    return out;
  }

  inline PMap inv(PMap const& f) {
    PMap out(f.size(), -1);
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] >= 0) out[f[x]] = static_cast<int>(x);
    }
    return out;
  }

  inline PMap dom_id(PMap const& f) {
    PMap out(f.size(), -1);
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] >= 0) out[x] = static_cast<int>(x);
    }
    return out;
  }

  inline PMap ran_id(PMap const& f) { return dom_id(inv(f)); }

  inline bool restricts(PMap const& f, PMap const& g) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] >= 0 && g[x] != f[x]) return false;
    }
    return true;
  }

  // All partial injections of {0..k-1}.
  inline std::vector<PMap> all_pmaps(std::size_t k) {
    std::vector<PMap> out;
    PMap              cur(k, -1);
    std::vector<bool> used(k, false);
    std::function<void(std::size_t)> rec = [&](std::size_t x) {
      if (x == k) {
        out.push_back(cur);
        return;
      }
      cur[x] = -1;
      rec(x + 1);
      for (std::size_t y = 0; y < k; ++y) {
        if (!used[y]) {
          used[y] = true;
          cur[x]  = static_cast<int>(y);
          rec(x + 1);
          used[y] = false;
        }
      }
      cur[x] = -1;
    };
    rec(0);
    return out;
  }

  inline std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  }

  // sum_i C(k,i)^2 i!
  inline std::size_t symmetric_inverse_order(std::size_t k) {
    std::size_t total = 0, fact = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      if (i > 0) fact *= i;
      total += binom(k, i) * binom(k, i) * fact;
    }
    return total;
  }

  // --- premorphism conditions straight from their definitions ---------------

  struct Flags {
    bool pm1 = true, pm2 = true, pm3 = true, op = true, sr = true, sl = true, lsr = true,
         lsl = true, lsr1 = true, lsl1 = true, lsr2 = true, lsl2 = true, m = true, lm = true,
         lm1 = true, lmr = true, lml = true;

    std::map<std::string, bool> named() const {
      return {{"premorphism", pm1 && pm2 && pm3},
              {"OP", op},
              {"Sr", sr},
              {"Sl", sl},
              {"strong", sr && sl},
              {"LSr", lsr},
              {"LSl", lsl},
              {"LSr'", lsr1},
              {"LSl'", lsl1},
              {"LSr''", lsr2},
              {"LSl''", lsl2},
              {"locally_strong", lsr && lsl},
              {"M", m},
              {"LM", lm},
              {"LM'", lm1},
              {"LMr", lmr},
              {"LMl", lml},
              {"multiplicative", m},
              {"locally_multiplicative", lm}};
    }
  };

  inline Flags flags(Alg const& A, std::vector<PMap> const& phi) {
    Flags      F;
    auto const n  = static_cast<U>(A.n);
    auto       ph = [&](U s) -> PMap const& { return phi[s]; };
    for (U s = 0; s < n; ++s) {
      F.pm2 &= restricts(dom_id(ph(s)), ph(A.st(s)));
      F.pm3 &= restricts(ran_id(ph(s)), ph(A.pl(s)));
      for (U t = 0; t < n; ++t) {
        U const st = A.m(s, t);
        auto const prod = comp(ph(s), ph(t));
        F.pm1 &= restricts(prod, ph(st));
        if (leq(A, s, t)) F.op &= restricts(ph(s), ph(t));
        bool const r_eq = prod == comp(ph(st), dom_id(ph(t)));
        bool const l_eq = prod == comp(ran_id(ph(s)), ph(st));
        F.sr &= r_eq;
        F.sl &= l_eq;
        F.lsr &= comp(ph(A.m(s, A.pl(t))), ph(t)) == comp(ph(st), dom_id(ph(t)));
        F.lsl &= comp(ph(s), ph(A.m(A.st(s), t))) == comp(ran_id(ph(s)), ph(st));
        if (leq(A, A.st(s), A.pl(t))) F.lsr1 &= r_eq;
        if (leq(A, A.pl(t), A.st(s))) F.lsl1 &= l_eq;
        if (A.st(s) == A.pl(t)) {
          F.lsr2 &= r_eq;
          F.lsl2 &= l_eq;
          F.lm1 &= prod == ph(st);
        }
        F.m &= prod == ph(st);
        F.lm &= comp(ph(A.m(s, A.pl(t))), ph(A.m(A.st(s), t))) == ph(st);
        F.lmr &= comp(ph(A.m(s, A.pl(t))), ph(t)) == ph(st);
        F.lml &= comp(ph(s), ph(A.m(A.st(s), t))) == ph(st);
      }
    }
    return F;
  }

  // phi(s^-1) = phi(s)^-1, with s^-1 the unique inverse in S.
  inline std::optional<bool> inverse_flag(Alg const& A, std::vector<PMap> const& phi) {
    std::vector<int> invs(A.n, -1);
    for (U s = 0; s < A.n; ++s) {
      for (U t = 0; t < A.n; ++t) {
        if (A.m(A.m(s, t), s) == s && A.m(A.m(t, s), t) == t) {
          if (invs[s] >= 0) return std::nullopt;
          invs[s] = static_cast<int>(t);
        }
      }
      if (invs[s] < 0 || A.st(s) != A.m(static_cast<U>(invs[s]), s)
          || A.pl(s) != A.m(s, static_cast<U>(invs[s]))) {
        return std::nullopt;
      }
    }
    for (U s = 0; s < A.n; ++s) {
      if (phi[invs[s]] != inv(phi[s])) return false;
    }
    return true;
  }

  // Every premorphism S -> I(k) by trying every assignment.
  inline std::vector<std::vector<PMap>> all_premorphisms(Alg const& A, std::size_t k) {
    auto const                      maps = all_pmaps(k);
    std::vector<std::vector<PMap>>  out;
    std::vector<std::size_t>        idx(A.n, 0);
    while (true) {
      std::vector<PMap> phi;
      for (auto i : idx) phi.push_back(maps[i]);
      auto F = flags(A, phi);
      if (F.pm1 && F.pm2 && F.pm3) out.push_back(phi);
      std::size_t pos = 0;
      while (pos < A.n && ++idx[pos] == maps.size()) idx[pos++] = 0;
      if (pos == A.n) break;
    }
    return out;
  }

  // --- semilattices ----------------------------------------------------------

  // Number of meet semilattices on n points up to isomorphism, found by
  // trying every partial order on labelled points and every relabelling.
  inline std::size_t semilattice_classes(std::size_t n) {
    std::size_t const pairs = n * (n - 1);
    std::set<std::vector<bool>> seen;
    std::vector<std::size_t>    perm(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<bool> le(n * n, false);
      std::size_t       bit = 0;
      for (std::size_t a = 0; a < n; ++a) {
        le[a * n + a] = true;
        for (std::size_t b = 0; b < n; ++b) {
          if (a != b) le[a * n + b] = (mask >> bit++) & 1U;
        }
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          if (a != b && le[a * n + b] && le[b * n + a]) ok = false;
          for (std::size_t c = 0; c < n && ok; ++c) {
            if (le[a * n + b] && le[b * n + c] && !le[a * n + c]) ok = false;
          }
        }
      }
      // every pair has a greatest lower bound
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          int glb = -1;
          for (std::size_t c = 0; c < n; ++c) {
            if (!le[c * n + a] || !le[c * n + b]) continue;
            bool greatest = true;
            for (std::size_t d = 0; d < n; ++d) {
              if (le[d * n + a] && le[d * n + b] && !le[d * n + c]) greatest = false;
            }
            if (greatest) glb = static_cast<int>(c);
          }
          ok = glb >= 0;
        }
      }
      if (!ok) continue;
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<bool> best;
      do {
        std::vector<bool> img(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) img[perm[a] * n + perm[b]] = le[a * n + b];
        }
        if (best.empty() || img < best) best = img;
      } while (std::next_permutation(perm.begin(), perm.end()));
      seen.insert(best);
    }
    return seen.size();
  }

  // Order isomorphisms between principal ideals of Y.
  inline std::size_t munn_order(rsemi::Semilattice const& Y) {
    std::size_t const n     = Y.size();
    std::size_t       total = 0;
    for (U e = 0; e < n; ++e) {
      for (U f = 0; f < n; ++f) {
        UV de, df;
        for (U x = 0; x < n; ++x) {
          if (Y.leq(x, e)) de.push_back(x);
          if (Y.leq(x, f)) df.push_back(x);
        }
        if (de.size() != df.size()) continue;
        std::sort(df.begin(), df.end());
        do {
          bool iso = true;
          for (std::size_t i = 0; i < de.size(); ++i) {
            for (std::size_t j = 0; j < de.size(); ++j) {
              if (Y.leq(de[i], de[j]) != Y.leq(df[i], df[j])) iso = false;
            }
          }
          total += iso ? 1 : 0;
        } while (std::next_permutation(df.begin(), df.end()));
      }
    }
    return total;
  }

  // --- restriction semigroups of tiny order --------------------------------

  // Isomorphism classes of restriction semigroups of order n <= 3, by running
  // through every multiplication table, then every star and plus.
  inline std::size_t restriction_classes(std::size_t n) {
    std::size_t const cells = n * n;
    std::size_t       total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= n;
    std::size_t unary = 1;
    for (std::size_t i = 0; i < n; ++i) unary *= n;
    std::set<UV> classes;
    UV           perm(n);
    for (std::size_t code = 0; code < total; ++code) {
      Alg A{n, UV(cells), UV(n), UV(n)};
      for (std::size_t i = 0, c = code; i < cells; ++i, c /= n) A.mul[i] = static_cast<U>(c % n);
      bool assoc = true;
      for (U x = 0; x < n && assoc; ++x)
        for (U y = 0; y < n && assoc; ++y)
          for (U z = 0; z < n && assoc; ++z) assoc = A.m(A.m(x, y), z) == A.m(x, A.m(y, z));
      if (!assoc) continue;
      for (std::size_t sc = 0; sc < unary; ++sc) {
        for (std::size_t i = 0, c = sc; i < n; ++i, c /= n) A.star[i] = static_cast<U>(c % n);
        for (std::size_t pc = 0; pc < unary; ++pc) {
          for (std::size_t i = 0, c = pc; i < n; ++i, c /= n) A.plus[i] = static_cast<U>(c % n);
          if (restriction_failure(A)) continue;
          std::iota(perm.begin(), perm.end(), 0);
          UV best;
          do {
            UV key(cells + 2 * n);
            for (U a = 0; a < n; ++a) {
              key[perm[a]]     = perm[A.st(a)];
              key[n + perm[a]] = perm[A.pl(a)];
              for (U b = 0; b < n; ++b) key[2 * n + perm[a] * n + perm[b]] = perm[A.m(a, b)];
            }
            if (best.empty() || key < best) best = key;
          } while (std::next_permutation(perm.begin(), perm.end()));
          classes.insert(best);
        }
      }
    }
    return classes.size();
  }

  // Number of automorphisms, by trying all permutations.
  inline std::size_t automorphism_count(Alg const& A) {
    UV perm(A.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t count = 0;
    do {
      bool ok = true;
      for (U a = 0; a < A.n && ok; ++a) {
        ok = perm[A.st(a)] == A.st(perm[a]) && perm[A.pl(a)] == A.pl(perm[a]);
        for (U b = 0; b < A.n && ok; ++b) ok = perm[A.m(a, b)] == A.m(perm[a], perm[b]);
      }
      count += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
  }

  // --- morphisms and extensions -------------------------------------------

  inline bool is_morphism(Alg const& S, Alg const& T, UV const& f) {
    for (U a = 0; a < S.n; ++a) {
      if (f[S.st(a)] != T.st(f[a]) || f[S.pl(a)] != T.pl(f[a])) return false;
      for (U b = 0; b < S.n; ++b) {
        if (f[S.m(a, b)] != T.m(f[a], f[b])) return false;
      }
    }
    return true;
  }

  // Surjective and psi(s) = psi(t) => s ~ t.
  inline bool proper_morphism(Alg const& T, Alg const& S, UV const& psi) {
    std::set<U> img(psi.begin(), psi.end());
    if (img.size() != S.n) return false;
    for (U a = 0; a < T.n; ++a) {
      for (U b = 0; b < T.n; ++b) {
        if (psi[a] == psi[b] && !compat(T, a, b)) return false;
      }
    }
    return true;
  }

  // Every proper morphism T -> S, by trying all |S|^|T| maps.
  inline std::vector<UV> all_proper_morphisms(Alg const& T, Alg const& S) {
    std::vector<UV> out;
    UV              f(T.n, 0);
    while (true) {
      if (is_morphism(T, S, f) && proper_morphism(T, S, f)) out.push_back(f);
      std::size_t pos = 0;
      while (pos < T.n && ++f[pos] == S.n) f[pos++] = 0;
      if (pos == T.n) break;
    }
    return out;
  }

  // The upper (exact = false) or lower (exact = true) underlying partial maps
  // on P(T), with P(T) numbered in increasing element order.
  inline std::vector<PMap> underlying(Alg const& T, Alg const& S, UV const& psi, bool exact) {
    UV P;
    for (U e : projections(T)) P.push_back(e);
    auto pos = [&](U e) { return static_cast<int>(std::find(P.begin(), P.end(), e) - P.begin()); };
    std::vector<PMap> out;
    for (U s = 0; s < S.n; ++s) {
      PMap f(P.size(), -1);
      for (std::size_t i = 0; i < P.size(); ++i) {
        for (U t = 0; t < T.n; ++t) {
          bool const fits = exact ? psi[t] == s : leq(S, psi[t], s);
          if (fits && leq(T, P[i], T.st(t))) {
            f[i] = pos(T.pl(T.m(t, P[i])));
            break;
          }
        }
      }
      out.push_back(f);
    }
    return out;
  }

  inline std::set<U> preimage_down(Alg const& T, Alg const& S, UV const& psi, U s) {
    std::set<U> out;
    for (U t = 0; t < T.n; ++t) {
      if (leq(S, psi[t], s)) out.insert(t);
    }
    return out;
  }

  // psi^-1(s down) = (psi^-1(s)) down for every s.
  inline bool order_proper(Alg const& T, Alg const& S, UV const& psi) {
    for (U s = 0; s < S.n; ++s) {
      std::set<U> down;
      for (U t = 0; t < T.n; ++t) {
        for (U u = 0; u < T.n; ++u) {
          if (psi[u] == s && leq(T, t, u)) down.insert(t);
        }
      }
      if (down != preimage_down(T, S, psi, s)) return false;
    }
    return true;
  }

  // psi^-1((st) down) = psi^-1(s down) psi^-1(t down) for all s, t.
  inline bool perfect(Alg const& T, Alg const& S, UV const& psi) {
    for (U s = 0; s < S.n; ++s) {
      for (U t = 0; t < S.n; ++t) {
        std::set<U> prod;
        for (U a : preimage_down(T, S, psi, s)) {
          for (U b : preimage_down(T, S, psi, t)) prod.insert(T.m(a, b));
        }
        if (prod != preimage_down(T, S, psi, S.m(s, t))) return false;
      }
    }
    return true;
  }

  // (A1)-(A4) for a premorphism phi into I(Y), q given as elements of S and
  // Y as its meet table.
  inline bool a1_to_a4(Alg const& S, std::vector<PMap> const& phi, UV const& q, UV const& meet) {
    std::size_t const k  = q.size();
    auto              le = [&](std::size_t a, std::size_t b) { return meet[a * k + b] == a; };
    auto ideal = [&](PMap const& f) {
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (f[x] >= 0 && le(y, x) && f[y] < 0) return false;
        }
      }
      return true;
    };
    for (U s = 0; s < S.n; ++s) {
      auto const& f = phi[s];
      if (!ideal(f) || !ideal(inv(f))) return false;
      for (std::size_t x = 0; x < k; ++x) {
        for (std::size_t y = 0; y < k; ++y) {
          if (f[x] >= 0 && f[y] >= 0 && le(x, y) != le(f[x], f[y])) return false;
        }
      }
      bool a4 = false;
      for (std::size_t y = 0; y < k; ++y) a4 |= f[y] >= 0 && q[y] == S.st(s);
      if (!a4) return false;
    }
    for (U e : projections(S)) {
      for (std::size_t y = 0; y < k; ++y) {
        bool below_fibre = false;
        for (std::size_t z = 0; z < k; ++z) below_fibre |= q[z] == e && le(y, z);
        bool const in_dom = phi[e][y] >= 0;
        if (below_fibre && !in_dom) return false;
        if (in_dom && !leq(S, q[y], e)) return false;
      }
    }
    return true;
  }

  // --- partial action product ---------------------------------------------

  struct Product {
    std::vector<std::pair<U, U>> pairs;
    Alg                          alg;
  };

  // Pairs (y, s) with y in ran phi_s and q(y) = s+, and the displayed
  // operations; meet is the meet table of Y.
  inline Product product(Alg const& S, std::vector<PMap> const& phi, UV const& q, UV const& meet) {
    std::size_t const k = q.size();
    Product           P;
    for (U y = 0; y < k; ++y) {
      for (U s = 0; s < S.n; ++s) {
        if (inv(phi[s])[y] >= 0 && q[y] == S.pl(s)) P.pairs.push_back({y, s});
      }
    }
    auto idx = [&](U y, U s) {
      auto it = std::find(P.pairs.begin(), P.pairs.end(), std::make_pair(y, s));
      return it == P.pairs.end() ? U(-1) : static_cast<U>(it - P.pairs.begin());
    };
    std::size_t const n = P.pairs.size();
    P.alg               = {n, UV(n * n), UV(n), UV(n)};
    for (U i = 0; i < n; ++i) {
      auto [y, s]   = P.pairs[i];
      U const pre   = static_cast<U>(inv(phi[s])[y]);
      P.alg.star[i] = idx(pre, S.st(s));
      P.alg.plus[i] = idx(y, S.pl(s));
      for (U j = 0; j < n; ++j) {
        auto [x, t] = P.pairs[j];
        int const v = phi[s][meet[pre * k + x]];
        P.alg.mul[i * n + j] = v < 0 ? U(-1) : idx(static_cast<U>(v), S.m(s, t));
      }
    }
    return P;
  }

}  // namespace oracle
