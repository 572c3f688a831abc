#include "rsemi/sigma.hpp"

#include <algorithm>
#include <numeric>

#include "rsemi/error.hpp"

namespace rsemi {

  namespace {

    struct UnionFind {
      std::vector<std::size_t> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }

      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }

      bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }
    };

    std::vector<std::size_t> labels_of(Relation const& r) {
      std::size_t const        n = r.degree();
      std::vector<std::size_t> lab(n);
      for (Elem a = 0; a < n; ++a) {
        lab[a] = a;
        for (Elem b = 0; b < a; ++b) {
          if (r(a, b)) {
            lab[a] = lab[b];
            break;
          }
        }
      }
      return lab;
    }

  }  // namespace

  CongruencePartition partition_from_labels(std::vector<std::size_t> const& labels,
                                            CongruencePartition::Kind      kind) {
    CongruencePartition p;
    p.kind = kind;
    p.block_of.assign(labels.size(), 0);
    std::vector<std::size_t> seen;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      auto it = std::find(seen.begin(), seen.end(), labels[a]);
      std::size_t b;
      if (it == seen.end()) {
        b = seen.size();
        seen.push_back(labels[a]);
        p.blocks.emplace_back();
      } else {
        b = static_cast<std::size_t>(it - seen.begin());
      }
      p.block_of[a] = b;
      p.blocks[b].push_back(static_cast<Elem>(a));
    }
    return p;
  }

  bool is_congruence(RSemigroup const& S, std::vector<std::size_t> const& lab) {
    std::size_t const n = S.size();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (lab[a] != lab[b]) {
          continue;
        }
        if (lab[S.star(a)] != lab[S.star(b)] || lab[S.plus(a)] != lab[S.plus(b)]) {
          return false;
        }
        for (Elem c = 0; c < n; ++c) {
          if (lab[S.mul(c, a)] != lab[S.mul(c, b)] || lab[S.mul(a, c)] != lab[S.mul(b, c)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  CongruencePartition congruence_closure(RSemigroup const&                         S,
                                         std::vector<std::pair<Elem, Elem>> const& pairs) {
    std::size_t const                  n = S.size();
    UnionFind                          uf(n);
    std::vector<std::pair<Elem, Elem>> work;
    for (auto [a, b] : pairs) {
      if (uf.unite(a, b)) {
        work.emplace_back(a, b);
      }
    }
    // Each merged generating pair is pushed once; translating it by every
    // element and applying the unary operations generates the congruence.
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      auto push = [&](Elem x, Elem y) {
        if (uf.unite(x, y)) {
          work.emplace_back(x, y);
        }
      };
      push(S.star(a), S.star(b));
      push(S.plus(a), S.plus(b));
      for (Elem c = 0; c < n; ++c) {
        push(S.mul(c, a), S.mul(c, b));
        push(S.mul(a, c), S.mul(b, c));
      }
    }
    std::vector<std::size_t> lab(n);
    for (Elem a = 0; a < n; ++a) {
      lab[a] = uf.find(a);
    }
    return partition_from_labels(lab, CongruencePartition::Kind::other);
  }

  CongruencePartition sigma(RSemigroup const& S) {
    std::size_t const n = S.size();
    Relation          left(n);
    Relation          right(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem e : S.projections()) {
          if (S.mul(e, a) == S.mul(e, b)) {
            left.set(a, b);
          }
          if (S.mul(a, e) == S.mul(b, e)) {
            right.set(a, b);
          }
        }
      }
    }
    if (!left.is_equivalence()) {
      throw OracleMismatch("'es = et' is not an equivalence");
    }
    if (!(left == right)) {
      throw OracleMismatch("'es = et' and 'se = te' give different relations");
    }
    auto const lab = labels_of(left);
    if (!is_congruence(S, lab)) {
      throw OracleMismatch("'es = et' is not a congruence");
    }
    auto result = partition_from_labels(lab, CongruencePartition::Kind::sigma);

    std::vector<std::pair<Elem, Elem>> gens;
    for (Elem e : S.projections()) {
      gens.emplace_back(S.projections().front(), e);
    }
    auto const closure = congruence_closure(S, gens);
    if (closure.block_of != result.block_of) {
      throw OracleMismatch("sigma differs from the congruence generated by P x P");
    }
    return result;
  }

  CongruencePartition kernel(RSMorphism const& f) {
    std::vector<std::size_t> lab(f.map.begin(), f.map.end());
    return partition_from_labels(lab, CongruencePartition::Kind::kernel);
  }

  Quotient quotient(RSemigroup const& S, CongruencePartition const& rho) {
    if (rho.block_of.size() != S.size() || !is_congruence(S, rho.block_of)) {
      throw PreconditionFailed("partition is not a congruence");
    }
    std::size_t const k = rho.size();
    std::vector<Elem> mul(k * k), star(k), plus(k);
    for (std::size_t i = 0; i < k; ++i) {
      Elem const a = rho.blocks[i].front();
      star[i]      = static_cast<Elem>(rho.block_of[S.star(a)]);
      plus[i]      = static_cast<Elem>(rho.block_of[S.plus(a)]);
      for (std::size_t j = 0; j < k; ++j) {
        mul[i * k + j]
            = static_cast<Elem>(rho.block_of[S.mul(a, rho.blocks[j].front())]);
      }
    }
    // Well-definedness on every representative pair, independent of
    // is_congruence.
    for (Elem a = 0; a < S.size(); ++a) {
      for (Elem b = 0; b < S.size(); ++b) {
        if (mul[rho.block_of[a] * k + rho.block_of[b]] != rho.block_of[S.mul(a, b)]) {
          throw OracleMismatch("quotient multiplication is not well defined");
        }
      }
    }
    auto              Q = validate_restriction(k, std::move(mul), std::move(star), std::move(plus));
    std::vector<Elem> map(S.size());
    for (Elem a = 0; a < S.size(); ++a) {
      map[a] = static_cast<Elem>(rho.block_of[a]);
    }
    auto proj = check_rsmorphism(S, Q, std::move(map));
    return {Q, proj};
  }

  Quotient sigma_quotient(RSemigroup const& S) {
    auto q = quotient(S, sigma(S));
    if (!is_reduced(q.algebra)) {
      throw OracleMismatch("S/sigma is not reduced");
    }
    return q;
  }

  bool is_proper(RSemigroup const& S) {
    auto const        sg = sigma(S);
    std::size_t const n  = S.size();
    bool              equal_relations = true;
    bool              cancellative    = true;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        bool const c = S.compatible(a, b);
        bool const s = sg.related(a, b);
        if (c && !s) {
          throw OracleMismatch("compatible elements that are not sigma-related");
        }
        if (c != s) {
          equal_relations = false;
        }
        if (s && a != b && (S.star(a) == S.star(b) || S.plus(a) == S.plus(b))) {
          cancellative = false;
        }
      }
    }
    if (equal_relations != cancellative) {
      throw OracleMismatch("properness characterizations disagree");
    }
    return equal_relations;
  }

}  // namespace rsemi
