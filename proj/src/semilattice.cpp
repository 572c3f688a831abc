#include "rsemi/semilattice.hpp"

#include <algorithm>
#include <string>

#include "rsemi/error.hpp"

namespace rsemi {

  Semilattice::Semilattice() = default;

  Semilattice Semilattice::from_meet(std::size_t n, std::vector<Elem> meet) {
    if (n == 0) {
      throw DimensionMismatch("a semilattice needs at least one element");
    }
    if (n > kMaxSubsetCarrier) {
      throw SizeLimit("semilattices are limited to " + std::to_string(kMaxSubsetCarrier)
                      + " elements");
    }
    if (meet.size() != n * n) {
      throw DimensionMismatch("meet table has the wrong number of entries");
    }
    if (std::any_of(meet.begin(), meet.end(), [n](Elem v) { return v >= n; })) {
      throw DimensionMismatch("meet table entry out of range");
    }
    auto m = [&](Elem a, Elem b) { return meet[a * n + b]; };
    for (Elem a = 0; a < n; ++a) {
      if (m(a, a) != a) {
        throw AxiomViolation("xx=x", {a});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (m(a, b) != m(b, a)) {
          throw AxiomViolation("xy=yx", {a, b});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          if (m(m(a, b), c) != m(a, m(b, c))) {
            throw AxiomViolation("associativity", {a, b, c});
          }
        }
      }
    }

    Semilattice Y;
    Y._n    = n;
    Y._meet = std::move(meet);
    Y._down.assign(n, 0);
    Y._top.reset();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (Y.leq(b, a)) {
          Y._down[a] |= singleton(b);
        }
      }
      if (Y._down[a] == Y.all()) {
        Y._top = a;
      }
    }
    Elem bottom = 0;
    for (Elem a = 1; a < n; ++a) {
      bottom = Y.meet(bottom, a);
    }
    Y._bottom = bottom;
    return Y;
  }

  Semilattice Semilattice::from_order(Relation const& leq) {
    std::size_t const n = leq.degree();
    if (n == 0 || !leq.is_partial_order()) {
      throw AxiomViolation("partial order", {});
    }
    std::vector<Elem> meet(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        std::optional<Elem> glb;
        for (Elem c = 0; c < n; ++c) {
          if (!leq(c, a) || !leq(c, b)) {
            continue;
          }
          bool greatest = true;
          for (Elem d = 0; d < n && greatest; ++d) {
            if (leq(d, a) && leq(d, b) && !leq(d, c)) {
              greatest = false;
            }
          }
          if (greatest) {
            glb = c;
            break;
          }
        }
        if (!glb) {
          throw AxiomViolation("meets exist", {a, b});
        }
        meet[a * n + b] = *glb;
      }
    }
    return from_meet(n, std::move(meet));
  }

  Subset Semilattice::downset(Subset B) const {
    Subset out = 0;
    for (Elem b : members(B)) {
      out |= _down[b];
    }
    return out;
  }

  Subset downset(Semilattice const& Y, Subset B) {
    return Y.downset(B);
  }

  Semilattice projection_semilattice(RSemigroup const& S) {
    auto const&       P = S.projections();
    std::size_t const k = P.size();
    std::vector<Elem> meet(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        meet[i * k + j] = static_cast<Elem>(S.projection_index(S.mul(P[i], P[j])));
      }
    }
    return Semilattice::from_meet(k, std::move(meet));
  }

  RSemigroup as_rsemigroup(Semilattice const& Y) {
    std::vector<Elem> id(Y.size());
    for (Elem a = 0; a < Y.size(); ++a) {
      id[a] = a;
    }
    return validate_restriction(Y.size(), Y.meet_table(), id, id);
  }

  bool is_semilattice_morphism(Semilattice const&       Y,
                               Semilattice const&       Z,
                               std::vector<Elem> const& f) {
    if (f.size() != Y.size()) {
      return false;
    }
    for (Elem v : f) {
      if (v >= Z.size()) {
        return false;
      }
    }
    for (Elem a = 0; a < Y.size(); ++a) {
      for (Elem b = a + 1; b < Y.size(); ++b) {
        if (f[Y.meet(a, b)] != Z.meet(f[a], f[b])) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<Elem>> semilattice_morphisms(Semilattice const& Y,
                                                       Semilattice const& Z) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem>              f(Y.size(), 0);
    std::size_t const              n = Y.size();
    // Odometer over Z^Y with a check of every pair whose larger index was just
    // assigned.
    auto consistent_upto = [&](std::size_t k) {
      for (Elem a = 0; a <= k; ++a) {
        Elem const m = Y.meet(a, static_cast<Elem>(k));
        if (m <= k && f[m] != Z.meet(f[a], f[k])) {
          return false;
        }
      }
      return true;
    };
    std::size_t pos = 0;
    f[0]            = 0;
    while (true) {
      if (consistent_upto(pos)) {
        if (pos + 1 == n) {
          if (is_semilattice_morphism(Y, Z, f)) {
            out.push_back(f);
          }
        } else {
          ++pos;
          f[pos] = 0;
          continue;
        }
      }
      // advance
      while (true) {
        if (++f[pos] < Z.size()) {
          break;
        }
        if (pos == 0) {
          return out;
        }
        --pos;
      }
    }
  }

}  // namespace rsemi
