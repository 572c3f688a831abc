#include "rsemi/rsemigroup.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rsemi/error.hpp"

namespace rsemi {

  namespace {

    using Pair  = std::function<bool(Elem, Elem)>;
    using Unary = std::function<bool(Elem)>;

    struct Tables {
      std::size_t              n;
      std::vector<Elem> const& m;
      std::vector<Elem> const& st;
      std::vector<Elem> const& pl;

      Elem mul(Elem a, Elem b) const { return m[a * n + b]; }
      Elem star(Elem a) const { return st[a]; }
      Elem plus(Elem a) const { return pl[a]; }
    };

    void check_unary(std::size_t n, char const* name, Unary const& f) {
      for (Elem x = 0; x < n; ++x) {
        if (!f(x)) {
          throw AxiomViolation(name, {x});
        }
      }
    }

    void check_pair(std::size_t n, char const* name, Pair const& f) {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          if (!f(x, y)) {
            throw AxiomViolation(name, {x, y});
          }
        }
      }
    }

    void check_identities(Tables const& t) {
      auto const n = t.n;
      // (1)
      check_unary(n, "x+x=x", [&](Elem x) { return t.mul(t.plus(x), x) == x; });
      check_pair(n, "x+y+=y+x+", [&](Elem x, Elem y) {
        return t.mul(t.plus(x), t.plus(y)) == t.mul(t.plus(y), t.plus(x));
      });
      check_pair(n, "(x+y)+=x+y+", [&](Elem x, Elem y) {
        return t.plus(t.mul(t.plus(x), y)) == t.mul(t.plus(x), t.plus(y));
      });
      check_pair(n, "(xy)+x=xy+", [&](Elem x, Elem y) {
        return t.mul(t.plus(t.mul(x, y)), x) == t.mul(x, t.plus(y));
      });
      // (2)
      check_unary(n, "xx*=x", [&](Elem x) { return t.mul(x, t.star(x)) == x; });
      check_pair(n, "x*y*=y*x*", [&](Elem x, Elem y) {
        return t.mul(t.star(x), t.star(y)) == t.mul(t.star(y), t.star(x));
      });
      check_pair(n, "(xy*)*=x*y*", [&](Elem x, Elem y) {
        return t.star(t.mul(x, t.star(y))) == t.mul(t.star(x), t.star(y));
      });
      check_pair(n, "y(xy)*=x*y", [&](Elem x, Elem y) {
        return t.mul(y, t.star(t.mul(x, y))) == t.mul(t.star(x), y);
      });
      // (3)
      check_unary(n, "(x+)*=x+", [&](Elem x) { return t.star(t.plus(x)) == t.plus(x); });
      check_unary(n, "(x*)+=x*", [&](Elem x) { return t.plus(t.star(x)) == t.star(x); });

      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          Elem const xy = t.mul(x, y);
          for (Elem z = 0; z < n; ++z) {
            if (t.mul(xy, z) != t.mul(x, t.mul(y, z))) {
              throw AxiomViolation("associativity", {x, y, z});
            }
          }
        }
      }
    }

    // Consequences of the defining identities; a failure here means the
    // identity checks above are wrong.
    void check_derived(Tables const& t, std::vector<Elem> const& proj) {
      auto fail = [](std::string const& what) {
        throw OracleMismatch("derived identity " + what
                             + " fails on an algebra that passed validation");
      };
      for (Elem s = 0; s < t.n; ++s) {
        for (Elem e : proj) {
          Elem const es = t.mul(e, s);
          Elem const se = t.mul(s, e);
          if (es != t.mul(s, t.star(es))) {
            fail("es=s(es)*");
          }
          if (se != t.mul(t.plus(se), s)) {
            fail("se=(se)+s");
          }
          if (t.star(se) != t.mul(t.star(s), e)) {
            fail("(se)*=s*e");
          }
          if (t.plus(es) != t.mul(e, t.plus(s))) {
            fail("(es)+=es+");
          }
        }
        for (Elem u = 0; u < t.n; ++u) {
          Elem const su = t.mul(s, u);
          if (t.star(su) != t.star(t.mul(t.star(s), u))) {
            fail("(st)*=(s*t)*");
          }
          if (t.plus(su) != t.plus(t.mul(s, t.plus(u)))) {
            fail("(st)+=(st+)+");
          }
        }
      }
    }

  }  // namespace

  RSemigroup::RSemigroup() {
    auto d      = std::make_shared<Data>();
    d->n        = 1;
    d->mul      = {0};
    d->star     = {0};
    d->plus     = {0};
    d->proj     = {0};
    d->proj_pos = {0};
    _d          = std::move(d);
  }

  std::string RSemigroup::label(Elem a) const {
    return _d->labels.empty() ? std::to_string(a) : _d->labels[a];
  }

  bool RSemigroup::same_tables(RSemigroup const& other) const {
    return _d->n == other._d->n && _d->mul == other._d->mul
           && _d->star == other._d->star && _d->plus == other._d->plus;
  }

  RSemigroup validate_restriction(std::size_t              n,
                                  std::vector<Elem>        mul,
                                  std::vector<Elem>        star,
                                  std::vector<Elem>        plus,
                                  std::vector<std::string> labels) {
    if (n == 0) {
      throw DimensionMismatch("an algebra needs at least one element");
    }
    if (mul.size() != n * n) {
      throw DimensionMismatch("multiplication table has " + std::to_string(mul.size())
                              + " entries, expected " + std::to_string(n * n));
    }
    if (star.size() != n || plus.size() != n) {
      throw DimensionMismatch("star and plus tables need " + std::to_string(n)
                              + " entries");
    }
    if (!labels.empty() && labels.size() != n) {
      throw DimensionMismatch("label count differs from element count");
    }
    auto out_of_range = [n](Elem v) { return v >= n; };
    if (std::any_of(mul.begin(), mul.end(), out_of_range)
        || std::any_of(star.begin(), star.end(), out_of_range)
        || std::any_of(plus.begin(), plus.end(), out_of_range)) {
      throw DimensionMismatch("table entry out of range");
    }

    Tables const t{n, mul, star, plus};
    check_identities(t);

    std::vector<Elem> proj(star);
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    {
      std::vector<Elem> proj_plus(plus);
      std::sort(proj_plus.begin(), proj_plus.end());
      proj_plus.erase(std::unique(proj_plus.begin(), proj_plus.end()), proj_plus.end());
      if (proj != proj_plus) {
        throw OracleMismatch("{s*} and {s+} differ");
      }
    }
    check_derived(t, proj);

    auto d = std::make_shared<RSemigroup::Data>();
    d->n   = n;
    d->proj_pos.assign(n, RSemigroup::kNone);
    for (std::size_t i = 0; i < proj.size(); ++i) {
      d->proj_pos[proj[i]] = i;
    }
    for (Elem e : proj) {
      if (star[e] != e || plus[e] != e) {
        throw OracleMismatch("a projection is not fixed by * and +");
      }
      for (Elem f : proj) {
        if (d->proj_pos[t.mul(e, f)] == RSemigroup::kNone) {
          throw OracleMismatch("projections are not closed under products");
        }
      }
    }
    d->mul    = std::move(mul);
    d->star   = std::move(star);
    d->plus   = std::move(plus);
    d->proj   = std::move(proj);
    d->labels = std::move(labels);
    return RSemigroup(std::move(d));
  }

  RSemigroup validate_restriction(std::vector<std::vector<Elem>> const& rows,
                                  std::vector<Elem>                     star,
                                  std::vector<Elem>                     plus,
                                  std::vector<std::string>              labels) {
    std::size_t const n = rows.size();
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw DimensionMismatch("multiplication table is not square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate_restriction(
        n, std::move(flat), std::move(star), std::move(plus), std::move(labels));
  }

  Relation natural_order(RSemigroup const& S) {
    std::size_t const n = S.size();
    Relation          r(n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        for (Elem f : S.projections()) {
          if (S.mul(t, f) == s) {
            r.set(s, t);
            break;
          }
        }
        bool const by_star = S.mul(t, S.star(s)) == s;
        bool const by_plus = S.mul(S.plus(s), t) == s;
        if (r(s, t) != by_star || r(s, t) != by_plus) {
          throw OracleMismatch("characterizations of the natural order disagree");
        }
      }
    }
    if (!r.is_partial_order()) {
      throw OracleMismatch("natural order is not a partial order");
    }
    return r;
  }

  Relation compatibility(RSemigroup const& S) {
    std::size_t const n = S.size();
    Relation          r(n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        r.set(s, t, S.compatible(s, t));
      }
    }
    return r;
  }

  std::vector<Elem> projections(RSemigroup const& S) {
    return S.projections();
  }

  bool is_reduced(RSemigroup const& S) {
    return S.projections().size() == 1;
  }

  RSemigroup with_labels(RSemigroup const& S, std::vector<std::string> labels) {
    return validate_restriction(
        S.size(), S.mul_table(), S.star_table(), S.plus_table(), std::move(labels));
  }

}  // namespace rsemi
