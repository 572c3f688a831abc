#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "rsemi/types.hpp"

namespace rsemi {

  /// A finite two-sided restriction semigroup given by its multiplication,
  /// star and plus tables. Instances can only be obtained through
  /// validate_restriction, so every value satisfies the defining identities.
  /// Copies share the underlying tables.
  class RSemigroup {
   public:
    /// The one-element monoid.
    RSemigroup();

    std::size_t size() const noexcept { return _d->n; }

    Elem mul(Elem a, Elem b) const { return _d->mul[a * _d->n + b]; }
    Elem star(Elem a) const { return _d->star[a]; }
    Elem plus(Elem a) const { return _d->plus[a]; }

    std::vector<Elem> const& mul_table() const noexcept { return _d->mul; }
    std::vector<Elem> const& star_table() const noexcept { return _d->star; }
    std::vector<Elem> const& plus_table() const noexcept { return _d->plus; }

    /// The projections {s*}, in increasing index order.
    std::vector<Elem> const& projections() const noexcept { return _d->proj; }
    bool is_projection(Elem a) const { return _d->proj_pos[a] != kNone; }
    /// Position of a projection in projections(); kNone for other elements.
    std::size_t projection_index(Elem a) const { return _d->proj_pos[a]; }

    /// Natural partial order, via the characterization s = t s*.
    bool leq(Elem s, Elem t) const { return mul(t, star(s)) == s; }

    bool compatible(Elem s, Elem t) const {
      return mul(s, star(t)) == mul(t, star(s))
             && mul(plus(t), s) == mul(plus(s), t);
    }

    bool has_labels() const noexcept { return !_d->labels.empty(); }
    std::vector<std::string> const& labels() const noexcept { return _d->labels; }
    /// Display name of an element: its label if any, otherwise the index.
    std::string label(Elem a) const;

    /// Table equality; labels are ignored.
    bool same_tables(RSemigroup const& other) const;

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

   private:
    struct Data {
      std::size_t              n = 0;
      std::vector<Elem>        mul;
      std::vector<Elem>        star;
      std::vector<Elem>        plus;
      std::vector<Elem>        proj;
      std::vector<std::size_t> proj_pos;
      std::vector<std::string> labels;
    };

    explicit RSemigroup(std::shared_ptr<Data const> d) : _d(std::move(d)) {}

    std::shared_ptr<Data const> _d;

    friend RSemigroup validate_restriction(std::size_t,
                                           std::vector<Elem>,
                                           std::vector<Elem>,
                                           std::vector<Elem>,
                                           std::vector<std::string>);
  };

  /// Check dimensions, ranges, the identities x+x=x ... (x*)+=x* in their
  /// usual order, then associativity. Throws DimensionMismatch or
  /// AxiomViolation with the first failing witness. `mul` is row-major n*n.
  RSemigroup validate_restriction(std::size_t              n,
                                  std::vector<Elem>        mul,
                                  std::vector<Elem>        star,
                                  std::vector<Elem>        plus,
                                  std::vector<std::string> labels = {});

  /// Same, with the multiplication given as rows.
  RSemigroup validate_restriction(std::vector<std::vector<Elem>> const& rows,
                                  std::vector<Elem>                     star,
                                  std::vector<Elem>                     plus,
                                  std::vector<std::string> labels = {});

  /// s <= t iff s = tf for some projection f, computed from that definition.
  Relation natural_order(RSemigroup const& S);

  Relation compatibility(RSemigroup const& S);

  /// Elements that are projections, computed as {s*} and cross-checked
  /// against {s+}.
  std::vector<Elem> projections(RSemigroup const& S);

  bool is_reduced(RSemigroup const& S);

  /// Copy of S with new labels (size must match, or empty to drop them).
  RSemigroup with_labels(RSemigroup const& S, std::vector<std::string> labels);

}  // namespace rsemi
