#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace rsemi {

  /// Dense element index of a finite algebra.
  using Elem = std::uint32_t;

  /// Subset of a carrier of at most 64 points, as a bitmask.
  using Subset = std::uint64_t;

  inline constexpr std::size_t kMaxSubsetCarrier = 64;

  constexpr Subset singleton(std::size_t x) noexcept {
    return Subset{1} << x;
  }

  constexpr bool contains(Subset s, std::size_t x) noexcept {
    return ((s >> x) & 1U) != 0;
  }

  constexpr bool is_subset(Subset a, Subset b) noexcept {
    return (a & ~b) == 0;
  }

  constexpr Subset full_subset(std::size_t n) noexcept {
    return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
  }

  inline std::size_t cardinality(Subset s) noexcept {
    return static_cast<std::size_t>(std::popcount(s));
  }

  inline std::vector<Elem> members(Subset s) {
    std::vector<Elem> out;
    while (s != 0) {
      out.push_back(static_cast<Elem>(std::countr_zero(s)));
      s &= s - 1;
    }
    return out;
  }

  /// Binary relation on {0..n-1}, materialized as an n*n bitset.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, false) {}

    std::size_t degree() const noexcept { return _n; }

    bool operator()(Elem a, Elem b) const {
      return _bits[static_cast<std::size_t>(a) * _n + b];
    }

    void set(Elem a, Elem b, bool value = true) {
      _bits[static_cast<std::size_t>(a) * _n + b] = value;
    }

    std::size_t count() const {
      std::size_t c = 0;
      for (bool b : _bits) {
        c += b ? 1 : 0;
      }
      return c;
    }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;
    bool is_partial_order() const {
      return is_reflexive() && is_antisymmetric() && is_transitive();
    }
    bool is_equivalence() const {
      return is_reflexive() && is_symmetric() && is_transitive();
    }

    /// True if this relation is contained in `other`.
    bool subset_of(Relation const& other) const;

    bool operator==(Relation const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<bool> _bits;
  };

}  // namespace rsemi
