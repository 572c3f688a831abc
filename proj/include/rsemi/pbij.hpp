#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsemi/types.hpp"

namespace rsemi {

  /// A partial injective map on {0..carrier-1}, carrier <= 32.
  ///
  /// Composition follows the convention fg = f o g (apply g first). As an
  /// element of the restriction semigroup I(X): f* = id on dom f,
  /// f+ = id on ran f, and f <= g iff f is a restriction of g.
  class PBij {
   public:
    static constexpr std::size_t  kMaxCarrier = 32;
    static constexpr std::uint8_t kUndef      = 0xFF;

    PBij() { _img.fill(kUndef); }
    explicit PBij(std::size_t carrier);

    static PBij identity(std::size_t carrier, Subset domain);
    static PBij identity(std::size_t carrier) {
      return identity(carrier, full_subset(carrier));
    }
    /// Throws Error if the pairs are out of range or not injective.
    static PBij from_pairs(std::size_t                                 carrier,
                           std::vector<std::pair<Elem, Elem>> const& pairs);

    std::size_t carrier() const noexcept { return _carrier; }

    bool defined(Elem x) const { return x < _carrier && _img[x] != kUndef; }
    /// Image of x, or kUndef.
    Elem operator()(Elem x) const {
      return x < _carrier ? _img[x] : kUndef;
    }
    /// Preimage of y, or kUndef.
    Elem preimage(Elem y) const;

    Subset domain() const;
    Subset range() const;
    std::size_t rank() const { return cardinality(domain()); }
    bool empty() const { return domain() == 0; }
    bool is_partial_identity() const;

    PBij inverse() const;
    PBij star() const { return identity(_carrier, domain()); }
    PBij plus() const { return identity(_carrier, range()); }
    /// f restricted to dom f intersected with D.
    PBij restrict(Subset D) const;

    /// Set x -> y; throws Error if that breaks injectivity.
    void set(Elem x, Elem y);
    void erase(Elem x);

    std::vector<std::pair<Elem, Elem>> pairs() const;

    /// "[0>1,2>2]" listing the defined points in increasing order.
    std::string to_string() const;
    /// Inverse of to_string; throws Error on malformed input.
    static PBij parse(std::string_view text, std::size_t carrier);

    bool operator==(PBij const& o) const {
      return _carrier == o._carrier && _img == o._img;
    }

    /// Order used for generated semigroups: by domain bitmask, then by the
    /// tuple of images.
    friend bool canonical_less(PBij const& a, PBij const& b);

   private:
    std::size_t                        _carrier = 0;
    std::array<std::uint8_t, kMaxCarrier> _img;
  };

  bool canonical_less(PBij const& a, PBij const& b);

  /// f o g (g applied first). Throws DimensionMismatch on carrier mismatch.
  PBij operator*(PBij const& f, PBij const& g);

  /// f is a restriction of g.
  bool leq(PBij const& f, PBij const& g);

  /// f and g agree on the intersection of their domains and f^{-1}, g^{-1}
  /// agree on the intersection of their ranges.
  bool compatible(PBij const& f, PBij const& g);

  struct PBijHash {
    std::size_t operator()(PBij const& f) const noexcept;
  };

}  // namespace rsemi
