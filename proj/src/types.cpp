#include "rsemi/types.hpp"

namespace rsemi {

  bool Relation::is_reflexive() const {
    for (Elem a = 0; a < _n; ++a) {
      if (!(*this)(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool Relation::is_symmetric() const {
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = a + 1; b < _n; ++b) {
        if ((*this)(a, b) != (*this)(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_antisymmetric() const {
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = a + 1; b < _n; ++b) {
        if ((*this)(a, b) && (*this)(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool Relation::is_transitive() const {
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = 0; b < _n; ++b) {
        if (!(*this)(a, b)) {
          continue;
        }
        for (Elem c = 0; c < _n; ++c) {
          if ((*this)(b, c) && !(*this)(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool Relation::subset_of(Relation const& other) const {
    if (other._n != _n) {
      return false;
    }
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] && !other._bits[i]) {
        return false;
      }
    }
    return true;
  }

}  // namespace rsemi
