#include "rsemi/pbij.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "rsemi/error.hpp"

namespace rsemi {

  PBij::PBij(std::size_t carrier) : _carrier(carrier) {
    if (carrier > kMaxCarrier) {
      throw SizeLimit("partial bijections are limited to carriers of "
                      + std::to_string(kMaxCarrier) + " points");
    }
    _img.fill(kUndef);
  }

  PBij PBij::identity(std::size_t carrier, Subset domain) {
    PBij f(carrier);
    for (Elem x : members(domain & full_subset(carrier))) {
      f._img[x] = static_cast<std::uint8_t>(x);
    }
    return f;
  }

  PBij PBij::from_pairs(std::size_t carrier, std::vector<std::pair<Elem, Elem>> const& pairs) {
    PBij f(carrier);
    for (auto [x, y] : pairs) {
      if (f.defined(x)) {
        throw Error("point " + std::to_string(x) + " is assigned twice");
      }
      f.set(x, y);
    }
    return f;
  }

  Elem PBij::preimage(Elem y) const {
    for (Elem x = 0; x < _carrier; ++x) {
      if (_img[x] == y) {
        return x;
      }
    }
    return kUndef;
  }

  Subset PBij::domain() const {
    Subset d = 0;
    for (Elem x = 0; x < _carrier; ++x) {
      if (_img[x] != kUndef) {
        d |= singleton(x);
      }
    }
    return d;
  }

  Subset PBij::range() const {
    Subset r = 0;
    for (Elem x = 0; x < _carrier; ++x) {
      if (_img[x] != kUndef) {
        r |= singleton(_img[x]);
      }
    }
    return r;
  }

  bool PBij::is_partial_identity() const {
    for (Elem x = 0; x < _carrier; ++x) {
      if (_img[x] != kUndef && _img[x] != x) {
        return false;
      }
    }
    return true;
  }

  PBij PBij::inverse() const {
    PBij g(_carrier);
    for (Elem x = 0; x < _carrier; ++x) {
      if (_img[x] != kUndef) {
        g._img[_img[x]] = static_cast<std::uint8_t>(x);
      }
    }
    return g;
  }

  PBij PBij::restrict(Subset D) const {
    PBij g(*this);
    for (Elem x = 0; x < _carrier; ++x) {
      if (!contains(D, x)) {
        g._img[x] = kUndef;
      }
    }
    return g;
  }

  void PBij::set(Elem x, Elem y) {
    if (x >= _carrier || y >= _carrier) {
      throw Error("point out of range for a carrier of size " + std::to_string(_carrier));
    }
    for (Elem z = 0; z < _carrier; ++z) {
      if (z != x && _img[z] == y) {
        throw Error("partial map is not injective at image " + std::to_string(y));
      }
    }
    _img[x] = static_cast<std::uint8_t>(y);
  }

  void PBij::erase(Elem x) {
    if (x < _carrier) {
      _img[x] = kUndef;
    }
  }

  std::vector<std::pair<Elem, Elem>> PBij::pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < _carrier; ++x) {
      if (_img[x] != kUndef) {
        out.emplace_back(x, _img[x]);
      }
    }
    return out;
  }

  std::string PBij::to_string() const {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (auto [x, y] : pairs()) {
      os << (first ? "" : ",") << x << '>' << y;
      first = false;
    }
    os << ']';
    return os.str();
  }

  PBij PBij::parse(std::string_view text, std::size_t carrier) {
    auto bad = [&](char const* why) {
      return Error("bad partial bijection '" + std::string(text) + "': " + why);
    };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
      throw bad("expected [x>y,...]");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    PBij             f(carrier);
    if (body.empty()) {
      return f;
    }
    auto read_num = [&](std::string_view& s) {
      Elem v        = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr == s.data()) {
        throw bad("expected a number");
      }
      s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
      return v;
    };
    while (true) {
      Elem const x = read_num(body);
      if (body.empty() || body.front() != '>') {
        throw bad("expected '>'");
      }
      body.remove_prefix(1);
      Elem const y = read_num(body);
      if (x >= carrier || y >= carrier) {
        throw bad("point out of range");
      }
      if (f.defined(x)) {
        throw bad("point assigned twice");
      }
      try {
        f.set(x, y);
      } catch (Error const&) {
        throw bad("not injective");
      }
      if (body.empty()) {
        return f;
      }
      if (body.front() != ',') {
        throw bad("expected ','");
      }
      body.remove_prefix(1);
    }
  }

  bool canonical_less(PBij const& a, PBij const& b) {
    if (a._carrier != b._carrier) {
      return a._carrier < b._carrier;
    }
    Subset const da = a.domain();
    Subset const db = b.domain();
    if (da != db) {
      return da < db;
    }
    return a._img < b._img;
  }

  PBij operator*(PBij const& f, PBij const& g) {
    if (f.carrier() != g.carrier()) {
      throw DimensionMismatch("composing partial bijections on different carriers");
    }
    PBij h(f.carrier());
    for (Elem x = 0; x < g.carrier(); ++x) {
      Elem const y = g(x);
      if (y != PBij::kUndef && f.defined(y)) {
        h.set(x, f(y));
      }
    }
    return h;
  }

  bool leq(PBij const& f, PBij const& g) {
    if (f.carrier() != g.carrier()) {
      return false;
    }
    for (Elem x = 0; x < f.carrier(); ++x) {
      if (f.defined(x) && f(x) != g(x)) {
        return false;
      }
    }
    return true;
  }

  bool compatible(PBij const& f, PBij const& g) {
    if (f.carrier() != g.carrier()) {
      return false;
    }
    for (Elem x = 0; x < f.carrier(); ++x) {
      if (f.defined(x) && g.defined(x) && f(x) != g(x)) {
        return false;
      }
    }
    PBij const fi = f.inverse();
    PBij const gi = g.inverse();
    for (Elem y = 0; y < f.carrier(); ++y) {
      if (fi.defined(y) && gi.defined(y) && fi(y) != gi(y)) {
        return false;
      }
    }
    return true;
  }

  std::size_t PBijHash::operator()(PBij const& f) const noexcept {
    std::size_t h = f.carrier();
    for (Elem x = 0; x < f.carrier(); ++x) {
      h = h * 1099511628211ULL + f(x);
    }
    return h;
  }

}  // namespace rsemi
