#include "rsemi/text_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "rsemi/error.hpp"

namespace rsemi {

  namespace {

    struct Line {
      std::size_t              number;
      std::vector<std::string> words;
    };

    class Reader {
     public:
      explicit Reader(std::string const& text) {
        std::istringstream in(text);
        std::string        raw;
        std::size_t        number = 0;
        while (std::getline(in, raw)) {
          ++number;
          if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
          }
          std::istringstream       words(raw);
          std::vector<std::string> w;
          for (std::string word; words >> word;) {
            w.push_back(word);
          }
          if (!w.empty()) {
            _lines.push_back({number, std::move(w)});
          }
        }
      }

      bool done() const { return _pos == _lines.size(); }

      Line const& next(char const* expecting) {
        if (done()) {
          throw ParseError(std::string("unexpected end of input, expected ") + expecting,
                           _lines.empty() ? 1 : _lines.back().number);
        }
        return _lines[_pos++];
      }

      Line const* peek() const { return done() ? nullptr : &_lines[_pos]; }

      void finish() const {
        if (!done()) {
          throw ParseError("trailing input", _lines[_pos].number);
        }
      }

     private:
      std::vector<Line> _lines;
      std::size_t       _pos = 0;
    };

    std::size_t number(std::string const& word, std::size_t line) {
      if (word.empty() || word.find_first_not_of("0123456789") != std::string::npos
          || word.size() > 9) {
        throw ParseError("expected a non-negative integer, got '" + word + "'", line);
      }
      return std::stoul(word);
    }

    std::vector<Elem> indices(Line const& l, std::size_t first, std::size_t count) {
      if (l.words.size() != first + count) {
        throw ParseError("expected " + std::to_string(count) + " entries", l.number);
      }
      std::vector<Elem> out;
      for (std::size_t i = first; i < l.words.size(); ++i) {
        out.push_back(static_cast<Elem>(number(l.words[i], l.number)));
      }
      return out;
    }

    // "<keyword> <count>"
    std::size_t header(Reader& r, char const* keyword) {
      auto const& l = r.next(keyword);
      if (l.words[0] != keyword || l.words.size() != 2) {
        throw ParseError(std::string("expected '") + keyword + " <n>'", l.number);
      }
      return number(l.words[1], l.number);
    }

    std::vector<Elem> keyed(Reader& r, char const* key, std::size_t count) {
      auto const& l = r.next(key);
      if (l.words[0] != std::string(key) + ":") {
        throw ParseError(std::string("expected '") + key + ":'", l.number);
      }
      return indices(l, 1, count);
    }

    std::vector<Elem> table(Reader& r, std::size_t n) {
      std::vector<Elem> out;
      for (std::size_t i = 0; i < n; ++i) {
        auto row = indices(r.next("a table row"), 0, n);
        out.insert(out.end(), row.begin(), row.end());
      }
      return out;
    }

    // Library errors raised while building an object are reported against
    // the object's header line.
    template <typename F>
    auto at_line(std::size_t line, F&& f) {
      try {
        return f();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what(), line);
      }
    }

    std::string join(std::vector<Elem> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : " ") + std::to_string(v[i]);
      }
      return out;
    }

    RSemigroup read_rsemigroup(Reader& r) {
      std::size_t const n     = header(r, "rsemigroup");
      auto              mul   = table(r, n);
      auto              star  = keyed(r, "star", n);
      auto              plus  = keyed(r, "plus", n);
      std::vector<std::string> labels;
      if (auto const* l = r.peek(); l && l->words[0] == "labels:") {
        if (l->words.size() != n + 1) {
          throw ParseError("expected " + std::to_string(n) + " labels", l->number);
        }
        labels.assign(l->words.begin() + 1, l->words.end());
        r.next("labels");
      }
      // Validation errors (AxiomViolation, ...) propagate unchanged so that
      // callers can report the failing identity.
      return validate_restriction(n, std::move(mul), std::move(star), std::move(plus),
                                  std::move(labels));
    }

    std::filesystem::path resolve(std::filesystem::path const& base, std::string const& name) {
      std::filesystem::path p(name);
      return p.is_absolute() ? p : base / p;
    }

  }  // namespace

  std::string read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

  std::string detect_kind(std::string const& text) {
    Reader r(text);
    if (r.done()) {
      throw ParseError("empty input", 1);
    }
    return r.peek()->words[0];
  }

  RSemigroup parse_rsemigroup(std::string const& text) {
    Reader r(text);
    auto   S = read_rsemigroup(r);
    r.finish();
    return S;
  }

  std::string format_rsemigroup(RSemigroup const& S) {
    std::size_t const  n = S.size();
    std::ostringstream out;
    out << "rsemigroup " << n << "\n";
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> row(S.mul_table().begin() + static_cast<std::ptrdiff_t>(a * n),
                            S.mul_table().begin() + static_cast<std::ptrdiff_t>((a + 1) * n));
      out << join(row) << "\n";
    }
    out << "star: " << join(S.star_table()) << "\n";
    out << "plus: " << join(S.plus_table()) << "\n";
    if (S.has_labels()) {
      out << "labels:";
      for (auto const& l : S.labels()) {
        out << " " << l;
      }
      out << "\n";
    }
    return out.str();
  }

  Semilattice parse_semilattice(std::string const& text) {
    Reader      r(text);
    std::size_t line = r.peek() ? r.peek()->number : 1;
    std::size_t n    = header(r, "semilattice");
    auto        meet = table(r, n);
    r.finish();
    return at_line(line, [&] { return Semilattice::from_meet(n, std::move(meet)); });
  }

  std::string format_semilattice(Semilattice const& Y) {
    std::size_t const  n = Y.size();
    std::ostringstream out;
    out << "semilattice " << n << "\n";
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> row(n);
      for (Elem b = 0; b < n; ++b) {
        row[b] = Y.meet(a, b);
      }
      out << join(row) << "\n";
    }
    return out.str();
  }

  PremorphFile parse_premorph(std::string const& text, std::filesystem::path const& base) {
    Reader      r(text);
    auto const& h = r.next("premorph header");
    if (h.words[0] != "premorph" || h.words.size() != 3) {
      throw ParseError("expected 'premorph <semigroup-file> <carrier>'", h.number);
    }
    std::size_t const hline   = h.number;
    auto const        S       = load_rsemigroup(resolve(base, h.words[1]));
    std::size_t const carrier = number(h.words[2], h.number);
    std::vector<PBij> maps;
    for (Elem s = 0; s < S.size(); ++s) {
      auto const& l = r.next("a partial bijection");
      if (l.words.size() != 1) {
        throw ParseError("expected one partial bijection literal", l.number);
      }
      maps.push_back(at_line(l.number, [&] { return PBij::parse(l.words[0], carrier); }));
    }
    PremorphFile out;
    out.phi = check_premorphism(S, carrier, std::move(maps));
    if (auto const* l = r.peek(); l && l->words[0] == "q:") {
      auto q  = keyed(r, "q", carrier);
      auto const& ll = r.next("lattice");
      if (ll.words[0] != "lattice:" || ll.words.size() != 2) {
        throw ParseError("expected 'lattice: <semilattice-file>'", ll.number);
      }
      auto Y     = load_semilattice(resolve(base, ll.words[1]));
      out.triple = at_line(hline, [&] { return make_action_triple(out.phi, q, Y); });
    }
    r.finish();
    return out;
  }

  std::string format_premorph(Premorph const& phi, std::string const& semigroup_file) {
    std::ostringstream out;
    out << "premorph " << semigroup_file << " " << phi.carrier << "\n";
    for (auto const& f : phi.maps) {
      out << f.to_string() << "\n";
    }
    return out.str();
  }

  RSMorphism parse_morphism(std::string const& text, std::filesystem::path const& base) {
    Reader      r(text);
    auto const& h = r.next("morphism header");
    if (h.words[0] != "morphism" || h.words.size() != 3) {
      throw ParseError("expected 'morphism <source-file> <target-file>'", h.number);
    }
    auto S   = load_rsemigroup(resolve(base, h.words[1]));
    auto T   = load_rsemigroup(resolve(base, h.words[2]));
    auto map = keyed(r, "map", S.size());
    r.finish();
    for (Elem x : map) {
      if (x >= T.size()) {
        throw ParseError("map entry out of range", h.number);
      }
    }
    return check_rsmorphism(S, T, std::move(map));
  }

  std::string format_map(std::vector<Elem> const& map) {
    return join(map);
  }

  RSemigroup load_rsemigroup(std::filesystem::path const& path) {
    return parse_rsemigroup(read_file(path));
  }

  Semilattice load_semilattice(std::filesystem::path const& path) {
    return parse_semilattice(read_file(path));
  }

  PremorphFile load_premorph(std::filesystem::path const& path) {
    return parse_premorph(read_file(path), path.parent_path());
  }

  RSMorphism load_morphism(std::filesystem::path const& path) {
    return parse_morphism(read_file(path), path.parent_path());
  }

  CategorySpec parse_category_spec(std::string const& text, std::filesystem::path const& base) {
    Reader       r(text);
    CategorySpec spec;
    bool         have_semigroup = false;
    std::map<std::string, bool> names;
    auto known = [&](std::string const& name, std::size_t line) {
      if (!names.count(name)) {
        throw ParseError("unknown name '" + name + "'", line);
      }
    };
    auto fresh = [&](std::string const& name, std::size_t line) {
      if (!names.emplace(name, true).second) {
        throw ParseError("duplicate name '" + name + "'", line);
      }
    };
    while (!r.done()) {
      auto const& l   = r.next("a declaration");
      auto const& key = l.words[0];
      if (key == "semigroup" && l.words.size() == 2 && !have_semigroup) {
        spec.semigroup = load_rsemigroup(resolve(base, l.words[1]));
        have_semigroup = true;
        continue;
      }
      if (!have_semigroup) {
        throw ParseError("expected 'semigroup <file>' first", l.number);
      }
      if (key == "object" && l.words.size() == 3) {
        fresh(l.words[1], l.number);
        auto pf = load_premorph(resolve(base, l.words[2]));
        if (!pf.triple) {
          throw ParseError("object file needs q: and lattice: lines", l.number);
        }
        if (!pf.triple->source().same_tables(spec.semigroup)) {
          throw ParseError("object acts by a different semigroup", l.number);
        }
        spec.objects.push_back({l.words[1], *pf.triple});
      } else if (key == "extension" && l.words.size() == 3) {
        fresh(l.words[1], l.number);
        auto psi = load_morphism(resolve(base, l.words[2]));
        if (!psi.target.same_tables(spec.semigroup)) {
          throw ParseError("extension does not map onto the semigroup", l.number);
        }
        spec.extensions.push_back({l.words[1], psi});
      } else if ((key == "morphism" || key == "arrow") && l.words.size() >= 3) {
        known(l.words[1], l.number);
        known(l.words[2], l.number);
        CategorySpec::Morphism m{l.words[1], l.words[2], {}};
        for (std::size_t i = 3; i < l.words.size(); ++i) {
          m.map.push_back(static_cast<Elem>(number(l.words[i], l.number)));
        }
        (key == "morphism" ? spec.morphisms : spec.arrows).push_back(std::move(m));
      } else {
        throw ParseError("unrecognised declaration '" + key + "'", l.number);
      }
    }
    if (!have_semigroup) {
      throw ParseError("missing 'semigroup <file>'", 1);
    }
    return spec;
  }

}  // namespace rsemi
