#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rsemi/morphism.hpp"
#include "rsemi/premorphism.hpp"
#include "rsemi/rsemigroup.hpp"
#include "rsemi/semilattice.hpp"

// Line-oriented text formats. '#' starts a comment; blank lines are ignored;
// anything left over after a complete object is a ParseError. File names
// inside a file are resolved relative to that file's directory.
//
//   rsemigroup <n>              semilattice <n>
//   <n rows of n indices>       <n rows of n indices>
//   star: <n indices>
//   plus: <n indices>
//   [labels: <n names>]
//
//   premorph <semigroup-file> <carrier>
//   <one PBij literal per element, e.g. [0>1,2>2] or []>
//   [q: <one projection of S (element index) per carrier point>
//    lattice: <semilattice-file>]
//
//   morphism <source-file> <target-file>
//   map: <one target index per source element>

namespace rsemi {

  std::string read_file(std::filesystem::path const& path);

  /// First word of the first non-comment line ("rsemigroup", "premorph", ...).
  std::string detect_kind(std::string const& text);

  RSemigroup parse_rsemigroup(std::string const& text);
  std::string format_rsemigroup(RSemigroup const& S);

  Semilattice parse_semilattice(std::string const& text);
  std::string format_semilattice(Semilattice const& Y);

  struct PremorphFile {
    Premorph                    phi;
    std::optional<ActionTriple> triple;
  };

  PremorphFile parse_premorph(std::string const& text, std::filesystem::path const& base);
  std::string  format_premorph(Premorph const& phi, std::string const& semigroup_file);

  RSMorphism  parse_morphism(std::string const& text, std::filesystem::path const& base);
  std::string format_map(std::vector<Elem> const& map);

  RSemigroup   load_rsemigroup(std::filesystem::path const& path);
  Semilattice  load_semilattice(std::filesystem::path const& path);
  PremorphFile load_premorph(std::filesystem::path const& path);
  RSMorphism   load_morphism(std::filesystem::path const& path);

  /// category-check input:
  ///   semigroup <file>
  ///   object <name> <premorph-file with q: and lattice:>
  ///   morphism <from> <to> <carrier map>
  ///   extension <name> <morphism-file onto the semigroup>
  ///   arrow <from-extension> <to-extension> <map between their sources>
  struct CategorySpec {
    struct Object {
      std::string  name;
      ActionTriple triple;
    };
    struct Morphism {
      std::string       from, to;
      std::vector<Elem> map;
    };
    struct Extension {
      std::string name;
      RSMorphism  psi;
    };

    RSemigroup             semigroup;
    std::vector<Object>    objects;
    std::vector<Morphism>  morphisms;
    std::vector<Extension> extensions;
    std::vector<Morphism>  arrows;
  };

  CategorySpec parse_category_spec(std::string const& text, std::filesystem::path const& base);

}  // namespace rsemi
