#include "rsemi/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include "rsemi/category.hpp"
#include "rsemi/enumerate.hpp"
#include "rsemi/error.hpp"
#include "rsemi/extension.hpp"
#include "rsemi/inverse.hpp"
#include "rsemi/product.hpp"
#include "rsemi/sigma.hpp"
#include "rsemi/text_io.hpp"

namespace rsemi {

  namespace {

    namespace fs = std::filesystem;

    char const* yes_no(bool b) {
      return b ? "true" : "false";
    }

    char const* pass_fail(bool b) {
      return b ? "pass" : "fail";
    }

    void print_pairs(std::ostream& out, ProductRS const& p) {
      out << "# pairs:\n";
      for (Elem i = 0; i < p.pairs.size(); ++i) {
        out << "#   " << i << " = (" << p.pairs[i].first << "," << p.pairs[i].second << ")\n";
      }
    }

    void print_witnesses(std::ostream&                                   out,
                         std::map<std::string, std::vector<Elem>> const& w) {
      for (auto const& [name, tuple] : w) {
        out << "witness " << name << ": " << format_witness(tuple) << "\n";
      }
    }

    int cmd_validate(std::string const& path, std::ostream& out) {
      auto const text = read_file(path);
      auto const kind = detect_kind(text);
      if (kind == "rsemigroup") {
        auto const S = parse_rsemigroup(text);
        out << "valid restriction semigroup, |P|=" << S.projections().size() << "\n";
        out << "size: " << S.size() << "\n";
        out << "projections:";
        for (Elem e : S.projections()) {
          out << " " << e;
        }
        out << "\n";
        out << "reduced: " << yes_no(is_reduced(S)) << "\n";
        out << "proper: " << yes_no(is_proper(S)) << "\n";
        out << "inverse: " << yes_no(inverse_table(S).has_value()) << "\n";
        out << "sigma_classes: " << sigma(S).size() << "\n";
      } else if (kind == "semilattice") {
        auto const Y = parse_semilattice(text);
        out << "valid semilattice, n=" << Y.size() << "\n";
        out << "bottom: " << Y.bottom() << "\n";
        out << "top: " << (Y.top() ? std::to_string(*Y.top()) : std::string("none")) << "\n";
      } else if (kind == "premorph") {
        auto const pf = parse_premorph(text, fs::path(path).parent_path());
        out << "valid premorphism, carrier=" << pf.phi.carrier << "\n";
        if (pf.triple) {
          auto const flags = check_action_conditions(*pf.triple);
          out << "action_triple: " << yes_no(flags.basic()) << "\n";
        }
      } else if (kind == "morphism") {
        auto const f = parse_morphism(text, fs::path(path).parent_path());
        out << "valid morphism\n";
        out << "surjective: " << yes_no(f.surjective) << "\n";
        out << "proper: " << yes_no(f.proper) << "\n";
        out << "projection_pure: " << yes_no(f.projection_pure) << "\n";
      } else {
        throw ParseError("unknown input kind '" + kind + "'", 1);
      }
      return 0;
    }

    int cmd_classify(std::string const& path, std::ostream& out) {
      auto const pf = load_premorph(path);
      auto const r  = classify(pf.phi);
      for (auto const& [name, value] : r.entries()) {
        out << name << ": " << yes_no(value) << "\n";
      }
      out << "question1_witness: " << yes_no(r.question1_witness()) << "\n";
      print_witnesses(out, r.witnesses);
      if (pf.triple) {
        auto const flags = check_action_conditions(*pf.triple);
        for (auto const& [name, value] : flags.entries()) {
          out << name << ": " << yes_no(value) << "\n";
        }
        print_witnesses(out, flags.witnesses);
      }
      return 0;
    }

    int cmd_product(std::string const& path, std::ostream& out) {
      auto const pf = load_premorph(path);
      if (!pf.triple) {
        throw ParseError("product needs an action triple (q: and lattice: lines)", 1);
      }
      auto const p = partial_action_product(*pf.triple);
      print_pairs(out, p);
      out << format_rsemigroup(p.algebra);
      return 0;
    }

    int cmd_decompose(std::string const& path, std::ostream& out) {
      auto const psi = load_morphism(path);
      if (!psi.proper) {
        out << "invalid: not a proper extension\n";
        return 1;
      }
      auto const d = decompose(psi);
      print_pairs(out, d.product);
      out << format_rsemigroup(d.product.algebra);
      out << "eta: " << format_map(d.eta.map) << "\n";
      out << "eta_bijective_morphism: pass\n";
      out << "psi_factors_through_eta: pass\n";
      out << "upper_equals_lower_product: pass\n";
      auto const r = classify_extension(psi);
      for (auto const& [name, value] : r.entries()) {
        out << name << ": " << value << "\n";
      }
      print_witnesses(out, r.witnesses);
      return 0;
    }

    std::vector<std::string> split_filters(std::vector<std::string> const& raw) {
      std::vector<std::string> out;
      for (auto const& item : raw) {
        std::stringstream ss(item);
        for (std::string f; std::getline(ss, f, ',');) {
          if (!f.empty()) {
            out.push_back(f);
          }
        }
      }
      return out;
    }

    int cmd_enumerate(std::string const&              kind,
                      std::size_t                     order,
                      bool                            up_to_iso,
                      std::vector<std::string> const& filters,
                      std::string const&              source,
                      std::size_t                     limit,
                      std::ostream&                   out) {
      std::size_t count = 0;
      auto        sep   = [&] {
        out << "# item " << count++ << "\n";
      };
      if (kind == "semilattice") {
        for_each_semilattice(
            order, up_to_iso,
            [&](Semilattice const& Y) {
              sep();
              out << format_semilattice(Y);
            },
            limit);
      } else if (kind == "rsemigroup") {
        for_each_restriction_semigroup(
            order, up_to_iso,
            [&](RSemigroup const& S) {
              sep();
              out << format_rsemigroup(S);
            },
            limit);
      } else if (kind == "premorph") {
        if (source.empty()) {
          throw ParseError("--kind premorph needs --source <semigroup-file>", 1);
        }
        auto const S = load_rsemigroup(source);
        for_each_premorphism(
            S, order,
            [&](Premorph const& phi) {
              sep();
              out << format_premorph(phi, source);
            },
            filters, limit);
      } else if (kind == "extension") {
        if (source.empty()) {
          throw ParseError("--kind extension needs --source <semigroup-file>", 1);
        }
        auto const S = load_rsemigroup(source);
        for (auto const& f : enumerate_proper_extensions(order, S, limit)) {
          sep();
          out << format_rsemigroup(f.source);
          out << "map: " << format_map(f.map) << "\n";
        }
      }
      out << "count: " << count << "\n";
      return 0;
    }

    int cmd_category_check(std::string const& path, std::ostream& out) {
      auto const spec = parse_category_spec(read_file(path), fs::path(path).parent_path());
      std::map<std::string, AObject>    objects;
      std::map<std::string, RSMorphism> extensions;
      std::vector<AObject>              family;
      for (auto const& o : spec.objects) {
        auto a = make_aobject(o.triple);
        objects.emplace(o.name, a);
        family.push_back(a);
      }
      std::vector<AMorphism> hat_arrows;
      for (auto const& o : spec.objects) {
        auto const& a  = objects.at(o.name);
        auto const  ar = verify_adjunction_instance(a, family);
        out << "object " << o.name << ": in_hat=" << yes_no(a.in_hat)
            << " in_tilde=" << yes_no(a.in_tilde) << "\n";
        out << "object " << o.name << ": unit=" << pass_fail(ar.unit_is_morphism)
            << " counit=" << pass_fail(ar.counit_is_morphism)
            << " reflection_maps=" << ar.hat_factorizations
            << " coreflection_maps=" << ar.tilde_factorizations
            << " round_trip=" << pass_fail(ar.hat_round_trip && ar.tilde_round_trip) << "\n";
        auto const psi = functor_U(a);
        out << "object " << o.name << ": U_proper=" << pass_fail(psi.proper) << "\n";
      }
      for (auto const& m : spec.morphisms) {
        auto const f = check_amorphism(objects.at(m.from), objects.at(m.to), m.map);
        out << "morphism " << m.from << "->" << m.to << ": M1=" << yes_no(f.m1)
            << " M2=" << yes_no(f.m2) << " M2r=" << yes_no(f.m2r) << " M3=" << yes_no(f.m3)
            << " M3r=" << yes_no(f.m3r);
        if (f.valid()) {
          auto const u = functor_U_mor(f);
          out << " functorial=" << pass_fail(functors_preserve(f))
              << " U_surjective=" << yes_no(u.surjective);
          if (f.from.in_hat && f.to.in_hat) {
            hat_arrows.push_back(f);
          }
        }
        out << "\n";
        print_witnesses(out, f.witnesses);
      }
      for (auto const& e : spec.extensions) {
        if (!e.psi.proper) {
          out << "extension " << e.name << ": not proper\n";
          return 1;
        }
        extensions.emplace(e.name, e.psi);
      }
      std::vector<ExtensionArrow> ext_arrows;
      for (auto const& a : spec.arrows) {
        if (!extensions.count(a.from) || !extensions.count(a.to)) {
          throw ParseError("arrow between unknown extensions", 1);
        }
        auto const& p1    = extensions.at(a.from);
        auto const& p2    = extensions.at(a.to);
        auto const  gamma = check_rsmorphism(p1.source, p2.source, a.map);
        auto const  g     = functor_G_hat_mor(p1, p2, gamma);
        out << "arrow " << a.from << "->" << a.to << ": surjective=" << yes_no(gamma.surjective)
            << " G_hat_M3=" << yes_no(g.m3) << "\n";
        ext_arrows.push_back({p1, p2, gamma});
      }
      for (auto const& o : spec.objects) {
        auto const& a = objects.at(o.name);
        if (!a.in_hat) {
          continue;
        }
        auto const r = verify_equivalence_instance(functor_U(a), a, hat_arrows, ext_arrows);
        out << "object " << o.name << ": equivalence unit=" << pass_fail(r.unit_iso)
            << " counit=" << pass_fail(r.counit_iso) << " unit_squares=" << r.unit_squares
            << " counit_squares=" << r.counit_squares << "\n";
      }
      for (auto const& e : spec.extensions) {
        auto const d = decompose(e.psi);
        auto const g = functor_G_hat(e.psi);
        out << "extension " << e.name << ": decomposition=pass G_hat_in_hat=" << yes_no(g.in_hat)
            << "\n";
      }
      out << "result: pass\n";
      return 0;
    }

    int cmd_search_q1(std::size_t order, std::size_t carrier, bool inverse_only,
                      std::size_t limit, std::ostream& out) {
      auto const r = search_question1(order, carrier, inverse_only, limit);
      out << "sources: " << r.sources << "\n";
      out << "examined: " << r.examined << "\n";
      if (r.witness) {
        out << "result: witness\n";
        out << format_rsemigroup(r.witness->source);
        out << format_premorph(*r.witness, "<source above>");
      } else {
        out << "result: exhausted\n";
      }
      return 0;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite restriction semigroups, premorphisms and proper extensions", "rsemi"};
    app.require_subcommand(1);
    std::size_t limit = kNoLimit;
    app.add_option("--limit", limit, "Abort enumerations after this many items");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Validate an input file");
    validate->add_option("file", file)->required();
    auto* cls = app.add_subcommand("classify", "Classify a premorphism");
    cls->add_option("file", file)->required();
    auto* product = app.add_subcommand("product", "Partial action product of an action triple");
    product->add_option("file", file)->required();
    auto* dec = app.add_subcommand("decompose", "Decompose a proper extension");
    dec->add_option("file", file)->required();
    auto* cat = app.add_subcommand("category-check", "Check category statements on a spec");
    cat->add_option("file", file)->required();

    std::string              kind, source;
    std::size_t              order = 0, carrier = 0;
    bool                     up_to_iso = false, inverse_only = false;
    std::vector<std::string> filters;
    auto* en = app.add_subcommand("enumerate", "Enumerate small structures");
    en->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"semilattice", "rsemigroup", "premorph", "extension"}));
    en->add_option("--order", order, "Order (carrier size for premorph, |T| for extension)")
        ->required();
    en->add_flag("--up-to-iso", up_to_iso);
    en->add_option("--filter", filters, "Premorphism flags that must hold");
    en->add_option("--source", source, "Semigroup file for premorph/extension");
    en->add_option("--limit", limit);

    auto* q1 = app.add_subcommand("search-q1", "Search for a double-primed locally strong map "
                                               "that is not primed locally strong");
    q1->add_option("--order", order)->required();
    q1->add_option("--carrier", carrier)->required();
    q1->add_flag("--inverse-only", inverse_only);
    q1->add_option("--limit", limit);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "usage error: " << e.what() << "\n";
      return 2;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(file, out);
      }
      if (cls->parsed()) {
        return cmd_classify(file, out);
      }
      if (product->parsed()) {
        return cmd_product(file, out);
      }
      if (dec->parsed()) {
        return cmd_decompose(file, out);
      }
      if (cat->parsed()) {
        return cmd_category_check(file, out);
      }
      if (en->parsed()) {
        if (kind != "premorph" && !filters.empty()) {
          err << "usage error: --filter only applies to --kind premorph\n";
          return 2;
        }
        return cmd_enumerate(kind, order, up_to_iso, split_filters(filters), source, limit, out);
      }
      if (q1->parsed()) {
        return cmd_search_q1(order, carrier, inverse_only,
                             limit == kNoLimit ? 50'000'000 : limit, out);
      }
    } catch (AxiomViolation const& e) {
      out << "invalid: " << e.what() << "\n";
      return 1;
    } catch (Error const& e) {
      out << "error: " << e.what() << "\n";
      return 1;
    }
    return 2;
  }

}  // namespace rsemi
