#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "semicross/counting.hpp"
#include "semicross/cross_section.hpp"
#include "semicross/error.hpp"
#include "semicross/green.hpp"
#include "semicross/json_io.hpp"
#include "semicross/notation.hpp"
#include "semicross/search.hpp"
#include "semicross/semigroup.hpp"
#include "semicross/wreath.hpp"

using namespace semicross;

namespace {

  enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

  struct Ambient {
    SemigroupPtr semigroup;
    WreathPtr    wreath;  // set for --semigroup wreath
  };

  // isn | wreath | cayley:<path>
  Ambient load_ambient(std::string const& kind, std::size_t n, std::size_t top) {
    if (kind == "isn") {
      return {from_isn(n), nullptr};
    }
    if (kind == "wreath") {
      auto w = build_wreath(from_isn(n), top == 0 ? n : top);
      return {w->semigroup(), w};
    }
    if (kind.starts_with("cayley:")) {
      auto const path = kind.substr(7);
      return {cayley_from_json(read_json_file(path), path), nullptr};
    }
    throw UsageError("unknown semigroup \"" + kind + "\"; use isn, wreath or cayley:<path>");
  }

  void emit(Json const& j, std::string const& out) {
    if (out.empty()) {
      std::cout << j.dump() << '\n';
    } else {
      write_json_file(out, j);
    }
  }

  std::vector<Point> parse_map(std::string const& text) {
    std::vector<Point> images;
    std::size_t        pos = 0;
    while (pos < text.size()) {
      if (text[pos] == ' ' || text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t used = 0;
      try {
        images.push_back(static_cast<Point>(std::stoul(text.substr(pos), &used)));
      } catch (std::exception const&) {
        throw ParseError("expected an image point or 0", pos);
      }
      pos += used;
    }
    return images;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite inverse semigroups, partial wreath products and their "
               "R- and L-cross-sections"};
  app.require_subcommand(1);

  std::size_t n   = 0;
  std::size_t top = 0;
  std::string kind = "isn";
  std::string relation = "R";
  std::string out;
  std::string in;
  std::size_t jobs = 1;
  std::uint64_t seed = AxiomCheckOptions{}.seed;

  auto add_semigroup_flags = [&](CLI::App* sub) {
    sub->add_option("--semigroup", kind, "isn, wreath (IS_n wr IS_n) or cayley:<path>");
    sub->add_option("--n", n, "rank of IS_n")->check(CLI::Range(0, 8));
    sub->add_option("--top", top, "top rank of the wreath (default --n)");
  };

  // multiply
  auto*                    multiply = app.add_subcommand("multiply", "product of elements, left to right");
  std::vector<std::string> elements;
  add_semigroup_flags(multiply);
  // Taken raw: CLI11 would otherwise read "[1 2]" as its own list syntax.
  multiply->allow_extras();
  multiply->footer("Elements follow the flags, e.g. multiply --n 2 \"(1 2)\" \"[1 2]\".");

  // decompose
  auto*       decompose = app.add_subcommand("decompose", "chain decomposition of an IS_n element");
  std::string element;
  std::string map;
  decompose->add_option("--n", n, "rank")->required();
  decompose->add_option("element", element, "element in notation");
  decompose->add_option("--map", map, "images of 1..n, 0 for undefined");

  // green
  auto* green = app.add_subcommand("green", "R- or L-classes as JSON");
  add_semigroup_flags(green);
  green->add_option("--relation", relation, "R or L");
  green->add_option("--out", out, "output path");

  // cross-sections
  auto* cs = app.add_subcommand("cross-sections", "build, enumerate, count or verify");
  cs->require_subcommand(1);
  std::string              partition;
  std::vector<std::string> inner;
  bool                     no_prune = false;
  auto*                    build = cs->add_subcommand("build", "standard construction from an ordered partition");
  auto*                    enumerate = cs->add_subcommand("enumerate", "all cross-sections by exhaustive search");
  auto*                    count = cs->add_subcommand("count", "brute force against the closed forms");
  auto*                    verify_cmd = cs->add_subcommand("verify", "check a cross-section JSON file");
  for (auto* sub : {build, enumerate, count, verify_cmd}) {
    add_semigroup_flags(sub);
    sub->add_option("--relation", relation, "R or L");
    sub->add_option("--out", out, "output path");
  }
  build->add_option("--partition", partition, "ordered partition, e.g. \"2<1|3\"")->required();
  build->add_option("--inner", inner, "inner ordered partition per block (wreath)");
  for (auto* sub : {enumerate, count}) {
    sub->add_option("--jobs", jobs, "search threads (0 = all cores)");
    sub->add_flag("--no-prune", no_prune, "disable projection pruning");
  }
  verify_cmd->add_option("--in", in, "cross-section JSON")->required();

  // paut
  auto*       paut = app.add_subcommand("paut", "iterated wreath power of IS_n");
  std::size_t k    = 1;
  paut->add_option("--n", n, "branching")->required();
  paut->add_option("--k", k, "levels")->required()->check(CLI::PositiveNumber);
  paut->add_option("--seed", seed, "seed for sampled associativity");
  auto* paut_info   = paut->add_subcommand("info", "element and idempotent counts");
  auto* paut_verify = paut->add_subcommand("verify-iso", "inverse-semigroup axioms");
  paut->require_subcommand(1);
  paut_info->fallthrough();
  paut_verify->fallthrough();

  // cayley
  auto* cayley = app.add_subcommand("cayley", "Cayley table import and export");
  cayley->require_subcommand(1);
  auto* cayley_export = cayley->add_subcommand("export", "write a semigroup's table");
  add_semigroup_flags(cayley_export);
  cayley_export->add_option("--out", out, "output path");
  auto* cayley_import = cayley->add_subcommand("import", "validate a table and summarize it");
  cayley_import->add_option("--in", in, "Cayley JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*multiply) {
      elements = multiply->remaining();
      if (elements.empty()) {
        throw UsageError("multiply needs at least one element");
      }
      auto const amb = load_ambient(kind, n, top);
      Index      acc = amb.semigroup->parse(elements.front());
      for (std::size_t i = 1; i < elements.size(); ++i) {
        acc = amb.semigroup->product(acc, amb.semigroup->parse(elements[i]));
      }
      std::cout << amb.semigroup->label(acc) << '\n';
      return kOk;
    }

    if (*decompose) {
      if (element.empty() == map.empty()) {
        throw UsageError("give either an element or --map");
      }
      auto const a = map.empty() ? parse_element(element, n)
                                 : PartialBijection::from_images(parse_map(map));
      if (a.rank() != n) {
        throw UsageError("--map lists " + std::to_string(a.rank()) + " images, expected "
                         + std::to_string(n));
      }
      std::cout << format_decomposition(chain_decomposition(a)) << '\n';
      return kOk;
    }

    if (*green) {
      auto const amb = load_ambient(kind, n, top);
      emit(green_to_json(*amb.semigroup,
                         green_classes(*amb.semigroup, relation_from_string(relation))),
           out);
      return kOk;
    }

    if (*cs) {
      auto const rel = relation_from_string(relation);
      auto const amb = load_ambient(kind, n, top);
      SearchConfig cfg;
      cfg.parallel_branching    = jobs != 1;
      cfg.jobs                  = jobs;
      cfg.prune_with_projection = !no_prune;
      if (amb.wreath && cfg.prune_with_projection) {
        cfg.projection = wreath_projection(*amb.wreath, rel);
      }

      if (*build) {
        CrossSection c;
        if (amb.wreath) {
          auto const p = OrderedPartition::parse(partition, amb.wreath->rank());
          if (inner.size() != p.number_of_blocks()) {
            throw UsageError("need one --inner partition per block ("
                             + std::to_string(p.number_of_blocks()) + ")");
          }
          std::vector<CrossSection> sections;
          for (auto const& q : inner) {
            sections.push_back(build_isn_r_cross_section(amb.wreath->inner_ptr(),
                                                         OrderedPartition::parse(q, n)));
          }
          c = build_wreath_r_cross_section(*amb.wreath, p, sections);
        } else if (kind == "isn") {
          c = build_isn_r_cross_section(amb.semigroup, OrderedPartition::parse(partition, n));
        } else {
          throw UsageError("build needs --semigroup isn or wreath");
        }
        if (rel == Relation::L) {
          c = invert_cross_section(c);
        }
        emit(cross_section_to_json(c), out);
        return kOk;
      }

      if (*enumerate) {
        auto const found = brute_force_cross_sections(amb.semigroup, rel, cfg);
        Json       list  = Json::array();
        for (auto const& c : found) {
          list.push_back(cross_section_to_json(c));
        }
        Json j;
        j["relation"]       = to_string(rel);
        j["ambient"]        = amb.semigroup->name();
        j["count"]          = found.size();
        j["cross_sections"] = std::move(list);
        emit(j, out);
        return kOk;
      }

      if (*count) {
        CountReport r;
        if (kind == "isn") {
          r = count_report_isn(n, rel, cfg);
        } else if (kind == "wreath" && (top == 0 || top == n)) {
          r = count_report_wreath(n, rel, cfg);
        } else {
          throw UsageError("count supports --semigroup isn or wreath (IS_n wr IS_n)");
        }
        emit(report_to_json(r), out);
        return r.all_isomorphic_to_standard ? kOk : kVerificationFailed;
      }

      if (*verify_cmd) {
        auto const c     = cross_section_from_json(read_json_file(in), amb.semigroup);
        auto const check = is_cross_section(*amb.semigroup, c.relation, c.members);
        Json       j;
        j["ok"] = check.ok;
        if (!check.ok) {
          j["witness"] = check.witness;
        }
        emit(j, out);
        return check.ok ? kOk : kVerificationFailed;
      }
    }

    if (*paut) {
      auto const s = iterated_wreath(n, k);
      if (*paut_info) {
        std::cout << "semigroup: " << s->name() << '\n'
                  << "elements: " << s->size() << '\n'
                  << "idempotents: " << s->idempotents().size() << '\n';
        return kOk;
      }
      if (*paut_verify) {
        AxiomCheckOptions opts;
        opts.seed           = seed;
        auto const report   = check_inverse_semigroup(*s, opts);
        std::cout << (report.ok ? "ok" : "FAILED: " + report.failure) << " ("
                  << report.associativity_triples << " associativity triples, "
                  << (report.associativity_exhaustive ? "exhaustive" : "sampled") << ")\n";
        return report.ok ? kOk : kVerificationFailed;
      }
    }

    if (*cayley_export) {
      emit(cayley_to_json(*load_ambient(kind, n, top).semigroup), out);
      return kOk;
    }
    if (*cayley_import) {
      auto const s = cayley_from_json(read_json_file(in), in);
      std::cout << "elements: " << s->size() << '\n'
                << "idempotents: " << s->idempotents().size() << '\n'
                << "unit: " << (s->unit() ? s->label(*s->unit()) : "none") << '\n'
                << "zero: " << (s->zero() ? s->label(*s->zero()) : "none") << '\n';
      return kOk;
    }
  } catch (PartialResultError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (ParseError const& e) {
    std::cerr << "parse error at offset " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (UsageError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (ResourceError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (VerificationError const& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}
