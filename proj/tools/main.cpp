#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ortholat/census.hpp"
#include "ortholat/error.hpp"
#include "ortholat/fuzzy.hpp"
#include "ortholat/implication.hpp"
#include "ortholat/io.hpp"
#include "ortholat/negation.hpp"
#include "ortholat/ortho.hpp"
#include "ortholat/shapes.hpp"

using nlohmann::json;
using namespace ortholat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitPosetOnly = 2;
constexpr int kExitParse = 64;
constexpr int kExitSchema = 65;

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::parse_error: return kExitParse;
    case errc::schema_error:
    case errc::unknown_label:
    case errc::duplicate_label:
    case errc::unknown_name: return kExitSchema;
    default: return kExitInvalid;
  }
}

struct CheckResult {
  int exit_code = kExitOk;
  json report;
};

CheckResult run_check(const StructureDocument& doc) {
  CheckResult res;
  res.report["poset"] = false;
  res.report["lattice"] = false;
  Poset p;
  try {
    p = doc.to_poset();
  } catch (const error& e) {
    res.report["error"] = e.what();
    res.exit_code = e.code() == errc::unknown_label || e.code() == errc::duplicate_label
                        ? kExitSchema
                        : kExitInvalid;
    return res;
  }
  res.report["poset"] = true;
  auto check = p.lattice_check();
  if (!check.is_lattice) {
    res.report["lattice"] = false;
    res.report["witness"] =
        json::array({p.label(check.witness_a), p.label(check.witness_b)});
    res.report["missing"] = check.missing_join ? "join" : "meet";
    res.exit_code = kExitPosetOnly;
    return res;
  }
  Lattice lat = Lattice::from_poset(p);
  auto axioms = verify_axioms(lat);
  res.report["lattice"] = true;
  res.report["bounded"] = lat.bounded();
  res.report["axioms"] = axioms.all_ok;
  if (!axioms.all_ok) res.exit_code = kExitInvalid;
  return res;
}

void print_check_text(const json& r) {
  if (r.contains("error")) {
    std::cout << "invalid: " << r["error"].get<std::string>() << "\n";
    return;
  }
  if (!r["lattice"].get<bool>()) {
    std::cout << "poset: yes, lattice: no";
    if (r.contains("witness"))
      std::cout << " (pair {" << r["witness"][0].get<std::string>() << ","
                << r["witness"][1].get<std::string>() << "} lacks a "
                << r["missing"].get<std::string>() << ")";
    std::cout << "\n";
    return;
  }
  std::cout << "lattice: yes, bounded: " << (r["bounded"].get<bool>() ? "yes" : "no") << "\n";
}

json classify_lattice(const Lattice& lat, const UnaryMap* neg) {
  json out;
  out["lattice"] = true;
  out["bounded"] = lat.bounded();
  auto mod = is_modular(lat);
  auto dist = is_distributive(lat);
  out["modular"] = mod.modular;
  out["distributive"] = dist.distributive;
  json witnesses = json::object();
  if (!mod.modular)
    witnesses["modular"] = json::array(
        {lat.label(mod.witness[0]), lat.label(mod.witness[1]), lat.label(mod.witness[2])});
  if (!dist.distributive)
    witnesses["distributive"] = json::array(
        {lat.label(dist.witness[0]), lat.label(dist.witness[1]), lat.label(dist.witness[2])});
  out["witnesses"] = witnesses;

  auto comp = complement_class(lat);
  out["complementation"] = complement_kind_name(comp.kind);
  auto orthos = find_orthocomplementations(lat);
  out["orthocomplemented"] = !orthos.empty();
  out["boolean"] = dist.distributive && comp.kind != ComplementKind::non_complemented;

  if (neg) {
    auto cls = classify_negation(lat, *neg);
    json flags = json::array();
    if (cls.subminimal) flags.push_back("subminimal");
    if (cls.minimal) flags.push_back("minimal");
    if (cls.intuitionistic) flags.push_back("intuitionistic");
    if (cls.fuzzy) flags.push_back("fuzzy");
    if (cls.de_morgan) flags.push_back("de-morgan");
    if (cls.kleene) flags.push_back("kleene");
    if (cls.ortho) flags.push_back("ortho");
    if (cls.orthomodular) flags.push_back("orthomodular");
    out["negation"] = flags;

    std::string logic = "none";
    if (cls.minimal) logic = "logic";
    if (cls.fuzzy) logic = "fuzzy";
    if (cls.intuitionistic) logic = "intuitionistic";
    if (cls.de_morgan) logic = "de-morgan";
    if (cls.kleene) logic = "kleene";
    if (cls.ortho) logic = "ortho";
    if (cls.ortho && out["boolean"].get<bool>()) logic = "boolean";
    out["logic"] = logic;

    if (cls.ortho) {
      auto flags2 = classify_ortho(lat, *neg);
      out["orthomodular"] = flags2.orthomodular;
      out["modular-ortho"] = flags2.modular_ortho;
    }
  }
  return out;
}

void print_classify_text(const json& r) {
  std::cout << "lattice: " << (r["lattice"].get<bool>() ? "yes" : "no")
            << ", bounded: " << (r["bounded"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "modular: " << (r["modular"].get<bool>() ? "yes" : "no")
            << ", distributive: " << (r["distributive"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "complementation: " << r["complementation"].get<std::string>() << "\n";
  std::cout << "orthocomplemented: " << (r["orthocomplemented"].get<bool>() ? "yes" : "no")
            << ", boolean: " << (r["boolean"].get<bool>() ? "yes" : "no") << "\n";
  if (r.contains("negation")) {
    std::cout << "negation:";
    for (const auto& f : r["negation"]) std::cout << " " << f.get<std::string>();
    std::cout << "\nlogic: " << r["logic"].get<std::string>() << "\n";
  }
}

LogicStructure logic_from_document(const StructureDocument& doc) {
  Poset p = doc.to_poset();
  Lattice lat = Lattice::from_poset(p);
  UnaryMap neg = doc.negation_map(p);
  Implication imp;
  if (!doc.implication_table.empty()) {
    const int n = lat.size();
    if (static_cast<int>(doc.implication_table.size()) != n)
      raise(errc::schema_error, "implication table must have one row per element");
    imp.n = n;
    imp.source = "table";
    imp.table.assign(static_cast<std::size_t>(n * n), -1);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        imp.table[static_cast<std::size_t>(r * n + c)] = lat.index_of(
            doc.implication_table[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
  } else {
    std::string kind = doc.implication_kind.empty() ? "classical" : doc.implication_kind;
    imp = build_implication(lat, neg, impl_kind_by_name(kind));
  }
  return make_logic("document", lat, neg, imp);
}

int cmd_table(const std::string& builtin, const std::string& path, const std::string& kind_name,
              bool diff_classical, bool as_json) {
  if (builtin.empty() && path.empty())
    raise(errc::schema_error, "table needs a document or --builtin");
  LogicStructure logic;
  if (!builtin.empty()) {
    logic = builtin_logic(builtin_logic_by_name(builtin));
  } else {
    logic = logic_from_document(load_document(path));
  }
  Implication imp = logic.implication;
  if (!kind_name.empty())
    imp = build_implication(logic.lattice, logic.negation, impl_kind_by_name(kind_name));

  std::vector<std::pair<int, int>> marks;
  if (diff_classical) marks = diff_against_classical(logic.lattice, logic.negation, imp);
  const auto* mark_ptr = diff_classical ? &marks : nullptr;
  if (as_json)
    std::cout << render_table_json(logic.lattice, imp, mark_ptr) << "\n";
  else
    std::cout << render_table_text(logic.lattice, imp, mark_ptr);
  return kExitOk;
}

int cmd_enumerate(int n, const std::string& filter, const std::string& out_dir, bool large,
                  bool as_json) {
  if (n == 8 && !large) {
    std::cerr << "n=8 enumerates 222 classes; pass --large to opt in\n";
    return kExitInvalid;
  }
  auto classes = enumerate_lattices(n);
  std::vector<const CanonicalLattice*> kept;
  for (const auto& c : classes) {
    bool keep = true;
    if (filter == "modular")
      keep = is_modular(c.lattice).modular;
    else if (filter == "distributive")
      keep = is_distributive(c.lattice).distributive;
    else if (filter == "complemented")
      keep = complement_class(c.lattice).kind != ComplementKind::non_complemented;
    else if (filter == "orthocomplemented")
      keep = !find_orthocomplementations(c.lattice).empty();
    else if (!filter.empty() && filter != "lattice")
      raise(errc::unknown_name, "filter '" + filter + "'");
    if (keep) kept.push_back(&c);
  }

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    int idx = 0;
    for (const auto* c : kept) {
      char name[64];
      std::snprintf(name, sizeof name, "lattice_n%d_%03d.json", n, idx++);
      std::ofstream out(std::filesystem::path(out_dir) / name);
      out << write_poset_document(c->lattice.poset()) << "\n";
    }
  }
  if (as_json) {
    json out;
    out["n"] = n;
    out["classes"] = kept.size();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n=" << n << ": " << kept.size() << " classes"
              << (filter.empty() || filter == "lattice" ? "" : " (" + filter + ")") << "\n";
  }
  return kExitOk;
}

json hypotheses_json(const std::vector<HypothesisCheck>& checks) {
  json out = json::array();
  for (const auto& h : checks) {
    json e;
    e["name"] = h.name;
    e["holds"] = h.holds;
    if (!h.holds) e["witness"] = h.witness;
    out.push_back(e);
  }
  return out;
}

std::vector<Rat> default_grid() {
  return {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
}

FuzzyStructure half_point_structure(FuzzyFamily fam) {
  std::vector<std::string> u{"p"};
  std::vector<MembershipFn> fns{
      MembershipFn::constant("0", u, 0),
      MembershipFn::constant("m", u, Rat(1, 2)),
      MembershipFn::constant("1", u, 1),
  };
  return family_structure(fam, fns, GradeNegation{GradeNegationFamily::standard});
}

int cmd_fuzzy_verify(const std::string& theorem, bool as_json) {
  json out;
  out["theorem"] = theorem;
  const auto grid = default_grid();

  if (theorem == "1.24" || theorem == "bounds") {
    for (FuzzyFamily fam :
         {FuzzyFamily::min_max, FuzzyFamily::product_prob_sum, FuzzyFamily::lukasiewicz}) {
      auto rep = verify_minmax_boundary(family_tables(fam), grid);
      json f;
      f["hypotheses"] = hypotheses_json(rep.hypotheses);
      f["hypotheses-hold"] = rep.hypotheses_hold;
      f["bounds-hold"] = rep.bounds_hold;
      f["consistent"] = rep.consistent;
      out[fuzzy_family_name(fam)] = f;
    }
  } else if (theorem == "1.25" || theorem == "idempotency") {
    for (FuzzyFamily fam :
         {FuzzyFamily::min_max, FuzzyFamily::product_prob_sum, FuzzyFamily::lukasiewicz}) {
      auto rep = verify_idempotency_theorem(family_tables(fam), grid);
      json f;
      f["hypotheses"] = hypotheses_json(rep.hypotheses);
      f["hypotheses-hold"] = rep.hypotheses_hold;
      f["idempotent"] = rep.idempotent;
      f["consistent"] = rep.consistent;
      out[fuzzy_family_name(fam)] = f;
    }
    auto oracle = idempotency_exhaustive_oracle({Rat(0), Rat(1, 2), Rat(1)});
    out["oracle"] = {{"pairs-checked", oracle.pairs_checked},
                     {"pairs-satisfying", oracle.pairs_satisfying},
                     {"all-idempotent", oracle.all_idempotent}};
  } else if (theorem == "1.26" || theorem == "minmax") {
    for (FuzzyFamily fam :
         {FuzzyFamily::min_max, FuzzyFamily::product_prob_sum, FuzzyFamily::lukasiewicz}) {
      auto rep = verify_minmax_theorem(family_tables(fam), grid);
      json f;
      f["hypotheses"] = hypotheses_json(rep.hypotheses);
      f["hypotheses-hold"] = rep.hypotheses_hold;
      f["equals-minmax"] = rep.equals_minmax;
      f["consistent"] = rep.consistent;
      out[fuzzy_family_name(fam)] = f;
    }
    auto oracle = minmax_uniqueness_oracle({Rat(0), Rat(1, 2), Rat(1)});
    out["oracle"] = {{"join-candidates", oracle.join_candidates},
                     {"join-survivors", oracle.join_survivors},
                     {"join-survivor-is-max", oracle.join_survivor_is_max},
                     {"meet-candidates", oracle.meet_candidates},
                     {"meet-survivors", oracle.meet_survivors},
                     {"meet-survivor-is-min", oracle.meet_survivor_is_min}};
  } else if (theorem == "1.28" || theorem == "negation") {
    auto run = [&](const char* name, const FuzzyStructure& s) {
      auto rep = verify_negation_idempotency(s);
      json f;
      f["fixed-point"] = rep.fixed_point_found;
      if (rep.fixed_point_found) {
        f["fn"] = rep.fn_name;
        f["point"] = rep.point;
        f["grade"] = rat_str(rep.grade);
      }
      f["excluded-middle"] = rep.excluded_middle;
      f["non-contradiction"] = rep.non_contradiction;
      f["join-idempotent"] = rep.join_idempotent;
      f["meet-idempotent"] = rep.meet_idempotent;
      f["consistent"] = rep.consistent;
      out[name] = f;
    };
    run("lukasiewicz", half_point_structure(FuzzyFamily::lukasiewicz));
    run("minmax", half_point_structure(FuzzyFamily::min_max));
    run("crisp", crisp_logic({"a", "b"}));
  } else {
    raise(errc::unknown_name, "theorem '" + theorem + "'");
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "harness " << theorem << "\n";
    for (const auto& [key, value] : out.items()) {
      if (key == "theorem") continue;
      std::cout << "  " << key << ":";
      if (value.is_object())
        for (const auto& [k2, v2] : value.items()) {
          if (v2.is_boolean()) std::cout << " " << k2 << "=" << (v2.get<bool>() ? "yes" : "no");
          if (v2.is_number()) std::cout << " " << k2 << "=" << v2.dump();
        }
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int cmd_fuzzy_induce(const std::string& path, bool as_json) {
  StructureDocument doc = load_document(path);
  if (!doc.has_functions) raise(errc::schema_error, "document carries no functions");

  NegationSpec neg;
  if (doc.grade_negation)
    neg = *doc.grade_negation;
  else if (!doc.negation.empty())
    neg = doc.negation;
  else
    neg = GradeNegation{};

  auto logic = induced_logic(doc.functions, neg);
  json out;
  out["lattice"] = true;
  out["elements"] = json::array();
  for (int i = 0; i < logic.lattice.size(); ++i)
    out["elements"].push_back(logic.lattice.label(i));
  out["modular"] = logic.modular;
  out["distributive"] = logic.distributive;
  out["complementation"] = complement_kind_name(logic.complements.kind);
  out["boolean"] = logic.boolean_lattice;
  out["orthocomplemented"] = logic.orthocomplemented;
  out["excluded-middle"] = logic.excluded_middle;
  out["non-contradiction"] = logic.non_contradiction;
  out["idempotent"] = logic.idempotent;
  auto pw = check_pointwise_consistency(logic.structure);
  out["pointwise-evaluated"] = std::holds_alternative<PointwiseTables>(pw);
  if (const auto* col = std::get_if<PointwiseCollision>(&pw)) {
    out["collision"] = {{"op", col->in_join ? "join" : "meet"},
                        {"pair", json::array({col->second_fn_a, col->second_fn_b})},
                        {"points", json::array({col->first_point, col->second_point})},
                        {"inputs", json::array({rat_str(col->input_a), rat_str(col->input_b)})},
                        {"outputs", json::array({rat_str(col->first_output),
                                                 rat_str(col->second_output)})}};
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "induced lattice on " << logic.lattice.size() << " functions\n"
              << "modular: " << (logic.modular ? "yes" : "no")
              << ", distributive: " << (logic.distributive ? "yes" : "no")
              << ", boolean: " << (logic.boolean_lattice ? "yes" : "no") << "\n"
              << "orthocomplemented: " << (logic.orthocomplemented ? "yes" : "no") << "\n"
              << "excluded middle: " << (logic.excluded_middle ? "yes" : "no")
              << ", non-contradiction: " << (logic.non_contradiction ? "yes" : "no")
              << ", idempotent: " << (logic.idempotent ? "yes" : "no") << "\n"
              << "pointwise evaluated: "
              << (std::holds_alternative<PointwiseTables>(pw) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice, negation, implication, and fuzzy subset logic workbench"};
  app.require_subcommand(1);

  std::string path, builtin, kind, filter, out_dir, theorem;
  bool as_json = false, diff_classical = false, large = false;
  int n = 6;

  auto* check = app.add_subcommand("check", "validate a structure document");
  check->add_option("file", path)->required();
  check->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "full lattice/negation/logic classification");
  classify->add_option("file", path);
  classify->add_option("--builtin", builtin, "classify a builtin logic instead of a file");
  classify->add_flag("--json", as_json);

  auto* table = app.add_subcommand("table", "render an implication table");
  table->add_option("file", path);
  table->add_option("--builtin", builtin, "one of the named logics");
  table->add_option("--kind", kind, "formula kind (classical, sasaki, ...)");
  table->add_flag("--diff-classical", diff_classical, "mark cells differing from ¬x∨y");
  table->add_flag("--json", as_json);

  auto* dot = app.add_subcommand("dot", "emit a Hasse diagram in DOT form");
  dot->add_option("file", path)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate lattice isomorphism classes");
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--filter", filter,
                        "lattice|modular|distributive|complemented|orthocomplemented");
  enumerate->add_option("--out", out_dir, "write one JSON document per class");
  enumerate->add_flag("--large", large, "allow n=8");
  enumerate->add_flag("--json", as_json);

  auto* fuzzy = app.add_subcommand("fuzzy", "membership-function tooling");
  fuzzy->require_subcommand(1);
  auto* verify = fuzzy->add_subcommand("verify", "run a verification harness");
  verify
      ->add_option("--theorem", theorem,
                   "1.24|bounds, 1.25|idempotency, 1.26|minmax, 1.28|negation")
      ->required();
  verify->add_flag("--json", as_json);
  auto* induce = fuzzy->add_subcommand("induce", "order-first logic construction");
  induce->add_option("--in", path)->required();
  induce->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      auto res = run_check(load_document(path));
      if (as_json)
        std::cout << res.report.dump(2) << "\n";
      else
        print_check_text(res.report);
      return res.exit_code;
    }
    if (classify->parsed()) {
      if (builtin.empty() && path.empty())
        raise(errc::schema_error, "classify needs a document or --builtin");
      json report;
      if (!builtin.empty()) {
        LogicStructure logic = builtin_logic(builtin_logic_by_name(builtin));
        report = classify_lattice(logic.lattice, &logic.negation);
        report["contracts"] = {{"weak-entailment", logic.verdict.weak_entailment},
                               {"strong-entailment", logic.verdict.strong_entailment},
                               {"weak-modus-ponens", logic.verdict.weak_mp},
                               {"strong-modus-ponens", logic.verdict.strong_mp}};
      } else {
        StructureDocument doc = load_document(path);
        Poset p = doc.to_poset();
        auto latcheck = p.lattice_check();
        if (!latcheck.is_lattice) {
          std::cout << "poset only; classification needs a lattice\n";
          return kExitPosetOnly;
        }
        Lattice lat = Lattice::from_poset(p);
        if (!doc.negation.empty()) {
          UnaryMap neg = doc.negation_map(p);
          report = classify_lattice(lat, &neg);
        } else {
          report = classify_lattice(lat, nullptr);
        }
      }
      if (as_json)
        std::cout << report.dump(2) << "\n";
      else
        print_classify_text(report);
      return kExitOk;
    }
    if (table->parsed()) return cmd_table(builtin, path, kind, diff_classical, as_json);
    if (dot->parsed()) {
      StructureDocument doc = load_document(path);
      std::cout << dot_from_poset(doc.to_poset());
      return kExitOk;
    }
    if (enumerate->parsed()) return cmd_enumerate(n, filter, out_dir, large, as_json);
    if (verify->parsed()) return cmd_fuzzy_verify(theorem, as_json);
    if (induce->parsed()) return cmd_fuzzy_induce(path, as_json);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
