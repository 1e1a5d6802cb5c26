// Command-line front end: generate catalog instances, run axiom suites,
// build and verify globalizations, construct dual structures.
//
// Exit codes: 0 all checks pass, 1 axiom failure, 2 input/parse error,
// 3 internal invariant violation (a theorem-guaranteed construction failed
// its own verifier).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "halg/catalog.hpp"
#include "halg/io.hpp"

namespace {

using namespace halg;

constexpr int kExitPass = 0;
constexpr int kExitAxiomFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

struct SuiteResult {
  json reports = json::object();
  bool ok = true;

  void record(const std::string& name, const CheckReport& rep) {
    reports[name] = report_to_json(rep);
    ok = ok && rep.pass();
  }
};

void print_report(const std::string& name, const CheckReport& rep) {
  std::cout << name << (rep.pass() ? ": pass" : ": FAIL") << "\n";
  std::cout << rep.summary();
}

const Coalgebra& resolve_coalgebra(const Bundle& b, const std::string& name) {
  auto it = b.objects.find(name);
  if (it == b.objects.end()) {
    throw ParseError("bundle has no object named '" + name + "'");
  }
  if (const auto* c = std::get_if<Coalgebra>(&it->second)) return *c;
  if (const auto* h = std::get_if<HopfAlgebra>(&it->second)) return h->coalgebra();
  throw ParseError("object '" + name + "' is not a coalgebra");
}

std::vector<std::size_t> parse_subgroup(const GroupTable& g, const std::string& spec) {
  if (spec.empty() || spec == "e") return {g.identity};
  if (spec == "all" || spec == "G") {
    std::vector<std::size_t> out(g.order);
    for (std::size_t i = 0; i < g.order; ++i) out[i] = i;
    return out;
  }
  if (spec == "A3" && g.order == 6) {
    return {g.element_by_label("e"), g.element_by_label("(123)"),
            g.element_by_label("(132)")};
  }
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    std::string label =
        spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!label.empty()) out.push_back(g.element_by_label(label));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw ParseError("empty subgroup specification");
  return out;
}

int cmd_generate(const std::string& name, const std::string& group,
                 const std::string& group_file, const std::string& subgroup,
                 const std::string& field_name, const std::string& out_path) {
  FieldSpec f = parse_field_name(field_name);
  Bundle b;
  b.field = f;
  GroupTable g =
      group_file.empty() ? GroupTable::by_name(group) : load_group_file(group_file);
  HopfAlgebra h = group_algebra(g, f);
  if (name == "group-algebra") {
    b.objects.emplace("H", h);
  } else if (name == "subgroup-action") {
    b.objects.emplace("H", h);
    b.objects.emplace("C", ground_coalgebra(f));
    b.objects.emplace("action",
                      ActionObj{"C", "H", subgroup_partial_action_on_k(
                                              g, parse_subgroup(g, subgroup), f)});
  } else if (name == "subgroup-coaction") {
    b.objects.emplace("H", h);
    b.objects.emplace("C", ground_coalgebra(f));
    b.objects.emplace("coaction",
                      CoactionObj{"C", "H", subgroup_partial_coaction_on_k(
                                                g, parse_subgroup(g, subgroup), f)});
  } else if (name == "regular-action") {
    b.objects.emplace("H", h);
    b.objects.emplace("C", h.coalgebra());
    b.objects.emplace("action", ActionObj{"C", "H", regular_module_coalgebra(h)});
  } else if (name == "trivial-coaction") {
    b.objects.emplace("H", h);
    b.objects.emplace("C", h.coalgebra());
    b.objects.emplace("coaction",
                      CoactionObj{"C", "H", trivial_coaction(h.coalgebra(), h)});
  } else if (name == "adjoint-coaction") {
    b.objects.emplace("H", h);
    b.objects.emplace("C", h.coalgebra());
    b.objects.emplace("coaction", CoactionObj{"C", "H", adjoint_coaction(h)});
  } else if (name == "dual-basis-comodule") {
    b.objects.emplace("H", h);
    b.objects.emplace("C", dual_coalgebra_of(h));
    b.objects.emplace("coaction", CoactionObj{"C", "H", dual_basis_comodule(h)});
  } else {
    throw ParseError("unknown generator '" + name + "'");
  }
  if (out_path.empty()) {
    std::cout << canonical_dump(bundle_to_json(b));
  } else {
    write_bundle_file(b, out_path);
  }
  return kExitPass;
}

int cmd_check(const std::string& path, const std::string& suite, bool symmetric,
              bool as_json) {
  Bundle b = load_bundle_file(path);
  SuiteResult res;
  auto want = [&](const char* s) { return suite == s || suite == "all"; };

  for (const auto& [name, obj] : b.objects) {
    if (const auto* c = std::get_if<Coalgebra>(&obj)) {
      if (want("coalgebra")) res.record(name + ":coalgebra", check_coalgebra(*c));
    } else if (const auto* a = std::get_if<Algebra>(&obj)) {
      if (want("coalgebra")) res.record(name + ":algebra", check_algebra(*a));
    } else if (const auto* h = std::get_if<HopfAlgebra>(&obj)) {
      if (want("hopf")) {
        res.record(name + ":bialgebra", check_bialgebra(h->bialg));
        res.record(name + ":antipode", check_antipode_properties(*h));
      }
    } else if (const auto* act = std::get_if<ActionObj>(&obj)) {
      const Coalgebra& c = resolve_coalgebra(b, act->coalgebra);
      const HopfAlgebra& h2 = b.hopf(act->hopf);
      if (suite == "mc") {
        res.record(name + ":mc", check_module_coalgebra(c, h2, act->map));
      }
      if (want("pmc")) {
        res.record(name + ":pmc",
                   check_partial_module_coalgebra(c, h2, act->map, symmetric));
      }
    } else if (const auto* da = std::get_if<DualActionObj>(&obj)) {
      if (want("pma")) {
        res.record(name + ":pma",
                   check_partial_module_algebra(b.algebra(da->algebra),
                                                b.hopf(da->hopf), da->map, symmetric));
      }
    } else if (const auto* co = std::get_if<CoactionObj>(&obj)) {
      const Coalgebra& c = resolve_coalgebra(b, co->coalgebra);
      const HopfAlgebra& h2 = b.hopf(co->hopf);
      if (suite == "cc") {
        res.record(name + ":cc", check_comodule_coalgebra(c, h2, co->map));
      }
      if (want("pcc")) {
        res.record(name + ":pcc",
                   check_partial_comodule_coalgebra(c, h2, co->map, symmetric));
      }
    }
  }
  if (suite == "all" && b.has("theta") && b.has("pi") && b.has("D")) {
    const LinearMap& theta = b.linear_map("theta").map;
    const LinearMap& pi = b.linear_map("pi").map;
    if (b.has("action_global")) {
      const ActionObj& act = b.action("action");
      const ActionObj& actg = b.action("action_global");
      res.record("globalization",
                 verify_globalization_pmc(resolve_coalgebra(b, act.coalgebra),
                                          b.hopf(act.hopf), act.map,
                                          resolve_coalgebra(b, "D"), actg.map, theta,
                                          pi));
    } else if (b.has("coaction_global")) {
      const CoactionObj& co = b.coaction("coaction");
      const CoactionObj& cog = b.coaction("coaction_global");
      res.record("globalization",
                 verify_globalization_pcc(resolve_coalgebra(b, co.coalgebra),
                                          b.hopf(co.hopf), co.map,
                                          resolve_coalgebra(b, "D"), cog.map, theta,
                                          pi));
    }
  }
  if (res.reports.empty()) {
    throw ParseError("no object in the bundle matches suite '" + suite + "'");
  }
  if (as_json) {
    std::cout << canonical_dump(
        json{{"suite", suite}, {"pass", res.ok}, {"reports", res.reports}});
  } else {
    for (auto it = res.reports.begin(); it != res.reports.end(); ++it) {
      bool pass = true;
      for (const auto& e : it.value()) pass = pass && e.at("pass").get<bool>();
      std::cout << (pass ? "[ok]   " : "[FAIL] ") << it.key() << "\n";
      if (!pass) {
        for (const auto& e : it.value()) {
          if (!e.at("pass").get<bool>()) {
            std::cout << "       " << e.at("axiom").get<std::string>();
            if (e.contains("witness")) {
              std::cout << " at " << e.at("witness").at("index").get<std::string>();
            }
            std::cout << "\n";
          }
        }
      }
    }
  }
  return res.ok ? kExitPass : kExitAxiomFail;
}

int cmd_globalize(const std::string& path, const std::string& mode,
                  const std::string& out_path) {
  Bundle b = load_bundle_file(path);
  Bundle out;
  out.field = b.field;
  if (mode == "pmc") {
    const ActionObj& act = b.action("action");
    const Coalgebra& c = resolve_coalgebra(b, act.coalgebra);
    const HopfAlgebra& h = b.hopf(act.hopf);
    if (!check_partial_module_coalgebra(c, h, act.map, false).pass()) {
      std::cerr << "input is not a partial module coalgebra\n";
      return kExitAxiomFail;
    }
    GlobalizationPMC g = standard_globalization_pmc(c, h, act.map);
    out.objects.emplace("C", c);
    out.objects.emplace("H", h);
    out.objects.emplace("action", ActionObj{"C", "H", act.map});
    out.objects.emplace("D", g.D);
    out.objects.emplace("action_global", ActionObj{"D", "H", g.act_global});
    out.objects.emplace("theta", MapObj{"C", "D", g.theta});
    out.objects.emplace("pi", MapObj{"D", "D", g.pi});
    out.metadata["report"] = report_to_json(g.report);
    if (!g.report.pass()) {
      std::cerr << "internal invariant violation: standard globalization "
                   "failed verification\n"
                << g.report.summary();
      return kExitInternal;
    }
  } else if (mode == "pcc") {
    const CoactionObj& co = b.coaction("coaction");
    const Coalgebra& c = resolve_coalgebra(b, co.coalgebra);
    const HopfAlgebra& h = b.hopf(co.hopf);
    if (!check_partial_comodule_coalgebra(c, h, co.map, false).pass()) {
      std::cerr << "input is not a partial comodule coalgebra\n";
      return kExitAxiomFail;
    }
    GlobalizationPCC g = standard_globalization_pcc(c, h, co.map);
    out.objects.emplace("C", c);
    out.objects.emplace("H", h);
    out.objects.emplace("coaction", CoactionObj{"C", "H", co.map});
    out.objects.emplace("D", g.D);
    out.objects.emplace("coaction_global", CoactionObj{"D", "H", g.co_global});
    out.objects.emplace("theta", MapObj{"C", "D", g.theta});
    out.objects.emplace("pi", MapObj{"D", "D", g.pi});
    out.metadata["report"] = report_to_json(g.report);
    if (!g.report.pass()) {
      std::cerr << "internal invariant violation: standard globalization "
                   "failed verification\n"
                << g.report.summary();
      return kExitInternal;
    }
  } else {
    throw ParseError("unknown mode '" + mode + "'");
  }
  if (out_path.empty()) {
    std::cout << canonical_dump(bundle_to_json(out));
  } else {
    write_bundle_file(out, out_path);
  }
  return kExitPass;
}

int cmd_dualize(const std::string& path, const std::string& what,
                const std::string& out_path) {
  Bundle b = load_bundle_file(path);
  Bundle out;
  out.field = b.field;
  bool ok = true;
  if (what == "hopf") {
    const HopfAlgebra& h = b.hopf("H");
    HopfAlgebra hs = dual_hopf(h);
    CheckReport rep;
    rep.merge("bialgebra", check_bialgebra(hs.bialg));
    rep.merge("antipode", check_antipode_properties(hs));
    ok = rep.pass();
    print_report("dual hopf", rep);
    out.objects.emplace("H_star", hs);
    out.metadata["report"] = report_to_json(rep);
  } else if (what == "action") {
    const ActionObj& act = b.action("action");
    const Coalgebra& c = resolve_coalgebra(b, act.coalgebra);
    const HopfAlgebra& h = b.hopf(act.hopf);
    DualActionMap dact = dual_action_on_dual(c, h, act.map);
    CheckReport rep;
    rep.merge("pairing", check_compatibility_pairing(c, h, act.map, dact));
    rep.merge("pma", check_partial_module_algebra(dual_algebra(c), h, dact, false));
    ok = rep.pass();
    print_report("dual action", rep);
    out.objects.emplace("H", h);
    out.objects.emplace("C_star", dual_algebra(c));
    out.objects.emplace("dual_action", DualActionObj{"C_star", "H", dact});
    out.metadata["report"] = report_to_json(rep);
  } else if (what == "coaction") {
    const CoactionObj& co = b.coaction("coaction");
    const Coalgebra& c = resolve_coalgebra(b, co.coalgebra);
    const HopfAlgebra& h = b.hopf(co.hopf);
    CheckReport rep = check_four_way_equivalence(c, h, co.map);
    ok = rep.pass();
    print_report("four structures", rep);
    HopfAlgebra hs = dual_hopf(h);
    out.objects.emplace("H", h);
    out.objects.emplace("H_star", hs);
    out.objects.emplace("C", c);
    out.objects.emplace("C_star", dual_algebra(c));
    out.objects.emplace("action",
                        ActionObj{"C", "H_star", coaction_to_action(c, h, co.map)});
    DualActionMap dact = coaction_to_dual_action(c, h, co.map);
    out.objects.emplace("dual_action", DualActionObj{"C_star", "H_star", dact});
    // dual-basis reconstruction of the coaction on C*; rows are pairs (b,i)
    // of a C*-component and an H-component
    LinearMap rho(c.dim() * h.dim(), c.dim(), b.field);
    for (std::size_t a = 0; a < c.dim(); ++a) {
      for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t bb = 0; bb < c.dim(); ++bb) {
          rho.set(bb * h.dim() + i, a, dact.map.at(bb, i * c.dim() + a));
        }
      }
    }
    out.objects.emplace("rho", MapObj{"C_star", "C_star⊗H", rho});
    out.metadata["report"] = report_to_json(rep);
  } else if (what == "globalization") {
    const ActionObj& act = b.action("action");
    const Coalgebra& c = resolve_coalgebra(b, act.coalgebra);
    const HopfAlgebra& h = b.hopf(act.hopf);
    GlobalizationPMC g;
    g.D = resolve_coalgebra(b, "D");
    g.act_global = b.action("action_global").map;
    g.theta = b.linear_map("theta").map;
    g.pi = b.linear_map("pi").map;
    DualGlobalization dg = dual_globalization(c, h, act.map, g);
    CheckReport rep = dg.report;
    try {
      rep.merge("adjoint", adjoint_psi_check(c, h, act.map, g));
    } catch (const NotStandardForm&) {
      // non-standard triples have no adjoint comparison
    }
    ok = rep.pass();
    print_report("dual globalization", rep);
    out.objects.emplace("H", h);
    out.objects.emplace("C_star", dual_algebra(c));
    out.objects.emplace("D_star", dual_algebra(g.D));
    out.objects.emplace("phi", MapObj{"C_star", "D_star", dg.phi});
    out.metadata["report"] = report_to_json(rep);
    out.metadata["B_dim"] = dg.b_subalgebra.dim();
  } else {
    throw ParseError("unknown dualization '" + what + "'");
  }
  if (!out_path.empty()) write_bundle_file(out, out_path);
  return ok ? kExitPass : kExitAxiomFail;
}

int cmd_roundtrip(const std::string& path, const std::string& out_path) {
  Bundle b = load_bundle_file(path);
  std::string text = canonical_dump(bundle_to_json(b));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot write '" + out_path + "'");
    f << text;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant toolkit for Hopf-algebra partial "
               "(co)actions on coalgebras and their globalizations"};
  app.require_subcommand(1);

  std::string gen_name, gen_group = "Z2", gen_group_file, gen_subgroup,
              gen_field = "Q", gen_out;
  auto* gen = app.add_subcommand("generate", "emit a catalog instance as a bundle");
  gen->add_option("name", gen_name,
                  "group-algebra | subgroup-action | subgroup-coaction | "
                  "regular-action | trivial-coaction | adjoint-coaction | "
                  "dual-basis-comodule")
      ->required();
  gen->add_option("--group", gen_group, "Z1..Z12, Klein, S3");
  gen->add_option("--group-file", gen_group_file,
                  "JSON Cayley table {order, table, labels}");
  gen->add_option("--subgroup", gen_subgroup,
                  "comma-separated element labels, or e/A3/all");
  gen->add_option("--field", gen_field, "Q or F<p>");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  std::string chk_file, chk_suite = "all";
  bool chk_symmetric = false, chk_json = false;
  auto* chk = app.add_subcommand("check", "run axiom suites on a bundle");
  chk->add_option("file", chk_file)->required();
  chk->add_option("--suite", chk_suite,
                  "coalgebra | hopf | mc | pmc | pma | cc | pcc | all");
  chk->add_flag("--symmetric", chk_symmetric, "also check the symmetric axioms");
  chk->add_flag("--json", chk_json, "machine-readable report");

  std::string glob_file, glob_mode = "pmc", glob_out;
  auto* glob = app.add_subcommand("globalize", "build the standard globalization");
  glob->add_option("file", glob_file)->required();
  glob->add_option("--mode", glob_mode, "pmc | pcc");
  glob->add_option("--out", glob_out, "output file (default stdout)");

  std::string dual_file, dual_what = "action", dual_out;
  auto* dual = app.add_subcommand("dualize", "construct and cross-check duals");
  dual->add_option("file", dual_file)->required();
  dual->add_option("--what", dual_what, "action | coaction | hopf | globalization");
  dual->add_option("--out", dual_out, "output file (optional)");

  std::string rt_file, rt_out;
  auto* rt = app.add_subcommand("roundtrip", "parse and re-emit canonically");
  rt->add_option("file", rt_file)->required();
  rt->add_option("--out", rt_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (gen->parsed()) {
      return cmd_generate(gen_name, gen_group, gen_group_file, gen_subgroup,
                          gen_field, gen_out);
    }
    if (chk->parsed()) return cmd_check(chk_file, chk_suite, chk_symmetric, chk_json);
    if (glob->parsed()) return cmd_globalize(glob_file, glob_mode, glob_out);
    if (dual->parsed()) return cmd_dualize(dual_file, dual_what, dual_out);
    if (rt->parsed()) return cmd_roundtrip(rt_file, rt_out);
  } catch (const InternalInvariant& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NotPartialModuleCoalgebra& e) {
    std::cerr << e.what() << "\n";
    return kExitAxiomFail;
  } catch (const NotPartialComoduleCoalgebra& e) {
    std::cerr << e.what() << "\n";
    return kExitAxiomFail;
  } catch (const Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
