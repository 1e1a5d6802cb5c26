// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds. All checks are exact; tolerances are zero throughout. Criterion 10
// drives the installed CLI binary (path passed with --cli).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "halg/catalog.hpp"
#include "halg/globalization.hpp"
#include "halg/io.hpp"

using namespace halg;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && first_error_.empty()) first_error_ = detail;
    ok_ = ok_ && ok;
  }

  void finish(long budget_ms = 0) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    if (budget_ms > 0 && ms >= budget_ms) {
      require(false, "runtime " + std::to_string(ms) + " ms exceeds budget " +
                         std::to_string(budget_ms) + " ms");
    }
    std::cout << "criterion " << number_ << " [" << (ok_ ? "PASS" : "FAIL")
              << "] " << title_ << " (" << ms << " ms)";
    if (!ok_) std::cout << " -- " << first_error_;
    std::cout << "\n";
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::string first_error_;
  std::chrono::steady_clock::time_point start_;
};

bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& n) {
  auto in = [&](std::size_t x) {
    for (auto y : n) {
      if (y == x) return true;
    }
    return false;
  };
  if (!in(g.identity)) return false;
  for (auto a : n) {
    if (!in(g.inverse[a])) return false;
    for (auto b : n) {
      if (!in(g.table[a][b])) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> subsets_with_identity(const GroupTable& g) {
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < g.order; ++i) {
    if (i != g.identity) others.push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
    std::vector<std::size_t> n{g.identity};
    for (std::size_t b = 0; b < others.size(); ++b) {
      if (mask & (std::size_t{1} << b)) n.push_back(others[b]);
    }
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<std::vector<std::size_t>> subgroups_of(const GroupTable& g) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& n : subsets_with_identity(g)) {
    if (is_subgroup(g, n)) out.push_back(n);
  }
  return out;
}

struct PmcInstance {
  std::string name;
  Coalgebra c;
  HopfAlgebra h;
  ActionMap act;
};

struct PccInstance {
  std::string name;
  Coalgebra c;
  HopfAlgebra h;
  CoactionMap co;
};

std::vector<PmcInstance> globalizable_action_catalog() {
  FieldSpec q = FieldSpec::rationals();
  Coalgebra k = ground_coalgebra(q);
  std::vector<PmcInstance> out;
  GroupTable s3 = GroupTable::symmetric3();
  HopfAlgebra hs3 = group_algebra(s3, q);
  for (const auto& n : subgroups_of(s3)) {
    out.push_back({"S3/N" + std::to_string(n.size()), k, hs3,
                   subgroup_partial_action_on_k(s3, n, q)});
  }
  GroupTable z4 = GroupTable::cyclic(4);
  HopfAlgebra hz4 = group_algebra(z4, q);
  for (const auto& n : subgroups_of(z4)) {
    out.push_back({"Z4/N" + std::to_string(n.size()), k, hz4,
                   subgroup_partial_action_on_k(z4, n, q)});
  }
  return out;
}

std::vector<PccInstance> pcc_catalog(bool for_globalization) {
  FieldSpec q = FieldSpec::rationals();
  Coalgebra k = ground_coalgebra(q);
  std::vector<PccInstance> out;
  for (const char* gname : {"Z2", "Z3", "Z4", "Klein", "S3"}) {
    GroupTable g = GroupTable::by_name(gname);
    HopfAlgebra h = group_algebra(g, q);
    for (const auto& n : subgroups_of(g)) {
      out.push_back({std::string(gname) + "/N" + std::to_string(n.size()), k, h,
                     subgroup_partial_coaction_on_k(g, n, q)});
    }
  }
  for (const char* gname : {"Z2", "Z3"}) {
    GroupTable g = GroupTable::by_name(gname);
    HopfAlgebra h = group_algebra(g, q);
    out.push_back({std::string("trivial/") + gname, h.coalgebra(), h,
                   trivial_coaction(h.coalgebra(), h)});
    out.push_back({std::string("adjoint/") + gname, h.coalgebra(), h,
                   adjoint_coaction(h)});
    out.push_back({std::string("dual-basis/") + gname, dual_coalgebra_of(h), h,
                   dual_basis_comodule(h)});
  }
  {
    GroupTable g = GroupTable::klein();
    HopfAlgebra h = group_algebra(g, q);
    out.push_back({"dual-basis/Klein", dual_coalgebra_of(h), h,
                   dual_basis_comodule(h)});
  }
  if (!for_globalization) {
    GroupTable g = GroupTable::symmetric3();
    HopfAlgebra h = group_algebra(g, q);
    out.push_back({"adjoint/S3", h.coalgebra(), h, adjoint_coaction(h)});
    out.push_back({"dual-basis/S3", dual_coalgebra_of(h), h,
                   dual_basis_comodule(h)});
  }
  return out;
}

int run_cmd(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_1() {
  Criterion crit(1, "group-algebra catalog passes all Hopf checks over Q and F5");
  for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (const char* gname : {"Z2", "Z3", "Z4", "Klein", "S3"}) {
      GroupTable g = GroupTable::by_name(gname);
      HopfAlgebra h = group_algebra(g, f);
      crit.require(check_bialgebra(h.bialg).pass(),
                   std::string(gname) + "/" + f.str() + " bialgebra");
      crit.require(check_antipode_properties(h).pass(),
                   std::string(gname) + "/" + f.str() + " antipode properties");
      bool perm = true;
      for (std::size_t j = 0; j < g.order; ++j) {
        for (std::size_t i = 0; i < g.order; ++i) {
          bool expect_one = (i == g.inverse[j]);
          perm = perm && (h.antipode.at(i, j).is_one() == expect_one) &&
                 (expect_one || h.antipode.at(i, j).is_zero());
        }
      }
      crit.require(perm, std::string(gname) + "/" + f.str() +
                             " antipode is not the inversion permutation");
    }
  }
  crit.finish(1000);
}

void criterion_2() {
  Criterion crit(2, "partial actions of kS3 on k detect exactly the 6 subgroups");
  FieldSpec q = FieldSpec::rationals();
  GroupTable s3 = GroupTable::symmetric3();
  HopfAlgebra h = group_algebra(s3, q);
  Coalgebra k = ground_coalgebra(q);
  std::size_t passing = 0, total = 0;
  for (const auto& n : subsets_with_identity(s3)) {
    ++total;
    bool verdict =
        check_partial_module_coalgebra(k, h,
                                       subgroup_partial_action_on_k(s3, n, q), false)
            .pass();
    crit.require(verdict == is_subgroup(s3, n),
                 "verdict mismatch on a subset of size " + std::to_string(n.size()));
    if (verdict) ++passing;
  }
  crit.require(total == 32, "expected 32 subsets");
  crit.require(passing == 6, "expected 6 passing subsets, found " +
                                 std::to_string(passing));
  crit.finish(5000);
}

std::vector<std::pair<PmcInstance, GlobalizationPMC>> g_globalizations;

void criterion_3() {
  Criterion crit(3, "every partial-action catalog instance globalizes cleanly");
  for (const PmcInstance& inst : globalizable_action_catalog()) {
    GlobalizationPMC g = standard_globalization_pmc(inst.c, inst.h, inst.act);
    bool zero_failures = true;
    for (const auto& e : g.report.entries()) zero_failures = zero_failures && e.pass;
    crit.require(zero_failures, inst.name + " verifier reported failures");
    g_globalizations.emplace_back(inst, std::move(g));
  }
  crit.finish(5000);
}

void criterion_4() {
  Criterion crit(4, "dual globalizations pass and mutant verdicts agree");
  for (const auto& [inst, g] : g_globalizations) {
    DualGlobalization dg = dual_globalization(inst.c, inst.h, inst.act, g);
    crit.require(dg.report.pass(), inst.name + " dual suite failed");
  }
  std::mt19937_64 rng(424242);
  std::size_t agree = 0, both_fail = 0;
  const std::size_t kMutants = 100;
  for (std::size_t t = 0; t < kMutants; ++t) {
    const auto& [inst, g] = g_globalizations[t % g_globalizations.size()];
    GlobalizationPMC m = g;
    ActionMap act = inst.act;
    std::uniform_int_distribution<int> which(0, 4);
    auto mutate = [&](LinearMap& target) {
      std::uniform_int_distribution<std::size_t> ri(0, target.rows() - 1);
      std::uniform_int_distribution<std::size_t> ci(0, target.cols() - 1);
      std::size_t i = ri(rng), j = ci(rng);
      target.set(i, j, target.at(i, j) + Scalar::one(target.field()));
    };
    switch (which(rng)) {
      case 0: mutate(m.theta); break;
      case 1: mutate(m.pi); break;
      case 2: mutate(m.act_global.map); break;
      case 3: mutate(m.D.delta); break;
      default: mutate(act.map); break;
    }
    bool primal = verify_globalization_pmc(inst.c, inst.h, act, m.D, m.act_global,
                                           m.theta, m.pi)
                      .pass();
    bool dual = dual_globalization(inst.c, inst.h, act, m).report.pass();
    if (primal == dual) ++agree;
    if (!primal && !dual) ++both_fail;
  }
  crit.require(agree == kMutants, "verdicts disagree on " +
                                      std::to_string(kMutants - agree) + " mutants");
  crit.require(both_fail == kMutants,
               "a single-entry mutant unexpectedly passed both suites");
  crit.finish();
}

void criterion_5() {
  Criterion crit(5, "the adjoint identification matches on standard globalizations");
  for (const auto& [inst, g] : g_globalizations) {
    crit.require(adjoint_psi_check(inst.c, inst.h, inst.act, g).pass(),
                 inst.name + " adjoint comparison failed");
  }
  crit.finish();
}

void criterion_6() {
  Criterion crit(6, "averaged coactions on k over Z4: subgroup criterion and guard");
  FieldSpec q = FieldSpec::rationals();
  GroupTable z4 = GroupTable::cyclic(4);
  HopfAlgebra h = group_algebra(z4, q);
  Coalgebra k = ground_coalgebra(q);
  std::size_t passing = 0;
  for (const auto& n : subsets_with_identity(z4)) {
    CoactionMap co = subgroup_partial_coaction_on_k(z4, n, q);
    bool verdict = check_partial_comodule_coalgebra(k, h, co, false).pass();
    crit.require(verdict == is_subgroup(z4, n),
                 "coaction verdict mismatch at |N|=" + std::to_string(n.size()));
    if (verdict) {
      ++passing;
      CheckReport nab = check_nabla_identities(k, h, co);
      const CheckEntry* idem = nab.find("nabla-idem");
      crit.require(idem != nullptr && idem->pass,
                   "nabla idempotency failed on a passing instance");
    }
  }
  crit.require(passing == 3, "expected 3 passing subsets of Z4");
  FieldSpec f2 = FieldSpec::prime(2);
  for (const auto& n : subsets_with_identity(z4)) {
    bool threw = false;
    try {
      subgroup_partial_coaction_on_k(z4, n, f2);
    } catch (const CharacteristicDividesOrder&) {
      threw = true;
    }
    crit.require(threw == (n.size() % 2 == 0),
                 "characteristic guard wrong at |N|=" + std::to_string(n.size()));
  }
  crit.finish();
}

void criterion_7() {
  Criterion crit(7, "four partial structures are equivalent with exact round trips");
  for (const PccInstance& inst : pcc_catalog(false)) {
    if (inst.h.dim() > 6) continue;
    crit.require(check_four_way_equivalence(inst.c, inst.h, inst.co).pass(),
                 inst.name + " four-way suite failed");
    ActionMap act = coaction_to_action(inst.c, inst.h, inst.co);
    CoactionMap back = action_to_coaction(inst.c, act, inst.h);
    crit.require(back.map == inst.co.map, inst.name + " coaction round trip");
  }
  // action-side round trip on module coalgebras over the dual Hopf algebra
  FieldSpec q = FieldSpec::rationals();
  for (const char* gname : {"Z2", "Z3", "Klein"}) {
    HopfAlgebra h = group_algebra(GroupTable::by_name(gname), q);
    HopfAlgebra hs = dual_hopf(h);
    ActionMap reg = regular_module_coalgebra(hs);
    CoactionMap lifted = action_to_coaction(hs.coalgebra(), reg, h);
    crit.require(coaction_to_action(hs.coalgebra(), h, lifted).map == reg.map,
                 std::string(gname) + " action round trip");
  }
  crit.finish();
}

void criterion_8() {
  Criterion crit(8, "partial coactions globalize with rational consistency");
  for (const PccInstance& inst : pcc_catalog(true)) {
    GlobalizationPCC g = standard_globalization_pcc(inst.c, inst.h, inst.co);
    crit.require(g.report.pass(), inst.name + " coaction globalization failed");
    crit.require(cross_check_pcc_to_pmc(inst.c, inst.h, inst.co, g).pass(),
                 inst.name + " action cross-check failed");
  }
  crit.finish(10000);
}

void criterion_9() {
  Criterion crit(9, "globality criteria and checker variants agree everywhere");
  FieldSpec q = FieldSpec::rationals();
  Coalgebra k = ground_coalgebra(q);
  std::size_t fuzzed = 0;
  std::vector<FieldSpec> fields = {FieldSpec::rationals(), FieldSpec::prime(5),
                                   FieldSpec::prime(7)};
  std::vector<GroupTable> groups;
  for (std::size_t n = 2; n <= 8; ++n) groups.push_back(GroupTable::cyclic(n));
  groups.push_back(GroupTable::klein());
  groups.push_back(GroupTable::symmetric3());
  for (const GroupTable& g : groups) {
    for (const FieldSpec& f : fields) {
      HopfAlgebra h = group_algebra(g, f);
      for (const auto& n : subgroups_of(g)) {
        ActionMap act = subgroup_partial_action_on_k(g, n, f);
        Coalgebra kk = ground_coalgebra(f);
        GlobalityResult r = is_global_action(kk, h, act);  // internal consistency
        bool direct = check_module_coalgebra(kk, h, act).pass();
        crit.require(r.global == direct, "criterion/direct mismatch");
        ++fuzzed;
      }
    }
  }
  for (const GroupTable& g : groups) {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
      if (g.order > 6) continue;
      HopfAlgebra h = group_algebra(g, f);
      ActionMap reg = regular_module_coalgebra(h);
      GlobalityResult r = is_global_action(h.coalgebra(), h, reg);
      crit.require(r.global, "regular action must be global");
      ++fuzzed;
    }
  }
  crit.require(fuzzed >= 100,
               "only " + std::to_string(fuzzed) + " fuzzed instances");

  // counital vs non-counital partial checkers
  GroupTable s3 = GroupTable::symmetric3();
  HopfAlgebra hs3 = group_algebra(s3, q);
  for (const auto& n : subsets_with_identity(s3)) {
    ActionMap act = subgroup_partial_action_on_k(s3, n, q);
    bool counital = check_partial_module_coalgebra(k, hs3, act, false).pass();
    bool general = check_pmc_noncounital(1, k.delta, hs3, act, false).pass();
    crit.require(counital == general, "PMC/PMC' verdict mismatch on S3 subset");
  }
  {
    GroupTable z4 = GroupTable::cyclic(4);
    HopfAlgebra h = group_algebra(z4, q);
    ActionMap reg = regular_module_coalgebra(h);
    bool counital =
        check_partial_module_coalgebra(h.coalgebra(), h, reg, false).pass();
    bool general =
        check_pmc_noncounital(4, h.coalgebra().delta, h, reg, false).pass();
    crit.require(counital && general, "regular instance must pass both");
    ActionMap broken = reg;
    broken.map.set(0, 1, broken.map.at(0, 1) + Scalar::one(q));
    bool c2 = check_partial_module_coalgebra(h.coalgebra(), h, broken, false).pass();
    bool g2 = check_pmc_noncounital(4, h.coalgebra().delta, h, broken, false).pass();
    crit.require(c2 == g2 && !c2, "perturbed instance must fail both");
  }

  // coaction globality criterion against the direct comodule check
  for (const PccInstance& inst : pcc_catalog(false)) {
    GlobalityResult r = is_global_coaction(inst.c, inst.h, inst.co);
    bool direct = check_comodule_coalgebra(inst.c, inst.h, inst.co).pass();
    crit.require(r.global == direct, inst.name + " coaction criterion mismatch");
  }
  crit.finish();
}

void criterion_10(const std::string& cli) {
  Criterion crit(10, "CLI pipeline is green and byte-deterministic");
  if (cli.empty()) {
    crit.require(false, "no --cli path given");
    crit.finish();
    return;
  }
  std::string dir = "acceptance_cli_tmp";
  run_cmd("rm -rf " + dir);
  run_cmd("mkdir -p " + dir);
  auto path = [&](const std::string& f) { return dir + "/" + f; };
  for (int round = 0; round < 2; ++round) {
    std::string sfx = round == 0 ? "a" : "b";
    crit.require(run_cmd(cli + " generate subgroup-action --group S3 --subgroup A3"
                               " --field Q --out " +
                         path("gen_" + sfx + ".json")) == 0,
                 "generate exit code");
    crit.require(run_cmd(cli + " check " + path("gen_" + sfx + ".json") +
                         " --suite pmc > /dev/null") == 0,
                 "check pmc exit code");
    crit.require(run_cmd(cli + " globalize " + path("gen_" + sfx + ".json") +
                         " --mode pmc --out " + path("glob_" + sfx + ".json")) == 0,
                 "globalize exit code");
    crit.require(run_cmd(cli + " check " + path("glob_" + sfx + ".json") +
                         " --suite all > /dev/null") == 0,
                 "check all exit code");
    crit.require(run_cmd(cli + " dualize " + path("glob_" + sfx + ".json") +
                         " --what globalization --out " +
                         path("dual_" + sfx + ".json") + " > /dev/null") == 0,
                 "dualize exit code");
  }
  for (const char* stem : {"gen", "glob", "dual"}) {
    std::string a = slurp(path(std::string(stem) + "_a.json"));
    std::string b = slurp(path(std::string(stem) + "_b.json"));
    crit.require(!a.empty() && a == b,
                 std::string(stem) + " output differs between runs");
  }
  // canonical serialization is idempotent
  crit.require(run_cmd(cli + " roundtrip " + path("glob_a.json") + " --out " +
                       path("rt1.json")) == 0,
               "roundtrip exit code");
  crit.require(run_cmd(cli + " roundtrip " + path("rt1.json") + " --out " +
                       path("rt2.json")) == 0,
               "roundtrip exit code");
  crit.require(slurp(path("rt1.json")) == slurp(path("rt2.json")),
               "roundtrip is not idempotent");
  // negative paths of the exit-code contract
  crit.require(run_cmd(cli + " generate subgroup-coaction --group Z2 --subgroup all"
                             " --field F2 --out " +
                       path("bad.json") + " 2> /dev/null") == 2,
               "characteristic guard must exit 2");
  crit.require(run_cmd(cli + " generate subgroup-action --group S3 --subgroup"
                             " \"e,(12),(13)\" --field Q --out " +
                       path("nonsub.json")) == 0,
               "non-subgroup generation still writes a bundle");
  crit.require(run_cmd(cli + " check " + path("nonsub.json") +
                       " --suite pmc > /dev/null") == 1,
               "axiom failure must exit 1");
  {
    // declare a wrong shape for one matrix: entries no longer match rows*cols
    std::string text = slurp(path("gen_a.json"));
    auto pos = text.find("\"rows\": 1");
    std::ofstream out(path("mangled.json"));
    out << text.substr(0, pos) << "\"rows\": 2" << text.substr(pos + 9);
  }
  crit.require(run_cmd(cli + " check " + path("mangled.json") +
                       " --suite all 2> /dev/null") == 2,
               "malformed matrix shape must exit 2");
  run_cmd("rm -rf " + dir);
  crit.finish();
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
