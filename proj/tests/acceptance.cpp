// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "pbw/cli.hpp"
#include "pbw/errors.hpp"
#include "pbw/oracle.hpp"
#include "support.hpp"

using namespace pbw;
using namespace pbw::testing;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("pbwdef-acceptance-" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path p = workdir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pbwdef");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json solve_json(const std::string& preset, bool fix_linear_zero = false) {
  const std::string path = write_file(preset + ".json", emit_preset(preset, false));
  std::vector<std::string> args{"--json", "solve", path};
  if (fix_linear_zero) args.push_back("--fix-linear-zero");
  CliResult r = cli(args);
  if (r.code != 0) throw std::runtime_error("solve " + preset + " exited " + std::to_string(r.code) + ": " + r.err);
  return json::parse(r.out);
}

std::vector<std::string> values_of(const json& family, std::size_t relation) {
  std::vector<std::string> out;
  for (const auto& k : family) out.push_back(k["values"][relation].get<std::string>());
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return "{" + s + "}";
}

template <typename T>
std::string join_nums(const std::vector<T>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

Kappa zero_kappa(const Problem& p) {
  return Kappa::zero(p.algebra.relation_count(), p.algebra.vdim, p.hopf.dim());
}

std::string kappa_summary(const Problem& p, const Kappa& k) {
  std::string s;
  for (int a = 0; a < k.relations(); ++a) {
    if (is_zero_matrix(k.constant_of(a)) && is_zero_matrix(k.linear_of(a))) continue;
    s += (s.empty() ? "" : "; ") + std::string("r") + std::to_string(a + 1) + "->" +
         format_kappa_value(p.hopf, p.algebra, k.constant_of(a), k.linear_of(a));
  }
  return s.empty() ? "0" : s;
}

// ------------------------------------------------------------ criteria

Outcome sweedler_family() {
  Outcome o;
  json f = solve_json("sweedler");
  o.require(f["family_dim"] == 4, "family_dim " + f["family_dim"].dump());
  const auto vals = values_of(f["family_basis"], 0);
  o.require(vals == std::vector<std::string>{"x", "gx", "u⊗x", "u⊗gx"}, "basis " + join(vals));
  o.detail = o.pass ? "family_dim=4 basis=" + join(vals) : o.detail;
  return o;
}

Outcome h8_family() {
  Outcome o;
  json f = solve_json("h8");
  o.require(f["invariant_blocks"][0]["linear"] == 0, "invariant kappa^L block nonzero");
  o.require(f["family_dim"] == 5, "family_dim " + f["family_dim"].dump());
  const auto vals = values_of(f["family_basis"], 0);
  o.require(vals == std::vector<std::string>{"1", "x + y", "xy", "z + xyz", "xz + yz"}, "basis " + join(vals));
  o.detail = o.pass ? "kappa^L block 0, family_dim=5 basis=" + join(vals) : o.detail;
  return o;
}

Outcome ha1_pipeline() {
  Outcome o;
  json f = solve_json("ha1");
  o.require(f["overlap_dim"] == 4, "dim D'_3 " + f["overlap_dim"].dump());
  std::vector<int> cblocks, lblocks;
  for (const auto& b : f["invariant_blocks"]) {
    cblocks.push_back(b["constant"].get<int>());
    lblocks.push_back(b["linear"].get<int>());
  }
  o.require(cblocks == std::vector<int>{10, 0, 0, 0, 0, 2}, "kappa^C blocks " + join_nums(cblocks));
  o.require(lblocks == std::vector<int>(6, 0), "kappa^L blocks " + join_nums(lblocks));
  o.require(f["family_dim"] == 2, "family_dim " + f["family_dim"].dump());
  std::vector<std::string> tu = values_of(f["family_basis"], 0);
  o.require(tu == std::vector<std::string>{"1", "x^2"}, "kappa^C(r_tu) basis " + join(tu));
  for (std::size_t a = 1; a < 6; ++a)
    for (const auto& v : values_of(f["family_basis"], a)) o.require(v == "0", "nonzero value on relation " + std::to_string(a + 1));
  if (o.pass) o.detail = "dim D'_3=4, blocks " + join_nums(cblocks) + ", kappa^L=0, family_dim=2 on r_tu " + join(tu);
  return o;
}

Outcome taft_families(std::vector<double>& times) {
  Outcome o;
  std::string summary;
  for (int n = 3; n <= 5; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string name = "taft-" + std::to_string(n);
    json f = solve_json(name);
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    Problem p = preset_problem(name);
    const std::string top = p.hopf.labels()[(n - 1) + n];
    const std::vector<std::string> expected{top, "u⊗" + top};
    const auto vals = values_of(f["family_basis"], 0);
    const bool ok = f["family_dim"] == 2 && vals == expected;
    o.require(ok, name + ": family_dim " + f["family_dim"].dump() + " basis " + join(vals) + ", expected 2 with " +
                      join(expected));
    if (ok) summary += name + " ok; ";
  }
  if (o.pass) o.detail = summary;
  return o;
}

Outcome cyclic_center() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const std::string name = "cbh-cyclic-" + std::to_string(n);
    json f = solve_json(name, true);
    o.require(f["family_dim"] == n, name + " family_dim " + f["family_dim"].dump());
    Problem p = preset_problem(name);
    for (const auto& kj : f["family_basis"]) {
      Vec c = p.hopf.zero();
      for (const auto& e : kj["constant"]) c[e[1].get<int>()] += Scalar::parse(e[2].get<std::string>(), p.hopf.field_order());
      for (int g = 0; g < p.hopf.dim(); ++g)
        o.require(p.hopf.multiply(p.hopf.basis(g), c) == p.hopf.multiply(c, p.hopf.basis(g)),
                  name + " member " + p.hopf.format(c) + " not central");
    }
  }
  if (o.pass) o.detail = "family_dim=n for n=2,3,4, every member central";
  return o;
}

std::vector<long long> expected_table(const Problem& p, int degree) {
  std::vector<long long> out;
  long long acc = 0;
  for (int m = 0; m <= degree; ++m) out.push_back(acc += graded_dim(p.algebra, m) * p.hopf.dim());
  return out;
}

// Invalid maps: single basis entries of kappa^C or kappa^L that break
// invariance, then sums of two such entries; for the overlap case also
// invariant constants that break (c).
std::vector<Kappa> invalid_catalog(const Problem& p, std::size_t want) {
  std::vector<Kappa> out;
  const int d = p.hopf.dim(), nrel = p.algebra.relation_count(), vdim = p.algebra.vdim;
  if (p.name == "ha1") {
    for (int s : {1, 2, -3}) {
      Kappa k = zero_kappa(p);
      k.constant(5, p.hopf.find_label("xz")) = Scalar(s);
      k.constant(5, p.hopf.find_label("xyz")) = Scalar(-s);
      out.push_back(k);
    }
  }
  std::vector<Kappa> singles;
  for (int a = 0; a < nrel; ++a) {
    for (int i = 0; i < d; ++i) {
      Kappa k = zero_kappa(p);
      k.constant(a, i) = Scalar(1);
      singles.push_back(k);
    }
    for (int j = 0; j < vdim * d; ++j) {
      Kappa k = zero_kappa(p);
      k.linear(a, j) = Scalar(1);
      singles.push_back(k);
    }
  }
  auto breaks_invariance = [&](const Kappa& k) {
    return check_invariance(p.hopf, p.algebra, k).at('a').verdict == Verdict::fail;
  };
  for (const auto& k : singles)
    if (out.size() < want && breaks_invariance(k)) out.push_back(k);
  for (std::size_t i = 0; i < singles.size() && out.size() < want; ++i)
    for (std::size_t j = i + 1; j < singles.size() && out.size() < want; ++j) {
      Kappa k = singles[i] + Scalar(2) * singles[j];
      if (breaks_invariance(k)) out.push_back(k);
    }
  return out;
}

Outcome checker_oracle_consistency() {
  Outcome o;
  int members = 0, invalid = 0, samples = 0;
  for (const auto& name : preset_names()) {
    Problem p = preset_problem(name, true);
    const std::string path = write_file(name + "-k.json", emit_preset(name, true));
    CliResult chk = cli({"check", path});
    o.require(chk.code == 0, name + ": check rejects the sample kappa (exit " + std::to_string(chk.code) + ")");
    CliResult orc = cli({"--json", "oracle", path, "--degree", "3", "--buffer", "2"});
    json r = json::parse(orc.out);
    const auto expected = expected_table(p, 3);
    const bool consistent = r["verdict"] == "CONSISTENT" && r["computed_dims"].get<std::vector<long long>>() == expected &&
                            r["expected_dims"].get<std::vector<long long>>() == expected;
    o.require(consistent, name + ": oracle " + r["verdict"].get<std::string>() + " computed " +
                              join_nums(r["computed_dims"].get<std::vector<long long>>()) + " expected " +
                              join_nums(expected));
    members += chk.code == 0 && consistent;

    const auto bad = invalid_catalog(p, 5);
    o.require(bad.size() >= 5, name + ": fewer than 5 invalid maps");
    for (const auto& k : bad) {
      const bool check_fails = !check_pbw(p.hopf, p.algebra, k).passed();
      auto rep = filtered_dims(p.hopf, p.algebra, k, 3, 2);
      const bool falsified = rep.verdict == OracleVerdict::falsified && *rep.falsified_at <= 3;
      o.require(check_fails && falsified, name + ": invalid kappa " + kappa_summary(p, k) +
                                              (check_fails ? "" : " passes check") +
                                              (falsified ? "" : " not falsified"));
      invalid += check_fails && falsified;
    }
  }
  std::mt19937 rng(2024);
  const auto names = preset_names();
  std::map<std::string, std::pair<Problem, KappaFamily>> families;
  for (int trial = 0; trial < 100; ++trial) {
    const std::string& name = names[trial % names.size()];
    auto it = families.find(name);
    if (it == families.end()) {
      Problem p = preset_problem(name);
      KappaFamily f = solve_kappa(p.hopf, p.algebra);
      it = families.emplace(name, std::make_pair(std::move(p), std::move(f))).first;
    }
    const Problem& p = it->second.first;
    Kappa k = zero_kappa(p);
    for (const auto& b : it->second.second.family_basis) k = k + small_scalar(rng) * b;
    const bool passes = check_pbw(p.hopf, p.algebra, k).passed();
    o.require(passes, name + ": family sample fails the checker");
    if (!passes) continue;
    auto rep = filtered_dims(p.hopf, p.algebra, k, 3, 2);
    o.require(rep.verdict == OracleVerdict::consistent, name + ": oracle falsifies a checker-passing sample");
    samples += rep.verdict == OracleVerdict::consistent;
  }
  const std::string counts = std::to_string(members) + "/" + std::to_string(names.size()) + " samples consistent, " +
                             std::to_string(invalid) + " invalid maps rejected by both, " + std::to_string(samples) +
                             "/100 family samples never falsified";
  o.detail = o.pass ? counts : counts + "; " + o.detail;
  return o;
}

// Adds one to a random existing structure constant or sets an absent one.
std::string mutate(const std::string& text, std::mt19937& rng, std::string& what) {
  json j = json::parse(text);
  const int order = j["field"]["cyclotomic_order"].get<int>();
  const int d = static_cast<int>(j["hopf"]["basis"].size());
  static const std::vector<std::pair<std::string, int>> blocks{
      {"product", 3}, {"coproduct", 3}, {"counit", 1}, {"antipode", 2}, {"unit", 1}};
  const auto& [block, arity] = blocks[std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng)];
  json& arr = j["hopf"][block];
  std::uniform_int_distribution<int> idx(0, d - 1);
  if (std::bernoulli_distribution(0.5)(rng) && !arr.empty()) {
    json& e = arr[std::uniform_int_distribution<std::size_t>(0, arr.size() - 1)(rng)];
    Scalar c = Scalar::parse(e[arity].get<std::string>(), order) + Scalar(1);
    what = block + " entry " + e.dump() + " -> " + c.to_string();
    e[arity] = c.to_string();
  } else {
    json e = json::array();
    for (int k = 0; k < arity; ++k) e.push_back(idx(rng));
    e.push_back("1");
    what = block + " added " + e.dump();
    arr.push_back(e);
  }
  return j.dump();
}

Outcome axiom_suites() {
  Outcome o;
  static const std::vector<std::string> axioms{
      "associativity",   "unit",          "coassociativity", "counit",         "bialgebra_coproduct",
      "bialgebra_counit", "coproduct_of_unit", "counit_of_unit", "antipode_left", "antipode_right",
      "antipode_bijective", "module_unit", "module_associativity", "relation_stability"};
  std::mt19937 rng(77);
  int caught = 0, total = 0;
  for (const auto& name : preset_names()) {
    const std::string text = emit_preset(name, false);
    CliResult clean = cli({"validate", write_file(name + ".json", text)});
    o.require(clean.code == 0, name + ": validate exits " + std::to_string(clean.code));
    for (int m = 0; m < 20; ++m) {
      std::string what;
      const std::string mutated = mutate(text, rng, what);
      CliResult r = cli({"validate", write_file(name + "-mut.json", mutated)});
      bool named = false;
      for (const auto& a : axioms) {
        const std::string text = r.out + r.err;
        named |= text.find("  " + a + " ") != std::string::npos || text.find("  " + a + ":") != std::string::npos;
      }
      ++total;
      const bool ok = r.code != 0 && named;
      caught += ok;
      o.require(ok, name + ": mutation " + what + " gave exit " + std::to_string(r.code) +
                        (named ? "" : " without naming an axiom"));
    }
  }
  o.detail = o.pass ? "all presets validate; " + std::to_string(caught) + "/" + std::to_string(total) +
                          " mutations rejected with the axiom named"
                    : o.detail;
  return o;
}

Outcome zero_deformation() {
  Outcome o;
  std::vector<Problem> problems;
  for (const auto& name : preset_names()) problems.push_back(preset_problem(name));
  std::mt19937 rng(99);
  for (int i = 0; i < 25; ++i) problems.push_back(random_stable_problem(rng));
  int ok = 0;
  for (const auto& p : problems) {
    if (!validate_action(p.hopf, p.algebra).passed) {
      o.require(false, p.name + ": random algebra failed validation");
      continue;
    }
    const bool check = check_pbw(p.hopf, p.algebra, zero_kappa(p)).passed();
    const auto rep = pbw_probe(p.hopf, p.algebra, zero_kappa(p));
    const bool consistent = rep.verdict == OracleVerdict::consistent && rep.computed_dims == rep.expected_dims;
    o.require(check && consistent, p.name + (check ? "" : ": check fails") + (consistent ? "" : ": oracle not consistent"));
    ok += check && consistent;
  }
  o.detail = o.pass ? std::to_string(ok) + "/" + std::to_string(problems.size()) +
                          " problems pass the checker and the oracle at kappa = 0"
                    : o.detail;
  return o;
}

Outcome linear_algebra() {
  Outcome o;
  std::mt19937 rng(5150);
  int idempotent = 0, residual = 0, formula = 0;
  for (int inst = 0; inst < 500; ++inst) {
    std::uniform_int_distribution<int> dim(1, 30);
    const Index rows = dim(rng), cols = dim(rng);
    const int order = inst % 5 == 0 ? 5 : 1;
    const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    auto entry = [&] {
      Scalar c = small_scalar(rng);
      if (order > 1) c = c + small_scalar(rng) * Scalar::root_of_unity(order, 1);
      return c;
    };
    // Low-rank products keep kernels and intersections nontrivial.
    const Index r = std::uniform_int_distribution<Index>(1, std::min(rows, cols))(rng);
    Mat a = zero_matrix<Scalar>(rows, r), b = zero_matrix<Scalar>(r, cols);
    std::bernoulli_distribution keep(density);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < r; ++j)
        if (keep(rng)) a(i, j) = entry();
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < cols; ++j)
        if (keep(rng)) b(i, j) = entry();
    Mat m = multiply<Scalar>(a, b);

    auto once = rref<Scalar>(m);
    auto twice = rref<Scalar>(once.reduced);
    const bool idem = twice.reduced == once.reduced && twice.rank == once.rank;
    idempotent += idem;
    o.require(idem, "rref not idempotent at instance " + std::to_string(inst));

    Subspace<Scalar> ker = kernel<Scalar>(m);
    bool res = ker.dim() + once.rank == cols;
    for (Index k = 0; k < ker.dim() && res; ++k) res = is_zero_matrix(multiply<Scalar>(m, ker.basis_vector(k)));
    residual += res;
    o.require(res, "kernel residual nonzero at instance " + std::to_string(inst));

    Subspace<Scalar> u = Subspace<Scalar>::span(m);
    Mat m2 = zero_matrix<Scalar>(dim(rng), cols);
    for (Index i = 0; i < m2.rows(); ++i)
      for (Index j = 0; j < cols; ++j)
        if (keep(rng)) m2(i, j) = entry();
    if (m2.rows() > 1 && u.dim() > 0) m2.row(0) = u.basis().row(0);
    Subspace<Scalar> w = Subspace<Scalar>::span(m2);
    Subspace<Scalar> cap = intersect(u, w);
    bool form = cap.dim() + sum(u, w).dim() == u.dim() + w.dim();
    for (Index k = 0; k < cap.dim() && form; ++k)
      form = membership(cap.basis_vector(k), u).has_value() && membership(cap.basis_vector(k), w).has_value();
    formula += form;
    o.require(form, "intersection formula broken at instance " + std::to_string(inst));
  }
  o.detail = o.pass ? "500 instances: rref idempotent " + std::to_string(idempotent) + ", kernel residual zero " +
                          std::to_string(residual) + ", dim(U∩W)+dim(U+W)=dimU+dimW " + std::to_string(formula)
                    : o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double limit;  // seconds; 0 for none
    std::function<Outcome()> run;
  };
  std::vector<double> taft_times;
  std::vector<Criterion> criteria{
      {1, "sweedler family", 1.0, sweedler_family},
      {2, "h8 family", 5.0, h8_family},
      {3, "ha1 pipeline", 60.0, ha1_pipeline},
      {4, "taft families n=3,4,5", 0, [&] { return taft_families(taft_times); }},
      {5, "cyclic group center", 1.0, cyclic_center},
      {6, "checker/oracle consistency", 0, checker_oracle_consistency},
      {7, "axiom property suites", 0, axiom_suites},
      {8, "zero deformation", 0, zero_deformation},
      {9, "linear algebra properties", 0, linear_algebra},
  };
  bool all = true;
  for (auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.pass = false;
      o.detail += "; runtime " + std::to_string(secs) + " s over the " + std::to_string(c.limit) + " s limit";
    }
    for (std::size_t i = 0; i < taft_times.size() && c.id == 4; ++i)
      if (taft_times[i] >= 5.0) {
        o.pass = false;
        o.detail += "; taft-" + std::to_string(i + 3) + " took " + std::to_string(taft_times[i]) + " s";
      }
    all &= o.pass;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ") [" << t.str() << " s]: "
              << o.detail << std::endl;
  }
  fs::remove_all(workdir());
  return all ? 0 : 1;
}
