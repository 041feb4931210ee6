#include "pbw/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <json.hpp>

#include "pbw/errors.hpp"
#include "pbw/oracle.hpp"

namespace pbw {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- writing

bool is_flat(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& e) { return !e.is_array() && !e.is_object(); });
}

void write_json(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + json(it.key()).dump() + ": ";
      write_json(it.value(), out, indent + 1);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (is_flat(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      write_json(j[i], out, indent + 1);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

std::string render(const json& j) {
  std::string out;
  write_json(j, out, 0);
  return out + "\n";
}

json sparse_json(const Vec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) a.push_back(json::array({i, v[i].to_string()}));
  return a;
}

json matrix_json(const Mat& m) {
  json a = json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) a.push_back(json::array({i, j, m(i, j).to_string()}));
  return a;
}

json kappa_json(const Kappa& k, int vdim, int d) {
  json j;
  j["rows"] = k.relations();
  j["constant"] = matrix_json(k.constant);
  json lin = json::array();
  for (Index a = 0; a < k.linear.rows(); ++a)
    for (int v = 0; v < vdim; ++v)
      for (int h = 0; h < d; ++h) {
        const Scalar& c = k.linear(a, v * d + h);
        if (!c.is_zero()) lin.push_back(json::array({a, v, h, c.to_string()}));
      }
  j["linear"] = lin;
  return j;
}

// ---------------------------------------------------------------- reading

struct Reader {
  int order;

  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
  }

  static const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
    return *it;
  }

  static const json& array(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
  }

  static long long integer(const json& j, const std::string& where, long long lo, long long hi) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    const long long v = j.get<long long>();
    if (v < lo || v >= hi)
      fail(where, "index " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
    return v;
  }

  Scalar scalar(const json& j, const std::string& where) const {
    if (!j.is_string()) fail(where, "scalars are written as strings");
    try {
      return Scalar::parse(j.get<std::string>(), order);
    } catch (const std::exception& e) {
      fail(where, "bad scalar literal \"" + j.get<std::string>() + "\": " + e.what());
    }
  }

  // Tuples [i_1, ..., i_n, "scalar"] with each index bounded.
  template <typename F>
  void tuples(const json& j, const std::string& where, const std::vector<long long>& bounds, F&& sink) const {
    array(j, where);
    for (std::size_t t = 0; t < j.size(); ++t) {
      const std::string at = where + "[" + std::to_string(t) + "]";
      const json& e = j[t];
      if (!e.is_array() || e.size() != bounds.size() + 1)
        fail(at, "expected " + std::to_string(bounds.size()) + " indices and a scalar");
      std::vector<long long> idx;
      for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(integer(e[k], at, 0, bounds[k]));
      sink(idx, scalar(e[bounds.size()], at));
    }
  }

  Vec sparse(const json& j, const std::string& where, Index n) const {
    Vec v = zero_vector<Scalar>(n);
    tuples(j, where, {n}, [&](const auto& i, Scalar c) { v[i[0]] += c; });
    return v;
  }

  static std::vector<std::string> labels(const json& j, const std::string& where) {
    array(j, where);
    std::vector<std::string> out;
    for (const auto& e : j) {
      if (!e.is_string()) fail(where, "labels must be strings");
      out.push_back(e.get<std::string>());
    }
    if (out.empty()) fail(where, "needs at least one label");
    return out;
  }
};

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string witness_labels(const std::vector<int>& w, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int k = w[i];
    s += (i ? ", " : "") + (k >= 0 && k < static_cast<int>(labels.size()) ? labels[k] : std::to_string(k));
  }
  return s;
}

}  // namespace

std::string emit_problem(const Problem& p) {
  const HopfAlgebra& h = p.hopf;
  const ModuleAlgebra& b = p.algebra;
  const int d = h.dim();
  json j;
  j["format"] = kProblemFormat;
  j["name"] = p.name;
  j["field"] = {{"cyclotomic_order", h.field_order()}};

  json hj;
  hj["basis"] = h.labels();
  hj["unit"] = sparse_json(h.unit());
  json prod = json::array(), coprod = json::array(), counit = json::array(), anti = json::array();
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Vec v = zero_vector<Scalar>(d);
      for (const auto& [k, c] : h.product(x, y)) v[k] += c;
      for (int k = 0; k < d; ++k)
        if (!v[k].is_zero()) prod.push_back(json::array({x, y, k, v[k].to_string()}));
    }
  for (int x = 0; x < d; ++x) {
    Mat m = h.comultiply(h.basis(x));
    for (int l = 0; l < d; ++l)
      for (int r = 0; r < d; ++r)
        if (!m(l, r).is_zero()) coprod.push_back(json::array({x, l, r, m(l, r).to_string()}));
    if (!h.counit(x).is_zero()) counit.push_back(json::array({x, h.counit(x).to_string()}));
    for (int y = 0; y < d; ++y)
      if (!h.antipode_matrix()(y, x).is_zero())
        anti.push_back(json::array({x, y, h.antipode_matrix()(y, x).to_string()}));
  }
  hj["product"] = prod;
  hj["coproduct"] = coprod;
  hj["counit"] = counit;
  hj["antipode"] = anti;
  j["hopf"] = hj;

  json aj;
  aj["generators"] = b.vlabels;
  json rels = json::array();
  for (int a = 0; a < b.relation_count(); ++a) rels.push_back(sparse_json(b.relation(a)));
  aj["relations"] = rels;
  json act = json::array();
  for (const auto& [elem, m] : p.action_generators) {
    json e;
    e["element"] = sparse_json(elem);
    e["matrix"] = matrix_json(m);
    act.push_back(e);
  }
  aj["action"] = act;
  j["algebra"] = aj;
  if (p.kappa) j["kappa"] = kappa_json(*p.kappa, b.vdim, d);
  return render(j);
}

namespace {

// Raised when H itself is invalid, so `validate` can still print the report.
class HopfInvalid : public ValidationError {
 public:
  HopfInvalid(ValidationReport r, Problem p)
      : ValidationError("Hopf algebra axioms fail\n" + format_report(r, p, true)),
        report(std::move(r)),
        partial(std::move(p)) {}
  ValidationReport report;
  Problem partial;
};

}  // namespace

Problem parse_problem(std::string_view text, int cutoff, bool validate) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError("malformed JSON at " + position(text, e.byte ? e.byte - 1 : 0) + ": " + msg);
  }
  if (!j.is_object()) Reader::fail("document", "expected a JSON object");
  const json& fmt = Reader::field(j, "format", "document");
  if (!fmt.is_string() || fmt.get<std::string>() != kProblemFormat)
    Reader::fail("format", std::string("expected \"") + kProblemFormat + "\"");

  const json& fj = Reader::field(j, "field", "document");
  const long long order = Reader::integer(Reader::field(fj, "cyclotomic_order", "field"), "field.cyclotomic_order",
                                          1, 1 << 16);
  Reader rd{static_cast<int>(order)};

  const json& hj = Reader::field(j, "hopf", "document");
  std::vector<std::string> hlabels = Reader::labels(Reader::field(hj, "basis", "hopf"), "hopf.basis");
  const long long d = static_cast<long long>(hlabels.size());
  HopfAlgebra h(rd.order, hlabels);
  h.set_unit(rd.sparse(Reader::field(hj, "unit", "hopf"), "hopf.unit", d));
  std::map<std::pair<int, int>, Vec> prod;
  rd.tuples(Reader::field(hj, "product", "hopf"), "hopf.product", {d, d, d}, [&](const auto& i, Scalar c) {
    auto [it, fresh] = prod.try_emplace({static_cast<int>(i[0]), static_cast<int>(i[1])}, zero_vector<Scalar>(d));
    it->second[i[2]] += c;
  });
  for (const auto& [key, v] : prod) {
    SparseVec sv;
    for (Index k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) sv.emplace_back(static_cast<int>(k), v[k]);
    h.set_product(key.first, key.second, std::move(sv));
  }
  std::vector<std::vector<CoproductTerm>> cop(d);
  rd.tuples(Reader::field(hj, "coproduct", "hopf"), "hopf.coproduct", {d, d, d}, [&](const auto& i, Scalar c) {
    cop[i[0]].push_back({static_cast<int>(i[1]), static_cast<int>(i[2]), std::move(c)});
  });
  for (int x = 0; x < d; ++x) h.set_coproduct(x, cop[x]);
  Vec eps = rd.sparse(Reader::field(hj, "counit", "hopf"), "hopf.counit", d);
  for (int x = 0; x < d; ++x) h.set_counit(x, eps[x]);
  std::vector<Vec> anti(d, zero_vector<Scalar>(d));
  rd.tuples(Reader::field(hj, "antipode", "hopf"), "hopf.antipode", {d, d},
            [&](const auto& i, Scalar c) { anti[i[0]][i[1]] += c; });
  for (int x = 0; x < d; ++x) h.set_antipode(x, anti[x]);

  // The module algebra is only meaningful over a valid H, so H is always checked.
  ValidationReport hrep = validate_hopf(h);

  const json& aj = Reader::field(j, "algebra", "document");
  std::vector<std::string> vlabels = Reader::labels(Reader::field(aj, "generators", "algebra"), "algebra.generators");
  const long long vdim = static_cast<long long>(vlabels.size());
  std::vector<Vec> rels;
  const json& rj = Reader::array(Reader::field(aj, "relations", "algebra"), "algebra.relations");
  for (std::size_t a = 0; a < rj.size(); ++a)
    rels.push_back(rd.sparse(rj[a], "algebra.relations[" + std::to_string(a) + "]", vdim * vdim));
  std::vector<std::pair<Vec, Mat>> gens;
  const json& acts = Reader::array(Reader::field(aj, "action", "algebra"), "algebra.action");
  for (std::size_t g = 0; g < acts.size(); ++g) {
    const std::string where = "algebra.action[" + std::to_string(g) + "]";
    Vec elem = rd.sparse(Reader::field(acts[g], "element", where), where + ".element", d);
    Mat m = zero_matrix<Scalar>(vdim, vdim);
    rd.tuples(Reader::field(acts[g], "matrix", where), where + ".matrix", {vdim, vdim},
              [&](const auto& i, Scalar c) { m(i[0], i[1]) += c; });
    gens.emplace_back(std::move(elem), std::move(m));
  }
  if (gens.empty()) Reader::fail("algebra.action", "needs at least one generator");
  if (!hrep.passed) throw HopfInvalid(hrep, Problem{"", h, {}, gens, std::nullopt});
  ModuleAlgebra b = make_module_algebra(h, vlabels, rels, gens, cutoff);

  std::string name = "problem";
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) Reader::fail("name", "expected a string");
    name = it->get<std::string>();
  }
  Problem p{name, std::move(h), std::move(b), std::move(gens), std::nullopt};

  if (auto it = j.find("kappa"); it != j.end()) {
    const json& kj = *it;
    const long long rows = Reader::integer(Reader::field(kj, "rows", "kappa"), "kappa.rows", 0, 1 << 20);
    const int nrel = p.algebra.relation_count();
    if (rows != nrel)
      Reader::fail("kappa", "declares " + std::to_string(rows) + " rows but the relation space has dimension " +
                                std::to_string(nrel));
    Kappa k = Kappa::zero(nrel, static_cast<int>(vdim), static_cast<int>(d));
    rd.tuples(Reader::field(kj, "constant", "kappa"), "kappa.constant", {nrel, d},
              [&](const auto& i, Scalar c) { k.constant(i[0], i[1]) += c; });
    rd.tuples(Reader::field(kj, "linear", "kappa"), "kappa.linear", {nrel, vdim, d},
              [&](const auto& i, Scalar c) { k.linear(i[0], i[1] * d + i[2]) += c; });
    p.kappa = std::move(k);
  }

  if (validate) {
    ValidationReport arep = validate_action(p.hopf, p.algebra);
    if (!arep.passed) throw ValidationError("module algebra axioms fail\n" + format_report(arep, p, false));
  }
  return p;
}

Problem load_spec(const std::string& path, int cutoff, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), cutoff, validate);
}

std::string emit_preset(std::string_view name, bool with_kappa, const std::string& path) {
  std::string text = emit_problem(preset_problem(name, with_kappa));
  if (!path.empty()) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
  }
  return text;
}

std::string format_report(const ValidationReport& rep, const Problem& p, bool hopf_section) {
  std::string out;
  for (const auto& f : rep.failures) {
    std::string w;
    if (hopf_section || f.axiom == "module_associativity") {
      w = witness_labels(f.witness, p.hopf.labels());
    } else if (f.axiom == "relation_stability" && f.witness.size() == 2) {
      w = witness_labels({f.witness[0]}, p.hopf.labels()) + ", r" + std::to_string(f.witness[1] + 1);
    }
    out += "  " + f.axiom + (w.empty() ? "" : " at (" + w + ")") + ": " + f.lhs + " != " + f.rhs + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- commands

namespace {

struct Options {
  bool json = false;
  int cutoff = 6;
};

json report_json(const ValidationReport& rep, const Problem& p, bool hopf_section) {
  json fails = json::array();
  for (const auto& f : rep.failures) {
    json w = json::array();
    for (std::size_t i = 0; i < f.witness.size(); ++i) {
      const bool relation = !hopf_section && f.axiom == "relation_stability" && i == 1;
      const int k = f.witness[i];
      w.push_back(relation ? "r" + std::to_string(k + 1) : p.hopf.labels().at(k));
    }
    fails.push_back({{"axiom", f.axiom}, {"witness", w}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  return {{"passed", rep.passed}, {"failures", fails}};
}

std::string relation_name(int a) { return "r" + std::to_string(a + 1); }

std::string kappa_line(const Problem& p, const Kappa& k) {
  std::string s;
  for (int a = 0; a < k.relations(); ++a) {
    if (is_zero_matrix(k.constant_of(a)) && is_zero_matrix(k.linear_of(a))) continue;
    s += (s.empty() ? "" : "; ") + relation_name(a) + " -> " +
         format_kappa_value(p.hopf, p.algebra, k.constant_of(a), k.linear_of(a));
  }
  return s.empty() ? "0" : s;
}

json kappa_report(const Problem& p, const Kappa& k) {
  json j = kappa_json(k, p.algebra.vdim, p.hopf.dim());
  json vals = json::array();
  for (int a = 0; a < k.relations(); ++a)
    vals.push_back(format_kappa_value(p.hopf, p.algebra, k.constant_of(a), k.linear_of(a)));
  j["values"] = vals;
  return j;
}

void print_relations(std::ostream& out, const Problem& p) {
  for (int a = 0; a < p.algebra.relation_count(); ++a)
    out << "  " << relation_name(a) << " = " << format_tensor(p.algebra.relation(a), p.algebra.vlabels, 2) << "\n";
}

int cmd_validate(const std::string& path, const Options& o, std::ostream& out) {
  std::optional<Problem> loaded;
  ValidationReport hrep;
  try {
    loaded = load_spec(path, o.cutoff, false);
  } catch (const HopfInvalid& e) {
    hrep = e.report;
    const Problem& p = e.partial;
    if (o.json) {
      out << render({{"command", "validate"},
                     {"name", p.name},
                     {"hopf", report_json(hrep, p, true)},
                     {"action", nullptr},
                     {"passed", false}});
    } else {
      out << "Hopf algebra (dim " << p.hopf.dim() << "): FAIL\n"
          << format_report(hrep, p, true) << "module algebra: not checked (H is invalid)\n";
    }
    return 2;
  }
  const Problem& p = *loaded;
  ValidationReport arep = validate_action(p.hopf, p.algebra);
  const bool ok = hrep.passed && arep.passed;
  if (o.json) {
    out << render({{"command", "validate"},
                   {"name", p.name},
                   {"hopf", report_json(hrep, p, true)},
                   {"action", report_json(arep, p, false)},
                   {"passed", ok}});
  } else {
    out << "Hopf algebra (dim " << p.hopf.dim() << "): PASS\n";
    out << "module algebra (dim V " << p.algebra.vdim << ", dim I " << p.algebra.relation_count()
        << "): " << (arep.passed ? "PASS" : "FAIL") << "\n"
        << format_report(arep, p, false);
  }
  return ok ? 0 : 2;
}

int cmd_check(const std::string& path, const Options& o, std::ostream& out) {
  Problem p = load_spec(path, o.cutoff);
  const bool given = p.kappa.has_value();
  Kappa k = given ? *p.kappa : Kappa::zero(p.algebra.relation_count(), p.algebra.vdim, p.hopf.dim());
  ConditionReport rep = check_pbw(p.hopf, p.algebra, k);
  if (o.json) {
    json conds;
    for (char c : {'a', 'b', 'c', 'd'}) {
      const auto& r = rep.at(c);
      json ws = json::array();
      for (const auto& w : r.witnesses) ws.push_back({{"indices", w.indices}, {"lhs", w.lhs}, {"rhs", w.rhs}});
      conds[std::string(1, c)] = {{"verdict", verdict_name(r.verdict)}, {"witnesses", ws}, {"note", r.note}};
    }
    out << render({{"command", "check"},
                   {"name", p.name},
                   {"kappa_given", given},
                   {"kappa", kappa_report(p, k)},
                   {"conditions", conds},
                   {"notes", rep.notes},
                   {"passed", rep.passed()}});
  } else {
    out << "relations:\n";
    print_relations(out, p);
    out << "kappa: " << kappa_line(p, k) << (given ? "" : " (no kappa in file)") << "\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    out << "condition  verdict\n";
    for (char c : {'a', 'b', 'c', 'd'}) {
      const auto& r = rep.at(c);
      out << "(" << c << ")        " << verdict_name(r.verdict);
      if (!r.note.empty()) out << "  [" << r.note << "]";
      out << "\n";
      for (const auto& w : r.witnesses) {
        out << "    at ";
        if (c == 'a' && w.indices.size() == 2)
          out << "(" << p.hopf.labels()[w.indices[0]] << ", " << relation_name(w.indices[1]) << ")";
        else
          out << "s" << w.indices.at(0) + 1;
        out << ": " << w.lhs << " != " << w.rhs << "\n";
      }
    }
    out << "PBW deformation: " << (rep.passed() ? "yes" : "no") << "\n";
  }
  return rep.passed() ? 0 : 3;
}

std::string monomial_poly(const Mat& m, Index row, const std::vector<std::string>& monos) {
  std::string s;
  for (Index c = 0; c < m.cols(); ++c) {
    const Scalar& v = m(row, c);
    if (v.is_zero()) continue;
    std::string coef = v.is_one() ? "" : (v == Scalar(-1) ? "-" : "(" + v.to_string() + ")*");
    s += (s.empty() ? "" : " + ") + coef + monos[c];
  }
  return s + " = 0";
}

int cmd_solve(const std::string& path, bool fix_linear_zero, const Options& o, std::ostream& out) {
  Problem p = load_spec(path, o.cutoff);
  KappaFamily f = solve_kappa(p.hopf, p.algebra, {fix_linear_zero});
  if (o.json) {
    json blocks = json::array();
    for (std::size_t a = 0; a < f.invariant_blocks.size(); ++a)
      blocks.push_back({{"relation", format_tensor(p.algebra.relation(static_cast<int>(a)), p.algebra.vlabels, 2)},
                        {"constant", f.invariant_blocks[a].constant},
                        {"linear", f.invariant_blocks[a].linear}});
    json lin = json::array(), fam = json::array(), res = json::array();
    for (const auto& k : f.linear_basis) lin.push_back(kappa_report(p, k));
    for (const auto& k : f.family_basis) fam.push_back(kappa_report(p, k));
    for (Index r = 0; r < f.residual_system.rows(); ++r) {
      json row = json::array();
      for (Index c = 0; c < f.residual_system.cols(); ++c) row.push_back(f.residual_system(r, c).to_string());
      res.push_back(row);
    }
    out << render({{"command", "solve"},
                   {"name", p.name},
                   {"force_linear_zero", f.force_linear_zero},
                   {"overlap_dim", f.overlap_dim},
                   {"invariant_dim", f.invariant_dim},
                   {"invariant_blocks", blocks},
                   {"linear_basis", lin},
                   {"quadratic_vanishes", f.quadratic_vanishes},
                   {"residual_monomials", f.residual_monomials},
                   {"residual_system", res},
                   {"family_dim", f.family_dim ? json(*f.family_dim) : json(nullptr)},
                   {"family_basis", fam},
                   {"notes", f.notes}});
    return 0;
  }
  out << "relations:\n";
  print_relations(out, p);
  if (f.force_linear_zero) out << "kappa^L fixed to zero\n";
  for (const auto& n : f.notes) out << "note: " << n << "\n";
  out << "dim D'_3: " << f.overlap_dim << "\n";
  out << "invariant space (condition (a)): dim " << f.invariant_dim << "\n";
  for (std::size_t a = 0; a < f.invariant_blocks.size(); ++a)
    out << "  " << relation_name(static_cast<int>(a)) << ": kappa^C block " << f.invariant_blocks[a].constant
        << ", kappa^L block " << f.invariant_blocks[a].linear << "\n";
  out << "after condition (b): dim " << f.linear_basis.size() << "\n";
  if (f.family_dim) {
    out << "family_dim: " << *f.family_dim << "\n";
    out << "basis (RREF, kappa^C entries before kappa^L):\n";
    for (std::size_t i = 0; i < f.family_basis.size(); ++i)
      out << "  k" << i + 1 << ": " << kappa_line(p, f.family_basis[i]) << "\n";
  } else {
    out << "family_dim: undetermined (quadratic residual system)\n";
    out << "parametrization kappa = sum t_i k_i:\n";
    for (std::size_t i = 0; i < f.linear_basis.size(); ++i)
      out << "  k" << i + 1 << ": " << kappa_line(p, f.linear_basis[i]) << "\n";
    out << "residual system:\n";
    for (Index r = 0; r < f.residual_system.rows(); ++r)
      out << "  " << monomial_poly(f.residual_system, r, f.residual_monomials) << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& path, int degree, int buffer, bool probe, const Options& o, std::ostream& out) {
  Problem p = load_spec(path, o.cutoff);
  Kappa k = p.kappa ? *p.kappa : Kappa::zero(p.algebra.relation_count(), p.algebra.vdim, p.hopf.dim());
  FilteredDimReport r = probe ? pbw_probe(p.hopf, p.algebra, k, degree, buffer)
                              : filtered_dims(p.hopf, p.algebra, k, degree, buffer);
  if (o.json) {
    out << render({{"command", "oracle"},
                   {"name", p.name},
                   {"degree_bound", r.degree_bound},
                   {"buffer", r.buffer},
                   {"computed_dims", r.computed_dims},
                   {"expected_dims", r.expected_dims},
                   {"verdict", oracle_verdict_name(r.verdict)},
                   {"falsified_at", r.falsified_at ? json(*r.falsified_at) : json(nullptr)},
                   {"caveat", r.caveat}});
  } else {
    out << "degree bound " << r.degree_bound << ", buffer " << r.buffer << "\n";
    out << "m  computed  expected\n";
    for (std::size_t m = 0; m < r.computed_dims.size(); ++m) {
      std::string a = std::to_string(r.computed_dims[m]), e = std::to_string(r.expected_dims[m]);
      out << m << "  " << std::string(8 - std::min<std::size_t>(8, a.size()), ' ') << a << "  "
          << std::string(8 - std::min<std::size_t>(8, e.size()), ' ') << e << "\n";
    }
    out << oracle_verdict_name(r.verdict);
    if (r.falsified_at) out << " at degree " << *r.falsified_at;
    out << "\n" << r.caveat << "\n";
  }
  return r.verdict == OracleVerdict::consistent ? 0 : 4;
}

int cmd_koszul(const std::string& path, int max, const Options& o, std::ostream& out) {
  Problem p = load_spec(path, o.cutoff);
  const int top = std::min(max, p.algebra.cutoff);
  if (max > p.algebra.cutoff)
    throw CutoffExceeded("--max " + std::to_string(max) + " exceeds cutoff " + std::to_string(p.algebra.cutoff));
  std::vector<long long> bj, dj;
  for (int i = 0; i <= top; ++i) {
    bj.push_back(graded_dim(p.algebra, i));
    dj.push_back(i == 0 ? 1 : i == 1 ? p.algebra.vdim : koszul_component(p.algebra, i).dim());
  }
  if (o.json) {
    out << render({{"command", "koszul"}, {"name", p.name}, {"max", top}, {"graded_dims", bj}, {"koszul_dims", dj}});
  } else {
    out << "j  dim B_j  dim D'_j\n";
    for (int i = 0; i <= top; ++i) out << i << "  " << bj[i] << "  " << dj[i] << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact PBW deformation checker and solver for Hopf actions on quadratic algebras", "pbwdef"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--cutoff", o.cutoff, "Degree cutoff for tensor computations")->check(CLI::Range(2, 12));

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check the Hopf and module algebra axioms (exit 2 on failure)");
  validate->add_option("file", file, "Problem file")->required();

  auto* check = app.add_subcommand("check", "Decide whether the file's kappa gives a PBW deformation (exit 3 if not)");
  check->add_option("file", file, "Problem file")->required();

  bool fix_linear_zero = false;
  auto* solve = app.add_subcommand("solve", "Compute the full family of admissible kappa");
  solve->add_option("file", file, "Problem file")->required();
  solve->add_flag("--fix-linear-zero", fix_linear_zero, "Restrict to kappa^L = 0");

  int degree = 3, buffer = 1;
  bool probe = false;
  auto* oracle = app.add_subcommand("oracle", "Filtered dimension count (exit 4 when falsified)");
  oracle->add_option("file", file, "Problem file")->required();
  oracle->add_option("--degree", degree, "Degree bound N")->check(CLI::Range(2, 12));
  oracle->add_option("--buffer", buffer, "Extra spanning degrees k")->check(CLI::Range(0, 10));
  oracle->add_flag("--probe", probe, "Try every buffer from 0 up to --buffer");

  std::string name, output;
  bool with_kappa = false, list = false;
  auto* preset = app.add_subcommand("preset", "Emit a built-in problem file");
  preset->add_option("name", name, "Preset name");
  preset->add_flag("--with-kappa", with_kappa, "Include a sample deformation map");
  preset->add_option("-o,--output", output, "Output path (default stdout)");
  preset->add_flag("--list", list, "List preset names");

  int max = 3;
  auto* koszul = app.add_subcommand("koszul", "Dimensions of B_j and the Koszul components D'_j");
  koszul->add_option("file", file, "Problem file")->required();
  koszul->add_option("--max", max, "Largest degree")->check(CLI::Range(0, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*validate) return cmd_validate(file, o, out);
    if (*check) return cmd_check(file, o, out);
    if (*solve) return cmd_solve(file, fix_linear_zero, o, out);
    if (*oracle) return cmd_oracle(file, degree, buffer, probe, o, out);
    if (*koszul) return cmd_koszul(file, max, o, out);
    if (*preset) {
      if (list) {
        for (const auto& n : preset_names()) out << n << "\n";
        return 0;
      }
      if (name.empty()) throw UnknownPreset("preset name required (see --list)");
      std::string text = emit_preset(name, with_kappa, output);
      if (output.empty()) out << text;
      return 0;
    }
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace pbw
