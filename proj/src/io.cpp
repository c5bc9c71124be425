#include "wex/io.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wex/error.hpp"

namespace wex {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& code, const std::string& msg) {
  throw Error(ErrorKind::Validation, code, msg);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "ParseError", "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) invalid("ValidationError", where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid("ValidationError", where + ": missing field '" + key + "'");
  return *it;
}

long long integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) invalid("ValidationError", where + ": expected an integer");
  return v.get<long long>();
}

Cyclotomic literal(const json& v, int conductor, const std::string& where) {
  if (!v.is_string()) invalid("ValidationError", where + ": expected a literal string");
  try {
    return Cyclotomic::parse(v.get<std::string>(), conductor);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, "ParseError", where + ": " + std::string(e.what()));
  }
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

// Canonical literal of v written over Q(zeta_m).
std::string lit(const Cyclotomic& v, int m) {
  if (v.conductor() == m || m % v.conductor() == 0) return v.to_literal(m);
  if (auto w = rewrite_at_conductor(v, m)) return w->to_literal(m);
  throw internal_error("InternalInconsistency", "value " + v.to_literal() + " does not lie in Q(zeta_" + std::to_string(m) + ")");
}

json matrix_json(const Matrix& m, int conductor) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(lit(m(r, c), conductor));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  const json doc = parse_json(text);
  GroupSpec spec;
  const long long m = integer(member(doc, "conductor", "group"), "conductor");
  const long long n = integer(member(doc, "degree", "group"), "degree");
  if (m < 1 || m > 100000) invalid("ValidationError", "conductor: must be a positive integer");
  if (n < 1 || n > 64) invalid("ValidationError", "degree: out of range");
  spec.conductor = static_cast<int>(m);
  spec.degree = static_cast<int>(n);
  const json& gens = member(doc, "generators", "group");
  if (!gens.is_array() || gens.empty()) invalid("ValidationError", "generators: expected a non-empty list");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    if (!g.is_array() || static_cast<long long>(g.size()) != n)
      invalid("NotSquare", where + ": expected " + std::to_string(n) + " rows");
    Matrix mat(spec.degree, spec.degree);
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (!g[r].is_array() || static_cast<long long>(g[r].size()) != n)
        invalid("NotSquare", where + "[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < g[r].size(); ++c)
        mat(static_cast<int>(r), static_cast<int>(c)) =
            literal(g[r][c], spec.conductor, where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    spec.generators.push_back(std::move(mat));
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) invalid("ValidationError", "metadata: expected an object");
    if (auto nm = it->find("name"); nm != it->end() && nm->is_string()) spec.name = nm->get<std::string>();
    if (auto pv = it->find("provenance"); pv != it->end() && pv->is_string()) spec.provenance = pv->get<std::string>();
  }
  return spec;
}

json group_spec_json(const GroupSpec& spec) {
  json doc;
  doc["conductor"] = spec.conductor;
  doc["degree"] = spec.degree;
  doc["generators"] = json::array();
  for (const auto& g : spec.generators) doc["generators"].push_back(matrix_json(g, spec.conductor));
  doc["metadata"] = {{"name", spec.name}, {"provenance", spec.provenance}};
  return doc;
}

std::string emit_group_spec(const GroupSpec& spec) { return group_spec_json(spec).dump(2) + "\n"; }

CharacterTable parse_table_spec(const std::string& text) {
  const json doc = parse_json(text);
  const long long order = integer(member(doc, "order", "table"), "order");
  if (order < 1) invalid("ValidationError", "order: must be positive");
  const json& classes = member(doc, "classes", "table");
  if (!classes.is_array() || classes.empty()) invalid("ValidationError", "classes: expected a non-empty list");
  const int r = static_cast<int>(classes.size());

  auto cs = std::make_shared<ClassStructure>();
  cs->order = static_cast<std::size_t>(order);
  cs->power_maps.assign(7, std::vector<int>(static_cast<std::size_t>(r), 0));
  long long total = 0;
  int exponent = 1;
  for (int c = 0; c < r; ++c) {
    const std::string where = "classes[" + std::to_string(c) + "]";
    const json& cl = classes[static_cast<std::size_t>(c)];
    const long long size = integer(member(cl, "size", where), where + ".size");
    const long long eo = integer(member(cl, "element_order", where), where + ".element_order");
    if (size < 1 || eo < 1) invalid("ValidationError", where + ": size and element_order must be positive");
    if (order % eo != 0) invalid("ValidationError", where + ": element order does not divide the group order");
    total += size;
    cs->sizes.push_back(static_cast<int>(size));
    cs->element_orders.push_back(static_cast<int>(eo));
    exponent = lcm_int(exponent, static_cast<int>(eo));
  }
  if (total != order)
    invalid("SizeMismatch", "class sizes sum to " + std::to_string(total) + ", not " + std::to_string(order));
  if (cs->sizes[0] != 1 || cs->element_orders[0] != 1)
    invalid("ValidationError", "classes[0]: must be the identity class");
  for (int c = 0; c < r; ++c) {
    const std::string where = "classes[" + std::to_string(c) + "].power_maps";
    const json& pm = member(classes[static_cast<std::size_t>(c)], "power_maps", "classes[" + std::to_string(c) + "]");
    cs->power_maps[1][static_cast<std::size_t>(c)] = c;
    for (int k = 1; k <= 6; ++k) {
      const long long img = integer(member(pm, std::to_string(k), where), where + "." + std::to_string(k));
      if (img < 0 || img >= r) invalid("MissingPowerMap", where + "." + std::to_string(k) + ": class index out of range");
      const int o = cs->element_orders[static_cast<std::size_t>(c)];
      if (cs->element_orders[static_cast<std::size_t>(img)] != o / std::gcd(o, k))
        invalid("ValidationError", where + "." + std::to_string(k) + ": image has the wrong element order");
      if (k == 1 && img != c) invalid("ValidationError", where + ".1: must map a class to itself");
      cs->power_maps[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = static_cast<int>(img);
    }
  }
  cs->conductor = exponent;
  CharacterTable t;
  t.classes = cs;

  auto values = [&](const json& arr, const std::string& where) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != r)
      invalid("ValidationError", where + ": expected " + std::to_string(r) + " values");
    ClassFunction f;
    f.classes = cs;
    for (std::size_t i = 0; i < arr.size(); ++i)
      f.values.push_back(literal(arr[i], exponent, where + "[" + std::to_string(i) + "]"));
    return f;
  };

  const json& irr = member(doc, "irreducibles", "table");
  if (!irr.is_array() || static_cast<int>(irr.size()) != r)
    invalid("ValidationError", "irreducibles: expected " + std::to_string(r) + " characters");
  for (std::size_t i = 0; i < irr.size(); ++i) {
    const std::string where = "irreducibles[" + std::to_string(i) + "]";
    ClassFunction f = values(member(irr[i], "values", where), where + ".values");
    const json& lin = member(irr[i], "linear", where);
    if (!lin.is_boolean()) invalid("MissingLinearFlags", where + ".linear: expected a boolean");
    if (lin.get<bool>() != (f[0] == Cyclotomic(1)))
      invalid("ValidationError", where + ".linear: flag disagrees with the degree");
    t.linear.push_back(lin.get<bool>());
    t.irreducibles.push_back(std::move(f));
  }
  try {
    validate_orthogonality(t);
  } catch (const Error& e) {
    invalid("OrthogonalityFailure", std::string(e.what()));
  }

  const json& nat = member(doc, "natural", "table");
  if (nat.is_number_integer()) {
    const long long idx = nat.get<long long>();
    if (idx < 0 || idx >= r) invalid("ValidationError", "natural: index out of range");
    t.natural_index = static_cast<int>(idx);
    t.natural = t.irreducibles[static_cast<std::size_t>(idx)];
  } else {
    ClassFunction f = values(nat, "natural");
    if (!f[0].is_rational() || f[0].to_rational() < Rational(1))
      invalid("ValidationError", "natural: value at the identity must be a positive integer");
    for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
      if (t.irreducibles[i].values == f.values) t.natural_index = static_cast<int>(i);
    t.natural = std::move(f);
  }
  return t;
}

json table_spec_json(const CharacterTable& t) {
  const auto& cs = *t.classes;
  json doc;
  doc["order"] = cs.order;
  doc["classes"] = json::array();
  for (std::size_t c = 0; c < cs.class_count(); ++c) {
    json pm = json::object();
    for (int k = 1; k <= 6; ++k) pm[std::to_string(k)] = cs.power(static_cast<int>(c), k);
    doc["classes"].push_back({{"size", cs.sizes[c]}, {"element_order", cs.element_orders[c]}, {"power_maps", pm}});
  }
  auto values = [&](const ClassFunction& f) {
    json arr = json::array();
    for (const auto& v : f.values) arr.push_back(lit(v, cs.conductor));
    return arr;
  };
  doc["irreducibles"] = json::array();
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    doc["irreducibles"].push_back({{"values", values(t.irreducibles[i])}, {"linear", static_cast<bool>(t.linear[i])}});
  if (t.natural_index)
    doc["natural"] = *t.natural_index;
  else if (t.natural)
    doc["natural"] = values(*t.natural);
  return doc;
}

std::string emit_table_spec(const CharacterTable& t) { return table_spec_json(t).dump(2) + "\n"; }

std::size_t cap_from_env() {
  const char* env = std::getenv("WEX_CAP");
  if (!env || !*env) return kDefaultCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) invalid("ValidationError", std::string("WEX_CAP: not a positive integer: ") + env);
  return static_cast<std::size_t>(v);
}

RuleHint parse_rule(const std::string& text) {
  RuleHint h;
  if (text == "auto") return h;
  if (text == "dim") {
    h.kind = RuleHint::Kind::Dim;
    return h;
  }
  const std::string prefix = "diagonal:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string num = text.substr(prefix.size());
    char* end = nullptr;
    const long v = std::strtol(num.c_str(), &end, 10);
    if (!num.empty() && *end == '\0' && v > 0 && v < 100000) {
      h.kind = RuleHint::Kind::Diagonal;
      h.k = static_cast<int>(v);
      return h;
    }
  }
  throw Error(ErrorKind::Parse, "ParseError", "unknown rule '" + text + "'");
}

PipelineResult run_pipeline(const std::string& text, const PipelineOptions& opts) {
  using clock = std::chrono::steady_clock;
  auto ms = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  PipelineResult res;
  const auto t0 = clock::now();
  if (opts.table) {
    CharacterTable t = parse_table_spec(text);
    const auto t1 = clock::now();
    Source src = Source::from_table(std::move(t));
    res.report = verdict(src, opts.hint);
    const auto t2 = clock::now();
    res.timings_ms = {{"load", ms(t0, t1)}, {"verdict", ms(t1, t2)}};
  } else {
    const GroupSpec spec = parse_group_spec(text);
    const std::size_t cap = opts.cap ? *opts.cap : cap_from_env();
    FiniteMatrixGroup g = closure(spec.degree, spec.generators, cap);
    const auto t1 = clock::now();
    Source src = Source::from_group(std::move(g), cap);
    res.report = verdict(src, opts.hint);
    const auto t2 = clock::now();
    res.timings_ms = {{"closure", ms(t0, t1)}, {"verdict", ms(t1, t2)}};
  }
  return res;
}

namespace {

int report_conductor(const VerdictReport& r) {
  int m = 1;
  for (const auto& c : r.conditions) {
    if (!c.witness) continue;
    for (const auto& p : c.witness->polynomials)
      for (const auto& v : p)
        if (!v.is_rational()) m = lcm_int(m, v.conductor());
    if (const auto& e = c.witness->element)
      for (const auto& v : e->entries())
        if (!v.is_rational()) m = lcm_int(m, v.conductor());
  }
  return m;
}

std::string monomial_text(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string polynomial_text(const Vector& p, int n, int d, int m) {
  const auto mons = monomials(n, d);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + lit(p[i], m) + ")*" + monomial_text(mons[i]);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

json polynomial_json(const Vector& coeffs, int variables, int degree, int conductor) {
  const auto mons = monomials(variables, degree);
  json out = json::array();
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) out.push_back({{"monomial", mons[i]}, {"coeff", lit(coeffs[i], conductor)}});
  return out;
}

json report_json(const VerdictReport& r) {
  const int m = report_conductor(r);
  json doc;
  doc["dimension"] = r.dimension;
  if (r.group_order)
    doc["group_order"] = *r.group_order;
  else
    doc["group_order"] = "table";
  doc["verdict"] = to_string(r.verdict);
  doc["rule"] = r.rule;
  doc["rule_statement"] = r.rule_statement;
  doc["conductor"] = m;
  json s = json::object();
  for (const auto& [d, v] : r.semi_invariants) s[std::to_string(d)] = v;
  doc["semi_invariants"] = s;
  doc["conditions"] = json::array();
  for (const auto& c : r.conditions) {
    json jc = {{"name", c.name}, {"status", to_string(c.status)}, {"reason", c.reason}, {"witness", nullptr}};
    if (c.witness) {
      const Witness& w = *c.witness;
      json jw = {{"kind", w.kind}, {"detail", w.detail}};
      if (!w.polynomials.empty()) {
        jw["degree"] = w.degree;
        jw["variables"] = w.variables;
        jw["polynomials"] = json::array();
        for (const auto& p : w.polynomials) jw["polynomials"].push_back(polynomial_json(p, w.variables, w.degree, m));
      }
      if (w.element) jw["element"] = matrix_json(*w.element, m);
      jc["witness"] = std::move(jw);
    }
    doc["conditions"].push_back(std::move(jc));
  }
  return doc;
}

std::string emit_report(const PipelineResult& res, Format format, bool timings) {
  const VerdictReport& r = res.report;
  if (format == Format::Json) {
    json doc = report_json(r);
    if (timings) doc["timings_ms"] = res.timings_ms;
    return doc.dump(2) + "\n";
  }
  const int m = report_conductor(r);
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << "\n";
  os << "rule: " << r.rule << "\n";
  os << "statement: " << r.rule_statement << "\n";
  os << "dimension: " << r.dimension << "\n";
  os << "group order: " << (r.group_order ? std::to_string(*r.group_order) : "table") << "\n";
  if (!r.semi_invariants.empty()) {
    os << "semi-invariants:";
    for (const auto& [d, v] : r.semi_invariants) os << " s_" << d << "=" << v;
    os << "\n";
  }
  if (m > 1) os << "literals: z = exp(2 pi i / " << m << ")\n";
  os << "conditions:\n";
  for (const auto& c : r.conditions) {
    os << "  [" << to_string(c.status) << "] " << c.name << ": " << c.reason << "\n";
    if (!c.witness) continue;
    const Witness& w = *c.witness;
    os << "    witness (" << w.kind << ")";
    if (!w.detail.empty()) os << ": " << w.detail;
    os << "\n";
    for (const auto& p : w.polynomials) os << "      " << polynomial_text(p, w.variables, w.degree, m) << "\n";
    if (w.element)
      for (int i = 0; i < w.element->rows(); ++i) {
        os << "      [";
        for (int j = 0; j < w.element->cols(); ++j) os << (j ? ", " : "") << lit((*w.element)(i, j), m);
        os << "]\n";
      }
  }
  if (timings)
    for (const auto& [k, v] : res.timings_ms) os << "time " << k << ": " << v << " ms\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "IoError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Validation, "IoError", "cannot write " + path);
  out << text;
}

}  // namespace wex
