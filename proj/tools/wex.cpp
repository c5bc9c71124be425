// Command-line front end for the verdict engine and the bookkeeping solvers.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "wex/bookkeeping.hpp"
#include "wex/constructions.hpp"
#include "wex/error.hpp"
#include "wex/io.hpp"

using namespace wex;
using nlohmann::json;

namespace {

void output(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

std::vector<long long> split_ints(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Error(ErrorKind::Parse, "ParseError", "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  auto num = [&](const std::string& t) {
    std::size_t pos = 0;
    int v = -1;
    try {
      v = std::stoi(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size() || t.empty() || v < 0)
      throw Error(ErrorKind::Parse, "ParseError", "bad degree range '" + s + "'");
    return v;
  };
  if (dots == std::string::npos) {
    const int v = num(s);
    return {v, v};
  }
  const int a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
  if (a > b) throw Error(ErrorKind::Parse, "ParseError", "empty degree range '" + s + "'");
  return {a, b};
}

json trace_json(const std::vector<TraceEntry>& trace) {
  json arr = json::array();
  for (const auto& t : trace)
    arr.push_back({{"candidate", t.candidate}, {"kept", t.kept}, {"rule", t.rule}, {"detail", t.detail}});
  return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly-exceptional quotient singularity verdicts"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Run the verdict engine on a group or table file");
  std::string check_file, check_rule = "auto", check_format = "json", check_out;
  bool check_table = false, check_timings = false;
  check->add_option("file", check_file)->required();
  check->add_flag("--table", check_table, "Input is a character table");
  check->add_option("--rule", check_rule, "auto | dim | diagonal:<k>");
  check->add_option("--format", check_format)->check(CLI::IsMember({"json", "text"}));
  check->add_option("-o", check_out, "Output file");
  check->add_flag("--timings", check_timings, "Include wall-clock timings");

  // table
  auto* table = app.add_subcommand("table", "Dixon character table of an explicit group");
  std::string table_in, table_out;
  table->add_option("group", table_in)->required();
  table->add_option("-o", table_out);

  // semiinv
  auto* semiinv = app.add_subcommand("semiinv", "Semi-invariant counts");
  std::string semi_file, semi_degrees = "1..5";
  bool semi_table = false;
  semiinv->add_option("file", semi_file)->required();
  semiinv->add_option("--degrees", semi_degrees, "a..b");
  semiinv->add_flag("--table", semi_table);

  // construct
  auto* construct = app.add_subcommand("construct", "Emit generators of a named family");
  construct->require_subcommand(1);
  auto* c_heis = construct->add_subcommand("heisenberg", "Heisenberg group of order p^3");
  int heis_p = 0;
  std::string heis_out;
  c_heis->add_option("p", heis_p)->required();
  c_heis->add_option("-o", heis_out);
  auto* c_diag = construct->add_subcommand("diagonal", "Diagonal torus family");
  int diag_n = 0, diag_k = 0;
  std::string diag_perm = "cyclic", diag_out;
  c_diag->add_option("--n", diag_n)->required();
  c_diag->add_option("--k", diag_k)->required();
  c_diag->add_option("--perm", diag_perm)->check(CLI::IsMember({"cyclic", "none"}));
  c_diag->add_option("-o", diag_out);

  // lct
  auto* lct = app.add_subcommand("lct", "Log canonical thresholds");
  lct->require_subcommand(1);
  auto* lct_dv = lct->add_subcommand("duval", "Du Val point from its fork arms");
  std::string arms;
  lct_dv->add_option("--arms", arms, "n1,n2,n3")->required();

  // bookkeeping
  auto* book = app.add_subcommand("bookkeeping", "Riemann-Roch and Noether bookkeeping");
  book->require_subcommand(1);
  auto* b_surf = book->add_subcommand("surface-p4");
  auto* b_three = book->add_subcommand("threefold-p5");
  auto* b_noether = book->add_subcommand("noether");
  long long k2 = 0;
  std::string milnor;
  b_noether->add_option("--k2", k2)->required();
  b_noether->add_option("--milnor", milnor);
  auto* b_bounds = book->add_subcommand("bounds");
  long long bn = 0, bdim = 0;
  b_bounds->add_option("--n", bn)->required();
  b_bounds->add_option("--dim", bdim)->required();

  // padic
  auto* padic = app.add_subcommand("padic", "Check the p-adic divisibility lemma on one polynomial");
  std::string coeffs;
  long long shift = 0, prime = 0;
  padic->add_option("--coeffs", coeffs, "b0/c0,b1/c1,...")->required();
  padic->add_option("--shift", shift)->required();
  padic->add_option("--prime", prime)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*check) {
      PipelineOptions opts;
      opts.table = check_table;
      opts.hint = parse_rule(check_rule);
      opts.timings = check_timings;
      auto res = run_pipeline(read_file(check_file), opts);
      output(emit_report(res, check_format == "json" ? Format::Json : Format::Text, check_timings), check_out);
    } else if (*table) {
      const GroupSpec spec = parse_group_spec(read_file(table_in));
      Source src = Source::from_group(closure(spec.degree, spec.generators, cap_from_env()));
      output(emit_table_spec(src.table()), table_out);
    } else if (*semiinv) {
      const auto [a, b] = parse_range(semi_degrees);
      const std::string text = read_file(semi_file);
      json doc;
      json counts = json::object();
      if (semi_table) {
        Source src = Source::from_table(parse_table_spec(text));
        for (int d = a; d <= b; ++d)
          counts[std::to_string(d)] = semiinvariant_count_linear(src.natural(), src.linear(), d);
        doc["method"] = "linear_sum";
      } else {
        const GroupSpec spec = parse_group_spec(text);
        const std::size_t cap = cap_from_env();
        Source src = Source::from_group(closure(spec.degree, spec.generators, cap), cap);
        json other = json::object();
        for (int d = a; d <= b; ++d) {
          counts[std::to_string(d)] = semiinvariant_count_group(src.group(), src.derived(), src.natural(), d);
          other[std::to_string(d)] = semiinvariant_count_linear(src.natural(), src.linear(), d);
        }
        doc["method"] = "derived_average";
        doc["linear_sum"] = other;
        doc["agree"] = counts == other;
        doc["group_order"] = src.group().order();
      }
      doc["counts"] = counts;
      output(dump(doc), "");
    } else if (*c_heis) {
      GroupSpec spec;
      spec.generators = heisenberg(heis_p);
      spec.conductor = heis_p;
      spec.degree = heis_p;
      spec.name = "heisenberg" + std::to_string(heis_p);
      spec.provenance = "construct heisenberg " + std::to_string(heis_p);
      output(emit_group_spec(spec), heis_out);
    } else if (*c_diag) {
      GroupSpec spec;
      spec.generators = diagonal_group(diag_n, diag_k, diag_perm == "cyclic" ? DiagonalPerm::Cyclic : DiagonalPerm::None);
      spec.conductor = diag_k;
      spec.degree = diag_n + 1;
      spec.name = "diagonal n=" + std::to_string(diag_n) + " k=" + std::to_string(diag_k) + " " + diag_perm;
      spec.provenance = "construct diagonal";
      output(emit_group_spec(spec), diag_out);
    } else if (*lct_dv) {
      const auto v = split_ints(arms);
      if (v.size() != 3) throw Error(ErrorKind::Parse, "ParseError", "--arms needs three integers");
      const DuValFork f = lct_duval(v[0], v[1], v[2]);
      json coeffs_j = json::array();
      for (const auto& c : f.coefficients) coeffs_j.push_back(c.str());
      output(dump({{"arms", f.arms}, {"coefficients", coeffs_j}, {"lct", f.lct.str()}}), "");
    } else if (*b_surf) {
      const auto r = surface_candidates_p4();
      json surv = json::array();
      for (const auto& s : r.survivors)
        surv.push_back({{"HH", s.HH}, {"HK", s.HK}, {"h0_quadrics", s.h0_quadrics}});
      output(dump({{"survivors", surv}, {"trace", trace_json(r.trace)}}), "");
    } else if (*b_three) {
      const auto b = threefold_survivor_p5();
      output(dump({{"d", b.d},
                   {"k", b.k},
                   {"gamma", b.gamma.str()},
                   {"h0_values", b.h0_values},
                   {"h0_cubics", b.h0_cubics},
                   {"sectional_genus", b.sectional_genus},
                   {"trace", trace_json(b.trace)}}),
             "");
    } else if (*b_noether) {
      const auto nd = noether_rank(k2, split_ints(milnor));
      output(dump({{"K2", nd.K2}, {"milnor", nd.milnor}, {"picard_rank", nd.picard_rank}}), "");
    } else if (*b_bounds) {
      const auto sb = subvariety_bounds(bn, bdim);
      output(dump({{"n", sb.n},
                   {"dim", sb.dimV},
                   {"degree_bound", sb.degree_bound},
                   {"cubic_count_bound", sb.cubic_count_bound}}),
             "");
    } else if (*padic) {
      PadicInstance inst;
      std::stringstream ss(coeffs);
      std::string item;
      while (std::getline(ss, item, ',')) inst.coefficients.push_back(Rational::parse(item));
      inst.shift = shift;
      inst.prime = prime;
      const auto r = padic_check(inst);
      json vals = json::array();
      for (const auto& v : r.values) vals.push_back(v.str());
      output(dump({{"hypothesis", r.hypothesis}, {"conclusion", r.conclusion}, {"values", vals}}), "");
    }
  } catch (const Error& e) {
    std::cerr << "wex: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "wex: ParseError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "wex: InternalError: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
