#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "integra/charpoly.hpp"
#include "integra/errors.hpp"
#include "integra/families.hpp"
#include "integra/jsonio.hpp"
#include "integra/poly.hpp"
#include "integra/tree.hpp"

namespace {

using namespace integra;

struct RunConfig {
  std::size_t max_vertices = kDefaultMaxVertices;
  std::size_t oracle_max_vertices = kDefaultOracleMaxVertices;
  std::string format = "text";
  std::string out_path;
};

void emit(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw param_error("cannot open output file " + cfg.out_path);
  out << payload;
}

std::vector<BigInt> parse_int_list(const std::string& text) {
  std::vector<BigInt> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_bigint(item));
  if (values.empty()) throw param_error("expected a comma-separated integer list");
  return values;
}

OddTreeParams parse_t_params(const std::string& text) {
  auto values = parse_int_list(text);
  if (values.size() < 4)
    throw param_error("--t wants r,r0,r1,...,rn with n >= 2 (at least 4 integers)");
  BigInt r = values[0];
  BigInt r0 = values[1];
  values.erase(values.begin(), values.begin() + 2);
  return OddTreeParams::of(std::move(r), std::move(r0), std::move(values));
}

std::string eigenvalue_text(const BigInt& radicand) {
  if (radicand == 0) return "0";
  if (auto s = is_perfect_square(radicand)) return "±" + s->get_str();
  return "±√" + radicand.get_str();
}

std::string report_text(const SpectrumReport& report) {
  std::ostringstream out;
  out << "integral: " << (report.integral ? "yes" : "no") << "\n";
  out << "eigenvalues (value: multiplicity):\n";
  for (const auto& [value, mult] : report.multiplicities)
    out << "  " << value.get_str() << ": " << mult.get_str() << "\n";
  if (!report.residual_factors.empty()) {
    out << "non-integer residual factors:\n";
    for (const auto& [poly, e] : report.residual_factors) {
      out << "  (" << poly.to_string() << ")";
      if (e != 1) out << "^" << e.get_str();
      out << "\n";
    }
  }
  out << "degree: " << report.degree.get_str() << "\n";
  return out.str();
}

std::string params_text(const OddTreeParams& p) {
  std::ostringstream out;
  out << "T(r=" << p.r.get_str() << ", r0=" << p.r0.get_str() << ", radii=";
  for (std::size_t i = 0; i < p.radii.size(); ++i)
    out << (i ? "," : "") << p.radii[i].get_str();
  out << ")";
  return out.str();
}

int run_gen(const RunConfig& cfg, const std::optional<std::string>& family,
            const std::optional<std::string>& k_text,
            const std::optional<std::string>& a_text,
            const std::optional<std::size_t>& n,
            const std::optional<std::size_t>& diameter, std::size_t index) {
  FamilyInstance inst = [&] {
    if (diameter) {
      if (family || k_text || a_text || n)
        throw param_error("--diameter/--index cannot be mixed with --family options");
      return instance_for_diameter(*diameter, index);
    }
    if (!family) throw param_error("gen wants either --family or --diameter");
    if (!n) throw param_error("gen --family wants --n");
    if (*family == "4k1") {
      if (!k_text || a_text)
        throw param_error("--family 4k1 wants --k (and no --a)");
      return family_4k1(parse_bigint(*k_text), *n);
    }
    if (*family == "4k3") {
      if (!a_text || k_text)
        throw param_error("--family 4k3 wants --a (and no --k)");
      return family_4k3(parse_bigint(*a_text), *n);
    }
    throw param_error("unknown family '" + *family + "' (expected 4k1 or 4k3)");
  }();

  const Certificate cert = certify(inst, cfg.max_vertices);
  if (cfg.format == "json") {
    emit(cfg, certificate_json(cert).dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "family: " << (cert.instance.family == Family::diameter_4k1 ? "4k+1" : "4k+3")
        << " (parameter " << cert.instance.parameter.get_str() << ", n = "
        << cert.instance.n << ")\n";
    out << "diameter: " << cert.instance.diameter() << "\n";
    out << "params: " << params_text(cert.instance.params) << "\n";
    out << "vertices: " << cert.vertices.get_str() << "\n";
    out << report_text(cert.spectrum);
    out << "diameter check: "
        << (cert.diameter_checked ? "passed by BFS"
                                  : "skipped (tree exceeds the vertex cap)")
        << "\n";
    out << "certified: " << (cert.certified ? "yes" : "no") << "\n";
    if (!cert.certified) out << "failure: " << cert.failure << "\n";
    emit(cfg, out.str());
  }
  return cert.certified ? 0 : 2;
}

int run_spectrum(const RunConfig& cfg, const std::optional<std::string>& c_text,
                 const std::optional<std::string>& t_text,
                 const std::string& method) {
  if (c_text.has_value() == t_text.has_value())
    throw param_error("spectrum wants exactly one of --c or --t");
  if (method != "closed" && method != "oracle" && method != "both")
    throw param_error("--method must be closed, oracle or both");

  std::string label;
  FactoredSpectrum closed;
  BigInt vertices;
  std::optional<RootedTree> tree;  // materialized only when the oracle runs
  std::optional<std::set<BigInt>> radicands;

  std::optional<IntPoly> oracle;
  try {
    if (c_text) {
      const auto params = CsikvariParams::of(parse_int_list(*c_text));
      label = "C(" + *c_text + ")";
      closed = charpoly_c_factored(params);
      vertices = vertex_count_c(params);
      radicands = distinct_eigenvalues(params);
      if (method != "closed") tree = build_c(params, cfg.max_vertices);
    } else {
      const auto params = parse_t_params(*t_text);
      label = "T(" + *t_text + ")";
      closed = charpoly_t_factored(params);
      vertices = vertex_count_t(params);
      if (method != "closed") tree = build_t(params, cfg.max_vertices);
    }
    if (tree) oracle = oracle_charpoly(*tree, cfg.oracle_max_vertices);
  } catch (const budget_error& e) {
    throw param_error(std::string(e.what()) +
                      "; use --method closed for trees beyond the caps");
  }

  bool agree = true;
  if (method == "both") agree = (closed.expand() == *oracle);

  const SpectrumReport report =
      (method == "oracle")
          ? spectrum_report(FactoredSpectrum::residual(*oracle), vertices)
          : spectrum_report(closed, vertices);

  if (cfg.format == "json") {
    nlohmann::json doc{{"tree", label},
                       {"vertices", vertices.get_str()},
                       {"method", method},
                       {"spectrum", report_json(report)}};
    if (method != "oracle") doc["closed"] = factored_json(closed);
    if (oracle) doc["oracle"] = poly_json(*oracle);
    if (method == "both") doc["agree"] = agree;
    if (radicands) {
      nlohmann::json arr = nlohmann::json::array();
      for (const BigInt& rho : *radicands) arr.push_back(rho.get_str());
      doc["distinct_radicands"] = arr;
    }
    emit(cfg, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "tree: " << label << "\n";
    out << "vertices: " << vertices.get_str() << "\n";
    if (method != "oracle") out << "closed: " << closed.to_string() << "\n";
    if (method == "oracle") out << "oracle: " << oracle->to_string() << "\n";
    if (method == "both")
      out << "methods agree: " << (agree ? "yes" : "NO") << "\n";
    if (radicands) {
      out << "distinct eigenvalues:";
      bool first = true;
      for (const BigInt& rho : *radicands) {
        out << (first ? " " : ", ") << eigenvalue_text(rho);
        first = false;
      }
      out << "\n";
    }
    out << report_text(report);
    emit(cfg, out.str());
  }
  return agree ? 0 : 2;
}

int run_pell(const RunConfig& cfg, std::size_t count) {
  const auto solutions = pell_solutions(count);
  if (cfg.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : solutions) {
      auto a = admissible_a_for(s);
      nlohmann::json row{{"x", s.x.get_str()}, {"y", s.y.get_str()}};
      row["a"] = a ? nlohmann::json(a->get_str()) : nlohmann::json();
      rows.push_back(std::move(row));
    }
    emit(cfg, rows.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "x y a\n";
    for (const auto& s : solutions) {
      auto a = admissible_a_for(s);
      out << s.x.get_str() << " " << s.y.get_str() << " "
          << (a ? a->get_str() : "-") << "\n";
    }
    emit(cfg, out.str());
  }
  return 0;
}

int run_export(const RunConfig& cfg, const std::optional<std::string>& c_text,
               const std::optional<std::string>& t_text,
               const std::string& format) {
  if (c_text.has_value() == t_text.has_value())
    throw param_error("export wants exactly one of --c or --t");
  TreeFormat fmt;
  if (format == "edge-list")
    fmt = TreeFormat::edge_list;
  else if (format == "dot")
    fmt = TreeFormat::dot;
  else
    throw param_error("--format must be edge-list or dot");

  const RootedTree tree = c_text
      ? build_c(CsikvariParams::of(parse_int_list(*c_text)), cfg.max_vertices)
      : build_t(parse_t_params(*t_text), cfg.max_vertices);
  emit(cfg, serialize(tree, fmt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectra and certified integral trees of odd diameter"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--max-vertices", cfg.max_vertices,
                 "materialization cap in vertices")
      ->envname("INTEGRA_MAX_VERTICES");
  auto* oracle_max_opt =
      app.add_option("--oracle-max", cfg.oracle_max_vertices,
                     "brute-force oracle cap in vertices")
          ->envname("INTEGRA_ORACLE_MAX");

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", cfg.out_path, "write output to a file");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate and certify a family instance");
  std::optional<std::string> gen_family, gen_k, gen_a;
  std::optional<std::size_t> gen_n, gen_diameter;
  std::size_t gen_index = 0;
  gen->add_option("--family", gen_family, "4k1 or 4k3");
  gen->add_option("--k", gen_k, "k parameter (4k1 family)");
  gen->add_option("--a", gen_a, "a parameter (4k3 family)");
  gen->add_option("--n", gen_n, "construction depth n");
  gen->add_option("--diameter", gen_diameter, "odd target diameter >= 5");
  gen->add_option("--index", gen_index, "instance index within the diameter");
  add_output_flags(gen);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial and spectrum");
  std::optional<std::string> spec_c, spec_t;
  std::string spec_method = "closed";
  spectrum->add_option("--c", spec_c, "C parameters r1,...,rn");
  spectrum->add_option("--t", spec_t, "T parameters r,r0,r1,...,rn");
  spectrum->add_option("--method", spec_method, "closed, oracle or both");
  add_output_flags(spectrum);

  // pell
  auto* pell = app.add_subcommand("pell", "solutions of x^2 - 3y^2 = -2");
  std::size_t pell_count = 0;
  pell->add_option("--count", pell_count, "how many solutions")->required();
  add_output_flags(pell);

  // export
  auto* exp = app.add_subcommand("export", "write a constructed tree");
  std::optional<std::string> exp_c, exp_t;
  std::string exp_format;
  exp->add_option("--c", exp_c, "C parameters r1,...,rn");
  exp->add_option("--t", exp_t, "T parameters r,r0,r1,...,rn");
  exp->add_option("--format", exp_format, "edge-list or dot")->required();
  exp->add_option("--out", cfg.out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cfg.oracle_max_vertices > cfg.max_vertices) {
      // an explicit contradiction is an error; the untouched default clamps
      if (oracle_max_opt->count() > 0)
        throw param_error("--oracle-max cannot exceed --max-vertices");
      cfg.oracle_max_vertices = cfg.max_vertices;
    }
    if (gen->parsed())
      return run_gen(cfg, gen_family, gen_k, gen_a, gen_n, gen_diameter, gen_index);
    if (spectrum->parsed()) return run_spectrum(cfg, spec_c, spec_t, spec_method);
    if (pell->parsed()) return run_pell(cfg, pell_count);
    if (exp->parsed()) return run_export(cfg, exp_c, exp_t, exp_format);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
