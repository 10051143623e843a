#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it with
// in-memory streams.

#include "hilbertkit/chern.hpp"
#include "hilbertkit/grobner.hpp"
#include "hilbertkit/partition.hpp"
#include "hilbertkit/poly_io.hpp"
#include "hilbertkit/reductions.hpp"
#include "hilbertkit/symfun.hpp"
#include "hilbertkit/transversality.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace hilbertkit::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kError = 1, kDisagreement = 2, kResourceCap = 3, kParseError = 4 };

struct Config {
  std::uint64_t seed = 1;
  std::size_t max_basis = GrobnerLimits{}.max_basis;
  unsigned max_degree = GrobnerLimits{}.max_degree;
  std::string output = "json";

  GrobnerLimits limits() const { return GrobnerLimits{max_basis, max_degree}; }
};

struct Result {
  Json json;
  std::vector<std::string> text;
  int code = kOk;
};

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Json rational_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

inline Json poly_json(const UniPoly& p) {
  return Json{{"polynomial", p.to_string()}, {"coefficients", rational_list(p.coefficients())}};
}

inline Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_list(m.row(i)));
  return rows;
}

inline std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> x;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) x.push_back(parse_rational(tok));
  if (x.empty()) throw ParseError("empty point");
  return x;
}

inline Partition parse_partition_arg(const std::string& text) {
  return parse_partition(text.empty() || text.front() != '[' ? "[" + text + "]" : text);
}

}  // namespace detail

inline Result cmd_hilbert(const std::string& path, const Config& cfg) {
  auto file = parse_ideal_text(detail::read_input(path));
  Ideal I(file.variables, file.generators);
  HilbertData h = hilbert_data(I, MonomialOrder::grevlex(), cfg.limits());
  Result r;
  r.json["variables"] = file.variables;
  r.json["generators"] = file.generators.size();
  r.json["hilbert_polynomial"] = detail::poly_json(h.hilbert_polynomial);
  r.json["series_numerator"] = h.reduced_numerator.to_string("t");
  r.json["krull_dimension"] = h.dimension;
  r.json["projective_dimension"] = h.projective_dimension();
  r.json["index_of_regularity"] = h.index_of_regularity;
  Json hf = Json::array();
  for (long k = 0; k <= static_cast<long>(h.index_of_regularity) + 2; ++k)
    hf.push_back(detail::integer_json(h.hilbert_function(k)));
  r.json["hilbert_function"] = hf;
  std::string line = "p(T)=" + h.hilbert_polynomial.to_string();
  if (h.hilbert_polynomial.is_zero()) {
    r.json["degree"] = 0;
    r.json["arithmetic_genus"] = nullptr;
  } else {
    r.json["degree"] = detail::integer_json(h.geometric_degree());
    r.json["arithmetic_genus"] = to_string(h.arithmetic_genus());
    line += ", deg=" + to_string(h.geometric_degree()) + ", genus=" + to_string(h.arithmetic_genus());
  }
  r.text.push_back(line);
  return r;
}

inline Result cmd_ci(const CompleteIntersection& ci, bool with_grobner, const Config& cfg) {
  UniPoly hrr = hilbert_poly_hrr(ci);
  UniPoly chars = hilbert_poly_characters(ci);
  UniPoly oracle = ci_hilbert_series_oracle(ci);
  bool agree = hrr == chars && chars == oracle;
  Result r;
  r.json["instance"] = {{"n", ci.n()}, {"degrees", ci.degrees()}, {"m", ci.m()}};
  r.json["hilbert_polynomial"] = detail::poly_json(oracle);
  Json routes{{"hrr", hrr.to_string()}, {"characters", chars.to_string()}, {"series", oracle.to_string()}};
  if (with_grobner) {
    UniPoly g = hilbert_poly_grobner(ci, cfg.seed, cfg.limits());
    routes["grobner"] = g.to_string();
    agree = agree && g == oracle;
  }
  r.json["routes"] = routes;
  r.json["agreement"] = agree;
  r.json["degree"] = detail::integer_json(ci.degree());
  Rational genus = oracle(0) - 1;
  if (ci.m() % 2) genus = -genus;
  r.json["arithmetic_genus"] = to_string(genus);
  r.json["euler_characteristic"] = detail::integer_json(euler_top(ci));
  r.json["chern_tangent"] = detail::rational_list(chern_tangent(ci).coefficients());
  r.json["todd_class"] = detail::rational_list(todd_class(ci).coefficients());
  r.text.push_back("p(T)=" + oracle.to_string() + ", agreement=" + (agree ? "true" : "false"));
  r.code = agree ? kOk : kDisagreement;
  return r;
}

inline Result cmd_characters(const CompleteIntersection& ci) {
  Result r;
  Json table = Json::object();
  for (const auto& [mu, deg] : projective_characters(ci)) {
    table[mu.to_string()] = detail::integer_json(deg);
    r.text.push_back(mu.to_string() + "=" + to_string(deg));
  }
  r.json["instance"] = {{"n", ci.n()}, {"degrees", ci.degrees()}, {"m", ci.m()}};
  r.json["characters"] = table;
  return r;
}

inline Result cmd_delta(unsigned m, unsigned k, unsigned n) {
  DeltaTable t = delta_table(m, k, n);
  Result r;
  Json table = Json::object();
  for (const auto& [mu, v] : t.entries) {
    table[mu.to_string()] = to_string(v);
    r.text.push_back(mu.to_string() + "=" + to_string(v));
  }
  r.json["m"] = m;
  r.json["k"] = k;
  r.json["n"] = n;
  r.json["scaling_factor"] = detail::integer_json(scaling_factor(k, m));
  r.json["delta"] = table;
  return r;
}

inline Result cmd_todd(unsigned m) {
  Result r;
  std::string s = to_string_factored(todd_poly(m));
  r.json["m"] = m;
  r.json["todd"] = s;
  r.text.push_back(s);
  return r;
}

inline Result cmd_reduce_sat(const std::string& path, const std::string& ideal_out, const Config& cfg) {
  CnfFormula phi = parse_dimacs_text(detail::read_input(path));
  Ideal I = sat_to_ideal(phi);
  std::string ideal_text = format_ideal_file(I.variables(), I.generators());
  if (!ideal_out.empty()) {
    std::ofstream out(ideal_out);
    if (!out) throw std::runtime_error("cannot write " + ideal_out);
    out << ideal_text;
  }
  SatReport rep = sat_report(phi, cfg.limits());
  Result r;
  r.json["num_vars"] = phi.num_vars();
  r.json["clauses"] = phi.clauses().size();
  r.json["ideal"] = ideal_text;
  Json v;
  v["count_bruteforce"] = rep.count_bruteforce;
  v["hilbert_constant"] = rep.hilbert_polynomial.degree() <= 0 ? Json(to_string(rep.hilbert_polynomial(0)))
                                                               : Json(rep.hilbert_polynomial.to_string());
  v["zero_dim_count"] = rep.zero_dim_count ? detail::integer_json(*rep.zero_dim_count) : Json("infinite");
  v["agree"] = rep.agree;
  r.json["report"] = v;
  r.json["agreement"] = rep.agree;
  if (ideal_out.empty()) {
    std::istringstream lines(ideal_text);
    for (std::string l; std::getline(lines, l);) r.text.push_back(l);
  }
  r.text.push_back("count=" + std::to_string(rep.count_bruteforce) + ", p(T)=" + rep.hilbert_polynomial.to_string() +
                   ", agreement=" + (rep.agree ? "true" : "false"));
  r.code = rep.agree ? kOk : kDisagreement;
  return r;
}

inline Result cmd_membership(const std::string& path, const std::string& g_text, const Config& cfg) {
  auto file = parse_ideal_text(detail::read_input(path));
  Ideal I(file.variables, file.generators);
  MultiPoly g = parse_poly(g_text, file.variables);
  MembershipReport via_hilbert = membership_via_hilbert(I, g, cfg.limits());
  bool via_normal_form = in_ideal(g, buchberger(I, MonomialOrder::grevlex(), cfg.limits()));
  bool agree = via_hilbert.member == via_normal_form;
  Result r;
  r.json["g"] = to_string(g);
  r.json["member"] = via_normal_form;
  r.json["hilbert_route"] = {{"member", via_hilbert.member},
                             {"without_g", via_hilbert.without_g.to_string()},
                             {"with_g", via_hilbert.with_g.to_string()}};
  r.json["normal_form_route"] = via_normal_form;
  r.json["agreement"] = agree;
  r.text.push_back(std::string("member=") + (via_normal_form ? "true" : "false") +
                   ", agreement=" + (agree ? "true" : "false"));
  r.code = agree ? kOk : kDisagreement;
  return r;
}

inline Result cmd_count(const std::string& path, const Config& cfg) {
  auto file = parse_ideal_text(detail::read_input(path));
  auto count = count_zero_dim(Ideal(file.variables, file.generators), cfg.limits());
  Result r;
  r.json["count"] = count ? detail::integer_json(*count) : Json("infinite");
  r.text.push_back("count=" + (count ? to_string(*count) : std::string("infinite")));
  return r;
}

inline Result cmd_trans(const std::string& path, unsigned dim, const std::string& point, const std::string& partition,
                        const Config& cfg) {
  auto file = parse_ideal_text(detail::read_input(path));
  if (file.variables.size() < 2) throw std::invalid_argument("need at least two variables");
  const unsigned n = static_cast<unsigned>(file.variables.size() - 1);
  InputInstance inst(file.generators, n, dim);
  auto x = detail::parse_point(point);
  Partition mu = detail::parse_partition_arg(partition);
  Flag flag = random_flag(n, cfg.seed);
  TransversalityReport rep = analyze_transversality(inst, x, flag, mu);

  bool agree = true;
  if (rep.on_variety && rep.smooth) agree = in_cell_by_jumps(gauss_point(inst, x), flag, mu) == rep.in_cell;

  Result r;
  r.json["n"] = n;
  r.json["m"] = dim;
  r.json["point"] = detail::rational_list(x);
  r.json["partition"] = mu.to_string();
  r.json["flag_basis"] = detail::matrix_json(flag.basis());
  r.json["on_variety"] = rep.on_variety;
  r.json["smooth"] = rep.smooth;
  r.json["in_cell"] = rep.in_cell;
  r.json["chart"] = rep.chart ? detail::matrix_json(*rep.chart) : Json(nullptr);
  r.json["span_rank"] = rep.span_rank;
  r.json["codimension"] = rep.codimension;
  r.json["transversal"] = rep.transversal ? Json(*rep.transversal) : Json(nullptr);
  r.json["implication_holds"] = rep.implication_holds();
  r.json["agreement"] = agree;
  std::string verdict = rep.transversal ? (*rep.transversal ? "true" : "false") : "undefined";
  r.text.push_back("transversal=" + verdict + ", in_cell=" + (rep.in_cell ? "true" : "false") +
                   ", agreement=" + (agree ? "true" : "false"));
  r.code = agree ? kOk : kDisagreement;
  return r;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert polynomials of projective varieties and complete intersections"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "seed for random flags and generic ideals")->capture_default_str();
  app.add_option("--max-basis", cfg.max_basis, "cap on Groebner basis size")->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "cap on S-polynomial degree")->capture_default_str();
  app.add_option("--output", cfg.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string path, g_text, point, partition, ideal_out;
  unsigned n = 0, m = 0, k = 0, dim = 0;
  std::vector<unsigned> degrees;
  bool with_grobner = false;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert data of a homogeneous ideal file");
  hilbert->add_option("ideal", path)->required();
  auto* ci = app.add_subcommand("ci", "Hilbert polynomial of a complete intersection by every route");
  ci->add_option("n", n)->required();
  ci->add_option("degrees", degrees);
  ci->add_flag("--grobner", with_grobner, "also compute from a random generic ideal");
  auto* characters = app.add_subcommand("characters", "projective characters of a complete intersection");
  characters->add_option("n", n)->required();
  characters->add_option("degrees", degrees);
  auto* delta = app.add_subcommand("delta", "delta coefficients for given m, k, n");
  delta->add_option("m", m)->required();
  delta->add_option("k", k)->required();
  delta->add_option("n", n)->required();
  auto* todd = app.add_subcommand("todd", "Todd polynomial T_m");
  todd->add_option("m", m)->required();
  auto* reduce_sat = app.add_subcommand("reduce-sat", "encode a DIMACS formula as an ideal and verify the count");
  reduce_sat->add_option("cnf", path)->required();
  reduce_sat->add_option("--ideal-out", ideal_out, "write the ideal file here");
  auto* membership = app.add_subcommand("membership", "decide g in I by normal forms and by Hilbert polynomials");
  membership->add_option("ideal", path)->required();
  membership->add_option("g", g_text)->required();
  auto* count = app.add_subcommand("count", "number of affine solutions with multiplicity");
  count->add_option("ideal", path)->required();
  auto* trans = app.add_subcommand("trans", "transversality of the Gauss map to a Schubert cell");
  trans->add_option("instance", path)->required();
  trans->add_option("--dim", dim, "dimension m of the variety")->required();
  trans->add_option("--point", point, "comma-separated coordinates")->required();
  trans->add_option("--partition", partition, "e.g. [1] or 2,1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  Result r;
  std::string name;
  try {
    if (*hilbert) r = cmd_hilbert(path, cfg), name = "hilbert";
    else if (*ci) r = cmd_ci(CompleteIntersection(n, degrees), with_grobner, cfg), name = "ci";
    else if (*characters) r = cmd_characters(CompleteIntersection(n, degrees)), name = "characters";
    else if (*delta) r = cmd_delta(m, k, n), name = "delta";
    else if (*todd) r = cmd_todd(m), name = "todd";
    else if (*reduce_sat) r = cmd_reduce_sat(path, ideal_out, cfg), name = "reduce-sat";
    else if (*membership) r = cmd_membership(path, g_text, cfg), name = "membership";
    else if (*count) r = cmd_count(path, cfg), name = "count";
    else if (*trans) r = cmd_trans(path, dim, point, partition, cfg), name = "trans";
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  if (cfg.output == "json") {
    Json doc{{"schema", 1}, {"command", name}, {"seed", cfg.seed}};
    doc["limits"] = {{"max_basis", cfg.max_basis}, {"max_degree", cfg.max_degree}};
    for (auto& [key, value] : r.json.items()) doc[key] = value;
    out << doc.dump(2) << "\n";
  } else {
    out << "seed=" << cfg.seed << "\n";
    for (const auto& line : r.text) out << line << "\n";
  }
  if (r.code == kDisagreement) err << "routes disagree\n";
  return r.code;
}

}  // namespace hilbertkit::cli
