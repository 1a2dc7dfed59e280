#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lll/checker.hpp"
#include "lll/errors.hpp"
#include "lll/graph.hpp"
#include "lll/oracle.hpp"
#include "lll/random_chordal.hpp"
#include "lll/threshold.hpp"
#include "lll/tree_order.hpp"

namespace {

using nlohmann::json;

// 0 in family / success, 1 out of family, 2 invalid input, 3 not chordal,
// 4 oracle cap exceeded, 5 internal error.
enum ExitCode {
  kOk = 0,
  kOutOfFamily = 1,
  kInvalidInput = 2,
  kNotChordal = 3,
  kCapExceeded = 4,
  kInternal = 5,
};

lll::GraphFormat parse_format(const std::string& format) {
  if (format == "json") return lll::GraphFormat::json;
  if (format == "edgelist") return lll::GraphFormat::edgelist;
  throw std::invalid_argument("unknown format '" + format + "'");
}

lll::LabeledGraph load_graph(const std::string& path,
                             const std::string& format) {
  lll::GraphFormat f = parse_format(format);
  if (path == "-") return lll::parse_graph(std::cin, f);
  std::ifstream in(path);
  if (!in) throw lll::ParseError("cannot open '" + path + "'");
  return lll::parse_graph(in, f);
}

lll::LabeledGraph apply_uniform(const lll::LabeledGraph& g,
                                const std::string& p) {
  return p.empty() ? g : g.with_uniform_label(lll::parse_rational(p));
}

std::string double_str(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int run_check(const lll::LabeledGraph& g, bool use_float) {
  lll::TreeOrder order = lll::build_tree_order(g);
  json out;
  bool in_family;
  if (use_float) {
    lll::FloatCheckReport rep = lll::check_membership_float(g, order);
    in_family = rep.in_family;
    out["verdict"] = rep.in_family ? "in_L" : "out_of_L";
    out["mode"] = "float";
    out["exact_rerun"] = rep.exact_rerun;
    out["bound_decimal"] =
        rep.in_family ? json(double_str(rep.bound)) : json(nullptr);
    json x = json::object();
    for (int v : rep.order) {
      if (!std::isnan(rep.x[v])) x[g.name_of(v)] = double_str(rep.x[v]);
      if (rep.witness && v == *rep.witness) break;
    }
    out["x"] = std::move(x);
    out["witness"] = rep.witness ? json(g.name_of(*rep.witness)) : json(nullptr);
  } else {
    lll::CheckReport rep = lll::check_membership(g, order);
    in_family = rep.in_family;
    out["verdict"] = rep.in_family ? "in_L" : "out_of_L";
    out["bound"] =
        rep.bound ? json(lll::to_fraction_string(*rep.bound)) : json(nullptr);
    out["bound_decimal"] =
        rep.bound ? json(lll::to_decimal_string(*rep.bound)) : json(nullptr);
    json x = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (rep.x[v]) x[g.name_of(v)] = lll::to_fraction_string(*rep.x[v]);
    }
    out["x"] = std::move(x);
    out["witness"] = rep.witness ? json(g.name_of(*rep.witness)) : json(nullptr);
  }
  std::cout << out.dump(2) << "\n";
  return in_family ? kOk : kOutOfFamily;
}

int run_order(const lll::LabeledGraph& g) {
  lll::TreeOrder order = lll::build_tree_order(g);
  json out = json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    int s = order.successor(v);
    out[g.name_of(v)] = s == -1 ? json(nullptr) : json(g.name_of(s));
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_oracle(const lll::LabeledGraph& g, int cap) {
  lll::ShearerReport rep = lll::shearer_check(g, cap);
  json out;
  out["verdict"] = rep.in_family ? "in_L" : "out_of_L";
  out["sigma_empty"] = lll::to_fraction_string(rep.sigma_empty);
  out["min_sigma"] = lll::to_fraction_string(rep.min_sigma);
  if (rep.witness) {
    json w = json::array();
    for (int v : lll::mask_vertices(*rep.witness)) w.push_back(g.name_of(v));
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  std::cout << out.dump(2) << "\n";
  return rep.in_family ? kOk : kOutOfFamily;
}

int run_threshold(const lll::LabeledGraph& g, const std::string& tol_text) {
  lll::Rational tol = lll::parse_rational(tol_text);
  lll::TreeOrder order = lll::build_tree_order(g);
  lll::ThresholdReport bisect = lll::threshold_bisect(g, order, tol);
  lll::CriticalPolynomial critical = lll::critical_polynomial(g, order, tol);
  if (critical.bracket_lo > bisect.hi + tol ||
      critical.bracket_hi < bisect.lo - tol) {
    throw std::logic_error(
        "symbolic root bracket disagrees with the bisection bracket");
  }
  json out;
  out["lo"] = lll::to_fraction_string(bisect.lo);
  out["hi"] = lll::to_fraction_string(bisect.hi);
  out["lo_decimal"] = lll::to_decimal_string(bisect.lo);
  out["hi_decimal"] = lll::to_decimal_string(bisect.hi);
  out["critical_vertex"] = g.name_of(bisect.critical_vertex);
  json coeffs = json::array();
  for (const lll::Integer& c : critical.poly.coefficients()) {
    coeffs.push_back(c.get_str());
  }
  out["poly_coeffs"] = std::move(coeffs);
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_gen(int n, std::uint64_t seed, const std::string& p, int max_den,
            const std::string& format) {
  lll::LabelMode mode;
  if (!p.empty()) mode.uniform = lll::parse_rational(p);
  mode.max_denominator = max_den;
  lll::LabeledGraph g = lll::random_chordal(n, seed, mode);
  std::cout << lll::serialize_graph(g, parse_format(format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shearer-family membership for probability-labeled chordal graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "json";
  std::string uniform_p;
  std::string tol = "1/1000000";
  int cap = lll::kDefaultOracleCap;
  bool use_float = false;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  int gen_max_den = 64;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "graph file, or - for stdin");
    cmd->add_option("--format", format, "json or edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));
  };

  CLI::App* check = app.add_subcommand(
      "check", "decide membership via the lefthanded recursion");
  add_input(check);
  check->add_option("--p", uniform_p, "override every label with this rational");
  check->add_flag("--float", use_float,
                  "double-precision fast path (near-boundary verdicts are "
                  "re-run exactly)");

  CLI::App* order = app.add_subcommand(
      "order", "emit the constructed lefthanded successor forest");
  add_input(order);

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force Shearer criterion (exponential, small graphs)");
  add_input(oracle);
  oracle->add_option("--p", uniform_p, "override every label with this rational");
  oracle->add_option("--cap", cap, "vertex-count cap for the enumeration")
      ->check(CLI::Range(0, lll::kOracleHardCap));

  CLI::App* threshold = app.add_subcommand(
      "threshold", "locate the uniform-label membership threshold");
  add_input(threshold);
  threshold->add_option("--tol", tol, "bracket width tolerance (rational)");

  CLI::App* gen =
      app.add_subcommand("gen", "emit a random labeled chordal graph");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--p", uniform_p, "uniform label (default: random rationals)");
  gen->add_option("--max-den", gen_max_den,
                  "denominator bound for random labels");
  gen->add_option("--format", format, "json or edgelist")
      ->check(CLI::IsMember({"json", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*gen) return run_gen(gen_n, gen_seed, uniform_p, gen_max_den, format);
    lll::LabeledGraph g = apply_uniform(load_graph(input, format), uniform_p);
    if (*check) return run_check(g, use_float);
    if (*order) return run_order(g);
    if (*oracle) return run_oracle(g, cap);
    if (*threshold) return run_threshold(g, tol);
    return kInvalidInput;
  } catch (const lll::NotChordalError& e) {
    json out;
    out["error"] = "not chordal";
    out["witness"] = {e.witness()[0], e.witness()[1], e.witness()[2]};
    std::cout << out.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kNotChordal;
  } catch (const lll::CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return kCapExceeded;
  } catch (const lll::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  } catch (const lll::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
