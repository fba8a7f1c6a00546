#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crnreduce/crnparse.hpp"
#include "crnreduce/reduce.hpp"
#include "crnreduce/validate.hpp"

namespace crnreduce::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::map<std::string, TotalValue> parse_totals(const std::vector<std::string>& items) {
  std::map<std::string, TotalValue> out;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw Error(ErrorCode::invalid_argument, "total binding '" + item + "' is not NAME=VALUE or NAME=@SYMBOL");
    }
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (value.front() == '@') {
      if (value.size() == 1) throw Error(ErrorCode::invalid_argument, "empty symbol in '" + item + "'");
      out.insert_or_assign(name, TotalValue(Symbol::total(value.substr(1))));
      continue;
    }
    Rational v = parse_rational(value);
    if (v <= 0) throw Error(ErrorCode::invalid_argument, "total '" + name + "' must be positive");
    out.insert_or_assign(name, TotalValue(v));
  }
  return out;
}

std::string component_nodes(const ElimGraph& g, std::size_t c) {
  std::vector<std::string> names;
  for (int v : g.components.at(c).nodes) names.push_back(g.node_name(v));
  return "{" + join(names) + "}";
}

std::string elimination_comments(const ReducedNetwork& r) {
  std::ostringstream out;
  if (r.eliminated.empty()) return "# nothing eliminated\n";
  out << "# eliminated: " << join(r.eliminated) << "\n";
  for (const auto& f : r.elimination.factors) {
    out << "# component " << f.component + 1 << " " << component_nodes(r.graph, f.component);
    if (f.total) {
      out << ", total " << f.total_name;
      if (to_string(*f.total) != f.total_name) out << " = " << to_string(*f.total);
    } else {
      out << ", contains *";
    }
    out << ": q = " << f.q.to_string() << "\n";
  }
  for (std::size_t i = 0; i < r.eliminated.size(); ++i) {
    out << "# phi [" << r.eliminated[i] << "] = " << r.elimination.phi[i].to_string() << "\n";
  }
  for (const auto& d : r.elimination.domain_note) {
    if (!d.num().is_constant()) out << "# domain: " << d.to_string() << " != 0\n";
  }
  return out.str();
}

json elimination_json(const ReducedNetwork& r) {
  json e;
  e["eliminated"] = r.eliminated;
  e["factors"] = json::array();
  for (const auto& f : r.elimination.factors) {
    json jf;
    jf["component"] = f.component + 1;
    std::vector<std::string> nodes;
    for (int v : r.graph.components.at(f.component).nodes) nodes.push_back(r.graph.node_name(v));
    jf["nodes"] = nodes;
    jf["total_name"] = f.total ? json(f.total_name) : json(nullptr);
    jf["total"] = f.total ? json(to_string(*f.total)) : json(nullptr);
    jf["q"] = f.q.to_string();
    e["factors"].push_back(jf);
  }
  json phi = json::object();
  for (std::size_t i = 0; i < r.eliminated.size(); ++i) phi[r.eliminated[i]] = r.elimination.phi[i].to_string();
  e["phi"] = phi;
  e["domain"] = json::array();
  for (const auto& d : r.elimination.domain_note) {
    if (!d.num().is_constant()) e["domain"].push_back(d.to_string());
  }
  return e;
}

json reduced_json(const ReducedNetwork& r) {
  json doc = json::parse(serialize_network(r.network, Format::json));
  doc["elimination"] = elimination_json(r);
  return doc;
}

std::string reduced_dsl(const ReducedNetwork& r) {
  return serialize_network(r.network, Format::dsl) + elimination_comments(r);
}

void print_laws(std::ostream& out, const std::string& title, const std::vector<std::string>& species,
                const RationalMatrix& laws) {
  out << title << " (" << laws.size() << "):\n";
  for (const auto& w : laws) out << "  " << law_to_string(species, w) << "\n";
}

struct Common {
  std::string path;
  std::string eliminate;
  bool eliminate_given = false;
  std::vector<std::string> totals;
  bool no_collapse = false;
  std::size_t max_trees = default_max_trees;
  std::size_t max_cycles = default_max_cycles;
};

ReduceOptions reduce_options(const Common& c) {
  ReduceOptions opts;
  opts.collapse = !c.no_collapse;
  opts.max_trees = c.max_trees;
  opts.max_cycles = c.max_cycles;
  opts.totals = parse_totals(c.totals);
  return opts;
}

int cmd_reduce(const Common& c, const std::vector<std::string>& then, const std::string& format, std::istream& in,
               std::ostream& out) {
  ReactionNetwork net = load_network(read_input(c.path, in));
  ReduceOptions opts = reduce_options(c);
  auto first = split_list(c.eliminate);
  if (then.empty()) {
    ReducedNetwork r = reduce_network(net, first, opts);
    out << (format == "json" ? reduced_json(r).dump(2) + "\n" : reduced_dsl(r));
    return exit_ok;
  }

  std::vector<std::vector<std::string>> chain{first};
  for (const auto& step : then) {
    auto next = chain.back();
    for (const auto& s : split_list(step)) next.push_back(s);
    chain.push_back(next);
  }
  IterativeResult res = iterative_reduce(net, chain, opts);
  if (format == "json") {
    json doc;
    doc["steps"] = json::array();
    for (const auto& s : res.steps) doc["steps"].push_back(reduced_json(s));
    doc["direct"] = res.direct ? reduced_json(*res.direct) : json(nullptr);
    if (!res.direct) doc["direct_error"] = res.direct_error;
    doc["equivalent"] = res.equivalent;
    doc["differences"] = res.differences;
    out << doc.dump(2) << "\n";
    return exit_ok;
  }
  for (std::size_t i = 0; i < res.steps.size(); ++i) {
    std::vector<std::string> added;
    for (const auto& s : chain[i]) {
      if (i == 0 || std::find(chain[i - 1].begin(), chain[i - 1].end(), s) == chain[i - 1].end()) added.push_back(s);
    }
    out << "# step " << i + 1 << ": eliminate " << join(added) << "\n" << reduced_dsl(res.steps[i]) << "\n";
  }
  if (res.direct) {
    out << "# direct elimination of " << join(res.direct->eliminated) << "\n" << reduced_dsl(*res.direct) << "\n";
  }
  if (res.equivalent) {
    out << "# iterative and direct reductions agree\n";
  } else {
    out << "# iterative and direct reductions differ:\n";
    for (const auto& d : res.differences) out << "#   " << d << "\n";
  }
  return exit_ok;
}

int cmd_conslaws(const Common& c, std::istream& in, std::ostream& out) {
  ReactionNetwork net = load_network(read_input(c.path, in));
  auto basis = conservation_basis(net);
  print_laws(out, "conservation laws", net.species, basis.vectors);
  if (!c.eliminate_given) return exit_ok;

  ReducedNetwork r = reduce_network(net, split_list(c.eliminate), reduce_options(c));
  const auto& species = r.network.species;
  RationalMatrix projected;
  for (const auto& w : basis.vectors) {
    std::vector<Rational> z;
    for (const auto& s : species) z.push_back(w[net.species_index(s)]);
    projected.push_back(std::move(z));
  }
  projected = rref(projected);
  auto reduced = conservation_basis(r.network).vectors;
  print_laws(out, "projected laws", species, projected);
  print_laws(out, "reduced laws", species, reduced);
  bool strong = std::all_of(r.graph.components.begin(), r.graph.components.end(),
                            [](const GraphComponent& g) { return g.strongly_connected; });
  out << "every component strongly connected: " << (strong ? "yes" : "no") << "\n";
  if (same_row_space(projected, reduced, species.size())) {
    out << "projected laws span the reduced laws\n";
  } else {
    out << "projected laws span a proper subspace of the reduced laws (dimension " << projected.size() << " < "
        << reduced.size() << ")\n";
  }
  return exit_ok;
}

int cmd_validate(const Common& c, const std::string& checks_arg, const std::string& compare, std::uint64_t seed,
                 std::size_t points, const std::string& format, std::istream& in, std::ostream& out) {
  static const std::vector<std::string> all = {"ode", "phi", "conservation", "standard", "cycle-space"};
  std::vector<std::string> checks = checks_arg.empty() ? all : split_list(checks_arg);
  for (const auto& name : checks) {
    if (std::find(all.begin(), all.end(), name) == all.end()) {
      throw Error(ErrorCode::invalid_argument, "unknown check '" + name + "' (known: " + join(all) + ")");
    }
  }
  auto wants = [&](const std::string& name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };

  ReactionNetwork net = load_network(read_input(c.path, in));
  ReducedNetwork r = reduce_network(net, split_list(c.eliminate), reduce_options(c));
  ReactionNetwork candidate = r.network;
  if (!compare.empty()) candidate = load_network(read_input(compare, in));

  ValidationReport report;
  report.seed = seed;
  SamplingOptions sampling{seed, points};
  if (wants("ode")) report.append(check_ode_equivalence(net, r.eliminated, candidate, closed_totals(r), sampling));
  if (wants("phi")) report.append(check_phi_oracle(net, r));
  if (wants("conservation")) report.append(check_conservation_projection(net, r.eliminated, candidate));
  if (wants("standard")) report.append(check_standardness(net, candidate, r.elimination.domain_note));
  if (wants("cycle-space")) report.append(check_cycle_space(r.graph, c.max_cycles));
  out << (format == "json" ? report.to_json() : report.to_text());
  return report.passed() ? exit_ok : exit_validation;
}

int cmd_graph(const Common& c, std::istream& in, std::ostream& out) {
  ReactionNetwork net = load_network(read_input(c.path, in));
  out << export_dot(build_elimination_graph(net, split_list(c.eliminate)));
  return exit_ok;
}

void add_common(CLI::App* sub, Common& c, bool reduction_flags) {
  sub->add_option("input", c.path, "Network file (DSL or JSON), - for stdin")->required();
  sub->add_option("--eliminate,-e", c.eliminate, "Comma-separated species to eliminate");
  if (!reduction_flags) return;
  sub->add_option("--total", c.totals, "Bind a generated total: NAME=NUMBER or NAME=@SYMBOL");
  sub->add_flag("--no-collapse", c.no_collapse, "Keep parallel reduced reactions separate");
  sub->add_option("--max-trees", c.max_trees, "Limit on spanning trees per enumeration");
  sub->add_option("--max-cycles", c.max_cycles, "Limit on enumerated cycles");
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_noninteracting:
    case ErrorCode::not_u_linear:
    case ErrorCode::not_linearly_eliminable:
    case ErrorCode::limit_exceeded:
    case ErrorCode::total_required:
    case ErrorCode::total_forbidden:
    case ErrorCode::step_not_eliminable:
    case ErrorCode::not_ptm_shape:
    case ErrorCode::singular_system:
      return exit_eligibility;
    case ErrorCode::symbolic_check_failed:
      return exit_validation;
    default:
      return exit_input;
  }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduce reaction networks by eliminating species at steady state"};
  app.name("crnreduce");
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> then;
  std::string format = "dsl";
  auto* reduce = app.add_subcommand("reduce", "Print the reduced network");
  add_common(reduce, common, true);
  reduce->add_option("--then", then, "Eliminate these species in a further step (repeatable)");
  reduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"dsl", "json"}));

  auto* conslaws = app.add_subcommand("conslaws", "Print conservation laws, projected ones with --eliminate");
  add_common(conslaws, common, true);

  std::string checks;
  std::string compare;
  std::uint64_t seed = SamplingOptions{}.seed;
  std::size_t points = SamplingOptions{}.points;
  std::string report_format = "text";
  auto* validate = app.add_subcommand("validate", "Check a reduction; exit 3 on failure");
  add_common(validate, common, true);
  validate->add_option("--checks", checks, "Comma-separated subset of ode,phi,conservation,standard,cycle-space");
  validate->add_option("--compare-against", compare, "Validate this network instead of the computed reduction");
  validate->add_option("--seed", seed, "Seed for sampled points");
  validate->add_option("--points", points, "Number of sampled points");
  validate->add_option("--format", report_format, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* graph = app.add_subcommand("graph", "Print the elimination graph as DOT");
  add_common(graph, common, false);

  std::vector<const char*> argv{"crnreduce"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  for (auto* sub : {reduce, conslaws, validate, graph}) {
    if (sub->parsed() && sub->count("--eliminate") > 0) common.eliminate_given = true;
  }
  try {
    if (reduce->parsed()) return cmd_reduce(common, then, format, in, out);
    if (conslaws->parsed()) return cmd_conslaws(common, in, out);
    if (validate->parsed()) {
      return cmd_validate(common, checks, compare, seed, points, report_format, in, out);
    }
    return cmd_graph(common, in, out);
  } catch (const Error& e) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
}

}  // namespace crnreduce::cli
