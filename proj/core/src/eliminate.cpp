#include "crnreduce/eliminate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "crnreduce/error.hpp"

namespace crnreduce {

RationalFunction to_rational_function(const TotalValue& t) {
  if (const auto* s = std::get_if<Symbol>(&t)) return RationalFunction(*s);
  return RationalFunction(std::get<Rational>(t));
}

std::string to_string(const TotalValue& t) {
  if (const auto* s = std::get_if<Symbol>(&t)) return s->to_string();
  return to_string(std::get<Rational>(t));
}

std::vector<std::vector<int>> star_blocks(const ElimGraph& g, std::size_t component) {
  const auto& c = g.components.at(component);
  if (!c.contains_star) return {c.nodes};
  const int n = g.node_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int eid : c.edges) {
    const auto& e = g.edges[eid];
    if (g.is_star(e.source) || g.is_star(e.target)) continue;
    int a = find(e.source);
    int b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v : c.nodes) {
    if (!g.is_star(v)) groups[find(v)].push_back(v);
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [root, nodes] : groups) {
    nodes.push_back(g.star());
    blocks.push_back(std::move(nodes));
  }
  return blocks;  // map order = smallest node order, since roots are minima
}

ComponentFactor component_factor(const ElimGraph& g, std::size_t component, const std::optional<TotalValue>& total,
                                 std::size_t max_trees) {
  const auto& c = g.components.at(component);
  ComponentFactor f;
  f.component = component;
  f.with_star = c.contains_star;
  f.total = total;
  auto not_eliminable = [&]() {
    std::string names;
    for (int v : c.nodes) names += (names.empty() ? "" : ", ") + g.node_name(v);
    return Error(ErrorCode::not_linearly_eliminable, "component {" + names + "} has an empty tree sum");
  };
  if (c.contains_star) {
    if (total) throw Error(ErrorCode::total_forbidden, "a component containing * takes no total amount");
    RationalFunction product(1);
    for (const auto& block : star_blocks(g, component)) {
      RationalFunction s = tree_label_sum(g, block, g.star(), max_trees);
      if (s.is_zero()) throw not_eliminable();
      f.denominators.push_back(s);
      product *= s;
    }
    f.q = RationalFunction(1) / product;
    return f;
  }
  if (!total) throw Error(ErrorCode::total_required, "a component without * needs a total amount");
  RationalFunction s;
  for (int v : c.nodes) s += tree_label_sum(g, c.nodes, v, max_trees);
  if (s.is_zero()) throw not_eliminable();
  f.denominators.push_back(s);
  f.q = to_rational_function(*total) / s;
  return f;
}

EliminationResult phi(const ElimGraph& g, const std::vector<ComponentFactor>& factors, std::size_t max_trees) {
  EliminationResult out;
  out.u_species = g.u_species;
  out.factors = factors;
  std::map<std::size_t, const ComponentFactor*> by_component;
  for (const auto& f : factors) by_component[f.component] = &f;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (!by_component.count(i)) {
      throw Error(ErrorCode::invalid_argument, "no factor for component " + std::to_string(i + 1));
    }
  }
  for (int v = 0; v < static_cast<int>(g.u_species.size()); ++v) {
    std::size_t comp = static_cast<std::size_t>(g.component_of[v]);
    const ComponentFactor& f = *by_component.at(comp);
    if (!f.with_star) {
      out.phi.push_back(f.q * tree_label_sum(g, g.components[comp].nodes, v, max_trees));
      continue;
    }
    auto blocks = star_blocks(g, comp);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (std::find(blocks[b].begin(), blocks[b].end(), v) == blocks[b].end()) continue;
      out.phi.push_back(tree_label_sum(g, blocks[b], v, max_trees) / f.denominators.at(b));
      break;
    }
  }
  for (const auto& f : factors) {
    out.domain_note.insert(out.domain_note.end(), f.denominators.begin(), f.denominators.end());
  }
  return out;
}

TotalAssignment assign_totals(const ElimGraph& g, const std::set<std::string>& taken, int& next_index,
                              const std::map<std::string, TotalValue>& bindings) {
  TotalAssignment out;
  std::set<std::string> used;
  for (const auto& c : g.components) {
    if (c.contains_star) {
      out.values.push_back(std::nullopt);
      out.names.emplace_back();
      continue;
    }
    std::string name;
    do {
      name = "T" + std::to_string(next_index++);
    } while (taken.count(name));
    used.insert(name);
    auto it = bindings.find(name);
    out.values.push_back(it == bindings.end() ? TotalValue(Symbol::total(name)) : it->second);
    out.names.push_back(name);
  }
  for (const auto& [name, value] : bindings) {
    if (!used.count(name)) {
      throw Error(ErrorCode::invalid_argument,
                  "total '" + name + "' does not belong to a component without *");
    }
  }
  return out;
}

std::set<std::string> used_names(const ReactionNetwork& net) {
  std::set<std::string> out(net.species.begin(), net.species.end());
  for (const auto& r : net.reactions) {
    for (const auto& s : rate_function(r).symbols()) out.insert(s.name());
  }
  return out;
}

EliminationResult eliminate(const ElimGraph& g, const std::vector<std::optional<TotalValue>>& totals,
                            std::size_t max_trees) {
  if (totals.size() != g.components.size()) {
    throw Error(ErrorCode::invalid_argument, "one total entry per component is required");
  }
  std::vector<ComponentFactor> factors;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    factors.push_back(component_factor(g, i, totals[i], max_trees));
  }
  return phi(g, factors, max_trees);
}

SteadyStateReport verify_steady_state(const ReactionNetwork& net, const std::vector<std::string>& u,
                                      const EliminationResult& result) {
  SteadyStateReport report;
  auto ordered = ordered_subset(net, u);
  if (ordered != result.u_species) {
    report.ok = false;
    report.counterexample = "eliminated species do not match the elimination result";
    return report;
  }
  Binding binding;
  for (std::size_t i = 0; i < ordered.size(); ++i) binding[concentration_symbol(ordered[i])] = result.phi[i];
  auto rhs = ode_rhs(net);
  for (const auto& name : ordered) {
    RationalFunction value = substitute(rhs[net.species_index(name)], binding);
    if (!value.is_zero()) {
      report.ok = false;
      report.counterexample = "d[" + name + "]/dt = " + value.to_string() + " after substitution";
      return report;
    }
  }
  ElimGraph g = build_elimination_graph(net, u);
  for (const auto& f : result.factors) {
    if (f.with_star || !f.total) continue;
    RationalFunction sum;
    for (int v : g.components.at(f.component).nodes) sum += result.phi.at(v);
    if (!sum.equivalent(to_rational_function(*f.total))) {
      report.ok = false;
      report.counterexample = "component " + std::to_string(f.component + 1) + ": phi sums to " + sum.to_string() +
                              " instead of " + to_string(*f.total);
      return report;
    }
  }
  return report;
}

}  // namespace crnreduce
