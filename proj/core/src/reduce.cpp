#include "crnreduce/reduce.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "crnreduce/error.hpp"

namespace crnreduce {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

const Reaction& reaction_by_id(const ReactionNetwork& net, int id) {
  for (const auto& r : net.reactions) {
    if (r.id == id) return r;
  }
  throw Error(ErrorCode::invalid_argument, "no reaction with id " + std::to_string(id));
}

RationalFunction sum_labels(const ElimGraph& g, const std::vector<InTree>& trees) {
  RationalFunction total;
  for (const auto& t : trees) total += label_product(g, t);
  return total;
}

/// Node set used for the reduced rate of a cycle: the star block holding the
/// cycle in a star component, the whole component otherwise; `block` receives
/// the block index (0 without star).
std::vector<int> cycle_nodes(const ElimGraph& g, const Cycle& sigma, std::size_t& block) {
  int anchor = g.edges.at(sigma.front()).source;
  for (int eid : sigma) {
    if (!g.is_star(g.edges[eid].source)) anchor = g.edges[eid].source;
  }
  std::size_t comp = static_cast<std::size_t>(g.component_of.at(anchor));
  block = 0;
  if (!g.components[comp].contains_star) return g.components[comp].nodes;
  auto blocks = star_blocks(g, comp);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::find(blocks[b].begin(), blocks[b].end(), anchor) != blocks[b].end()) {
      block = b;
      return blocks[b];
    }
  }
  return g.components[comp].nodes;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const ElimGraph& g, std::size_t max_cycles) {
  const int n = g.node_count();
  std::vector<std::vector<int>> out(n);
  for (const auto& e : g.edges) out[e.source].push_back(e.id);
  std::vector<Cycle> cycles;
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  for (int s = 0; s < n; ++s) {
    std::function<void(int)> walk = [&](int v) {
      for (int eid : out[v]) {
        int t = g.edges[eid].target;
        if (t == s) {
          Cycle c = path;
          c.push_back(eid);
          std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
          cycles.push_back(std::move(c));
          if (cycles.size() > max_cycles) {
            throw Error(ErrorCode::limit_exceeded,
                        "more than " + std::to_string(max_cycles) + " cycles (max_cycles)");
          }
        } else if (t > s && !on_path[t]) {
          on_path[t] = 1;
          path.push_back(eid);
          walk(t);
          path.pop_back();
          on_path[t] = 0;
        }
      }
    };
    on_path[s] = 1;
    walk(s);
    on_path[s] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<InTree> gamma(const ElimGraph& g, const std::vector<int>& nodes, const Cycle& sigma,
                          std::size_t edge_pos, std::size_t max_trees) {
  const auto& e = g.edges.at(sigma.at(edge_pos));
  std::map<int, int> forced;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i != edge_pos) forced[g.edges.at(sigma[i]).source] = sigma[i];
  }
  auto trees = spanning_in_trees(g, nodes, e.source, max_trees, forced);
  for (auto& t : trees) {
    t.insert(std::lower_bound(t.begin(), t.end(), e.id), e.id);
  }
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::vector<InTree> gamma(const ElimGraph& g, const Cycle& sigma, std::size_t edge_pos, std::size_t max_trees) {
  int node = g.edges.at(sigma.at(0)).source;
  return gamma(g, g.components.at(g.component_of.at(node)).nodes, sigma, edge_pos, max_trees);
}

RationalFunction big_pi(const ElimGraph& g, const Cycle& sigma, std::size_t max_trees) {
  return sum_labels(g, gamma(g, sigma, 0, max_trees));
}

std::map<std::string, Rational> cycle_change(const ReactionNetwork& net, const ElimGraph& g, const Cycle& sigma) {
  std::set<std::string> u(g.u_species.begin(), g.u_species.end());
  std::map<std::string, Rational> change;
  for (int eid : sigma) {
    const Reaction& r = reaction_by_id(net, g.edges.at(eid).reaction_id);
    for (const auto& [s, c] : r.product.coefficients()) {
      if (!u.count(s)) change[s] += c;
    }
    for (const auto& [s, c] : r.reactant.coefficients()) {
      if (!u.count(s)) change[s] -= c;
    }
  }
  std::erase_if(change, [](const auto& kv) { return kv.second == 0; });
  return change;
}

std::vector<Cycle> delta(const ReactionNetwork& net, const ElimGraph& g, const std::vector<Cycle>& cycles,
                         std::size_t max_trees) {
  std::vector<Cycle> out;
  for (const auto& sigma : cycles) {
    if (cycle_change(net, g, sigma).empty()) continue;
    std::size_t block = 0;
    if (gamma(g, cycle_nodes(g, sigma, block), sigma, 0, max_trees).empty()) continue;
    out.push_back(sigma);
  }
  return out;
}

ReducedNetwork reduce_network(const ReactionNetwork& net, const std::vector<std::string>& u,
                              const ReduceOptions& opts) {
  ReducedNetwork result;
  result.next_total_index = opts.first_total_index;
  result.eliminated = ordered_subset(net, u);
  if (result.eliminated.empty()) {
    result.network = net;
    return result;
  }
  result.graph = build_elimination_graph(net, result.eliminated);
  const ElimGraph& g = result.graph;
  auto eligible = is_linearly_eliminable(g);
  if (!eligible.ok) throw Error(ErrorCode::not_linearly_eliminable, join(eligible.problems, "; "));

  auto taken = used_names(net);
  std::map<std::string, TotalValue> bindings = opts.totals;
  if (!opts.strict_totals) {
    int probe = opts.first_total_index;
    auto names = assign_totals(g, taken, probe).names;
    std::erase_if(bindings, [&](const auto& kv) {
      return std::find(names.begin(), names.end(), kv.first) == names.end();
    });
  }
  int next = opts.first_total_index;
  auto totals = assign_totals(g, taken, next, bindings);
  result.next_total_index = next;
  result.elimination = eliminate(g, totals.values, opts.max_trees);
  for (std::size_t i = 0; i < result.elimination.factors.size(); ++i) {
    result.elimination.factors[i].total_name = totals.names[i];
  }

  std::set<std::string> uset(result.eliminated.begin(), result.eliminated.end());
  Binding binding;
  for (std::size_t i = 0; i < result.eliminated.size(); ++i) {
    binding[concentration_symbol(result.eliminated[i])] = result.elimination.phi[i];
  }

  ReactionNetwork& out = result.network;
  for (const auto& s : net.species) {
    if (!uset.count(s)) out.species.push_back(s);
  }
  for (const auto& r : net.reactions) {
    if (g.edge_of_reaction(r.id) >= 0) continue;
    Reaction projected;
    projected.reactant = r.reactant;
    projected.product = r.product;
    projected.provenance = {Provenance{Provenance::Kind::projected, {r.id}}};
    RationalFunction rate = rate_function(r);
    bool touches_u = std::any_of(result.eliminated.begin(), result.eliminated.end(),
                                 [&](const std::string& s) { return rate.contains(concentration_symbol(s)); });
    if (std::holds_alternative<MassAction>(r.kinetics) && !touches_u) {
      projected.kinetics = r.kinetics;
    } else {
      projected.kinetics = General{substitute(rate, binding)};
    }
    out.reactions.push_back(std::move(projected));
  }

  result.cycles = enumerate_cycles(g, opts.max_cycles);
  for (const auto& sigma : result.cycles) {
    auto change = cycle_change(net, g, sigma);
    if (change.empty()) continue;
    std::size_t block = 0;
    const auto nodes = cycle_nodes(g, sigma, block);
    auto trees = gamma(g, nodes, sigma, 0, opts.max_trees);
    if (trees.empty()) continue;
    result.delta.push_back(sigma);

    const auto& factor = result.elimination.factors.at(g.component_of.at(nodes.front()));
    RationalFunction pi = sum_labels(g, trees);
    RationalFunction rate = factor.with_star ? pi / factor.denominators.at(block) : factor.q * pi;

    Reaction cyc;
    Provenance prov{Provenance::Kind::cycle, {}};
    for (int eid : sigma) {
      const Reaction& r = reaction_by_id(net, g.edges[eid].reaction_id);
      cyc.reactant = cyc.reactant + r.reactant.without(uset);
      cyc.product = cyc.product + r.product.without(uset);
      prov.reaction_ids.push_back(r.id);
    }
    cyc.kinetics = General{rate};
    cyc.provenance = {prov};
    out.reactions.push_back(std::move(cyc));
  }

  for (std::size_t i = 0; i < out.reactions.size(); ++i) out.reactions[i].id = static_cast<int>(i) + 1;
  if (opts.collapse) out = collapse_parallel(out);
  return result;
}

std::vector<std::string> compare_networks(const ReactionNetwork& a, const ReactionNetwork& b,
                                          const std::string& a_name, const std::string& b_name) {
  std::vector<std::string> diffs;
  if (a.species != b.species) {
    diffs.push_back("species differ: " + a_name + " {" + join(a.species, ", ") + "}, " + b_name + " {" +
                    join(b.species, ", ") + "}");
  }
  auto summed = [](const ReactionNetwork& n) {
    std::map<ReactionPair, RationalFunction> rates;
    std::vector<ReactionPair> order;
    for (const auto& r : n.reactions) {
      ReactionPair key{r.reactant, r.product};
      if (!rates.count(key)) order.push_back(key);
      rates[key] += rate_function(r);
    }
    return std::make_pair(rates, order);
  };
  auto [ra, oa] = summed(a);
  auto [rb, ob] = summed(b);
  auto label = [&](const ReactionPair& p) {
    return p.first.to_string(a.species) + " -> " + p.second.to_string(a.species);
  };
  for (const auto& key : oa) {
    auto it = rb.find(key);
    if (it == rb.end()) {
      diffs.push_back(label(key) + " only in " + a_name);
    } else if (!ra[key].equivalent(it->second)) {
      diffs.push_back(label(key) + ": " + a_name + " rate " + ra[key].to_string() + ", " + b_name + " rate " +
                      it->second.to_string());
    }
  }
  for (const auto& key : ob) {
    if (!ra.count(key)) diffs.push_back(label(key) + " only in " + b_name);
  }
  return diffs;
}

IterativeResult iterative_reduce(const ReactionNetwork& net, const std::vector<std::vector<std::string>>& chain,
                                 const ReduceOptions& opts) {
  if (chain.empty()) throw Error(ErrorCode::invalid_argument, "empty elimination chain");
  IterativeResult result;
  std::set<std::string> generated;
  auto record = [&](const ReducedNetwork& r) {
    for (const auto& f : r.elimination.factors) {
      if (!f.total_name.empty()) generated.insert(f.total_name);
    }
  };

  ReduceOptions step_opts = opts;
  step_opts.strict_totals = false;
  ReactionNetwork current = net;
  std::set<std::string> previous;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::set<std::string> set(chain[i].begin(), chain[i].end());
    if (!std::includes(set.begin(), set.end(), previous.begin(), previous.end())) {
      throw Error(ErrorCode::invalid_argument,
                  "elimination chain is not increasing at step " + std::to_string(i + 1));
    }
    std::vector<std::string> step;
    for (const auto& s : chain[i]) {
      if (!previous.count(s)) step.push_back(s);
    }
    try {
      result.steps.push_back(reduce_network(current, step, step_opts));
    } catch (const Error& e) {
      throw Error(ErrorCode::step_not_eliminable, "step " + std::to_string(i + 1) + " {" + join(step, ", ") +
                                                      "}: " + std::string(code_name(e.code())) + ": " + e.what());
    }
    record(result.steps.back());
    step_opts.first_total_index = result.steps.back().next_total_index;
    current = result.steps.back().network;
    previous = std::move(set);
  }

  ReduceOptions direct_opts = opts;
  direct_opts.strict_totals = false;
  try {
    result.direct = reduce_network(net, chain.back(), direct_opts);
    record(*result.direct);
  } catch (const Error& e) {
    result.direct_error = std::string(code_name(e.code())) + ": " + e.what();
  }
  for (const auto& [name, value] : opts.totals) {
    if (!generated.count(name)) {
      throw Error(ErrorCode::invalid_argument, "total '" + name + "' is not generated by any step");
    }
  }

  if (result.direct) {
    result.differences = compare_networks(current, result.direct->network, "iterative", "direct");
  } else {
    result.differences = {"direct reduction failed: " + result.direct_error};
  }
  result.equivalent = result.differences.empty();
  return result;
}

std::vector<ReactionPair> reaction_pairs(const ReactionNetwork& net) {
  std::set<ReactionPair> pairs;
  for (const auto& r : net.reactions) pairs.insert({r.reactant, r.product});
  return {pairs.begin(), pairs.end()};
}

std::vector<ReactionPair> ptm_reduce(const ReactionNetwork& net, const std::vector<std::string>& enzymes,
                                     const std::vector<std::string>& intermediates) {
  auto fail = [](const std::string& why) { return Error(ErrorCode::not_ptm_shape, why); };
  std::set<std::string> es;
  std::set<std::string> ys;
  for (const auto& e : ordered_subset(net, enzymes)) es.insert(e);
  for (const auto& y : ordered_subset(net, intermediates)) {
    if (es.count(y)) throw fail("species " + y + " is both an enzyme and an intermediate");
    ys.insert(y);
  }
  std::set<std::string> ss;
  for (const auto& s : net.species) {
    if (!es.count(s) && !ys.count(s)) ss.insert(s);
  }
  if (es.empty() || ys.empty() || ss.empty()) throw fail("substrates, enzymes and intermediates must be nonempty");

  // Classify a complex as a single species of a class or a substrate plus an enzyme.
  struct Shape {
    std::string substrate, enzyme, intermediate;
  };
  auto shape = [&](const Complex& c, int rid) -> Shape {
    const auto& m = c.coefficients();
    for (const auto& [s, k] : m) {
      if (k != 1) throw fail("reaction r" + std::to_string(rid) + " has a coefficient other than 1");
    }
    Shape out;
    for (const auto& [s, k] : m) {
      if (ss.count(s)) {
        if (!out.substrate.empty()) throw fail("reaction r" + std::to_string(rid) + " joins two substrates");
        out.substrate = s;
      } else if (es.count(s)) {
        if (!out.enzyme.empty()) throw fail("reaction r" + std::to_string(rid) + " joins two enzymes");
        out.enzyme = s;
      } else {
        if (m.size() != 1) throw fail("reaction r" + std::to_string(rid) + " has an intermediate in a larger complex");
        out.intermediate = s;
      }
    }
    bool single_substrate = !out.substrate.empty() && out.enzyme.empty();
    bool pair = !out.substrate.empty() && !out.enzyme.empty();
    if (!(single_substrate || pair || !out.intermediate.empty())) {
      throw fail("reaction r" + std::to_string(rid) + " has a complex outside the allowed shapes");
    }
    return out;
  };

  std::set<ReactionPair> pairs;
  std::map<std::string, std::vector<std::string>> y_next;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> y_exit;  // (substrate, enzyme)
  std::vector<std::tuple<std::string, std::string, std::string>> entries;         // substrate, enzyme, Y
  std::set<std::string> produced;
  for (const auto& r : net.reactions) {
    if (!std::holds_alternative<MassAction>(r.kinetics)) {
      throw fail("reaction r" + std::to_string(r.id) + " is not mass-action");
    }
    Shape a = shape(r.reactant, r.id);
    Shape b = shape(r.product, r.id);
    if (!b.intermediate.empty()) produced.insert(b.intermediate);
    bool a_pair = !a.enzyme.empty();
    bool b_pair = !b.enzyme.empty();
    bool a_sub = !a.substrate.empty() && !a_pair;
    bool b_sub = !b.substrate.empty() && !b_pair;
    auto single = [](const std::string& s) { return Complex({{s, Rational(1)}}); };
    if (a_pair && !b.intermediate.empty()) {
      entries.emplace_back(a.substrate, a.enzyme, b.intermediate);
    } else if (!a.intermediate.empty() && b_pair) {
      y_exit[a.intermediate].emplace_back(b.substrate, b.enzyme);
    } else if (!a.intermediate.empty() && !b.intermediate.empty()) {
      y_next[a.intermediate].push_back(b.intermediate);
    } else if (a_sub && b_sub) {
      pairs.insert({single(a.substrate), single(b.substrate)});
    } else if (a_pair && b_pair && a.enzyme == b.enzyme) {
      pairs.insert({single(a.substrate), single(b.substrate)});
    } else {
      throw fail("reaction r" + std::to_string(r.id) + " is not one of the five allowed types");
    }
  }
  for (const auto& y : ys) {
    if (!produced.count(y)) throw fail("intermediate " + y + " is never produced");
  }
  for (const auto& [substrate, enzyme, y0] : entries) {
    std::set<std::string> seen{y0};
    std::vector<std::string> stack{y0};
    while (!stack.empty()) {
      std::string y = stack.back();
      stack.pop_back();
      for (const auto& [s2, e2] : y_exit[y]) {
        if (e2 != enzyme) {
          throw fail("a path from " + substrate + " + " + enzyme + " through intermediates releases " + e2);
        }
        if (s2 != substrate) pairs.insert({Complex({{substrate, Rational(1)}}), Complex({{s2, Rational(1)}})});
      }
      for (const auto& next : y_next[y]) {
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  return {pairs.begin(), pairs.end()};
}

}  // namespace crnreduce
