#include "crnreduce/elimgraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "crnreduce/error.hpp"

namespace crnreduce {

int ElimGraph::edge_of_reaction(int reaction_id) const {
  for (const auto& e : edges) {
    if (e.reaction_id == reaction_id) return e.id;
  }
  return -1;
}

std::vector<std::string> ordered_subset(const ReactionNetwork& net, const std::vector<std::string>& u) {
  std::set<std::size_t> idx;
  for (const auto& name : u) idx.insert(net.species_index(name));
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(net.species[i]);
  return out;
}

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// The eliminated species in a complex, if any.
std::vector<std::string> u_members(const Complex& c, const std::set<std::string>& u) {
  std::vector<std::string> out;
  for (const auto& [name, coef] : c.coefficients()) {
    if (u.count(name)) out.push_back(name);
  }
  return out;
}

}  // namespace

EligibilityReport check_noninteracting(const ReactionNetwork& net, const std::vector<std::string>& u) {
  auto ordered = ordered_subset(net, u);
  std::set<std::string> uset(ordered.begin(), ordered.end());
  EligibilityReport report;
  for (const auto& r : net.reactions) {
    for (const Complex* c : {&r.reactant, &r.product}) {
      auto members = u_members(*c, uset);
      std::string where = "reaction r" + std::to_string(r.id) + ", complex " + c->to_string(net.species);
      if (members.size() > 1) {
        report.ok = false;
        report.problems.push_back(where + ": eliminated species " + join(members, ", ") + " interact");
      }
      for (const auto& m : members) {
        if (c->coefficient(m) != 1) {
          report.ok = false;
          report.problems.push_back(where + ": " + m + " has coefficient " +
                                    to_string(c->coefficient(m)) + " (must be 1)");
        }
      }
    }
  }
  return report;
}

std::map<int, RationalFunction> extract_ulinear(const ReactionNetwork& net, const std::vector<std::string>& u) {
  auto ordered = ordered_subset(net, u);
  std::set<std::string> uset(ordered.begin(), ordered.end());
  std::set<Symbol> usyms;
  for (const auto& name : ordered) usyms.insert(concentration_symbol(name));
  std::map<int, RationalFunction> labels;
  for (const auto& r : net.reactions) {
    auto in = u_members(r.reactant, uset);
    auto out = u_members(r.product, uset);
    if (in.empty() && out.empty()) continue;
    auto fail = [&](const std::string& why) -> Error {
      return Error(ErrorCode::not_u_linear, "reaction r" + std::to_string(r.id) + ": " + why);
    };
    RationalFunction rate = rate_function(r);
    if (rate.is_zero()) throw fail("rate is identically zero");
    for (const auto& s : usyms) {
      if (rate.den().contains(s)) throw fail("rate denominator depends on " + s.to_string());
    }
    if (in.empty()) {
      for (const auto& s : usyms) {
        if (rate.num().contains(s)) throw fail("rate depends on " + s.to_string() + " although no eliminated species is consumed");
      }
      labels.emplace(r.id, rate);
      continue;
    }
    Symbol ui = concentration_symbol(in.front());
    for (const auto& t : rate.num().terms()) {
      if (t.monomial.exponent(ui) != 1) throw fail("rate is not linear in " + ui.to_string());
      for (const auto& s : usyms) {
        if (!(s == ui) && t.monomial.exponent(s) > 0) throw fail("rate depends on " + s.to_string());
      }
    }
    labels.emplace(r.id, RationalFunction(rate.num().divided_by(Monomial(ui)), rate.den()));
  }
  return labels;
}

ElimGraph build_graph(const ReactionNetwork& net, const std::vector<std::string>& u,
                      const std::map<int, RationalFunction>& labels) {
  ElimGraph g;
  g.u_species = ordered_subset(net, u);
  std::map<std::string, int> node_of;
  for (std::size_t i = 0; i < g.u_species.size(); ++i) node_of[g.u_species[i]] = static_cast<int>(i);
  std::set<std::string> uset(g.u_species.begin(), g.u_species.end());

  struct Pending {
    int source;  // -1 stands for the star node
    int target;
    int reaction;
  };
  std::vector<Pending> pending;
  for (const auto& r : net.reactions) {
    auto in = u_members(r.reactant, uset);
    auto out = u_members(r.product, uset);
    if (in.empty() && out.empty()) continue;
    int s = in.empty() ? -1 : node_of.at(in.front());
    int t = out.empty() ? -1 : node_of.at(out.front());
    if (s < 0 || t < 0) g.has_star = true;
    pending.push_back({s, t, r.id});
  }
  for (const auto& p : pending) {
    ElimEdge e;
    e.id = static_cast<int>(g.edges.size());
    e.source = p.source < 0 ? g.star() : p.source;
    e.target = p.target < 0 ? g.star() : p.target;
    e.reaction_id = p.reaction;
    e.label = labels.at(p.reaction);
    g.edges.push_back(std::move(e));
  }

  const int n = g.node_count();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : g.edges) {
    int a = find(e.source);
    int b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::size_t> comp_index;
  g.component_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    auto it = comp_index.find(root);
    if (it == comp_index.end()) {
      it = comp_index.emplace(root, g.components.size()).first;
      g.components.emplace_back();
    }
    g.components[it->second].nodes.push_back(v);
    g.component_of[v] = static_cast<int>(it->second);
  }
  for (const auto& e : g.edges) g.components[g.component_of[e.source]].edges.push_back(e.id);
  for (auto& c : g.components) {
    c.contains_star = g.has_star && std::find(c.nodes.begin(), c.nodes.end(), g.star()) != c.nodes.end();
    // Strong connectivity: every node reaches the first node and is reached from it.
    auto reach = [&](bool forward) {
      std::set<int> seen{c.nodes.front()};
      std::vector<int> stack{c.nodes.front()};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int eid : c.edges) {
          const auto& e = g.edges[eid];
          int from = forward ? e.source : e.target;
          int to = forward ? e.target : e.source;
          if (from == v && seen.insert(to).second) stack.push_back(to);
        }
      }
      return seen.size() == c.nodes.size();
    };
    c.strongly_connected = reach(true) && reach(false);
  }
  return g;
}

ElimGraph build_elimination_graph(const ReactionNetwork& net, const std::vector<std::string>& u) {
  auto report = check_noninteracting(net, u);
  if (!report.ok) throw Error(ErrorCode::not_noninteracting, join(report.problems, "; "));
  return build_graph(net, u, extract_ulinear(net, u));
}

std::vector<InTree> spanning_in_trees(const ElimGraph& g, const std::vector<int>& nodes, int root,
                                      std::size_t max_trees, const std::map<int, int>& forced) {
  const int n = g.node_count();
  std::vector<char> member(n, 0);
  for (int v : nodes) member[v] = 1;
  if (root < 0 || root >= n || !member[root]) throw Error(ErrorCode::invalid_argument, "root outside the node set");
  if (forced.count(root)) return {};

  std::vector<std::vector<int>> out(n);
  for (const auto& e : g.edges) {
    if (e.source != e.target && member[e.source] && member[e.target]) out[e.source].push_back(e.id);
  }
  std::vector<int> order;
  for (int v : nodes) {
    if (v == root) continue;
    if (auto it = forced.find(v); it != forced.end()) {
      const auto& e = g.edges.at(it->second);
      if (e.source != v || e.source == e.target || !member[e.target]) return {};
      out[v] = {e.id};
    }
    if (out[v].empty()) return {};
    order.push_back(v);
  }

  std::vector<int> next(n, -1);
  std::vector<int> chosen(n, -1);
  std::vector<InTree> trees;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == order.size()) {
      InTree t;
      for (int v : order) t.push_back(chosen[v]);
      std::sort(t.begin(), t.end());
      trees.push_back(std::move(t));
      if (trees.size() > max_trees) {
        throw Error(ErrorCode::limit_exceeded,
                    "more than " + std::to_string(max_trees) + " spanning trees (max_trees)");
      }
      return;
    }
    int v = order[k];
    for (int eid : out[v]) {
      int w = g.edges[eid].target;
      while (w != root && next[w] >= 0 && w != v) w = next[w];
      if (w == v) continue;  // would close a cycle
      next[v] = g.edges[eid].target;
      chosen[v] = eid;
      extend(k + 1);
      next[v] = -1;
      chosen[v] = -1;
    }
  };
  extend(0);
  return trees;
}

std::vector<InTree> spanning_in_trees(const ElimGraph& g, std::size_t component, int root, std::size_t max_trees) {
  return spanning_in_trees(g, g.components.at(component).nodes, root, max_trees);
}

RationalFunction label_product(const ElimGraph& g, const std::vector<int>& edges) {
  bool polynomial = std::all_of(edges.begin(), edges.end(),
                                [&](int e) { return g.edges[e].label.is_polynomial(); });
  if (polynomial) {
    Polynomial p(Rational(1));
    for (int e : edges) p *= g.edges[e].label.num();
    return RationalFunction(p);
  }
  RationalFunction p(1);
  for (int e : edges) p *= g.edges[e].label;
  return p;
}

namespace {

RationalFunction sum_products(const ElimGraph& g, const std::vector<InTree>& trees) {
  bool polynomial = std::all_of(g.edges.begin(), g.edges.end(),
                                [](const ElimEdge& e) { return e.label.is_polynomial(); });
  if (polynomial) {
    Polynomial total;
    for (const auto& t : trees) total += label_product(g, t).num();
    return RationalFunction(total);
  }
  RationalFunction total;
  for (const auto& t : trees) total += label_product(g, t);
  return total;
}

}  // namespace

RationalFunction tree_label_sum(const ElimGraph& g, const std::vector<int>& nodes, int root, std::size_t max_trees) {
  return sum_products(g, spanning_in_trees(g, nodes, root, max_trees));
}

RationalFunction tree_label_sum(const ElimGraph& g, std::size_t component, int root, std::size_t max_trees) {
  return tree_label_sum(g, g.components.at(component).nodes, root, max_trees);
}

bool has_in_tree(const ElimGraph& g, const std::vector<int>& nodes, int root) {
  std::set<int> member(nodes.begin(), nodes.end());
  std::set<int> seen{root};
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      if (e.target == v && member.count(e.source) && seen.insert(e.source).second) stack.push_back(e.source);
    }
  }
  return seen.size() == member.size();
}

EligibilityReport is_linearly_eliminable(const ElimGraph& g) {
  EligibilityReport report;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    const auto& c = g.components[i];
    std::vector<std::string> names;
    for (int v : c.nodes) names.push_back(g.node_name(v));
    std::string label = "component {" + join(names, ", ") + "}";
    if (c.contains_star) {
      if (!has_in_tree(g, c.nodes, g.star())) {
        report.ok = false;
        report.problems.push_back(label + ": no spanning tree rooted at *");
      }
    } else {
      bool any = std::any_of(c.nodes.begin(), c.nodes.end(), [&](int v) { return has_in_tree(g, c.nodes, v); });
      if (!any) {
        report.ok = false;
        report.problems.push_back(label + ": no node is the root of a spanning tree");
      }
    }
  }
  return report;
}

std::vector<std::vector<int>> incidence_matrix(const ElimGraph& g) {
  std::vector<std::vector<int>> c(g.node_count(), std::vector<int>(g.edges.size(), 0));
  for (const auto& e : g.edges) {
    if (e.source == e.target) continue;
    c[e.source][e.id] = -1;
    c[e.target][e.id] = 1;
  }
  return c;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string export_dot(const ElimGraph& g) {
  std::string out = "digraph elimination {\n";
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    const auto& c = g.components[i];
    out += "  subgraph cluster_" + std::to_string(i) + " {\n";
    out += "    label=\"component " + std::to_string(i + 1) + "\";\n";
    for (int v : c.nodes) {
      out += "    n" + std::to_string(v) + " [label=\"" + dot_escape(g.node_name(v)) + "\"];\n";
    }
    for (int eid : c.edges) {
      const auto& e = g.edges[eid];
      out += "    n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) + " [label=\"" +
             dot_escape(e.label.to_string()) + "\", id=\"r" + std::to_string(e.reaction_id) + "\"];\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace crnreduce
