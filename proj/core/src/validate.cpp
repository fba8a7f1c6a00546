#include "crnreduce/validate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "crnreduce/error.hpp"

namespace crnreduce {

namespace {

using Status = CheckResult::Status;

CheckResult make(std::string name, Status status, std::string detail, std::string witness = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.status = status;
  c.detail = std::move(detail);
  c.witness = std::move(witness);
  return c;
}

std::string point_to_string(const Assignment& point) {
  std::string out;
  for (const auto& [s, v] : point) out += (out.empty() ? "" : ", ") + s.to_string() + "=" + to_string(v);
  return "{" + out + "}";
}

std::string names(const ElimGraph& g, const GraphComponent& c) {
  std::string out;
  for (int v : c.nodes) out += (out.empty() ? "" : ", ") + g.node_name(v);
  return "{" + out + "}";
}

}  // namespace

std::string_view to_string(CheckResult::Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::skipped:
      return "SKIP";
  }
  return "?";
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.required && c.status == Status::fail; });
}

void ValidationReport::append(const ValidationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "[" << to_string(c.status) << "] " << c.name;
    if (!c.required) out << " (informational)";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
    if (!c.witness.empty()) out << "    witness: " << c.witness << "\n";
  }
  out << "seed " << seed << ", " << (passed() ? "all required checks passed" : "validation failed") << "\n";
  return out.str();
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = std::string(to_string(c.status));
    j["required"] = c.required;
    j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    doc["checks"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<TotalValue> closed_totals(const ReducedNetwork& reduced) {
  std::vector<TotalValue> totals;
  for (const auto& f : reduced.elimination.factors) {
    if (f.total) totals.push_back(*f.total);
  }
  return totals;
}

Assignment random_point(const std::set<Symbol>& symbols, std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> draw(1, 1000);
  Assignment point;
  for (const auto& s : symbols) {
    long num = draw(rng);
    long den = draw(rng);
    Rational v(num, den);
    v.canonicalize();
    point[s] = v;
  }
  return point;
}

std::vector<RationalFunction> linear_solve_oracle(const ReactionNetwork& net, const std::vector<std::string>& u,
                                                  const std::vector<TotalValue>& totals) {
  auto ordered = ordered_subset(net, u);
  const std::size_t n = ordered.size();
  if (n == 0) {
    if (!totals.empty()) throw Error(ErrorCode::invalid_argument, "totals given without eliminated species");
    return {};
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[ordered[i]] = i;

  // Components of the species graph: linked when one reaction converts one
  // eliminated species into another; open when a reaction has an eliminated
  // species on one side only.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> open(n, false);
  for (const auto& r : net.reactions) {
    std::optional<std::size_t> a;
    std::optional<std::size_t> b;
    for (const auto& [s, c] : r.reactant.coefficients()) {
      if (index.count(s)) a = index[s];
    }
    for (const auto& [s, c] : r.product.coefficients()) {
      if (index.count(s)) b = index[s];
    }
    if (a && b) {
      std::size_t x = find(*a);
      std::size_t y = find(*b);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    } else if (a || b) {
      open[a ? *a : *b] = true;
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::size_t closed_count = 0;
  for (const auto& [root, members] : comps) {
    bool closed = std::none_of(members.begin(), members.end(), [&](std::size_t i) { return open[i]; });
    if (closed) ++closed_count;
  }
  if (closed_count != totals.size()) {
    throw Error(closed_count > totals.size() ? ErrorCode::total_required : ErrorCode::total_forbidden,
                "expected " + std::to_string(closed_count) + " totals, got " + std::to_string(totals.size()));
  }

  // Row i: du_i/dt = sum_j A_ij u_j + b_i, with u_j only from i's component.
  auto rhs = ode_rhs(net);
  Binding zero;
  for (const auto& s : ordered) zero[concentration_symbol(s)] = RationalFunction(0);
  std::vector<RationalFunction> x(n);
  std::size_t next_total = 0;
  for (const auto& [root, members] : comps) {
    const std::size_t m = members.size();
    std::vector<std::vector<RationalFunction>> a(m, std::vector<RationalFunction>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      const RationalFunction& f = rhs[net.species_index(ordered[members[i]])];
      RationalFunction b = substitute(f, zero);
      RationalFunction rebuilt = b;
      for (std::size_t j = 0; j < m; ++j) {
        Binding unit = zero;
        unit[concentration_symbol(ordered[members[j]])] = RationalFunction(1);
        a[i][j] = substitute(f, unit) - b;
        rebuilt += a[i][j] * RationalFunction(concentration_symbol(ordered[members[j]]));
      }
      if (!rebuilt.equivalent(f)) {
        throw Error(ErrorCode::not_u_linear,
                    "d[" + ordered[members[i]] + "]/dt is not affine in the eliminated species");
      }
      a[i][m] = -b;
    }
    bool closed = std::none_of(members.begin(), members.end(), [&](std::size_t i) { return open[i]; });
    if (closed) {
      for (std::size_t j = 0; j < m; ++j) a[0][j] = RationalFunction(1);
      a[0][m] = to_rational_function(totals[next_total++]);
    }

    // Clear row denominators, then fraction-free elimination.
    std::vector<std::vector<Polynomial>> p(m, std::vector<Polynomial>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      RationalFunction scale(1);
      for (const auto& e : a[i]) {
        if (!(e * scale).is_polynomial()) scale *= RationalFunction(e.den());
      }
      for (std::size_t j = 0; j <= m; ++j) p[i][j] = (a[i][j] * scale).num();
    }
    Polynomial prev(1);
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t piv = c;
      while (piv < m && p[piv][c].is_zero()) ++piv;
      if (piv == m) throw Error(ErrorCode::singular_system, "no pivot in column " + ordered[members[c]]);
      std::swap(p[piv], p[c]);
      for (std::size_t i = c + 1; i < m; ++i) {
        for (std::size_t j = c + 1; j <= m; ++j) {
          Polynomial v = p[c][c] * p[i][j] - p[i][c] * p[c][j];
          auto q = v.divide_exact(prev);
          if (!q) throw Error(ErrorCode::singular_system, "inexact fraction-free step");
          p[i][j] = std::move(*q);
        }
        p[i][c] = Polynomial();
      }
      prev = p[c][c];
    }
    std::vector<RationalFunction> y(m);
    for (std::size_t i = m; i-- > 0;) {
      RationalFunction acc(p[i][m]);
      for (std::size_t j = i + 1; j < m; ++j) acc = acc - RationalFunction(p[i][j]) * y[j];
      y[i] = acc / RationalFunction(p[i][i]);
    }
    for (std::size_t i = 0; i < m; ++i) x[members[i]] = y[i];
  }
  return x;
}

ValidationReport check_ode_equivalence(const ReactionNetwork& net, const std::vector<std::string>& u,
                                       const ReactionNetwork& reduced, const std::vector<TotalValue>& totals,
                                       const SamplingOptions& opts) {
  ValidationReport report;
  report.seed = opts.seed;
  auto ordered = ordered_subset(net, u);
  std::set<std::string> uset(ordered.begin(), ordered.end());
  std::vector<std::string> expected_species;
  for (const auto& s : net.species) {
    if (!uset.count(s)) expected_species.push_back(s);
  }
  if (expected_species != reduced.species) {
    report.checks.push_back(make("ode-symbolic", Status::fail, "species of the reduced network differ",
                                 "expected " + std::to_string(expected_species.size()) + " species, got " +
                                     std::to_string(reduced.species.size())));
    return report;
  }

  std::vector<RationalFunction> phi;
  try {
    phi = linear_solve_oracle(net, ordered, totals);
  } catch (const Error& e) {
    report.checks.push_back(make("ode-symbolic", Status::fail, "steady state unavailable",
                                 std::string(code_name(e.code())) + ": " + e.what()));
    return report;
  }
  Binding binding;
  for (std::size_t i = 0; i < ordered.size(); ++i) binding[concentration_symbol(ordered[i])] = phi[i];
  auto original = ode_rhs(net);
  auto mine = ode_rhs(reduced);
  std::vector<RationalFunction> lhs;
  for (const auto& s : reduced.species) lhs.push_back(substitute(original[net.species_index(s)], binding));

  CheckResult symbolic = make("ode-symbolic", Status::pass,
                              std::to_string(lhs.size()) + " coordinates agree as rational functions");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (!lhs[i].equivalent(mine[i])) {
      symbolic.status = Status::fail;
      symbolic.detail = "coordinate " + reduced.species[i] + " differs";
      symbolic.witness = "d[" + reduced.species[i] + "]/dt: projected " + lhs[i].to_string() + ", reduced " +
                         mine[i].to_string();
      break;
    }
  }
  report.checks.push_back(symbolic);

  std::set<Symbol> symbols;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (const auto& s : lhs[i].symbols()) symbols.insert(s);
    for (const auto& s : mine[i].symbols()) symbols.insert(s);
  }
  CheckResult numeric = make("ode-numeric", Status::pass, "");
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  for (std::size_t k = 0; k < opts.points && numeric.status == Status::pass; ++k) {
    Assignment point = random_point(symbols, opts.seed, k);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      Rational a;
      Rational b;
      try {
        a = lhs[i].evaluate(point);
        b = mine[i].evaluate(point);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::division_by_zero) throw;
        ++skipped;
        break;
      }
      if (a != b) {
        numeric.status = Status::fail;
        numeric.witness = "d[" + reduced.species[i] + "]/dt at " + point_to_string(point) + ": projected " +
                          to_string(a) + ", reduced " + to_string(b);
        break;
      }
    }
    ++evaluated;
  }
  numeric.detail = std::to_string(evaluated - skipped) + " of " + std::to_string(opts.points) +
                   " sampled points evaluated" + (numeric.status == Status::fail ? ", mismatch found" : ", all agree");
  report.checks.push_back(numeric);
  return report;
}

ValidationReport check_ode_equivalence(const ReactionNetwork& net, const ReducedNetwork& reduced,
                                       const SamplingOptions& opts) {
  return check_ode_equivalence(net, reduced.eliminated, reduced.network, closed_totals(reduced), opts);
}

ValidationReport check_phi_oracle(const ReactionNetwork& net, const ReducedNetwork& reduced) {
  ValidationReport report;
  CheckResult c = make("phi-oracle", Status::pass, "tree formula matches the linear solve");
  try {
    auto oracle = linear_solve_oracle(net, reduced.eliminated, closed_totals(reduced));
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      if (!oracle[i].equivalent(reduced.elimination.phi.at(i))) {
        c.status = Status::fail;
        c.detail = "steady state of " + reduced.eliminated[i] + " differs";
        c.witness = "tree formula " + reduced.elimination.phi[i].to_string() + ", linear solve " + oracle[i].to_string();
        break;
      }
    }
  } catch (const Error& e) {
    c.status = Status::fail;
    c.detail = "linear solve failed";
    c.witness = std::string(code_name(e.code())) + ": " + e.what();
  }
  report.checks.push_back(c);
  return report;
}

ValidationReport check_conservation_projection(const ReactionNetwork& net, const std::vector<std::string>& u,
                                               const ReactionNetwork& reduced) {
  ValidationReport report;
  auto basis = conservation_basis(net).vectors;
  const std::size_t cols = reduced.species.size();
  RationalMatrix projected;
  for (const auto& w : basis) {
    std::vector<Rational> z(cols);
    for (std::size_t j = 0; j < cols; ++j) z[j] = w[net.species_index(reduced.species[j])];
    projected.push_back(std::move(z));
  }

  CheckResult orth = make("conservation-orthogonal", Status::pass,
                          std::to_string(projected.size()) + " projected laws orthogonal to every reduced reaction");
  auto stoich = stoichiometric_matrix(reduced);
  for (std::size_t l = 0; l < projected.size() && orth.status == Status::pass; ++l) {
    for (std::size_t r = 0; r < reduced.reactions.size(); ++r) {
      Rational dot;
      for (std::size_t j = 0; j < cols; ++j) dot += projected[l][j] * stoich[j][r];
      if (dot != 0) {
        orth.status = Status::fail;
        orth.detail = "a projected law changes along a reduced reaction";
        orth.witness = law_to_string(reduced.species, projected[l]) + " against r" +
                       std::to_string(reduced.reactions[r].id) + " gives " + to_string(dot);
        break;
      }
    }
  }
  report.checks.push_back(orth);

  ElimGraph g = build_elimination_graph(net, u);
  auto reduced_basis = conservation_basis(reduced).vectors;
  std::string not_strong;
  std::size_t closed = 0;
  for (const auto& c : g.components) {
    if (!c.strongly_connected && not_strong.empty()) not_strong = names(g, c);
    if (!c.contains_star) ++closed;
  }
  if (!not_strong.empty()) {
    report.checks.push_back(make("conservation-span", Status::skipped,
                                 "not strongly connected: component " + not_strong));
  } else {
    CheckResult span = make("conservation-span", Status::pass,
                            "projected laws span the reduced laws (dimension " +
                                std::to_string(reduced_basis.size()) + ")");
    if (!same_row_space(projected, reduced_basis, cols)) {
      span.status = Status::fail;
      span.detail = "projected laws and reduced laws span different spaces";
      for (const auto& w : reduced_basis) {
        if (!in_row_space(projected, w)) {
          span.witness = "reduced law " + law_to_string(reduced.species, w) + " is not a projected law";
          break;
        }
      }
      if (span.witness.empty()) {
        for (const auto& w : projected) {
          if (!in_row_space(reduced_basis, w)) {
            span.witness = "projected law " + law_to_string(reduced.species, w) + " is not a reduced law";
            break;
          }
        }
      }
    }
    report.checks.push_back(span);
  }

  std::size_t dim_projected = rank(projected);
  std::size_t dim_original = basis.size();
  CheckResult dim = make("conservation-dimension", Status::pass,
                         "dim projected " + std::to_string(dim_projected) + " = " + std::to_string(dim_original) +
                             " - " + std::to_string(closed) + " components without *");
  if (dim_projected + closed != dim_original) {
    dim.status = Status::fail;
    dim.detail = "dimension identity fails";
    dim.witness = "dim projected " + std::to_string(dim_projected) + ", dim original " +
                  std::to_string(dim_original) + ", components without * " + std::to_string(closed);
  }
  report.checks.push_back(dim);
  return report;
}

StandardnessVerdict standardness(const Reaction& r, const std::vector<std::string>& species,
                                 const std::vector<RationalFunction>& domain) {
  StandardnessVerdict v;
  v.reaction_id = r.id;
  RationalFunction rate = rate_function(r);
  const Polynomial& num = rate.num();
  // Reactants whose absence leaves the domain need no vanishing rate.
  std::set<std::string> exempt;
  for (const auto& [s, c] : r.reactant.coefficients()) {
    Assignment zero{{concentration_symbol(s), Rational(0)}};
    for (const auto& d : domain) {
      if (d.num().specialize(zero).is_zero()) exempt.insert(s);
    }
  }
  v.standard = true;
  for (const auto& t : num.terms()) {
    for (const auto& [s, c] : r.reactant.coefficients()) {
      if (exempt.count(s)) continue;
      if (t.monomial.exponent(concentration_symbol(s)) == 0) {
        v.standard = false;
        v.witness = "r" + std::to_string(r.id) + ": term " + Polynomial(t.monomial, t.coefficient).to_string() +
                    " does not vanish at [" + s + "] = 0";
        return v;
      }
    }
  }
  Assignment off;
  std::string zeroed;
  for (const auto& s : species) {
    if (r.reactant.involves(s)) continue;
    Symbol x = concentration_symbol(s);
    if (num.contains(x)) {
      off[x] = Rational(0);
      zeroed += (zeroed.empty() ? "" : ", ") + ("[" + s + "]");
    }
  }
  v.fully_standard = !num.specialize(off).is_zero();
  if (!v.fully_standard) {
    v.witness = "r" + std::to_string(r.id) + ": rate vanishes when " + zeroed + " = 0";
  }
  return v;
}

std::vector<StandardnessVerdict> standardness(const ReactionNetwork& net, const std::vector<RationalFunction>& domain) {
  std::vector<StandardnessVerdict> out;
  for (const auto& r : net.reactions) out.push_back(standardness(r, net.species, domain));
  return out;
}

ValidationReport check_standardness(const ReactionNetwork& net, const std::vector<RationalFunction>& domain) {
  ValidationReport report;
  auto verdicts = standardness(net, domain);
  CheckResult standard = make("standard", Status::pass, "every rate vanishes when a reactant is absent");
  CheckResult fully = make("fully-standard", Status::pass, "every rate is positive when exactly its reactants are");
  fully.required = false;
  for (const auto& v : verdicts) {
    if (!v.standard && standard.status == Status::pass) {
      standard.status = Status::fail;
      standard.detail = "r" + std::to_string(v.reaction_id) + " is not standard";
      standard.witness = v.witness;
    }
    if (!v.fully_standard && fully.status == Status::pass) {
      fully.status = Status::fail;
      fully.detail = "r" + std::to_string(v.reaction_id) + " is not fully standard";
      fully.witness = v.witness;
    }
  }
  report.checks.push_back(standard);
  report.checks.push_back(fully);
  return report;
}

ValidationReport check_standardness(const ReactionNetwork& original, const ReactionNetwork& reduced,
                                    const std::vector<RationalFunction>& domain) {
  ValidationReport report = check_standardness(reduced, domain);
  for (const auto& v : standardness(original)) {
    if (v.standard) continue;
    CheckResult& standard = report.checks.front();
    standard.required = false;
    standard.detail += "; input is not standard (" + v.witness + ")";
    break;
  }
  return report;
}

ValidationReport check_cycle_space(const ElimGraph& g, std::size_t max_cycles) {
  ValidationReport report;
  auto cycles = enumerate_cycles(g, max_cycles);
  auto incidence = incidence_matrix(g);
  for (std::size_t ci = 0; ci < g.components.size(); ++ci) {
    const auto& comp = g.components[ci];
    std::string name = "cycle-space " + names(g, comp);
    if (!comp.strongly_connected) {
      report.checks.push_back(make(name, Status::skipped, "component is not strongly connected"));
      continue;
    }
    const std::size_t m = comp.edges.size();
    std::map<int, std::size_t> col;
    for (std::size_t j = 0; j < m; ++j) col[comp.edges[j]] = j;
    RationalMatrix h;
    std::vector<const Cycle*> members;
    for (const auto& sigma : cycles) {
      if (!col.count(sigma.front())) continue;
      std::vector<Rational> row(m);
      for (int e : sigma) row[col[e]] = 1;
      h.push_back(std::move(row));
      members.push_back(&sigma);
    }
    RationalMatrix c;
    for (int v : comp.nodes) {
      std::vector<Rational> row(m);
      for (std::size_t j = 0; j < m; ++j) row[j] = incidence[v][comp.edges[j]];
      c.push_back(std::move(row));
    }
    std::size_t rh = rank(h);
    std::size_t rc = rank(c);
    CheckResult res = make(name, Status::pass,
                           std::to_string(h.size()) + " cycles, rank H " + std::to_string(rh) + " + rank C " +
                               std::to_string(rc) + " = " + std::to_string(m) + " edges");
    for (std::size_t i = 0; i < h.size() && res.status == Status::pass; ++i) {
      for (std::size_t v = 0; v < c.size(); ++v) {
        Rational dot;
        for (std::size_t j = 0; j < m; ++j) dot += h[i][j] * c[v][j];
        if (dot != 0) {
          res.status = Status::fail;
          res.detail = "a cycle vector is not orthogonal to the incidence rows";
          std::string ids;
          for (int e : *members[i]) ids += (ids.empty() ? "e" : ",e") + std::to_string(e);
          res.witness = "cycle " + ids + " at node " + g.node_name(comp.nodes[v]);
          break;
        }
      }
    }
    if (res.status == Status::pass && rh + rc != m) {
      res.status = Status::fail;
      res.detail = "rank identity fails";
      res.witness = "rank H " + std::to_string(rh) + ", rank C " + std::to_string(rc) + ", edges " +
                    std::to_string(m);
    }
    report.checks.push_back(res);
  }
  return report;
}

}  // namespace crnreduce
