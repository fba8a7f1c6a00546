#include "crnreduce/network.hpp"

#include <algorithm>

#include "crnreduce/error.hpp"

namespace crnreduce {

Complex::Complex(std::map<std::string, Rational> coefficients) {
  for (auto& [name, c] : coefficients) {
    if (c < 0) throw Error(ErrorCode::invalid_argument, "negative coefficient for " + name);
    if (c != 0) coeffs_.emplace(name, c);
  }
}

Rational Complex::coefficient(const std::string& species) const {
  auto it = coeffs_.find(species);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Complex Complex::operator+(const Complex& other) const {
  Complex out = *this;
  for (const auto& [name, c] : other.coeffs_) out.coeffs_[name] += c;
  return out;
}

Complex Complex::without(const std::set<std::string>& species) const {
  Complex out;
  for (const auto& [name, c] : coeffs_) {
    if (!species.count(name)) out.coeffs_.emplace(name, c);
  }
  return out;
}

std::string Complex::to_string(const std::vector<std::string>& order) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  auto emit = [&](const std::string& name, const Rational& c) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += crnreduce::to_string(c) + "*";
    out += name;
  };
  std::set<std::string> done;
  for (const auto& name : order) {
    auto it = coeffs_.find(name);
    if (it != coeffs_.end()) {
      emit(name, it->second);
      done.insert(name);
    }
  }
  for (const auto& [name, c] : coeffs_) {
    if (!done.count(name)) emit(name, c);
  }
  return out;
}

std::string to_string(const Provenance& p) {
  std::string out;
  switch (p.kind) {
    case Provenance::Kind::input: out = "input"; break;
    case Provenance::Kind::projected: out = "projected"; break;
    case Provenance::Kind::cycle: out = "cycle"; break;
  }
  for (std::size_t i = 0; i < p.reaction_ids.size(); ++i) {
    out += (i == 0 ? " r" : ",r") + std::to_string(p.reaction_ids[i]);
  }
  return out;
}

bool ReactionNetwork::has_species(const std::string& name) const {
  return std::find(species.begin(), species.end(), name) != species.end();
}

std::size_t ReactionNetwork::species_index(const std::string& name) const {
  auto it = std::find(species.begin(), species.end(), name);
  if (it == species.end()) throw Error(ErrorCode::unknown_species, "unknown species '" + name + "'");
  return static_cast<std::size_t>(it - species.begin());
}

bool structurally_equal(const ReactionNetwork& a, const ReactionNetwork& b) {
  if (a.species != b.species || a.reactions.size() != b.reactions.size()) return false;
  for (std::size_t i = 0; i < a.reactions.size(); ++i) {
    const Reaction& x = a.reactions[i];
    const Reaction& y = b.reactions[i];
    if (x.id != y.id || !(x.reactant == y.reactant) || !(x.product == y.product) ||
        !(x.kinetics == y.kinetics)) {
      return false;
    }
  }
  return true;
}

Symbol concentration_symbol(const std::string& species) { return Symbol::concentration(species); }

RationalFunction rate_function(const Reaction& r) {
  if (const auto* g = std::get_if<General>(&r.kinetics)) return g->rate;
  const auto& ma = std::get<MassAction>(r.kinetics);
  std::vector<Monomial::Factor> factors;
  for (const auto& [name, c] : r.reactant.coefficients()) {
    if (!is_integer(c)) {
      throw Error(ErrorCode::non_polynomial_rate,
                  "reaction r" + std::to_string(r.id) + ": mass-action exponent " +
                      crnreduce::to_string(c) + " for " + name + " is not an integer");
    }
    factors.emplace_back(concentration_symbol(name), static_cast<unsigned>(c.get_num().get_ui()));
  }
  Monomial m(std::move(factors));
  if (const auto* s = std::get_if<Symbol>(&ma.constant)) {
    return RationalFunction(Polynomial(m * Monomial(*s), Rational(1)));
  }
  return RationalFunction(Polynomial(m, std::get<Rational>(ma.constant)));
}

RationalMatrix stoichiometric_matrix(const ReactionNetwork& net) {
  RationalMatrix a = zero_matrix(net.species.size(), net.reactions.size());
  for (std::size_t j = 0; j < net.reactions.size(); ++j) {
    const Reaction& r = net.reactions[j];
    for (const auto& [name, c] : r.product.coefficients()) a[net.species_index(name)][j] += c;
    for (const auto& [name, c] : r.reactant.coefficients()) a[net.species_index(name)][j] -= c;
  }
  return a;
}

ConservationBasis conservation_basis(const ReactionNetwork& net) {
  RationalMatrix a = stoichiometric_matrix(net);
  // w . A = 0  <=>  A^t w = 0
  RationalMatrix at = transpose(a, net.reactions.size());
  return {net.species, nullspace(at, net.species.size())};
}

std::string law_to_string(const std::vector<std::string>& species, const std::vector<Rational>& w) {
  std::string out;
  for (std::size_t i = 0; i < species.size(); ++i) {
    if (w[i] == 0) continue;
    Rational mag = abs(w[i]);
    if (out.empty()) {
      if (w[i] < 0) out += "-";
    } else {
      out += w[i] < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += "[" + species[i] + "]";
  }
  return out.empty() ? "0" : out;
}

std::vector<RationalFunction> ode_rhs(const ReactionNetwork& net) {
  std::vector<RationalFunction> g(net.species.size());
  for (const auto& r : net.reactions) {
    RationalFunction rate = rate_function(r);
    std::map<std::size_t, Rational> change;
    for (const auto& [name, c] : r.product.coefficients()) change[net.species_index(name)] += c;
    for (const auto& [name, c] : r.reactant.coefficients()) change[net.species_index(name)] -= c;
    for (const auto& [i, c] : change) {
      if (c != 0) g[i] += rate * RationalFunction(c);
    }
  }
  return g;
}

ReactionNetwork collapse_parallel(const ReactionNetwork& net) {
  ReactionNetwork out;
  out.species = net.species;
  std::vector<std::vector<const Reaction*>> groups;
  std::map<std::pair<Complex, Complex>, std::size_t> index;
  for (const auto& r : net.reactions) {
    auto key = std::make_pair(r.reactant, r.product);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, groups.size());
      groups.push_back({&r});
    } else {
      groups[it->second].push_back(&r);
    }
  }
  int next_id = 1;
  for (const auto& group : groups) {
    Reaction merged = *group.front();
    merged.id = next_id++;
    if (group.size() > 1) {
      bool numeric = true;
      for (const auto* r : group) {
        const auto* ma = std::get_if<MassAction>(&r->kinetics);
        numeric = numeric && ma && std::holds_alternative<Rational>(ma->constant);
      }
      merged.provenance.clear();
      for (const auto* r : group) {
        if (r->provenance.empty()) {
          merged.provenance.push_back({Provenance::Kind::input, {r->id}});
        } else {
          merged.provenance.insert(merged.provenance.end(), r->provenance.begin(), r->provenance.end());
        }
      }
      if (numeric) {
        Rational total = 0;
        for (const auto* r : group) total += std::get<Rational>(std::get<MassAction>(r->kinetics).constant);
        merged.kinetics = MassAction{total};
      } else {
        RationalFunction total;
        for (const auto* r : group) total += rate_function(*r);
        merged.kinetics = General{total};
      }
    }
    out.reactions.push_back(std::move(merged));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> interacting_pairs(const ReactionNetwork& net) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  auto scan = [&](const Complex& c) {
    std::vector<std::size_t> idx;
    for (const auto& [name, coeff] : c.coefficients()) idx.push_back(net.species_index(name));
    std::sort(idx.begin(), idx.end());
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = a + 1; b < idx.size(); ++b) pairs.emplace(idx[a], idx[b]);
    }
  };
  for (const auto& r : net.reactions) {
    scan(r.reactant);
    scan(r.product);
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : pairs) out.emplace_back(net.species[a], net.species[b]);
  return out;
}

}  // namespace crnreduce
