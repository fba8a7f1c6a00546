#include "crnreduce/crnparse.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include <json.hpp>

namespace crnreduce {

ParseError::ParseError(ErrorCode code, SourceSpan span, const std::string& message)
    : Error(code, "line " + std::to_string(span.line) + ", column " + std::to_string(span.column) +
                      ": " + message),
      span_(span) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Cursor over one line; columns are 1-based offsets into the original line.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int base_column = 1;

  SourceSpan span_at(std::size_t at, std::size_t len = 1) const {
    return {line, base_column + static_cast<int>(at), static_cast<int>(std::max<std::size_t>(len, 1))};
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at, std::size_t len = 1,
                         ErrorCode code = ErrorCode::syntax_error) const {
    throw ParseError(code, span_at(at, len), msg);
  }
  void skip_ws() {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
};

// Species names: identifier followed by optional `*` or `'` marks (e.g. E*).
std::size_t scan_species_name(std::string_view s, std::size_t pos) {
  if (pos >= s.size() || !ident_start(s[pos])) return 0;
  std::size_t end = pos + 1;
  while (end < s.size() && ident_char(s[end])) ++end;
  while (end < s.size() && (s[end] == '*' || s[end] == '\'')) ++end;
  return end - pos;
}

bool valid_species_name(std::string_view s) { return !s.empty() && scan_species_name(s, 0) == s.size(); }

bool valid_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

class ExpressionParser {
 public:
  using SpeciesHook = std::function<void(const std::string&, SourceSpan)>;

  ExpressionParser(Cursor cursor, const std::set<std::string>& totals, SpeciesHook hook)
      : c_(cursor), totals_(totals), hook_(std::move(hook)) {}

  Expression parse_all() {
    if (c_.done()) c_.fail("empty rate expression", c_.pos);
    Expression e = parse_sum();
    if (!c_.done()) c_.fail("unexpected character in rate expression", c_.pos);
    return e;
  }

 private:
  Expression parse_sum() {
    Expression lhs = parse_product();
    for (;;) {
      if (c_.eat('+')) {
        lhs = Expression::binary(Expression::Op::add, lhs, parse_product());
      } else if (c_.eat('-')) {
        lhs = Expression::binary(Expression::Op::sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_product() {
    Expression lhs = parse_unary();
    for (;;) {
      if (c_.eat('*')) {
        lhs = Expression::binary(Expression::Op::mul, lhs, parse_unary());
      } else if (c_.eat('/')) {
        lhs = Expression::binary(Expression::Op::div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_unary() {
    if (c_.eat('-')) return Expression::negate(parse_unary());
    if (c_.eat('+')) return parse_unary();
    Expression base = parse_primary();
    if (c_.eat('^')) {
      c_.skip_ws();
      std::size_t start = c_.pos;
      while (c_.pos < c_.text.size() && std::isdigit(static_cast<unsigned char>(c_.text[c_.pos]))) ++c_.pos;
      if (start == c_.pos) c_.fail("exponent must be a nonnegative integer", start);
      std::string digits(c_.text.substr(start, c_.pos - start));
      if (digits.size() > 6) c_.fail("exponent too large", start, digits.size());
      return Expression::power(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Expression parse_primary() {
    c_.skip_ws();
    if (c_.pos >= c_.text.size()) c_.fail("unexpected end of rate expression", c_.pos);
    char ch = c_.text[c_.pos];
    if (ch == '(') {
      std::size_t open = c_.pos++;
      Expression inner = parse_sum();
      if (!c_.eat(')')) c_.fail("unbalanced parenthesis", open);
      return inner;
    }
    if (ch == '[') {
      std::size_t open = c_.pos++;
      std::size_t len = scan_species_name(c_.text, c_.pos);
      if (len == 0) c_.fail("expected species name after '['", c_.pos);
      std::string name(c_.text.substr(c_.pos, len));
      c_.pos += len;
      if (c_.pos >= c_.text.size() || c_.text[c_.pos] != ']') c_.fail("expected ']'", c_.pos);
      ++c_.pos;
      if (hook_) hook_(name, c_.span_at(open, len + 2));
      return Expression::symbol(Symbol::concentration(name));
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::size_t start = c_.pos;
      while (c_.pos < c_.text.size() &&
             (std::isdigit(static_cast<unsigned char>(c_.text[c_.pos])) || c_.text[c_.pos] == '.')) {
        ++c_.pos;
      }
      std::string_view lit = c_.text.substr(start, c_.pos - start);
      try {
        return Expression::constant(parse_rational(lit));
      } catch (const Error&) {
        c_.fail("malformed number '" + std::string(lit) + "'", start, lit.size());
      }
    }
    if (ident_start(ch)) {
      std::size_t start = c_.pos;
      while (c_.pos < c_.text.size() && ident_char(c_.text[c_.pos])) ++c_.pos;
      std::string name(c_.text.substr(start, c_.pos - start));
      SymbolKind kind = totals_.count(name) ? SymbolKind::total_amount : SymbolKind::rate_constant;
      return Expression::symbol(Symbol(kind, name));
    }
    c_.fail(std::string("unexpected character '") + ch + "' in rate expression", c_.pos);
  }

  Cursor c_;
  const std::set<std::string>& totals_;
  SpeciesHook hook_;
};

struct Segment {
  std::string_view text;
  std::size_t offset;  // offset of text within the line
};

// Splits on `sep` outside parentheses and brackets.
std::vector<Segment> split_top_level(std::string_view s, std::size_t offset, char sep) {
  std::vector<Segment> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      out.push_back({s.substr(start, i - start), offset + start});
      start = i + 1;
    }
  }
  out.push_back({s.substr(start), offset + start});
  return out;
}

Segment trimmed(Segment seg) {
  std::size_t b = 0;
  std::size_t e = seg.text.size();
  while (b < e && is_space(seg.text[b])) ++b;
  while (e > b && is_space(seg.text[e - 1])) --e;
  return {seg.text.substr(b, e - b), seg.offset + b};
}

class NetworkParser {
 public:
  explicit NetworkParser(std::string_view text) : text_(text) {}

  ReactionNetwork run() {
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle_line(line, line_no);
      if (end == text_.size()) break;
      start = end + 1;
    }
    return std::move(net_);
  }

 private:
  SourceSpan span(int line, std::size_t offset, std::size_t len) const {
    return {line, static_cast<int>(offset) + 1, static_cast<int>(std::max<std::size_t>(len, 1))};
  }

  [[noreturn]] void fail(ErrorCode code, int line, std::size_t offset, std::size_t len,
                         const std::string& msg) const {
    throw ParseError(code, span(line, offset, len), msg);
  }

  void handle_line(std::string_view line, int line_no) {
    Segment whole = trimmed({line, 0});
    if (whole.text.empty()) return;
    for (const char* header : {"species", "totals"}) {
      std::string_view h(header);
      if (whole.text.substr(0, h.size()) == h) {
        Segment rest = trimmed({whole.text.substr(h.size()), whole.offset + h.size()});
        if (!rest.text.empty() && rest.text.front() == ':') {
          handle_header(h, {rest.text.substr(1), rest.offset + 1}, line_no);
          return;
        }
      }
    }
    handle_reaction(whole, line_no);
  }

  void handle_header(std::string_view kind, Segment list, int line_no) {
    bool is_species = kind == "species";
    if (!net_.reactions.empty()) {
      fail(ErrorCode::syntax_error, line_no, list.offset, 1,
           std::string(kind) + " header must precede all reactions");
    }
    if ((is_species && have_species_header_) || (!is_species && have_totals_header_)) {
      fail(is_species ? ErrorCode::duplicate_species_declaration : ErrorCode::syntax_error, line_no,
           list.offset, 1, "repeated " + std::string(kind) + " header");
    }
    (is_species ? have_species_header_ : have_totals_header_) = true;
    Segment body = trimmed(list);
    if (body.text.empty()) return;
    std::set<std::string> seen;
    for (const auto& raw : split_top_level(body.text, body.offset, ',')) {
      Segment item = trimmed(raw);
      std::string name(item.text);
      bool ok = is_species ? valid_species_name(name) : valid_identifier(name);
      if (!ok) fail(ErrorCode::syntax_error, line_no, item.offset, item.text.size(), "invalid name '" + name + "'");
      if (!seen.insert(name).second) {
        fail(is_species ? ErrorCode::duplicate_species_declaration : ErrorCode::syntax_error, line_no,
             item.offset, item.text.size(), "duplicate declaration of '" + name + "'");
      }
      if (is_species) {
        net_.species.push_back(name);
      } else {
        totals_.insert(name);
      }
    }
  }

  void use_species(const std::string& name, int line_no, std::size_t offset, std::size_t len) {
    if (net_.has_species(name)) return;
    if (have_species_header_) {
      fail(ErrorCode::unknown_species, line_no, offset, len, "species '" + name + "' is not declared");
    }
    net_.species.push_back(name);
  }

  Complex parse_complex(Segment seg, int line_no) {
    seg = trimmed(seg);
    if (seg.text.empty()) fail(ErrorCode::syntax_error, line_no, seg.offset, 1, "missing complex");
    if (seg.text == "0") return Complex();
    std::map<std::string, Rational> coeffs;
    for (const auto& raw : split_top_level(seg.text, seg.offset, '+')) {
      Segment term = trimmed(raw);
      if (term.text.empty()) fail(ErrorCode::syntax_error, line_no, raw.offset, 1, "empty term in complex");
      Rational coef = 1;
      std::string_view name_part = term.text;
      std::size_t name_offset = term.offset;
      if (std::isdigit(static_cast<unsigned char>(term.text.front()))) {
        std::size_t star = term.text.find('*');
        if (star == std::string_view::npos) {
          fail(ErrorCode::syntax_error, line_no, term.offset, term.text.size(),
               "expected 'coefficient*Name' in complex");
        }
        std::string_view lit = term.text.substr(0, star);
        while (!lit.empty() && is_space(lit.back())) lit.remove_suffix(1);
        try {
          coef = parse_rational(lit);
        } catch (const Error&) {
          fail(ErrorCode::syntax_error, line_no, term.offset, lit.size(), "malformed coefficient");
        }
        if (coef <= 0) fail(ErrorCode::syntax_error, line_no, term.offset, lit.size(), "coefficient must be positive");
        Segment rest = trimmed({term.text.substr(star + 1), term.offset + star + 1});
        name_part = rest.text;
        name_offset = rest.offset;
      }
      if (!valid_species_name(name_part)) {
        fail(ErrorCode::syntax_error, line_no, name_offset, name_part.size(),
             "invalid species name '" + std::string(name_part) + "'");
      }
      std::string name(name_part);
      use_species(name, line_no, name_offset, name_part.size());
      coeffs[name] += coef;
    }
    return Complex(std::move(coeffs));
  }

  Kinetics parse_rate(Segment seg, int line_no) {
    seg = trimmed(seg);
    if (seg.text.empty()) fail(ErrorCode::syntax_error, line_no, seg.offset, 1, "missing rate");
    std::string_view t = seg.text;
    if (t.size() > 4 && t.substr(0, 4) == "rate" && !ident_char(t[4]) && t[4] != '\'') {
      Cursor c{t.substr(4), 0, line_no, static_cast<int>(seg.offset + 4) + 1};
      ExpressionParser p(c, totals_, [&](const std::string& name, SourceSpan sp) {
        use_species(name, line_no, static_cast<std::size_t>(sp.column - 1), static_cast<std::size_t>(sp.length));
      });
      return General{p.parse_all().expand()};
    }
    if (valid_identifier(t)) {
      std::string name(t);
      SymbolKind kind = totals_.count(name) ? SymbolKind::total_amount : SymbolKind::rate_constant;
      return MassAction{Symbol(kind, name)};
    }
    Rational value;
    try {
      value = parse_rational(t);
    } catch (const Error&) {
      fail(ErrorCode::syntax_error, line_no, seg.offset, t.size(), "malformed rate '" + std::string(t) + "'");
    }
    if (value <= 0) {
      fail(ErrorCode::non_positive_rate_constant, line_no, seg.offset, t.size(),
           "rate constant must be positive, got " + to_string(value));
    }
    return MassAction{value};
  }

  void handle_reaction(Segment line, int line_no) {
    std::string_view t = line.text;
    std::size_t arrow = t.find("<->");
    std::size_t arrow_len = 3;
    bool reversible = arrow != std::string_view::npos;
    if (!reversible) {
      arrow = t.find("->");
      arrow_len = 2;
    }
    if (arrow == std::string_view::npos) {
      fail(ErrorCode::syntax_error, line_no, line.offset, t.size(), "expected '->' or '<->'");
    }
    std::size_t semi = t.find(';', arrow);
    if (semi == std::string_view::npos) {
      fail(ErrorCode::syntax_error, line_no, line.offset + t.size(), 1, "expected ';' followed by a rate");
    }
    std::string_view rest = t.substr(arrow + arrow_len, semi - arrow - arrow_len);
    if (rest.find("->") != std::string_view::npos) {
      fail(ErrorCode::syntax_error, line_no, line.offset + arrow + arrow_len, rest.size(), "more than one arrow");
    }
    Complex lhs = parse_complex({t.substr(0, arrow), line.offset}, line_no);
    Complex rhs = parse_complex({rest, line.offset + arrow + arrow_len}, line_no);
    if (lhs == rhs) {
      fail(ErrorCode::self_edge_reaction, line_no, line.offset, semi, "reactant and product are identical");
    }
    Segment rates{t.substr(semi + 1), line.offset + semi + 1};
    auto specs = split_top_level(rates.text, rates.offset, ',');
    std::size_t expected = reversible ? 2 : 1;
    if (specs.size() != expected) {
      fail(ErrorCode::syntax_error, line_no, rates.offset, rates.text.size(),
           reversible ? "reversible reaction needs two rates" : "irreversible reaction needs one rate");
    }
    Kinetics forward = parse_rate(specs[0], line_no);
    net_.reactions.push_back({next_id_++, lhs, rhs, forward, {}});
    if (reversible) {
      Kinetics backward = parse_rate(specs[1], line_no);
      net_.reactions.push_back({next_id_++, rhs, lhs, backward, {}});
    }
  }

  std::string_view text_;
  ReactionNetwork net_;
  std::set<std::string> totals_;
  bool have_species_header_ = false;
  bool have_totals_header_ = false;
  int next_id_ = 1;
};

using nlohmann::json;

json rational_to_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return json(r.get_num().get_si());
  return json(to_string(r));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::syntax_error, "expected an integer or a \"p/q\" string, got " + j.dump());
}

json complex_to_json(const Complex& c) {
  json out = json::object();
  for (const auto& [name, coef] : c.coefficients()) out[name] = rational_to_json(coef);
  return out;
}

Complex complex_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::syntax_error, "complex must be a JSON object");
  std::map<std::string, Rational> coeffs;
  for (auto it = j.begin(); it != j.end(); ++it) coeffs[it.key()] = rational_from_json(it.value());
  return Complex(std::move(coeffs));
}

const char* provenance_kind_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::input: return "input";
    case Provenance::Kind::projected: return "projected";
    case Provenance::Kind::cycle: return "cycle";
  }
  return "input";
}

}  // namespace

ReactionNetwork parse_network(std::string_view text) { return NetworkParser(text).run(); }

Expression parse_expression(std::string_view text, const std::set<std::string>& totals) {
  Cursor c{text, 0, 1, 1};
  return ExpressionParser(c, totals, nullptr).parse_all();
}

std::vector<std::string> total_symbols(const ReactionNetwork& net) {
  std::set<Symbol> found;
  for (const auto& r : net.reactions) {
    if (const auto* g = std::get_if<General>(&r.kinetics)) {
      for (const auto& s : g->rate.symbols()) {
        if (s.kind() == SymbolKind::total_amount) found.insert(s);
      }
    } else if (const auto* s = std::get_if<Symbol>(&std::get<MassAction>(r.kinetics).constant)) {
      if (s->kind() == SymbolKind::total_amount) found.insert(*s);
    }
  }
  std::vector<std::string> out;
  for (const auto& s : found) out.push_back(s.name());
  return out;
}

std::string serialize_network(const ReactionNetwork& net, Format format) {
  std::vector<std::string> totals = total_symbols(net);
  if (format == Format::json) {
    json doc;
    doc["species"] = net.species;
    doc["totals"] = totals;
    doc["reactions"] = json::array();
    for (const auto& r : net.reactions) {
      json jr;
      jr["id"] = r.id;
      jr["reactant"] = complex_to_json(r.reactant);
      jr["product"] = complex_to_json(r.product);
      json rate;
      if (const auto* g = std::get_if<General>(&r.kinetics)) {
        rate["kind"] = "general";
        rate["expression"] = g->rate.to_string();
        rate["numerator"] = g->rate.num().to_string();
        rate["denominator"] = g->rate.den().to_string();
      } else {
        const auto& ma = std::get<MassAction>(r.kinetics);
        rate["kind"] = "mass_action";
        if (const auto* s = std::get_if<Symbol>(&ma.constant)) {
          rate["constant"] = s->name();
        } else {
          rate["value"] = rational_to_json(std::get<Rational>(ma.constant));
        }
      }
      jr["rate"] = rate;
      if (!r.provenance.empty()) {
        json prov = json::array();
        for (const auto& p : r.provenance) {
          prov.push_back({{"kind", provenance_kind_name(p.kind)}, {"reactions", p.reaction_ids}});
        }
        jr["provenance"] = prov;
      }
      doc["reactions"].push_back(jr);
    }
    return doc.dump(2) + "\n";
  }

  std::string out = "species: ";
  for (std::size_t i = 0; i < net.species.size(); ++i) out += (i ? ", " : "") + net.species[i];
  out += "\n";
  if (!totals.empty()) {
    out += "totals: ";
    for (std::size_t i = 0; i < totals.size(); ++i) out += (i ? ", " : "") + totals[i];
    out += "\n";
  }
  for (const auto& r : net.reactions) {
    out += r.reactant.to_string(net.species) + " -> " + r.product.to_string(net.species) + " ; ";
    if (const auto* g = std::get_if<General>(&r.kinetics)) {
      out += "rate " + g->rate.to_string();
    } else {
      const auto& ma = std::get<MassAction>(r.kinetics);
      if (const auto* s = std::get_if<Symbol>(&ma.constant)) {
        out += s->name();
      } else {
        out += to_string(std::get<Rational>(ma.constant));
      }
    }
    if (!r.provenance.empty()) {
      out += "  # ";
      for (std::size_t i = 0; i < r.provenance.size(); ++i) out += (i ? "; " : "") + to_string(r.provenance[i]);
    }
    out += "\n";
  }
  return out;
}

ReactionNetwork parse_network_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ErrorCode::syntax_error, SourceSpan{1, static_cast<int>(e.byte) + 1, 1}, e.what());
  }
  auto bad = [](const std::string& msg) -> ParseError {
    return ParseError(ErrorCode::syntax_error, SourceSpan{1, 1, 1}, msg);
  };
  try {
    ReactionNetwork net;
    if (!doc.is_object() || !doc.contains("species") || !doc.contains("reactions")) {
      throw bad("network document needs 'species' and 'reactions'");
    }
    std::set<std::string> seen;
    for (const auto& s : doc["species"]) {
      std::string name = s.get<std::string>();
      if (!seen.insert(name).second) {
        throw ParseError(ErrorCode::duplicate_species_declaration, SourceSpan{1, 1, 1},
                         "duplicate species '" + name + "'");
      }
      net.species.push_back(name);
    }
    std::set<std::string> totals;
    if (doc.contains("totals")) {
      for (const auto& t : doc["totals"]) totals.insert(t.get<std::string>());
    }
    for (const auto& jr : doc["reactions"]) {
      Reaction r;
      r.id = jr.at("id").get<int>();
      r.reactant = complex_from_json(jr.at("reactant"));
      r.product = complex_from_json(jr.at("product"));
      for (const Complex* c : {&r.reactant, &r.product}) {
        for (const auto& [name, coef] : c->coefficients()) {
          if (!seen.count(name)) {
            throw ParseError(ErrorCode::unknown_species, SourceSpan{1, 1, 1}, "species '" + name + "' is not declared");
          }
        }
      }
      if (r.reactant == r.product) {
        throw ParseError(ErrorCode::self_edge_reaction, SourceSpan{1, 1, 1},
                         "reaction " + std::to_string(r.id) + ": reactant and product are identical");
      }
      const json& rate = jr.at("rate");
      std::string kind = rate.at("kind").get<std::string>();
      if (kind == "general") {
        r.kinetics = General{parse_expression(rate.at("expression").get<std::string>(), totals).expand()};
      } else if (kind == "mass_action") {
        if (rate.contains("constant")) {
          std::string name = rate["constant"].get<std::string>();
          r.kinetics = MassAction{Symbol(totals.count(name) ? SymbolKind::total_amount : SymbolKind::rate_constant, name)};
        } else {
          Rational v = rational_from_json(rate.at("value"));
          if (v <= 0) {
            throw ParseError(ErrorCode::non_positive_rate_constant, SourceSpan{1, 1, 1},
                             "rate constant must be positive, got " + to_string(v));
          }
          r.kinetics = MassAction{v};
        }
      } else {
        throw bad("unknown rate kind '" + kind + "'");
      }
      if (jr.contains("provenance")) {
        for (const auto& p : jr["provenance"]) {
          Provenance prov;
          std::string pk = p.at("kind").get<std::string>();
          if (pk == "input") {
            prov.kind = Provenance::Kind::input;
          } else if (pk == "projected") {
            prov.kind = Provenance::Kind::projected;
          } else if (pk == "cycle") {
            prov.kind = Provenance::Kind::cycle;
          } else {
            throw bad("unknown provenance kind '" + pk + "'");
          }
          prov.reaction_ids = p.at("reactions").get<std::vector<int>>();
          r.provenance.push_back(std::move(prov));
        }
      }
      net.reactions.push_back(std::move(r));
    }
    return net;
  } catch (const json::exception& e) {
    throw bad(std::string("malformed network document: ") + e.what());
  }
}

ReactionNetwork load_network(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    if (c == '{') return parse_network_json(text);
    break;
  }
  return parse_network(text);
}

}  // namespace crnreduce
