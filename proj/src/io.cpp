#include "triso/io.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "triso/errors.hpp"

namespace triso {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (static_cast<unsigned char>(c) >= 0x80) throw ParseError(i, "non-ASCII character");
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::number, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::ident, start, std::string(s.substr(start, i - start))});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default: throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::end, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars) : toks_(tokenize(src)), vars_(vars) {}

  MPoly parse() {
    MPoly p = expr();
    if (peek().kind != Tok::end) {
      throw ParseError(peek().pos, peek().kind == Tok::ident || peek().kind == Tok::number ||
                                           peek().kind == Tok::lparen
                                       ? "implicit multiplication is not allowed"
                                       : "unexpected '" + peek().text + "'");
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  MPoly expr() {
    MPoly acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      bool minus = take().kind == Tok::minus;
      MPoly t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = unary();
    while (peek().kind == Tok::star) {
      take();
      acc = acc * unary();
    }
    return acc;
  }

  MPoly unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (peek().kind != Tok::caret) return base;
    take();
    const Token& e = peek();
    if (e.kind != Tok::number) throw ParseError(e.pos, "exponent must be a nonnegative integer literal");
    take();
    unsigned long k = 0;
    try {
      k = std::stoul(e.text);
    } catch (const std::exception&) {
      throw ParseError(e.pos, "exponent too large");
    }
    if (k > 100000) throw ParseError(e.pos, "exponent too large");
    if (peek().kind == Tok::caret) throw ParseError(peek().pos, "chained exponents are ambiguous");
    return base.pow(static_cast<unsigned>(k));
  }

  MPoly atom() {
    const Token& t = peek();
    std::size_t n = vars_.size();
    switch (t.kind) {
      case Tok::number: {
        take();
        Integer num(t.text);
        Integer den = 1;
        if (peek().kind == Tok::slash) {
          take();
          const Token& d = peek();
          if (d.kind != Tok::number) throw ParseError(d.pos, "expected an integer denominator");
          take();
          den = Integer(d.text);
          if (sign(den) == 0) throw ParseError(d.pos, "zero denominator");
        }
        return MPoly::constant(n, make_rational(num, den));
      }
      case Tok::ident: {
        take();
        for (std::size_t k = 0; k < n; ++k) {
          if (vars_[k] == t.text) return MPoly::variable(n, k);
        }
        throw UnknownVariable(t.pos, t.text);
      }
      case Tok::lparen: {
        take();
        MPoly inner = expr();
        if (peek().kind != Tok::rparen) throw ParseError(peek().pos, "expected ')'");
        take();
        return inner;
      }
      case Tok::end:
        throw ParseError(t.pos, "unexpected end of input");
      default:
        throw ParseError(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& vars_;
  std::size_t i_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::positive_dimension: return "positive_dimension";
    case Status::error: return "error";
  }
  return "error";
}

}  // namespace

MPoly parse_poly(std::string_view src, const std::vector<std::string>& vars) {
  return Parser(src, vars).parse();
}

std::string render(const MPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool neg = sign(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

SystemDocument parse_system_document(std::string_view text) {
  SystemDocument doc;
  bool have_vars = false;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(offset, nl - offset);
    std::size_t line_start = offset;
    offset = nl + 1;
    for (std::size_t k = 0; k < line.size(); ++k) {
      if (static_cast<unsigned char>(line[k]) >= 0x80) throw ParseError(line_start + k, "non-ASCII character");
    }
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    std::size_t lead = line.find_first_not_of(" \t\r");
    std::size_t at = line_start + lead;

    if (!have_vars) {
      if (body.rfind("vars:", 0) != 0) throw ParseError(at, "expected 'vars: ...' header");
      std::stringstream ss(body.substr(5));
      std::string name;
      while (std::getline(ss, name, ',')) {
        name = trim(name);
        if (!is_identifier(name)) throw ParseError(at, "bad variable name '" + name + "'");
        for (const auto& v : doc.var_order) {
          if (v == name) throw ParseError(at, "duplicate variable '" + name + "'");
        }
        doc.var_order.push_back(name);
      }
      if (doc.var_order.empty()) throw ParseError(at, "no variables declared");
      have_vars = true;
      continue;
    }
    std::size_t eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(at, "expected 'name = expression'");
    std::string name = trim(std::string_view(body).substr(0, eq));
    if (!is_identifier(name)) throw ParseError(at, "bad equation name '" + name + "'");
    std::string expr = body.substr(eq + 1);
    try {
      parse_poly(expr, doc.var_order);
    } catch (const ParseError& e) {
      std::size_t expr_at = at + eq + 1 + e.position();
      if (dynamic_cast<const UnknownVariable*>(&e)) {
        throw UnknownVariable(expr_at, static_cast<const UnknownVariable&>(e).name());
      }
      throw ParseError(expr_at, e.detail());
    }
    doc.names.push_back(name);
    doc.equations.push_back(trim(expr));
  }
  if (!have_vars) throw ParseError(0, "missing 'vars:' header");
  if (doc.equations.size() != doc.var_order.size()) {
    throw ParseError(text.size(), std::to_string(doc.var_order.size()) + " variables but " +
                                      std::to_string(doc.equations.size()) + " equations");
  }
  return doc;
}

TriangularSystem to_system(const SystemDocument& doc) {
  std::vector<MPoly> polys;
  for (const auto& e : doc.equations) polys.push_back(parse_poly(e, doc.var_order));
  return check_triangular(std::move(polys));
}

ResultDocument make_result(const MultiIsolation& m, const std::vector<std::string>& vars,
                           const Rational& precision) {
  ResultDocument doc;
  doc.variables = vars;
  doc.precision = precision;
  for (const auto& s : m.solutions) {
    doc.solutions.push_back({s.box.coords(), s.multiplicity, s.branch_id, s.exponents});
  }
  for (const auto& b : m.branches) {
    std::vector<std::string> polys;
    for (const auto& p : b.system.polys()) polys.push_back(render(p.primitive(), vars));
    doc.decomposition.push_back(std::move(polys));
  }
  return doc;
}

std::string to_json(const ResultDocument& doc, bool with_decomposition) {
  nlohmann::ordered_json j;
  j["status"] = status_name(doc.status);
  if (doc.status != Status::ok) {
    j["message"] = doc.message;
    return j.dump(2) + "\n";
  }
  j["variables"] = doc.variables;
  j["precision"] = to_string(doc.precision);
  j["solutions"] = nlohmann::ordered_json::array();
  for (const auto& s : doc.solutions) {
    nlohmann::ordered_json box = nlohmann::ordered_json::array();
    for (const auto& iv : s.box) box.push_back({to_string(iv.lo), to_string(iv.hi)});
    j["solutions"].push_back(
        {{"box", box}, {"multiplicity", s.multiplicity}, {"branch", s.branch}, {"exponents", s.exponents}});
  }
  if (with_decomposition) j["decomposition"] = doc.decomposition;
  return j.dump(2) + "\n";
}

ResultDocument result_from_json(std::string_view text) {
  ResultDocument doc;
  try {
    auto j = nlohmann::json::parse(text);
    std::string st = j.at("status").get<std::string>();
    if (st == "ok") {
      doc.status = Status::ok;
    } else if (st == "positive_dimension") {
      doc.status = Status::positive_dimension;
    } else if (st == "error") {
      doc.status = Status::error;
    } else {
      throw ParseError(0, "unknown status '" + st + "'");
    }
    if (doc.status != Status::ok) {
      doc.message = j.value("message", "");
      return doc;
    }
    doc.variables = j.at("variables").get<std::vector<std::string>>();
    doc.precision = parse_rational(j.at("precision").get<std::string>());
    for (const auto& s : j.at("solutions")) {
      SolutionRecord r;
      for (const auto& iv : s.at("box")) {
        r.box.emplace_back(parse_rational(iv.at(0).get<std::string>()), parse_rational(iv.at(1).get<std::string>()));
      }
      r.multiplicity = s.at("multiplicity").get<unsigned long>();
      r.branch = s.at("branch").get<std::size_t>();
      r.exponents = s.at("exponents").get<std::vector<unsigned>>();
      doc.solutions.push_back(std::move(r));
    }
    if (j.contains("decomposition")) {
      doc.decomposition = j.at("decomposition").get<std::vector<std::vector<std::string>>>();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
  return doc;
}

std::string to_text(const ResultDocument& doc, bool with_decomposition) {
  std::ostringstream os;
  if (doc.status != Status::ok) {
    os << doc.message << "\n";
    return os.str();
  }
  for (const auto& s : doc.solutions) {
    os << "[";
    for (std::size_t k = 0; k < s.box.size(); ++k) {
      if (k) os << ",";
      os << "[" << to_string(s.box[k].lo) << "," << to_string(s.box[k].hi) << "]";
    }
    os << "], " << s.multiplicity << "\n";
  }
  if (with_decomposition) {
    for (std::size_t b = 0; b < doc.decomposition.size(); ++b) {
      os << "branch " << b << ": [";
      for (std::size_t k = 0; k < doc.decomposition[b].size(); ++k) {
        if (k) os << ", ";
        os << doc.decomposition[b][k];
      }
      os << "]\n";
    }
  }
  return os.str();
}

}  // namespace triso
