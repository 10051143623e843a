#pragma once

// Text format for polynomials ("3/2*x0^2*x1 - x2^3") and ideal files.

#include "hilbertkit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace hilbertkit {

namespace detail {

class PolyParser {
public:
  PolyParser(std::string text, const std::vector<std::string>& vars) : vars_(vars) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  MultiPoly parse() {
    MultiPoly result(vars_);
    if (s_.empty()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(result, sign);
    }
    return result;
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  void parse_term(MultiPoly& out, int sign) {
    Rational coeff = sign;
    Exponents e(vars_.size(), 0);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_digits();
      if (peek() == '/') {
        ++pos_;
        num += "/" + read_digits();
      }
      coeff *= parse_rational(num);
      have_factor = true;
      if (peek() == '*') {
        ++pos_;
        parse_factor(e);
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        parse_factor(e);
      }
    } else {
      parse_factor(e);
      have_factor = true;
    }
    while (peek() == '*') {
      ++pos_;
      parse_factor(e);
    }
    if (!have_factor) fail("empty term");
    out.add_term(e, coeff);
  }

  void parse_factor(Exponents& e) {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable name");
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) fail("unknown variable '" + name + "'");
    unsigned power = 1;
    if (peek() == '^') {
      ++pos_;
      power = static_cast<unsigned>(std::stoul(read_digits()));
    }
    e[static_cast<std::size_t>(it - vars_.begin())] += power;
  }

  std::string s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial over the given variable list; throws ParseError.
inline MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  return detail::PolyParser(text, vars).parse();
}

/// Prints terms in descending graded-lex order; parse_poly(to_string(f)) == f.
inline std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    bool any_var = total_degree(e) > 0;
    bool need_star = false;
    if (!any_var || mag != 1) {
      out += to_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out += "*";
      out += f.variables()[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
      need_star = true;
    }
  }
  return out;
}

/// Prints with the common denominator pulled out: "(c1^2+c2)/12", "c1*c2/24".
inline std::string to_string_factored(const MultiPoly& f) {
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) den = lcm(den, c.get_den());
  if (den == 1) return to_string(f);
  MultiPoly scaled = f * Rational(den);
  std::string body = to_string(scaled);
  if (f.num_terms() == 1) return body + "/" + den.get_str();
  return "(" + body + ")/" + den.get_str();
}

struct IdealFile {
  std::vector<std::string> variables;
  std::vector<MultiPoly> generators;
};

/// Format: first non-comment line `vars: x0 x1 ... xn`, then one polynomial per line.
/// Blank lines and lines starting with '#' are ignored.
inline IdealFile parse_ideal_file(std::istream& in) {
  IdealFile file;
  std::string line;
  bool have_vars = false;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    if (!have_vars) {
      if (line.rfind("vars:", 0) != 0) throw ParseError("ideal file must start with 'vars:'");
      std::istringstream names(line.substr(5));
      std::string v;
      while (names >> v) {
        if (std::find(file.variables.begin(), file.variables.end(), v) != file.variables.end())
          throw ParseError("duplicate variable '" + v + "'");
        file.variables.push_back(v);
      }
      if (file.variables.empty()) throw ParseError("empty variable list");
      have_vars = true;
      continue;
    }
    MultiPoly p = parse_poly(line, file.variables);
    if (!p.is_zero()) file.generators.push_back(std::move(p));
  }
  if (!have_vars) throw ParseError("missing 'vars:' line");
  return file;
}

inline IdealFile parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  return parse_ideal_file(in);
}

inline std::string format_ideal_file(const std::vector<std::string>& variables,
                                     const std::vector<MultiPoly>& generators) {
  std::string out = "vars:";
  for (const auto& v : variables) out += " " + v;
  out += "\n";
  for (const auto& g : generators) out += to_string(g) + "\n";
  return out;
}

}  // namespace hilbertkit
