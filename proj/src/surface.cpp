// Copyright 2026 The dlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlc/surface.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

#include "dlc/calculus.hpp"
#include "dlc/error.hpp"
#include "lexer.hpp"

namespace dlc {

using detail::Token;
using detail::TokenStream;

namespace {

SugarSequent parse_sugar(TokenStream& in) {
  SugarSequent s;
  if (!in.peek().is("|-")) {
    do {
      SugarTerm t = detail::parse_term(in);
      in.expect(":");
      s.context.emplace_back(std::move(t), detail::parse_type(in));
    } while (in.accept(","));
  }
  in.expect("|-");
  if (in.accept("{")) {
    if (!in.peek().is("}")) {
      do {
        SugarConnection c;
        c.left = detail::parse_term(in);
        in.expect(":");
        if (in.accept("[")) {
          c.type = detail::parse_type(in);
          in.expect("]");
        }
        c.right = detail::parse_term(in);
        s.soup.push_back(std::move(c));
      } while (in.accept(","));
    }
    in.expect("}");
  }
  if (!in.at_end()) {
    SugarTerm t = detail::parse_term(in);
    in.expect(":");
    s.conclusion = {std::move(t), detail::parse_type(in)};
  }
  if (!in.at_end()) in.fail("expected end of sequent");
  return s;
}

}  // namespace

SugarSequent parse_sugar_sequent(const SourceText& src) {
  TokenStream in(src, detail::tokenize(src));
  return parse_sugar(in);
}

Sequent parse_sequent(const SourceText& src,
                      const std::map<std::string, Type>& constant_types) {
  return elaborate(parse_sugar_sequent(src), constant_types);
}

std::vector<Sequent> parse_sequent_file(
    const SourceText& src, const std::map<std::string, Type>& constant_types) {
  std::vector<Sequent> out;
  std::istringstream lines(src.text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    SourceText one{line, src.origin};
    auto tokens = detail::tokenize(one);
    if (tokens.size() == 1) continue;  // blank or comment
    for (auto& t : tokens) t.line = lineno;
    TokenStream in(one, std::move(tokens));
    out.push_back(elaborate(parse_sugar(in), constant_types));
  }
  return out;
}

Type parse_type(const SourceText& src) {
  TokenStream in(src, detail::tokenize(src));
  Type t = detail::parse_type(in);
  if (!in.at_end()) in.fail("expected end of type");
  return t;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.context[i].term) + ":" + to_string(s.context[i].type);
  }
  out += out.empty() ? "|- " : " |- ";
  if (!s.soup.empty()) {
    auto mask = annotations_needed(s);
    out += "{ ";
    for (std::size_t i = 0; i < s.soup.size(); ++i) {
      if (i) out += ", ";
      out += to_string(s.soup[i], mask[i]);
    }
    out += " } ";
  }
  out += to_string(s.conclusion.term) + ":" + to_string(s.conclusion.type);
  return out;
}

// ---------------------------------------------------------------------------
// Signatures

std::map<std::string, Type> SignatureDecl::constant_types() const {
  std::map<std::string, Type> out;
  for (const auto& c : constants) out.emplace(c.name, c.type);
  return out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(const SourceText& src, std::string text, int line, int column)
      : src_(src), s_(std::move(text)), line_(line), column_(column) {}

  /// Parses a nested list of depth `dims.size()`, checking each extent.
  std::vector<std::complex<double>> parse(const std::vector<int>& dims) {
    std::vector<std::complex<double>> out;
    parse_level(dims, 0, out);
    skip_space();
    if (i_ != s_.size()) fail("trailing characters after tensor literal");
    return out;
  }

 private:
  void parse_level(const std::vector<int>& dims, std::size_t depth,
                   std::vector<std::complex<double>>& out) {
    skip_space();
    if (depth == dims.size()) {
      out.push_back(parse_complex());
      return;
    }
    if (!eat('[')) fail("expected '[' at nesting depth " + std::to_string(depth + 1));
    int count = 0;
    skip_space();
    if (!eat(']')) {
      for (;;) {
        parse_level(dims, depth + 1, out);
        ++count;
        skip_space();
        if (eat(']')) break;
        if (!eat(',')) fail("expected ',' or ']'");
      }
    }
    if (count != dims[depth])
      fail("shape mismatch: expected " + std::to_string(dims[depth]) +
           " entries at depth " + std::to_string(depth + 1) + ", found " +
           std::to_string(count));
  }

  std::complex<double> parse_complex() {
    double re = 0, im = 0;
    bool any = false;
    // First component: real, or imaginary when followed by 'i'.
    double v;
    bool had_digits;
    if (read_signed(v, had_digits)) {
      any = true;
      skip_space();
      if (eat('i')) {
        im = had_digits ? v : (v < 0 ? -1.0 : 1.0);
        return {re, im};
      }
      re = v;
    }
    skip_space();
    if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
      if (!read_signed(v, had_digits)) fail("malformed complex literal");
      skip_space();
      if (!eat('i')) fail("expected 'i' in complex literal");
      im = had_digits ? v : (v < 0 ? -1.0 : 1.0);
      any = true;
    }
    if (!any) fail("expected number");
    return {re, im};
  }

  bool read_signed(double& v, bool& had_digits) {
    skip_space();
    std::size_t start = i_;
    double sign = 1;
    if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
      if (s_[i_] == '-') sign = -1;
      ++i_;
      skip_space();
    }
    std::size_t digits = i_;
    while (i_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.' ||
            s_[i_] == 'e' || s_[i_] == 'E' ||
            ((s_[i_] == '+' || s_[i_] == '-') && i_ > digits &&
             (s_[i_ - 1] == 'e' || s_[i_ - 1] == 'E'))))
      ++i_;
    had_digits = i_ > digits;
    if (had_digits) {
      v = sign * std::strtod(s_.substr(digits, i_ - digits).c_str(), nullptr);
      return true;
    }
    // a bare sign or bare 'i' is a unit imaginary
    if (i_ < s_.size() && s_[i_] == 'i') {
      v = sign;
      return true;
    }
    i_ = start;
    return false;
  }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(src_.origin, line_, column_ + static_cast<int>(i_), msg);
  }

  const SourceText& src_;
  std::string s_;
  std::size_t i_ = 0;
  int line_, column_;
};

}  // namespace

SignatureDecl parse_signature(const SourceText& src) {
  SignatureDecl decl;
  std::map<std::string, int> dims;
  std::set<std::string> constants;
  std::istringstream lines(src.text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    // The value part is parsed separately; only the head is tokenized.
    std::size_t eq = line.find('=');
    for (std::size_t k = 0; k < line.size() && k < eq; ++k)
      if (line[k] == '#') {  // comment before any '='
        eq = std::string::npos;
        break;
      }
    SourceText head{eq == std::string::npos ? line : line.substr(0, eq), src.origin};
    auto tokens = detail::tokenize(head);
    if (tokens.size() == 1) continue;
    for (auto& t : tokens) t.line = lineno;
    TokenStream in(head, std::move(tokens));
    const Token first = in.peek();
    std::string kw = in.expect_ident();
    if (kw == "type") {
      std::string name = in.expect_ident();
      if (in.expect_ident() != "dim") in.fail("expected 'dim'");
      if (in.peek().kind != Token::Kind::Number) in.fail("expected dimension");
      const Token num = in.next();
      if (!in.at_end()) in.fail("expected end of line");
      int d = std::atoi(num.text.c_str());
      if (num.text.find('.') != std::string::npos || d <= 0)
        throw SyntaxError(src.origin, lineno, num.column,
                          "dimension of " + name + " must be a positive integer");
      if (name == "I" || dims.count(name))
        throw SyntaxError(src.origin, lineno, first.column,
                          "duplicate type " + name);
      dims[name] = d;
      decl.atoms.push_back({name, d});
    } else if (kw == "const") {
      std::string name = in.expect_ident();
      in.expect(":");
      Type type = detail::parse_type(in);
      if (!in.at_end()) in.fail("expected '=' or end of line");
      if (!constants.insert(name).second)
        throw SyntaxError(src.origin, lineno, first.column,
                          "duplicate constant " + name);
      ConstantDecl c{name, type, std::nullopt};
      std::vector<int> shape;
      for (const auto& leaf : atomic_leaves(type)) {
        auto it = dims.find(leaf.name());
        if (it == dims.end())
          throw SyntaxError(src.origin, lineno, first.column,
                            "constant " + name + " uses undeclared type " +
                                leaf.name());
        shape.push_back(it->second);
      }
      if (eq != std::string::npos) {
        LiteralParser lit(src, line.substr(eq + 1), lineno,
                          static_cast<int>(eq) + 2);
        c.value = lit.parse(shape);
      }
      decl.constants.push_back(std::move(c));
    } else {
      in.fail(first, "expected 'type' or 'const'");
    }
  }
  return decl;
}

// ---------------------------------------------------------------------------
// Derivation scripts

const std::map<std::string, std::string>& derivation_opcodes() {
  static const std::map<std::string, std::string> table = {
      {"id", "NT"},      {"one", ""},       {"hyp", "Q"},
      {"const", "NTT"},  {"comb", "NT*"},   {"cut", "SS"},
      {"tenr", "SS"},    {"app", "SS"},     {"tenl", "IS"},
      {"untenl", "IS"},  {"exch", "IS"},    {"curry", "S"},
      {"uncurry", "S"},  {"curry-e", "S"},  {"uncurry-e", "S"},
      {"neg", "S"},      {"dagger", "S"},   {"rename", "S"},
      {"unitl", "S"},   {"unitl-", "S"},   {"unitr", "S"},
      {"unitr-", "S"},   {"consume", "NS"},
  };
  return table;
}

namespace {

DerivationScript parse_script(TokenStream& in) {
  const Token open = in.peek();
  in.expect("(");
  DerivationScript d;
  d.line = open.line;
  d.column = open.column;
  const Token op = in.peek();
  d.op = in.expect_ident();
  auto it = derivation_opcodes().find(d.op);
  if (it == derivation_opcodes().end()) in.fail(op, "unknown rule '" + d.op + "'");
  const std::string& schema = it->second;
  for (std::size_t k = 0; k < schema.size(); ++k) {
    if (in.peek().is(")"))
      in.fail("rule '" + d.op + "' expects " +
              std::to_string(schema.size() -
                             static_cast<std::size_t>(std::count(
                                 schema.begin(), schema.end(), '*'))) +
              " arguments");
    switch (schema[k]) {
      case 'N':
        d.names.push_back(in.expect_ident());
        break;
      case 'T':
        if (k + 1 < schema.size() && schema[k + 1] == '*') {
          while (!in.peek().is(")")) d.types.push_back(detail::parse_type(in));
          ++k;
        } else {
          d.types.push_back(detail::parse_type(in));
        }
        break;
      case 'I':
        if (in.peek().kind != Token::Kind::Number ||
            in.peek().text.find('.') != std::string::npos)
          in.fail("expected index");
        d.ints.push_back(std::atoi(in.next().text.c_str()));
        break;
      case 'Q':
        if (in.peek().kind != Token::Kind::String) in.fail("expected quoted sequent");
        d.text = in.next().text;
        break;
      case 'S':
        d.premises.push_back(parse_script(in));
        break;
    }
  }
  if (!in.peek().is(")")) in.fail("too many arguments to rule '" + d.op + "'");
  in.next();
  return d;
}

}  // namespace

std::vector<DerivationScript> parse_derivation_file(const SourceText& src) {
  TokenStream in(src, detail::tokenize(src, true));
  std::vector<DerivationScript> out;
  while (!in.at_end()) out.push_back(parse_script(in));
  return out;
}

DerivationScript parse_derivation(const SourceText& src) {
  TokenStream in(src, detail::tokenize(src, true));
  DerivationScript d = parse_script(in);
  if (!in.at_end()) in.fail("expected end of derivation");
  return d;
}

std::string to_string(const DerivationScript& d) {
  std::string out = "(" + d.op;
  const std::string& schema = derivation_opcodes().at(d.op);
  std::size_t n = 0, t = 0, i = 0, p = 0;
  for (std::size_t k = 0; k < schema.size(); ++k) {
    switch (schema[k]) {
      case 'N':
        out += " " + d.names.at(n++);
        break;
      case 'T':
        if (k + 1 < schema.size() && schema[k + 1] == '*') {
          while (t < d.types.size()) out += " " + to_string(d.types[t++]);
          ++k;
        } else {
          out += " " + to_string(d.types.at(t++));
        }
        break;
      case 'I':
        out += " " + std::to_string(d.ints.at(i++));
        break;
      case 'Q':
        out += " \"" + d.text + "\"";
        break;
      case 'S':
        out += " " + to_string(d.premises.at(p++));
        break;
    }
  }
  return out + ")";
}

}  // namespace dlc
