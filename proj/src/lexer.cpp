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

#include "lexer.hpp"

#include <cctype>

namespace dlc::detail {
namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c, bool dashed) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '\'' || (dashed && c == '-');
}

}  // namespace

std::vector<Token> tokenize(const SourceText& src, bool dashed) {
  static const char* const kSymbols[] = {"|-", "=>", "-o", "(", ")", "[", "]",
                                         "{",  "}",  ",",  ":", "^", "@", ".",
                                         "\\", "="};
  const std::string& s = src.text;
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    tok.offset = i;
    if (c == '#' || c == '$') {
      if (i + 1 < s.size() && ident_start(s[i + 1])) {
        std::size_t j = i + 1;
        while (j < s.size() && ident_char(s[j], false)) ++j;
        tok.kind = c == '#' ? Token::Kind::Hash : Token::Kind::Dollar;
        tok.text = s.substr(i + 1, j - i - 1);
        advance(j - i);
        out.push_back(tok);
        continue;
      }
      if (c == '#') {
        while (i < s.size() && s[i] != '\n') advance(1);
        continue;
      }
      throw SyntaxError(src.origin, line, col, "expected combinator name after '$'");
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j], dashed)) ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = s.substr(i, j - i);
      advance(j - i);
      out.push_back(tok);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j + 1 < s.size() && s[j] == '.' &&
          std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      tok.kind = Token::Kind::Number;
      tok.text = s.substr(i, j - i);
      advance(j - i);
      out.push_back(tok);
      continue;
    }
    if (c == '"') {
      std::size_t j = s.find('"', i + 1);
      if (j == std::string::npos)
        throw SyntaxError(src.origin, line, col, "unterminated string");
      tok.kind = Token::Kind::String;
      tok.text = s.substr(i + 1, j - i - 1);
      advance(j + 1 - i);
      out.push_back(tok);
      continue;
    }
    bool matched = false;
    for (const char* sym : kSymbols) {
      std::size_t n = std::char_traits<char>::length(sym);
      if (s.compare(i, n, sym) == 0) {
        tok.kind = Token::Kind::Symbol;
        tok.text = sym;
        advance(n);
        out.push_back(tok);
        matched = true;
        break;
      }
    }
    if (!matched)
      throw SyntaxError(src.origin, line, col,
                        std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.line = line;
  end.column = col;
  end.offset = s.size();
  out.push_back(end);
  return out;
}

// type := tensor_type [-o type]
// tensor_type := postfix {@ postfix}
Type parse_type(TokenStream& in);

namespace {

Type parse_type_primary(TokenStream& in) {
  Type t;
  if (in.accept("(")) {
    t = parse_type(in);
    in.expect(")");
  } else if (in.peek().kind == Token::Kind::Ident) {
    std::string name = in.next().text;
    t = name == "I" ? Type::unit() : Type::atom(name);
  } else {
    in.fail("expected type");
  }
  while (in.accept("^")) t = negate(t);
  return t;
}

Type parse_type_tensor(TokenStream& in) {
  Type t = parse_type_primary(in);
  while (in.accept("@")) t = Type::tensor(t, parse_type_primary(in));
  return t;
}

}  // namespace

Type parse_type(TokenStream& in) {
  Type t = parse_type_tensor(in);
  if (in.accept("-o")) return Type::tensor(negate(t), parse_type(in));
  return t;
}

namespace {

SugarTerm parse_term_postfix(TokenStream& in);

SugarTerm parse_lambda(TokenStream& in) {
  in.expect("\\");
  SugarTerm pattern = parse_term_postfix(in);
  in.expect("=>");
  return SugarTerm::lambda(std::move(pattern), parse_term(in));
}

SugarTerm parse_term_primary(TokenStream& in) {
  const Token& t = in.peek();
  switch (t.kind) {
    case Token::Kind::Ident: {
      std::string name = in.next().text;
      if (name == "D" && in.accept("[")) {
        Type ty = parse_type(in);
        in.expect("]");
        return SugarTerm::dim(ty);
      }
      return SugarTerm::var(name);
    }
    case Token::Kind::Hash:
      return SugarTerm::constant(in.next().text);
    case Token::Kind::Number:
      if (t.text != "1") in.fail("the only numeral term is 1");
      in.next();
      return SugarTerm::one();
    case Token::Kind::Dollar: {
      std::string name = in.next().text;
      std::vector<Type> params;
      in.expect("[");
      if (!in.peek().is("]")) {
        do {
          params.push_back(parse_type(in));
        } while (in.accept(","));
      }
      in.expect("]");
      return SugarTerm::comb(name, std::move(params));
    }
    default:
      break;
  }
  if (in.peek().is("\\")) return parse_lambda(in);
  if (in.accept("(")) {
    SugarTerm inner = parse_term(in);
    in.expect(")");
    return inner;
  }
  in.fail("expected term");
}

SugarTerm parse_term_postfix(TokenStream& in) {
  SugarTerm t = parse_term_primary(in);
  for (;;) {
    if (in.accept("^")) {
      t = SugarTerm::star(std::move(t));
    } else if (in.accept("(")) {
      SugarTerm arg = parse_term(in);
      in.expect(")");
      t = SugarTerm::app(std::move(t), std::move(arg));
    } else {
      return t;
    }
  }
}

SugarTerm parse_term_product(TokenStream& in) {
  SugarTerm t = parse_term_postfix(in);
  if (!in.peek().is(".")) return t;
  SugarTerm p{SugarTerm::Kind::Product, {}, {}, {std::move(t)}};
  while (in.accept(".")) p.sub.push_back(parse_term_postfix(in));
  return p;
}

}  // namespace

SugarTerm parse_term(TokenStream& in) {
  if (in.peek().is("\\")) return parse_lambda(in);
  SugarTerm t = parse_term_product(in);
  while (in.accept("@")) t = SugarTerm::tensor(std::move(t), parse_term_product(in));
  return t;
}

}  // namespace dlc::detail
