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

#pragma once

#include <string>
#include <vector>

#include "dlc/error.hpp"
#include "dlc/surface.hpp"

namespace dlc::detail {

struct Token {
  enum class Kind {
    Ident,   // x, A, I, D
    Hash,    // #name (text holds name)
    Dollar,  // $name
    Number,  // 12, 1.5
    String,  // "..." (text holds contents)
    Symbol,  // punctuation, text holds the symbol
    End
  };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;

  bool is(const char* sym) const { return kind == Kind::Symbol && text == sym; }
};

/// `dashed` lets identifiers contain '-' (derivation opcodes such as unitl-).
std::vector<Token> tokenize(const SourceText& src, bool dashed = false);

class TokenStream {
 public:
  TokenStream(const SourceText& src, std::vector<Token> tokens)
      : src_(src), tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t k = 0) const {
    return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool accept(const char* sym) {
    if (!peek().is(sym)) return false;
    next();
    return true;
  }
  void expect(const char* sym) {
    if (!accept(sym)) fail("expected '" + std::string(sym) + "'");
  }
  std::string expect_ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected identifier");
    return next().text;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(peek(), msg); }
  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    std::string found = at.kind == Token::Kind::End ? "end of input"
                                                    : "'" + at.text + "'";
    throw SyntaxError(src_.origin, at.line, at.column,
                      msg + ", found " + found);
  }
  const SourceText& source() const { return src_; }

 private:
  const SourceText& src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Type parse_type(TokenStream& in);
SugarTerm parse_term(TokenStream& in);

}  // namespace dlc::detail
