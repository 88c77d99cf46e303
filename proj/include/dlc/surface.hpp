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

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlc/sequent.hpp"

namespace dlc {

struct SourceText {
  std::string text;
  std::string origin = "<stdin>";
};

/**
 * Term syntax before elaboration: the core forms plus lambda abstraction,
 * application and named combinators.
 **/
struct SugarTerm {
  enum class Kind { Var, Const, One, Dim, Star, Tensor, Product, Lambda, App, Comb };

  Kind kind = Kind::One;
  std::string name;           // Var, Const, Comb
  std::vector<Type> types;    // Dim (one entry), Comb parameters
  std::vector<SugarTerm> sub; // Star: 1, Tensor/Lambda/App: 2, Product: n

  static SugarTerm var(std::string n) { return {Kind::Var, std::move(n), {}, {}}; }
  static SugarTerm constant(std::string n) { return {Kind::Const, std::move(n), {}, {}}; }
  static SugarTerm one() { return {}; }
  static SugarTerm dim(Type t) { return {Kind::Dim, {}, {std::move(t)}, {}}; }
  static SugarTerm star(SugarTerm t) { return {Kind::Star, {}, {}, {std::move(t)}}; }
  static SugarTerm tensor(SugarTerm l, SugarTerm r) {
    return {Kind::Tensor, {}, {}, {std::move(l), std::move(r)}};
  }
  static SugarTerm lambda(SugarTerm pattern, SugarTerm body) {
    return {Kind::Lambda, {}, {}, {std::move(pattern), std::move(body)}};
  }
  static SugarTerm app(SugarTerm fn, SugarTerm arg) {
    return {Kind::App, {}, {}, {std::move(fn), std::move(arg)}};
  }
  static SugarTerm comb(std::string n, std::vector<Type> params) {
    return {Kind::Comb, std::move(n), std::move(params), {}};
  }
};

struct SugarConnection {
  SugarTerm left, right;
  std::optional<Type> type;
};

struct SugarSequent {
  std::vector<std::pair<SugarTerm, Type>> context;
  std::vector<SugarConnection> soup;
  std::pair<SugarTerm, Type> conclusion{SugarTerm::one(), Type::unit()};
};

/**
 * Grammar:
 *   sequent := [entry {, entry}] |- [{ [conn {, conn}] }] [term : type]
 *   entry   := term : type
 *   conn    := term : term | term :[type] term
 *   type    := ident | I | type^ | type @ type | type -o type | ( type )
 *   term    := ident | #ident | 1 | D[type] | term^ | term @ term
 *            | term . term | term(term) | \term => term | $comb[type,...]
 * `@` and `.` associate to the left; an omitted conclusion means 1:I.
 **/
SugarSequent parse_sugar_sequent(const SourceText& src);

/// Parses, elaborates and validates (typing + linearity) a sequent.
Sequent parse_sequent(const SourceText& src,
                      const std::map<std::string, Type>& constant_types = {});

/// One sequent per line of a `.dlc` file; blank and comment lines skipped.
std::vector<Sequent> parse_sequent_file(
    const SourceText& src,
    const std::map<std::string, Type>& constant_types = {});

Type parse_type(const SourceText& src);

/// Deterministic ASCII rendering; connection types are printed only where
/// they cannot be inferred.
std::string print_sequent(const Sequent& s);

struct AtomDecl {
  std::string name;
  int dim = 1;
};

struct ConstantDecl {
  std::string name;
  Type type;
  /// Row-major entries over the atomic leaves of `type`, if valued.
  std::optional<std::vector<std::complex<double>>> value;
};

struct SignatureDecl {
  std::vector<AtomDecl> atoms;
  std::vector<ConstantDecl> constants;

  std::map<std::string, Type> constant_types() const;
};

/**
 * Line-oriented signature:
 *   type NAME dim N
 *   const NAME : TYPE [= TENSOR]
 * where TENSOR nests one bracket level per atomic leaf of TYPE and leaves
 * are complex literals `a+bi`.
 **/
SignatureDecl parse_signature(const SourceText& src);

/**
 * A derivation script node: `(opcode args... premises...)`.
 **/
struct DerivationScript {
  std::string op;
  std::vector<std::string> names;
  std::vector<Type> types;
  std::vector<int> ints;
  std::string text;
  std::vector<DerivationScript> premises;
  int line = 0;
  int column = 0;
};

/// Opcode table: argument kinds per opcode, N name, T type, T* types,
/// I index, Q quoted sequent, S premise.
const std::map<std::string, std::string>& derivation_opcodes();

DerivationScript parse_derivation(const SourceText& src);

/// All scripts in a `.dprf` file.
std::vector<DerivationScript> parse_derivation_file(const SourceText& src);

std::string to_string(const DerivationScript& d);

}  // namespace dlc
