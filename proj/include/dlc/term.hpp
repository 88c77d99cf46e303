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

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dlc/type.hpp"

namespace dlc {

/**
 * A term in star-normal form.
 *
 *  `Var`/`Const`: a named leaf, possibly starred;
 *  `One`: the scalar 1;
 *  `Dim`: the dimension scalar D[A] of an atomic type A;
 *  `Tensor`: a @ b;
 *  `Product`: a flattened scalar product m . n . ... of at least two factors.
 *
 * The smart constructors keep the invariants: stars appear only on leaves,
 * 1^ = 1, D[A]^ = D[A], D[I] = 1, D[A^] = D[A], D[A @ B] = D[A] . D[B],
 * products never contain 1 or nested products.
 **/
class Term {
 public:
  enum class Kind { Var, Const, One, Dim, Tensor, Product };

  /// The scalar 1.
  Term();

  static Term one() { return Term(); }
  static Term var(std::string name, bool star = false);
  static Term constant(std::string name, bool star = false);
  static Term dim(const Type& of);
  static Term tensor(Term left, Term right);
  static Term product(const std::vector<Term>& factors);
  static Term product(Term a, Term b) { return product({std::move(a), std::move(b)}); }

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_one() const { return kind() == Kind::One; }
  bool is_dim() const { return kind() == Kind::Dim; }
  bool is_tensor() const { return kind() == Kind::Tensor; }
  bool is_product() const { return kind() == Kind::Product; }

  const std::string& name() const;
  bool star() const;
  const Type& dim_type() const;
  const Term& left() const;
  const Term& right() const;
  const std::vector<Term>& factors() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Linear negation on terms: (a @ b)_* = b_* @ a_*, 1_* = 1, D_* = D.
Term negate(const Term& t);

/// True iff t contains no constant form (Const, One, Dim, Product).
bool is_constant_free(const Term& t);

/// Adds one to `counts[name]` for every variable occurrence in t.
void count_variables(const Term& t, std::map<std::string, int>& counts);

std::vector<std::string> variables(const Term& t);

bool mentions_variable(const Term& t, const std::string& name);

/// Number of wire-carrying leaves: variables, constants and scalar factors.
int leaf_count(const Term& t);

/// Replaces every occurrence of variable `name`: a plain occurrence becomes
/// `with`, a starred one becomes negate(with).  Result is re-normalized.
Term substitute(const Term& t, const std::string& name, const Term& with);

/// Simultaneous substitution over a map of variable names.
Term substitute(const Term& t, const std::map<std::string, Term>& with);

/// Replaces the first subterm equal to `target` by `with`, or the first
/// subterm equal to negate(target) by negate(with).  Sets `hit` on success.
Term replace_subterm(const Term& t, const Term& target, const Term& with,
                     bool& hit);

/// True iff `target` or its negation occurs as a subterm of t.
bool contains_subterm(const Term& t, const Term& target);

/// Applies f to every variable leaf, rebuilding the term from its results.
Term map_variables(const Term& t,
                   const std::function<Term(const std::string&, bool)>& f);

std::string to_string(const Term& t);

}  // namespace dlc
