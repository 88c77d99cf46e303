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

#include <map>
#include <string>
#include <vector>

#include "dlc/sequent.hpp"
#include "dlc/surface.hpp"

namespace dlc {

// Sequent rules.  Each returns the conclusion of the rule applied to the
// given premises, or throws RuleError when a side condition fails.

/// x:T |- x:T
Sequent rule_id(const std::string& name, const Type& t);

/// |- 1:I
Sequent rule_one();

/// a:A |- { #f : (a^ @ b) } b:B, the introduction of a morphism constant.
Sequent rule_constant(const std::string& name, const Type& from, const Type& to);

/// Gamma |-S1 a:A  and  a':A, Delta |-S2 c:C  give  Gamma, Delta |-S1,S2,{a:a'} c:C.
Sequent rule_cut(const Sequent& left, const Sequent& right);

/// Gamma |- a:A  and  Delta |- b:B  give  Gamma, @Delta |- (a @ b):(A @ B).
/// An empty Delta contributes no entry.
Sequent rule_tensor_r(const Sequent& left, const Sequent& right);

/// a:A |-S b:B  gives  a^:A^ |-S^ b^:B^.
Sequent rule_negation(const Sequent& j);

/// a:A, Gamma |- b:B  gives  Gamma |- (a^ @ b):(A^ @ B).
Sequent rule_curry(const Sequent& j);

/// Inverse of rule_curry.  A conclusion variable of type A^ @ B is first
/// split into a fresh pair of variables.
Sequent rule_uncurry(const Sequent& j);

/// Gamma |- b:B  gives  b^:B^, Gamma |- 1:I.
Sequent rule_uncurry_empty(const Sequent& j);

/// a:A, Gamma |- 1:I  gives  Gamma |- a^:A^.
Sequent rule_curry_empty(const Sequent& j);

/// Fuses context entries pos and pos+1 into their tensor.
Sequent rule_tensor_l(const Sequent& j, std::size_t pos);

/// Splits a tensor context entry (a @ b):(A @ B) at pos.
Sequent rule_untensor_l(const Sequent& j, std::size_t pos);

/// Swaps context entries pos and pos+1.
Sequent rule_exchange(const Sequent& j, std::size_t pos);

/// Gamma |-S,{i^:1} b:B  gives  i:I, Gamma |-S b:B, for the first
/// connection of the soup with 1 on one side.  i is a scalar term.
Sequent rule_unit_left(const Sequent& j);
/// i:I, Gamma |-S b:B  gives  Gamma |-S,{i^:1} b:B.
Sequent rule_unit_left_inv(const Sequent& j);
/// Gamma |-S,{i^:1} b:B  gives  Gamma, i:I |-S b:B.
Sequent rule_unit_right(const Sequent& j);
/// Gamma, i:I |-S b:B  gives  Gamma |-S,{i^:1} b:B.
Sequent rule_unit_right_inv(const Sequent& j);

/// a:A |-S b:B  gives  b:B |-S^ a:A.
Sequent dagger_flip(const Sequent& j);

/// The same flip built from negation, uncurry, exchange and curry.
Sequent dagger_flip_by_rules(const Sequent& j);

/// Negation rebuilt from the flip and curry/uncurry/exchange.
Sequent negation_by_dagger(const Sequent& j);

/// Gamma |-S1 f:(A^ @ B)  and  Delta |-S2 t:A  give
/// Gamma, Delta |-S1,S2,{f : (t^ @ x)} x:B  for a fresh x.
Sequent rule_app(const Sequent& fn, const Sequent& arg);

/// Renames every variable to a fresh primed name using `counter`.
Sequent rule_rename(const Sequent& j, int& counter);

/// Eliminates variable `name` by a consumption step on the connection where
/// it forms a whole side.
Sequent rule_consume(const Sequent& j, const std::string& name);

/// Names accepted by combinator_term, with their parameter count.
const std::map<std::string, int>& combinator_arity();

/// `|- c : T` for a combinator name and its type parameters.
Sequent combinator_sequent(const std::string& name, const std::vector<Type>& params);

/// Closed sugar term and its type for a combinator; variable names begin
/// with `prefix`.
std::pair<SugarTerm, Type> combinator_sugar(const std::string& name,
                                            const std::vector<Type>& params,
                                            const std::string& prefix);

/**
 * Rewrites lambda, application and combinators into core terms and soup
 * connections, then infers connection types and validates the result.
 **/
Sequent elaborate(const SugarSequent& s,
                  const std::map<std::string, Type>& constant_types = {});

struct Derivation {
  std::string rule;
  std::string path;
  Sequent conclusion;
  std::vector<Derivation> premises;
};

/// Replays a script bottom-up.  Errors name the failing node path.
Derivation check_derivation(const DerivationScript& script,
                            const std::map<std::string, Type>& constant_types = {});

/// `node <path> OK <sequent>` for each node, premises before conclusions.
std::vector<std::string> derivation_report(const Derivation& d);

}  // namespace dlc
