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
#include <memory>
#include <string>
#include <vector>

namespace dlc {

/**
 * A type of the calculus, held in star-normal form: duals sit only directly
 * on atoms, the unit is self-dual and duals of tensors have been pushed to the
 * leaves with the factors swapped.  Structural equality therefore decides type
 * equivalence.
 **/
class Type {
 public:
  enum class Kind { Unit, Atom, Tensor };

  /// The unit type I.
  Type();

  static Type unit() { return Type(); }
  static Type atom(std::string name, bool dual = false);
  static Type tensor(Type left, Type right);

  Kind kind() const;
  bool is_unit() const { return kind() == Kind::Unit; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_tensor() const { return kind() == Kind::Tensor; }

  const std::string& name() const;
  bool dual() const;
  const Type& left() const;
  const Type& right() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Linear negation on types: involutive, fixes I, (A @ B)^ = B^ @ A^.
Type negate(const Type& t);

/// Atomic leaves of a type, left to right, with their dual flags.  Unit leaves
/// are skipped: they carry no wire.
std::vector<Type> atomic_leaves(const Type& t);

/// Number of leaves including units.
int leaf_count(const Type& t);

/// Left-nested tensor of a list of types; I for the empty list.
Type tensor_of(const std::vector<Type>& types);

std::string to_string(const Type& t);

}  // namespace dlc
