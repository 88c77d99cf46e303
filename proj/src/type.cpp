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

#include "dlc/type.hpp"

#include <cassert>

namespace dlc {

struct Type::Node {
  Kind kind = Kind::Unit;
  std::string name;
  bool dual = false;
  Type left, right;
};

Type::Type() : node_(nullptr) {}

Type Type::atom(std::string name, bool dual) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->dual = dual;
  return Type(std::move(n));
}

Type Type::tensor(Type left, Type right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->left = std::move(left);
  n->right = std::move(right);
  return Type(std::move(n));
}

Type::Kind Type::kind() const { return node_ ? node_->kind : Kind::Unit; }

const std::string& Type::name() const {
  static const std::string unit_name = "I";
  return node_ ? node_->name : unit_name;
}

bool Type::dual() const { return node_ && node_->dual; }

const Type& Type::left() const {
  assert(is_tensor());
  return node_->left;
}

const Type& Type::right() const {
  assert(is_tensor());
  return node_->right;
}

bool operator==(const Type& a, const Type& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Type::Kind::Unit:
      return std::strong_ordering::equal;
    case Type::Kind::Atom:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.dual() <=> b.dual();
    case Type::Kind::Tensor:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
  return std::strong_ordering::equal;
}

Type negate(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Unit:
      return t;
    case Type::Kind::Atom:
      return Type::atom(t.name(), !t.dual());
    case Type::Kind::Tensor:
      return Type::tensor(negate(t.right()), negate(t.left()));
  }
  return t;
}

static void collect_leaves(const Type& t, std::vector<Type>& out) {
  if (t.is_atom()) {
    out.push_back(t);
  } else if (t.is_tensor()) {
    collect_leaves(t.left(), out);
    collect_leaves(t.right(), out);
  }
}

std::vector<Type> atomic_leaves(const Type& t) {
  std::vector<Type> out;
  collect_leaves(t, out);
  return out;
}

int leaf_count(const Type& t) {
  if (t.is_tensor()) return leaf_count(t.left()) + leaf_count(t.right());
  return 1;
}

Type tensor_of(const std::vector<Type>& types) {
  if (types.empty()) return Type::unit();
  Type acc = types.front();
  for (std::size_t i = 1; i < types.size(); ++i)
    acc = Type::tensor(acc, types[i]);
  return acc;
}

std::string to_string(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Unit:
      return "I";
    case Type::Kind::Atom:
      return t.dual() ? t.name() + "^" : t.name();
    case Type::Kind::Tensor:
      return "(" + to_string(t.left()) + " @ " + to_string(t.right()) + ")";
  }
  return "?";
}

}  // namespace dlc
