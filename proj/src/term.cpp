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

#include "dlc/term.hpp"

#include <cassert>

namespace dlc {

struct Term::Node {
  Kind kind = Kind::One;
  std::string name;
  bool star = false;
  Type dim_type;
  std::vector<Term> children;
};

Term::Term() : node_(nullptr) {}

Term Term::var(std::string name, bool star) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  n->star = star;
  return Term(std::move(n));
}

Term Term::constant(std::string name, bool star) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->name = std::move(name);
  n->star = star;
  return Term(std::move(n));
}

Term Term::dim(const Type& of) {
  switch (of.kind()) {
    case Type::Kind::Unit:
      return one();
    case Type::Kind::Tensor:
      return product(dim(of.left()), dim(of.right()));
    case Type::Kind::Atom:
      break;
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Dim;
  n->dim_type = Type::atom(of.name());
  return Term(std::move(n));
}

Term Term::tensor(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->children = {std::move(left), std::move(right)};
  return Term(std::move(n));
}

Term Term::product(const std::vector<Term>& factors) {
  std::vector<Term> flat;
  for (const auto& f : factors) {
    if (f.is_one()) continue;
    if (f.is_product()) {
      flat.insert(flat.end(), f.factors().begin(), f.factors().end());
    } else {
      flat.push_back(f);
    }
  }
  if (flat.empty()) return one();
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->children = std::move(flat);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_ ? node_->kind : Kind::One; }

const std::string& Term::name() const {
  static const std::string none;
  return node_ ? node_->name : none;
}

bool Term::star() const { return node_ && node_->star; }

const Type& Term::dim_type() const {
  assert(is_dim());
  return node_->dim_type;
}

const Term& Term::left() const {
  assert(is_tensor());
  return node_->children[0];
}

const Term& Term::right() const {
  assert(is_tensor());
  return node_->children[1];
}

const std::vector<Term>& Term::factors() const {
  assert(is_product());
  return node_->children;
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Term::Kind::One:
      return std::strong_ordering::equal;
    case Term::Kind::Var:
    case Term::Kind::Const:
      if (auto c = a.name() <=> b.name(); c != 0) return c;
      return a.star() <=> b.star();
    case Term::Kind::Dim:
      return a.dim_type() <=> b.dim_type();
    case Term::Kind::Tensor:
    case Term::Kind::Product: {
      const auto& x = a.node_->children;
      const auto& y = b.node_->children;
      if (auto c = x.size() <=> y.size(); c != 0) return c;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (auto c = x[i] <=> y[i]; c != 0) return c;
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

Term negate(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::One:
    case Term::Kind::Dim:
      return t;
    case Term::Kind::Var:
      return Term::var(t.name(), !t.star());
    case Term::Kind::Const:
      return Term::constant(t.name(), !t.star());
    case Term::Kind::Tensor:
      return Term::tensor(negate(t.right()), negate(t.left()));
    case Term::Kind::Product: {
      std::vector<Term> fs;
      for (const auto& f : t.factors()) fs.push_back(negate(f));
      return Term::product(fs);
    }
  }
  return t;
}

bool is_constant_free(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return true;
    case Term::Kind::Tensor:
      return is_constant_free(t.left()) && is_constant_free(t.right());
    default:
      return false;
  }
}

void count_variables(const Term& t, std::map<std::string, int>& counts) {
  switch (t.kind()) {
    case Term::Kind::Var:
      ++counts[t.name()];
      break;
    case Term::Kind::Tensor:
      count_variables(t.left(), counts);
      count_variables(t.right(), counts);
      break;
    case Term::Kind::Product:
      for (const auto& f : t.factors()) count_variables(f, counts);
      break;
    default:
      break;
  }
}

static void collect_variables(const Term& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.push_back(t.name());
      break;
    case Term::Kind::Tensor:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      break;
    case Term::Kind::Product:
      for (const auto& f : t.factors()) collect_variables(f, out);
      break;
    default:
      break;
  }
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_variables(t, out);
  return out;
}

bool mentions_variable(const Term& t, const std::string& name) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name() == name;
    case Term::Kind::Tensor:
      return mentions_variable(t.left(), name) ||
             mentions_variable(t.right(), name);
    case Term::Kind::Product:
      for (const auto& f : t.factors())
        if (mentions_variable(f, name)) return true;
      return false;
    default:
      return false;
  }
}

int leaf_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Tensor:
      return leaf_count(t.left()) + leaf_count(t.right());
    case Term::Kind::Product: {
      int n = 0;
      for (const auto& f : t.factors()) n += leaf_count(f);
      return n;
    }
    default:
      return 1;
  }
}

Term map_variables(const Term& t,
                   const std::function<Term(const std::string&, bool)>& f) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return f(t.name(), t.star());
    case Term::Kind::Tensor:
      return Term::tensor(map_variables(t.left(), f),
                          map_variables(t.right(), f));
    case Term::Kind::Product: {
      std::vector<Term> fs;
      for (const auto& x : t.factors()) fs.push_back(map_variables(x, f));
      return Term::product(fs);
    }
    default:
      return t;
  }
}

Term substitute(const Term& t, const std::string& name, const Term& with) {
  if (!mentions_variable(t, name)) return t;
  return map_variables(t, [&](const std::string& v, bool star) {
    if (v != name) return Term::var(v, star);
    return star ? negate(with) : with;
  });
}

Term substitute(const Term& t, const std::map<std::string, Term>& with) {
  return map_variables(t, [&](const std::string& v, bool star) {
    auto it = with.find(v);
    if (it == with.end()) return Term::var(v, star);
    return star ? negate(it->second) : it->second;
  });
}

Term replace_subterm(const Term& t, const Term& target, const Term& with,
                     bool& hit) {
  if (hit) return t;
  if (t == target) {
    hit = true;
    return with;
  }
  if (t == negate(target)) {
    hit = true;
    return negate(with);
  }
  switch (t.kind()) {
    case Term::Kind::Tensor: {
      Term l = replace_subterm(t.left(), target, with, hit);
      Term r = replace_subterm(t.right(), target, with, hit);
      return Term::tensor(l, r);
    }
    case Term::Kind::Product: {
      std::vector<Term> fs;
      for (const auto& f : t.factors())
        fs.push_back(replace_subterm(f, target, with, hit));
      return Term::product(fs);
    }
    default:
      return t;
  }
}

bool contains_subterm(const Term& t, const Term& target) {
  if (t == target || t == negate(target)) return true;
  switch (t.kind()) {
    case Term::Kind::Tensor:
      return contains_subterm(t.left(), target) ||
             contains_subterm(t.right(), target);
    case Term::Kind::Product:
      for (const auto& f : t.factors())
        if (contains_subterm(f, target)) return true;
      return false;
    default:
      return false;
  }
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::One:
      return "1";
    case Term::Kind::Var:
      return t.star() ? t.name() + "^" : t.name();
    case Term::Kind::Const:
      return "#" + t.name() + (t.star() ? "^" : "");
    case Term::Kind::Dim:
      return "D[" + to_string(t.dim_type()) + "]";
    case Term::Kind::Tensor:
      return "(" + to_string(t.left()) + " @ " + to_string(t.right()) + ")";
    case Term::Kind::Product: {
      std::string s = "(";
      for (std::size_t i = 0; i < t.factors().size(); ++i) {
        if (i) s += " . ";
        s += to_string(t.factors()[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace dlc
