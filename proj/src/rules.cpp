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

#include <algorithm>

#include "dlc/calculus.hpp"
#include "dlc/error.hpp"
#include "dlc/rewrite.hpp"
#include "dlc/surface.hpp"

namespace dlc {
namespace {

void require_disjoint(const Sequent& a, const Sequent& b, const char* rule) {
  auto va = variable_names(a);
  for (const auto& v : variable_names(b))
    if (va.count(v))
      throw RuleError(std::string(rule) + ": premises share variable " + v +
                      "; rename one of them first");
}

Soup soup_union(const Soup& a, const Soup& b) {
  Soup s = a;
  s.add(b);
  return s;
}

void require_index(const Sequent& j, std::size_t pos, std::size_t width,
                   const char* rule) {
  if (pos + width > j.context.size())
    throw RuleError(std::string(rule) + ": no context entries at position " +
                    std::to_string(pos) + " (context has " +
                    std::to_string(j.context.size()) + ")");
}

std::size_t find_connection(const Sequent& j, const Connection& c) {
  for (std::size_t i = 0; i < j.soup.size(); ++i)
    if (j.soup[i] == c) return i;
  throw RuleError("connection " + to_string(c) + " not found");
}

Sequent apply_kind(const Sequent& j, std::size_t index, RedexKind kind) {
  return step(j, Redex{kind, index, j.soup[index]});
}

// Index of the first connection {i^ : 1}, with the scalar term i.
std::pair<std::size_t, Term> find_unit_connection(const Sequent& j,
                                                  const char* rule) {
  for (std::size_t i = 0; i < j.soup.size(); ++i) {
    const auto& c = j.soup[i];
    if (!c.type().is_unit()) continue;
    if (c.right().is_one()) return {i, negate(c.left())};
    if (c.left().is_one()) return {i, c.right()};
  }
  throw RuleError(std::string(rule) + ": the soup has no connection {i^ : 1}");
}

}  // namespace

Sequent rule_id(const std::string& name, const Type& t) {
  Sequent s;
  s.context.push_back({Term::var(name), t});
  s.conclusion = {Term::var(name), t};
  return s;
}

Sequent rule_one() { return Sequent{}; }

Sequent rule_constant(const std::string& name, const Type& from, const Type& to) {
  std::string a = name + "_in", b = name + "_out";
  Sequent s;
  s.context.push_back({Term::var(a), from});
  s.soup.add(Connection(Term::constant(name),
                        Term::tensor(Term::var(a, true), Term::var(b)),
                        Type::tensor(negate(from), to)));
  s.conclusion = {Term::var(b), to};
  return s;
}

Sequent rule_cut(const Sequent& left, const Sequent& right) {
  if (right.context.empty()) throw RuleError("cut: right premise has an empty context");
  const Typed& head = right.context.front();
  if (head.type != left.conclusion.type)
    throw RuleError("cut: left premise concludes " + to_string(left.conclusion.type) +
                    " but the right premise expects " + to_string(head.type));
  require_disjoint(left, right, "cut");
  Sequent s;
  s.context = left.context;
  s.context.insert(s.context.end(), right.context.begin() + 1, right.context.end());
  s.soup = soup_union(left.soup, right.soup);
  s.soup.add(Connection(left.conclusion.term, head.term, head.type));
  s.conclusion = right.conclusion;
  s.fresh = std::max(left.fresh, right.fresh);
  return s;
}

Sequent rule_tensor_r(const Sequent& left, const Sequent& right) {
  require_disjoint(left, right, "tenr");
  Sequent s;
  s.context = left.context;
  if (!right.context.empty()) s.context.push_back(tensor_form(right.context));
  s.soup = soup_union(left.soup, right.soup);
  s.conclusion = {Term::tensor(left.conclusion.term, right.conclusion.term),
                  Type::tensor(left.conclusion.type, right.conclusion.type)};
  s.fresh = std::max(left.fresh, right.fresh);
  return s;
}

Sequent rule_negation(const Sequent& j) {
  if (j.context.size() != 1)
    throw RuleError("neg: expected exactly one hypothesis, found " +
                    std::to_string(j.context.size()));
  Sequent s;
  s.context.push_back({negate(j.context[0].term), negate(j.context[0].type)});
  s.soup = negate(j.soup);
  s.conclusion = {negate(j.conclusion.term), negate(j.conclusion.type)};
  s.fresh = j.fresh;
  return s;
}

Sequent rule_curry(const Sequent& j) {
  if (j.context.empty()) throw RuleError("curry: empty context");
  Sequent s = j;
  Typed a = s.context.front();
  s.context.erase(s.context.begin());
  s.conclusion = {Term::tensor(negate(a.term), j.conclusion.term),
                  Type::tensor(negate(a.type), j.conclusion.type)};
  return s;
}

Sequent rule_uncurry(const Sequent& j) {
  const Type& t = j.conclusion.type;
  if (!t.is_tensor())
    throw RuleError("uncurry: conclusion type " + to_string(t) + " is not a tensor");
  Sequent s = j;
  Term c = s.conclusion.term;
  if (c.is_var()) {
    // Split the conclusion variable into a pair throughout.
    Term pair = Term::tensor(Term::var(fresh_variable(s)), Term::var(fresh_variable(s)));
    Term with = c.star() ? negate(pair) : pair;
    std::string name = c.name();
    int fresh = s.fresh;
    s = map_terms(s, [&](const Term& x) { return substitute(x, name, with); });
    s.fresh = fresh;
    c = pair;
  }
  if (!c.is_tensor())
    throw RuleError("uncurry: conclusion " + to_string(c) + " is not a tensor term");
  s.context.insert(s.context.begin(), Typed{negate(c.left()), negate(t.left())});
  s.conclusion = {c.right(), t.right()};
  return s;
}

Sequent rule_uncurry_empty(const Sequent& j) {
  return rule_uncurry(rule_tensor_r(j, rule_one()));
}

Sequent rule_curry_empty(const Sequent& j) {
  if (!(j.conclusion.term.is_one() && j.conclusion.type.is_unit()))
    throw RuleError("curry-e: conclusion is not 1:I");
  Sequent c = rule_curry(j);  // Gamma |- (a^ @ 1):(A^ @ I)
  const Type a_type = c.conclusion.type.left();
  const Term a_term = c.conclusion.term.left();
  // (x @ 1):(A^ @ I) |- x:A^ strips the unit factor.
  Sequent rho;
  std::string x = fresh_variable(c);
  rho.context.push_back({Term::tensor(Term::var(x), Term::one()), c.conclusion.type});
  rho.conclusion = {Term::var(x), a_type};
  Sequent s = rule_cut(c, rho);
  s.fresh = c.fresh;
  s = apply_kind(s,
                 find_connection(s, Connection(c.conclusion.term,
                                               rho.context[0].term,
                                               c.conclusion.type)),
                 RedexKind::Bifunctor);
  s = apply_kind(s,
                 find_connection(s, Connection(Term::one(), Term::one(), Type::unit())),
                 RedexKind::Cancel);
  s = rule_consume(s, x);
  if (!(s.conclusion.term == a_term))
    throw RuleError("curry-e: unexpected conclusion " + to_string(s.conclusion.term));
  return s;
}

Sequent rule_tensor_l(const Sequent& j, std::size_t pos) {
  require_index(j, pos, 2, "tenl");
  Sequent s = j;
  Typed a = s.context[pos], b = s.context[pos + 1];
  s.context.erase(s.context.begin() + pos, s.context.begin() + pos + 2);
  s.context.insert(s.context.begin() + pos,
                   Typed{Term::tensor(a.term, b.term), Type::tensor(a.type, b.type)});
  return s;
}

Sequent rule_untensor_l(const Sequent& j, std::size_t pos) {
  require_index(j, pos, 1, "untenl");
  const Typed& e = j.context[pos];
  if (!e.term.is_tensor() || !e.type.is_tensor())
    throw RuleError("untenl: entry " + to_string(e.term) + ":" + to_string(e.type) +
                    " is not a tensor term");
  Sequent s = j;
  s.context.erase(s.context.begin() + pos);
  s.context.insert(s.context.begin() + pos,
                   {Typed{e.term.left(), e.type.left()},
                    Typed{e.term.right(), e.type.right()}});
  return s;
}

Sequent rule_exchange(const Sequent& j, std::size_t pos) {
  require_index(j, pos, 2, "exch");
  Sequent s = j;
  std::swap(s.context[pos], s.context[pos + 1]);
  return s;
}

Sequent rule_unit_left(const Sequent& j) {
  auto [index, i] = find_unit_connection(j, "unitl");
  Sequent s = j;
  s.soup.erase(index);
  s.context.insert(s.context.begin(), Typed{i, Type::unit()});
  return s;
}

Sequent rule_unit_left_inv(const Sequent& j) {
  if (j.context.empty() || !j.context.front().type.is_unit())
    throw RuleError("unitl-: context does not begin with a hypothesis of type I");
  Sequent s = j;
  Term i = s.context.front().term;
  s.context.erase(s.context.begin());
  s.soup.add(Connection(negate(i), Term::one(), Type::unit()));
  return s;
}

Sequent rule_unit_right(const Sequent& j) {
  auto [index, i] = find_unit_connection(j, "unitr");
  Sequent s = j;
  s.soup.erase(index);
  s.context.push_back(Typed{i, Type::unit()});
  return s;
}

Sequent rule_unit_right_inv(const Sequent& j) {
  if (j.context.empty() || !j.context.back().type.is_unit())
    throw RuleError("unitr-: context does not end with a hypothesis of type I");
  Sequent s = j;
  Term i = s.context.back().term;
  s.context.pop_back();
  s.soup.add(Connection(negate(i), Term::one(), Type::unit()));
  return s;
}

Sequent dagger_flip(const Sequent& j) {
  if (j.context.size() != 1)
    throw RuleError("dagger: expected exactly one hypothesis, found " +
                    std::to_string(j.context.size()));
  Sequent s;
  s.context.push_back(j.conclusion);
  s.soup = negate(j.soup);
  s.conclusion = j.context[0];
  s.fresh = j.fresh;
  return s;
}

Sequent dagger_flip_by_rules(const Sequent& j) {
  return rule_curry_empty(
      rule_exchange(rule_uncurry_empty(rule_negation(j)), 0));
}

Sequent negation_by_dagger(const Sequent& j) {
  return rule_curry_empty(rule_exchange(rule_uncurry_empty(dagger_flip(j)), 0));
}

Sequent rule_app(const Sequent& fn, const Sequent& arg) {
  const Type& ft = fn.conclusion.type;
  if (!ft.is_tensor() || negate(ft.left()) != arg.conclusion.type)
    throw RuleError("app: cannot apply " + to_string(ft) + " to " +
                    to_string(arg.conclusion.type));
  require_disjoint(fn, arg, "app");
  Sequent s;
  s.context = fn.context;
  s.context.insert(s.context.end(), arg.context.begin(), arg.context.end());
  s.soup = soup_union(fn.soup, arg.soup);
  s.fresh = std::max(fn.fresh, arg.fresh);
  std::string x = fresh_variable(s);
  s.soup.add(Connection(fn.conclusion.term,
                        Term::tensor(negate(arg.conclusion.term), Term::var(x)), ft));
  s.conclusion = {Term::var(x), ft.right()};
  return s;
}

Sequent rule_rename(const Sequent& j, int& counter) {
  std::string suffix = "'" + std::to_string(++counter);
  Sequent s = map_terms(j, [&](const Term& t) {
    return map_variables(t, [&](const std::string& name, bool star) {
      return Term::var(name + suffix, star);
    });
  });
  s.fresh = j.fresh;
  return s;
}

Sequent rule_consume(const Sequent& j, const std::string& name) {
  for (const auto& r : enumerate_redexes(j)) {
    const Term* gone = nullptr;
    if (r.kind == RedexKind::ConsumeRight) gone = &r.target.right();
    if (r.kind == RedexKind::ConsumeLeft) gone = &r.target.left();
    if (gone && gone->is_var() && gone->name() == name) return step(j, r);
  }
  throw RuleError("consume: no connection consumes variable " + name);
}

}  // namespace dlc
