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

#include <set>

#include "dlc/calculus.hpp"
#include "dlc/error.hpp"

namespace dlc {
namespace {

using K = SugarTerm::Kind;

Type lolli(const Type& a, const Type& b) { return Type::tensor(negate(a), b); }

SugarTerm tensor(SugarTerm a, SugarTerm b) {
  return SugarTerm::tensor(std::move(a), std::move(b));
}

void collect_names(const SugarTerm& t, std::set<std::string>& out) {
  if (t.kind == K::Var) out.insert(t.name);
  for (const auto& s : t.sub) collect_names(s, out);
}

class Elaborator {
 public:
  Elaborator(const SugarSequent& s, const std::map<std::string, Type>& constants)
      : constants_(constants) {
    for (const auto& [t, ty] : s.context) collect_names(t, used_);
    for (const auto& c : s.soup) {
      collect_names(c.left, used_);
      collect_names(c.right, used_);
    }
    collect_names(s.conclusion.first, used_);
  }

  Sequent run(const SugarSequent& s) {
    std::vector<Typed> context;
    for (const auto& [t, ty] : s.context) context.push_back({lower(t, false), ty});
    for (const auto& c : s.soup)
      soup_.push_back({lower(c.left, true), lower(c.right, false), c.type});
    Typed conclusion{lower(s.conclusion.first, true), s.conclusion.second};
    Sequent out = make_sequent(std::move(context), soup_, std::move(conclusion),
                               constants_, facts_);
    validate(out, constants_);
    return out;
  }

 private:
  std::string fresh() {
    for (;;) {
      std::string name = "_" + std::to_string(counter_++);
      if (used_.insert(name).second) return name;
    }
  }

  std::string fresh_prefix() {
    for (;;) {
      std::string prefix = "_c" + std::to_string(counter_++) + "_";
      bool clash = false;
      for (const auto& u : used_)
        if (u.compare(0, prefix.size(), prefix) == 0) clash = true;
      if (!clash) return prefix;
    }
  }

  // `positive`: conclusion and soup-left positions; context and soup-right
  // are negative.  Applications in negative positions emit the negated
  // connection.
  Term lower(const SugarTerm& t, bool positive) {
    switch (t.kind) {
      case K::Var:
        return Term::var(t.name);
      case K::Const:
        return Term::constant(t.name);
      case K::One:
        return Term::one();
      case K::Dim:
        return Term::dim(t.types.at(0));
      case K::Star:
        return negate(lower(t.sub[0], !positive));
      case K::Tensor:
        return Term::tensor(lower(t.sub[0], positive), lower(t.sub[1], positive));
      case K::Product: {
        std::vector<Term> fs;
        for (const auto& f : t.sub) fs.push_back(lower(f, positive));
        return Term::product(fs);
      }
      case K::Lambda:
        return Term::tensor(negate(lower(t.sub[0], !positive)),
                            lower(t.sub[1], positive));
      case K::App: {
        Term f = lower(t.sub[0], positive);
        Term a = lower(t.sub[1], positive);
        Term x = Term::var(fresh());
        RawConnection c{f, Term::tensor(negate(a), x), std::nullopt};
        if (!positive) c = {negate(c.left), negate(c.right), std::nullopt};
        soup_.push_back(std::move(c));
        return x;
      }
      case K::Comb: {
        auto [sugar, type] = combinator_sugar(t.name, t.types, fresh_prefix());
        collect_names(sugar, used_);
        Term term = lower(sugar, positive);
        facts_.push_back({term, type});
        return term;
      }
    }
    throw TypeError("unknown sugar form");
  }

  const std::map<std::string, Type>& constants_;
  std::set<std::string> used_;
  std::vector<RawConnection> soup_;
  std::vector<Typed> facts_;
  int counter_ = 0;
};

}  // namespace

const std::map<std::string, int>& combinator_arity() {
  static const std::map<std::string, int> table = {
      {"id", 1},     {"sigma", 2}, {"sbar", 2}, {"alpha", 3},
      {"lambda", 1}, {"rho", 1},   {"eta", 1},  {"eps", 1},
      {"bbar", 3},   {"tbar", 4},
  };
  return table;
}

std::pair<SugarTerm, Type> combinator_sugar(const std::string& name,
                                            const std::vector<Type>& p,
                                            const std::string& prefix) {
  auto it = combinator_arity().find(name);
  if (it == combinator_arity().end()) throw TypeError("unknown combinator $" + name);
  if (static_cast<int>(p.size()) != it->second)
    throw TypeError("combinator $" + name + " takes " + std::to_string(it->second) +
                    " type parameters, given " + std::to_string(p.size()));
  auto v = [&](const char* n) { return SugarTerm::var(prefix + n); };
  auto lam = [](SugarTerm a, SugarTerm b) {
    return SugarTerm::lambda(std::move(a), std::move(b));
  };
  auto app = [](SugarTerm f, SugarTerm a) {
    return SugarTerm::app(std::move(f), std::move(a));
  };
  const SugarTerm one = SugarTerm::one();
  if (name == "id") return {lam(v("a"), v("a")), lolli(p[0], p[0])};
  if (name == "sigma" || name == "sbar")
    return {lam(tensor(v("a"), v("b")), tensor(v("b"), v("a"))),
            lolli(Type::tensor(p[0], p[1]), Type::tensor(p[1], p[0]))};
  if (name == "alpha")
    return {lam(tensor(v("a"), tensor(v("b"), v("c"))),
                tensor(tensor(v("a"), v("b")), v("c"))),
            lolli(Type::tensor(p[0], Type::tensor(p[1], p[2])),
                  Type::tensor(Type::tensor(p[0], p[1]), p[2]))};
  if (name == "lambda")
    return {lam(tensor(one, v("a")), v("a")), lolli(Type::tensor(Type::unit(), p[0]), p[0])};
  if (name == "rho")
    return {lam(tensor(v("a"), one), v("a")), lolli(Type::tensor(p[0], Type::unit()), p[0])};
  if (name == "eta")
    return {lam(one, tensor(SugarTerm::star(v("x")), v("x"))),
            lolli(Type::unit(), Type::tensor(negate(p[0]), p[0]))};
  if (name == "eps")
    return {lam(tensor(v("x"), SugarTerm::star(v("x"))), one),
            lolli(Type::tensor(p[0], negate(p[0])), Type::unit())};
  if (name == "bbar")
    return {lam(v("g"), lam(v("f"), lam(v("a"), app(v("g"), app(v("f"), v("a")))))),
            lolli(lolli(p[1], p[2]), lolli(lolli(p[0], p[1]), lolli(p[0], p[2])))};
  // tbar
  return {lam(v("f"),
              lam(v("g"), lam(tensor(v("x1"), v("x2")),
                              tensor(app(v("f"), v("x1")), app(v("g"), v("x2")))))),
          lolli(lolli(p[0], p[2]),
                lolli(lolli(p[1], p[3]),
                      lolli(Type::tensor(p[0], p[1]), Type::tensor(p[2], p[3]))))};
}

Sequent combinator_sequent(const std::string& name, const std::vector<Type>& params) {
  SugarSequent s;
  auto [sugar, type] = combinator_sugar(name, params, "");
  s.conclusion = {sugar, type};
  return elaborate(s);
}

Sequent elaborate(const SugarSequent& s,
                  const std::map<std::string, Type>& constant_types) {
  return Elaborator(s, constant_types).run(s);
}

}  // namespace dlc
