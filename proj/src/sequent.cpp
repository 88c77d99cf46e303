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

#include "dlc/sequent.hpp"

#include <algorithm>

#include "dlc/error.hpp"

namespace dlc {

Connection::Connection(Term left, Term right, Type type)
    : left_(std::move(left)), right_(std::move(right)), type_(std::move(type)) {
  Term fl = negate(right_);
  Term fr = negate(left_);
  auto c = fl <=> left_;
  if (c < 0 || (c == 0 && fr < right_)) {
    left_ = std::move(fl);
    right_ = std::move(fr);
    type_ = negate(type_);
  }
}

Connection negate(const Connection& c) {
  return Connection(negate(c.left()), negate(c.right()), negate(c.type()));
}

std::string to_string(const Connection& c, bool annotate) {
  if (annotate)
    return to_string(c.left()) + " :[" + to_string(c.type()) + "] " +
           to_string(c.right());
  return to_string(c.left()) + " : " + to_string(c.right());
}

Soup::Soup(std::vector<Connection> connections)
    : items_(std::move(connections)) {
  std::sort(items_.begin(), items_.end());
}

void Soup::add(Connection c) {
  auto it = std::upper_bound(items_.begin(), items_.end(), c);
  items_.insert(it, std::move(c));
}

void Soup::add(const Soup& other) {
  for (const auto& c : other) add(c);
}

void Soup::erase(std::size_t i) { items_.erase(items_.begin() + i); }

Soup negate(const Soup& s) {
  std::vector<Connection> out;
  for (const auto& c : s) out.push_back(negate(c));
  return Soup(std::move(out));
}

std::map<std::string, int> variable_counts(const Sequent& s) {
  std::map<std::string, int> counts;
  for (const auto& e : s.context) count_variables(e.term, counts);
  for (const auto& c : s.soup) {
    count_variables(c.left(), counts);
    count_variables(c.right(), counts);
  }
  count_variables(s.conclusion.term, counts);
  return counts;
}

std::set<std::string> variable_names(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& [name, n] : variable_counts(s)) out.insert(name);
  return out;
}

std::string fresh_variable(Sequent& s) {
  auto used = variable_names(s);
  for (;;) {
    std::string name = "_" + std::to_string(s.fresh++);
    if (!used.count(name)) return name;
  }
}

Sequent map_terms(const Sequent& s, const std::function<Term(const Term&)>& f) {
  Sequent out;
  out.fresh = s.fresh;
  for (const auto& e : s.context) out.context.push_back({f(e.term), e.type});
  std::vector<Connection> cs;
  for (const auto& c : s.soup)
    cs.emplace_back(f(c.left()), f(c.right()), c.type());
  out.soup = Soup(std::move(cs));
  out.conclusion = {f(s.conclusion.term), s.conclusion.type};
  return out;
}

LinearityReport check_linearity(const Sequent& s) {
  LinearityReport report;
  for (const auto& [name, n] : variable_counts(s)) {
    if (n != 2) {
      report.ok = false;
      report.violations[name] = n;
    }
  }
  return report;
}

namespace {

class Typer {
 public:
  explicit Typer(TypingInfo& info) : info_(info) {}

  void check(const Term& t, const Type& type) {
    switch (t.kind()) {
      case Term::Kind::Var:
        bind(info_.variables, "variable", t, type);
        break;
      case Term::Kind::Const:
        bind(info_.constants, "constant", t, type);
        break;
      case Term::Kind::One:
      case Term::Kind::Dim:
        expect_unit(t, type);
        break;
      case Term::Kind::Product:
        expect_unit(t, type);
        for (const auto& f : t.factors()) check(f, type);
        break;
      case Term::Kind::Tensor:
        if (!type.is_tensor())
          throw TypeError("term " + to_string(t) + " is a tensor but is typed " +
                          to_string(type));
        check(t.left(), type.left());
        check(t.right(), type.right());
        break;
    }
  }

  std::optional<Type> infer(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Var:
        return lookup(info_.variables, t);
      case Term::Kind::Const:
        return lookup(info_.constants, t);
      case Term::Kind::One:
      case Term::Kind::Dim:
      case Term::Kind::Product:
        return Type::unit();
      case Term::Kind::Tensor: {
        auto l = infer(t.left());
        auto r = infer(t.right());
        if (!l || !r) return std::nullopt;
        return Type::tensor(*l, *r);
      }
    }
    return std::nullopt;
  }

 private:
  static std::optional<Type> lookup(const std::map<std::string, Type>& m,
                                    const Term& t) {
    auto it = m.find(t.name());
    if (it == m.end()) return std::nullopt;
    return t.star() ? negate(it->second) : it->second;
  }

  void bind(std::map<std::string, Type>& m, const char* what, const Term& t,
            const Type& type) {
    Type plain = t.star() ? negate(type) : type;
    auto [it, inserted] = m.emplace(t.name(), plain);
    if (!inserted && it->second != plain)
      throw TypeError(std::string(what) + " " + t.name() + " used at type " +
                      to_string(plain) + " and at type " +
                      to_string(it->second));
  }

  static void expect_unit(const Term& t, const Type& type) {
    if (!type.is_unit())
      throw TypeError("scalar " + to_string(t) + " is typed " +
                      to_string(type) + ", expected I");
  }

  TypingInfo& info_;
};

}  // namespace

TypingInfo type_check(const Sequent& s,
                      const std::map<std::string, Type>& constant_types) {
  TypingInfo info;
  info.constants = constant_types;
  Typer typer(info);
  for (const auto& e : s.context) typer.check(e.term, e.type);
  for (const auto& c : s.soup) {
    typer.check(c.left(), c.type());
    typer.check(c.right(), c.type());
  }
  typer.check(s.conclusion.term, s.conclusion.type);
  return info;
}

TypingInfo validate(const Sequent& s,
                    const std::map<std::string, Type>& constant_types) {
  auto report = check_linearity(s);
  if (!report.ok) {
    std::string msg = "linearity violated:";
    for (const auto& [name, n] : report.violations)
      msg += " " + name + " occurs " + std::to_string(n) + "x;";
    throw LinearityError(msg);
  }
  return type_check(s, constant_types);
}

InferenceResult infer_connection_types(
    const std::vector<Typed>& context, const Typed& conclusion,
    const std::vector<RawConnection>& soup,
    const std::map<std::string, Type>& constant_types,
    const std::vector<Typed>& facts) {
  InferenceResult result;
  result.info.constants = constant_types;
  result.types.resize(soup.size());
  Typer typer(result.info);
  for (const auto& e : context) typer.check(e.term, e.type);
  typer.check(conclusion.term, conclusion.type);
  for (const auto& f : facts) typer.check(f.term, f.type);

  // Pending "same type" constraints; tensor-vs-tensor pairs are split so
  // that partially known sides still propagate.
  std::vector<std::pair<Term, Term>> pending;
  for (std::size_t i = 0; i < soup.size(); ++i) {
    if (soup[i].type) {
      typer.check(soup[i].left, *soup[i].type);
      typer.check(soup[i].right, *soup[i].type);
    } else {
      pending.emplace_back(soup[i].left, soup[i].right);
    }
  }
  bool progress = true;
  while (progress && !pending.empty()) {
    progress = false;
    std::vector<std::pair<Term, Term>> next;
    for (auto& [t, u] : pending) {
      if (auto ty = typer.infer(t)) {
        typer.check(t, *ty);
        typer.check(u, *ty);
        progress = true;
      } else if (auto ty2 = typer.infer(u)) {
        typer.check(u, *ty2);
        typer.check(t, *ty2);
        progress = true;
      } else if (t.is_tensor() && u.is_tensor()) {
        next.emplace_back(t.left(), u.left());
        next.emplace_back(t.right(), u.right());
        progress = true;
      } else {
        next.emplace_back(t, u);
      }
    }
    pending = std::move(next);
  }
  for (std::size_t i = 0; i < soup.size(); ++i) {
    if (soup[i].type) {
      result.types[i] = soup[i].type;
      continue;
    }
    auto l = typer.infer(soup[i].left);
    auto r = typer.infer(soup[i].right);
    if (l && r && *l != *r)
      throw TypeError("connection " + to_string(soup[i].left) + " : " +
                      to_string(soup[i].right) + " joins types " +
                      to_string(*l) + " and " + to_string(*r));
    if (l) {
      result.types[i] = l;
    } else if (r) {
      result.types[i] = r;
    } else {
      result.unresolved.push_back(i);
    }
  }
  return result;
}

Sequent make_sequent(std::vector<Typed> context,
                     const std::vector<RawConnection>& soup, Typed conclusion,
                     const std::map<std::string, Type>& constant_types,
                     const std::vector<Typed>& facts) {
  auto inferred =
      infer_connection_types(context, conclusion, soup, constant_types, facts);
  if (!inferred.unresolved.empty()) {
    const auto& c = soup[inferred.unresolved.front()];
    throw TypeError("cannot determine the type of connection " +
                    to_string(c.left) + " : " + to_string(c.right) +
                    "; annotate it as t :[T] u");
  }
  Sequent s;
  s.context = std::move(context);
  std::vector<Connection> cs;
  for (std::size_t i = 0; i < soup.size(); ++i)
    cs.emplace_back(soup[i].left, soup[i].right, *inferred.types[i]);
  s.soup = Soup(std::move(cs));
  s.conclusion = std::move(conclusion);
  return s;
}

std::vector<bool> annotations_needed(const Sequent& s) {
  std::vector<bool> mask(s.soup.size(), false);
  for (;;) {
    std::vector<RawConnection> raw;
    for (std::size_t i = 0; i < s.soup.size(); ++i) {
      const auto& c = s.soup[i];
      raw.push_back({c.left(), c.right(),
                     mask[i] ? std::optional<Type>(c.type()) : std::nullopt});
    }
    auto r = infer_connection_types(s.context, s.conclusion, raw);
    if (r.unresolved.empty()) return mask;
    // Annotating the first unresolved connection may resolve the others.
    mask[r.unresolved.front()] = true;
  }
}

Typed tensor_form(const std::vector<Typed>& entries) {
  if (entries.empty()) return {Term::one(), Type::unit()};
  Typed acc = entries.front();
  for (std::size_t i = 1; i < entries.size(); ++i)
    acc = {Term::tensor(acc.term, entries[i].term),
           Type::tensor(acc.type, entries[i].type)};
  return acc;
}

}  // namespace dlc
