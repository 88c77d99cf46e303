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

#include "dlc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <random>

#include "dlc/canonical.hpp"
#include "dlc/error.hpp"
#include "dlc/surface.hpp"

namespace dlc {

const char* to_string(RedexKind k) {
  switch (k) {
    case RedexKind::Bifunctor:
      return "bifunctor";
    case RedexKind::Trace:
      return "trace";
    case RedexKind::Cancel:
      return "cancel";
    case RedexKind::ConsumeRight:
      return "consume-right";
    case RedexKind::ConsumeLeft:
      return "consume-left";
    case RedexKind::ProductSplit:
      return "product-split";
  }
  return "?";
}

namespace {

std::vector<Term> scalar_factors(const Term& t) {
  if (t.is_one()) return {};
  if (t.is_product()) return t.factors();
  return {t};
}

// Number of occurrences of each variable in the terms of s other than
// connection `skip`.
int occurrences_outside(const Sequent& s, std::size_t skip,
                        const std::string& name) {
  std::map<std::string, int> counts;
  for (const auto& e : s.context) count_variables(e.term, counts);
  count_variables(s.conclusion.term, counts);
  for (std::size_t i = 0; i < s.soup.size(); ++i) {
    if (i == skip) continue;
    count_variables(s.soup[i].left(), counts);
    count_variables(s.soup[i].right(), counts);
  }
  auto it = counts.find(name);
  return it == counts.end() ? 0 : it->second;
}

bool occurs_elsewhere(const Sequent& s, std::size_t skip, const Term& bundle) {
  for (const auto& e : s.context)
    if (contains_subterm(e.term, bundle)) return true;
  if (contains_subterm(s.conclusion.term, bundle)) return true;
  for (std::size_t i = 0; i < s.soup.size(); ++i) {
    if (i == skip) continue;
    if (contains_subterm(s.soup[i].left(), bundle) ||
        contains_subterm(s.soup[i].right(), bundle))
      return true;
  }
  return false;
}

// Whether the constant-free side `gone` of connection `index` may be
// eliminated, its occurrence elsewhere being replaced by the other side.
bool consumable(const Sequent& s, std::size_t index, const Term& gone,
                const Term& kept) {
  if (!is_constant_free(gone)) return false;
  if (gone.is_var())
    return !mentions_variable(kept, gone.name()) &&
           occurrences_outside(s, index, gone.name()) == 1;
  for (const auto& v : variables(gone))
    if (mentions_variable(kept, v)) return false;
  std::map<std::string, int> own;
  count_variables(gone, own);
  for (const auto& [v, n] : own)
    if (n != 1) return false;
  return occurs_elsewhere(s, index, gone);
}

bool splittable(const Connection& c) {
  if (!c.type().is_unit()) return false;
  const Term& t = c.left();
  const Term& u = c.right();
  if (is_constant_free(t) || is_constant_free(u)) return false;
  if (t.is_one() && u.is_one()) return false;
  return std::max(scalar_factors(t).size(), scalar_factors(u).size()) >= 2;
}

// Applies f to every term outside connection `skip`, dropping that
// connection and adding `extra`.
Sequent rebuild(const Sequent& s, std::size_t skip,
                const std::function<Term(const Term&)>& f,
                const std::vector<Connection>& extra = {}) {
  Sequent out;
  out.fresh = s.fresh;
  for (const auto& e : s.context) out.context.push_back({f(e.term), e.type});
  out.conclusion = {f(s.conclusion.term), s.conclusion.type};
  std::vector<Connection> cs;
  for (std::size_t i = 0; i < s.soup.size(); ++i) {
    if (i == skip) continue;
    const auto& c = s.soup[i];
    cs.emplace_back(f(c.left()), f(c.right()), c.type());
  }
  cs.insert(cs.end(), extra.begin(), extra.end());
  out.soup = Soup(std::move(cs));
  return out;
}

Term identity(const Term& t) { return t; }

Sequent consume(const Sequent& s, std::size_t index, const Term& gone,
                const Term& kept) {
  if (gone.is_var()) {
    // gone = x   : the partner of x becomes kept
    // gone = x^  : x = kept^
    Term with = gone.star() ? negate(kept) : kept;
    return rebuild(s, index, [&](const Term& t) {
      return substitute(t, gone.name(), with);
    });
  }
  bool done = false;
  return rebuild(s, index, [&](const Term& t) {
    if (done) return t;
    bool hit = false;
    Term r = replace_subterm(t, gone, kept, hit);
    if (hit) done = true;
    return r;
  });
}

}  // namespace

std::vector<Redex> redexes_at(const Sequent& s, std::size_t index) {
  std::vector<Redex> out;
  const Connection& c = s.soup[index];
  const Term& t = c.left();
  const Term& u = c.right();
  auto add = [&](RedexKind k) { out.push_back({k, index, c}); };
  if (t.is_tensor() && u.is_tensor() && c.type().is_tensor()) add(RedexKind::Bifunctor);
  if (t.is_var() && u.is_var() && t.name() == u.name() && t.star() == u.star())
    add(RedexKind::Trace);
  if (t.is_one() && u.is_one()) add(RedexKind::Cancel);
  if (consumable(s, index, u, t)) add(RedexKind::ConsumeRight);
  if (consumable(s, index, t, u)) add(RedexKind::ConsumeLeft);
  if (splittable(c)) add(RedexKind::ProductSplit);
  return out;
}

std::vector<Redex> enumerate_redexes(const Sequent& s) {
  std::vector<Redex> out;
  for (std::size_t i = 0; i < s.soup.size(); ++i) {
    auto r = redexes_at(s, i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

bool is_normal(const Sequent& s) {
  for (std::size_t i = 0; i < s.soup.size(); ++i)
    if (!redexes_at(s, i).empty()) return false;
  return true;
}

Sequent step(const Sequent& s, const Redex& r) {
  if (r.index >= s.soup.size() || !(s.soup[r.index] == r.target))
    throw RewriteError("redex target " + to_string(r.target) +
                       " is not at the given soup position");
  auto enabled = redexes_at(s, r.index);
  if (std::none_of(enabled.begin(), enabled.end(),
                   [&](const Redex& e) { return e.kind == r.kind; }))
    throw RewriteError(std::string(to_string(r.kind)) + " is not enabled on " +
                       to_string(r.target));
  const Connection& c = r.target;
  const Term& t = c.left();
  const Term& u = c.right();
  switch (r.kind) {
    case RedexKind::Bifunctor:
      return rebuild(s, r.index, identity,
                     {Connection(t.left(), u.left(), c.type().left()),
                      Connection(t.right(), u.right(), c.type().right())});
    case RedexKind::Trace:
      return rebuild(s, r.index, identity,
                     {Connection(Term::dim(c.type()), Term::one(), Type::unit())});
    case RedexKind::Cancel:
      return rebuild(s, r.index, identity);
    case RedexKind::ConsumeRight:
      return consume(s, r.index, u, t);
    case RedexKind::ConsumeLeft:
      return consume(s, r.index, t, u);
    case RedexKind::ProductSplit: {
      auto l = scalar_factors(t);
      auto rr = scalar_factors(u);
      // pad the shorter side on the right: {m : n.q} reads as {m.1 : n.q}
      while (l.size() < rr.size()) l.push_back(Term::one());
      while (rr.size() < l.size()) rr.push_back(Term::one());
      auto last = [](std::vector<Term>& v) {
        Term x = v.back();
        v.pop_back();
        return x;
      };
      Term lt = last(l), rt = last(rr);
      return rebuild(s, r.index, identity,
                     {Connection(Term::product(l), Term::product(rr), Type::unit()),
                      Connection(lt, rt, Type::unit())});
    }
  }
  throw RewriteError("unknown redex kind");
}

int step_bound(const Sequent& s) {
  int w = 0;
  for (const auto& c : s.soup)
    w += std::max({leaf_count(c.left()), leaf_count(c.right()),
                   leaf_count(c.type())});
  return 2 * w + 3 * static_cast<int>(s.soup.size());
}

Normalization normalize(const Sequent& s, Strategy strategy) {
  Normalization out;
  out.bound = step_bound(s);
  const int hard_limit = 4 * out.bound + 64;
  std::mt19937_64 rng(strategy.seed.value_or(0));
  Sequent cur = s;
  for (;;) {
    auto rs = enumerate_redexes(cur);
    if (rs.empty()) break;
    if (static_cast<int>(out.trace.size()) >= hard_limit)
      throw RewriteError("normalization exceeded " + std::to_string(hard_limit) +
                         " steps on " + print_sequent(s));
    std::size_t pick = 0;
    if (strategy.seed)
      pick = std::uniform_int_distribution<std::size_t>(0, rs.size() - 1)(rng);
    cur = step(cur, rs[pick]);
    out.trace.push_back({rs[pick], cur});
  }
  out.raw = cur;
  out.normal = canonicalize(cur);
  return out;
}

Sequent fold_scalars(const Sequent& s) {
  std::vector<Term> factors;
  std::vector<Connection> kept;
  for (const auto& c : s.soup) {
    std::map<std::string, int> vars;
    count_variables(c.left(), vars);
    count_variables(c.right(), vars);
    if (!c.type().is_unit() || !vars.empty()) {
      kept.push_back(c);
      continue;
    }
    // {m : n} = {m . n^ : 1}
    for (const auto& f : scalar_factors(c.left())) factors.push_back(f);
    for (const auto& f : scalar_factors(c.right())) factors.push_back(negate(f));
  }
  std::sort(factors.begin(), factors.end(), [](const Term& x, const Term& y) {
    return to_string(x) < to_string(y);
  });
  Term product = Term::product(factors);
  if (!product.is_one()) kept.emplace_back(product, Term::one(), Type::unit());
  Sequent out = s;
  out.soup = Soup(kept);
  return out;
}

bool soup_equiv(const Sequent& a, const Sequent& b) {
  return canonical_key(fold_scalars(normalize(a).normal)) ==
         canonical_key(fold_scalars(normalize(b).normal));
}

ReductionGraph reduction_graph(const Sequent& s, std::size_t size_cap) {
  ReductionGraph g;
  std::map<std::string, std::size_t> index;
  std::vector<Sequent> reps;
  std::deque<std::size_t> queue;
  auto visit = [&](const Sequent& j) {
    std::string key = canonical_key(j);
    auto [it, fresh] = index.emplace(key, g.nodes.size());
    if (fresh) {
      if (g.nodes.size() >= size_cap)
        throw RewriteError("reduction graph exceeds " + std::to_string(size_cap) +
                           " classes");
      g.nodes.push_back(key);
      reps.push_back(j);
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(s);
  while (!queue.empty()) {
    std::size_t n = queue.front();
    queue.pop_front();
    Sequent j = reps[n];
    auto rs = enumerate_redexes(j);
    if (rs.empty()) g.sinks.push_back(n);
    for (const auto& r : rs) {
      std::size_t m = visit(step(j, r));
      g.edges.emplace_back(n, m);
    }
  }
  std::sort(g.sinks.begin(), g.sinks.end());
  return g;
}

std::string format_step(int n, const TraceStep& st) {
  return "step " + std::to_string(n) + " " + to_string(st.redex.kind) + " " +
         to_string(st.redex.target, true) + " => " + print_sequent(st.after);
}

}  // namespace dlc
