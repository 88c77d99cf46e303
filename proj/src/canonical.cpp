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

#include "dlc/canonical.hpp"

#include <array>
#include <map>
#include <set>

namespace dlc {

namespace {

// Unit-typed leaves go to `units`: x and x^ both have type I, so the
// canonical form keeps them unstarred.
Term bundle_for(const Type& type, int& counter, std::set<std::string>& units) {
  switch (type.kind()) {
    case Type::Kind::Tensor: {
      Term l = bundle_for(type.left(), counter, units);
      Term r = bundle_for(type.right(), counter, units);
      return Term::tensor(l, r);
    }
    case Type::Kind::Atom:
      return Term::var("%" + std::to_string(counter++), type.dual());
    case Type::Kind::Unit:
      units.insert("%" + std::to_string(counter));
      return Term::var("%" + std::to_string(counter++));
  }
  return Term::one();
}

/// Renders terms while numbering variables in order of first appearance.
struct Namer {
  std::map<std::string, int> ids;
  int next = 1;

  void term(const Term& t, std::string& out) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto [it, inserted] = ids.emplace(t.name(), next);
        if (inserted) ++next;
        out += "v" + std::to_string(it->second);
        if (t.star()) out += '^';
        break;
      }
      case Term::Kind::Tensor:
        out += '(';
        term(t.left(), out);
        out += " @ ";
        term(t.right(), out);
        out += ')';
        break;
      case Term::Kind::Product:
        out += '(';
        for (std::size_t i = 0; i < t.factors().size(); ++i) {
          if (i) out += " . ";
          term(t.factors()[i], out);
        }
        out += ')';
        break;
      default:
        out += to_string(t);
    }
  }
};

struct Oriented {
  Term left, right;
  Type type;
};

Term unstar(const Term& t, const std::set<std::string>& units) {
  return map_variables(t, [&](const std::string& v, bool star) {
    return Term::var(v, star && !units.count(v));
  });
}

Sequent expand(const Sequent& s, std::set<std::string>& units) {
  TypingInfo info = validate(s);
  int counter = 0;
  std::map<std::string, Term> bundles;
  for (const auto& [name, type] : info.variables)
    bundles.emplace(name, bundle_for(type, counter, units));
  Sequent out = map_terms(
      s, [&](const Term& t) { return unstar(substitute(t, bundles), units); });
  out.fresh = s.fresh;
  return out;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Sequent& s, const std::set<std::string>& units) {
    for (const auto& e : s.context) {
      namer_.term(unstar(e.term, units), prefix_);
      prefix_ += ":" + to_string(e.type) + ", ";
    }
    prefix_ += "|- ";
    namer_.term(unstar(s.conclusion.term, units), prefix_);
    prefix_ += ":" + to_string(s.conclusion.type) + " {";
    for (const auto& c : s.soup) {
      options_.push_back(std::array<Oriented, 2>{
          Oriented{unstar(c.left(), units), unstar(c.right(), units), c.type()},
          Oriented{unstar(negate(c.right()), units), unstar(negate(c.left()), units),
                   negate(c.type())}});
    }
  }

  void run() {
    std::vector<bool> used(options_.size(), false);
    search(namer_, prefix_, used, 0);
  }

  const std::string& best() const { return best_; }
  const std::map<std::string, int>& best_ids() const { return best_ids_; }

 private:
  std::string render(Namer& namer, const Oriented& o) const {
    std::string out;
    namer.term(o.left, out);
    out += " :[" + to_string(o.type) + "] ";
    namer.term(o.right, out);
    out += ';';
    return out;
  }

  void search(const Namer& namer, const std::string& acc,
              std::vector<bool>& used, std::size_t placed) {
    if (!best_.empty() &&
        acc.compare(0, std::string::npos, best_, 0, acc.size()) > 0)
      return;
    if (placed == options_.size()) {
      if (best_.empty() || acc < best_) {
        best_ = acc;
        best_ids_ = namer.ids;
      }
      return;
    }
    struct Candidate {
      std::size_t index;
      int orientation;
      Namer namer;
    };
    std::string min_key;
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < options_.size(); ++i) {
      if (used[i]) continue;
      for (int o = 0; o < 2; ++o) {
        Namer trial = namer;
        std::string key = render(trial, options_[i][o]);
        if (candidates.empty() || key < min_key) {
          min_key = key;
          candidates.clear();
        }
        if (key == min_key) candidates.push_back({i, o, std::move(trial)});
      }
    }
    // A key that names no new variable leaves an identical state whichever
    // candidate produced it.
    if (candidates.front().namer.next == namer.next) candidates.resize(1);
    std::vector<std::pair<Term, Term>> tried;
    for (auto& cand : candidates) {
      const auto& o = options_[cand.index][cand.orientation];
      std::pair<Term, Term> sig{o.left, o.right};
      bool seen = false;
      for (const auto& t : tried) seen = seen || t == sig;
      if (seen) continue;
      tried.push_back(sig);
      used[cand.index] = true;
      search(cand.namer, acc + min_key, used, placed + 1);
      used[cand.index] = false;
    }
  }

  Namer namer_;
  std::string prefix_;
  std::vector<std::array<Oriented, 2>> options_;
  std::string best_;
  std::map<std::string, int> best_ids_;
};

std::pair<Sequent, std::string> canonical_pair(const Sequent& s) {
  std::set<std::string> units;
  Sequent expanded = expand(s, units);
  CanonicalSearch search(expanded, units);
  search.run();
  std::map<std::string, Term> renaming;
  for (const auto& [name, id] : search.best_ids())
    renaming.emplace(name, Term::var("v" + std::to_string(id)));
  Sequent out = map_terms(
      expanded, [&](const Term& t) { return substitute(t, renaming); });
  out.fresh = 0;
  return {std::move(out), search.best()};
}

}  // namespace

Sequent expand_variables(const Sequent& s) {
  std::set<std::string> units;
  return expand(s, units);
}

Sequent canonicalize(const Sequent& s) { return canonical_pair(s).first; }

std::string canonical_key(const Sequent& s) {
  return canonical_pair(s).second;
}

bool alpha_equiv(const Sequent& a, const Sequent& b) {
  return canonical_key(a) == canonical_key(b);
}

}  // namespace dlc
