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

#include "corpus.hpp"

#include <algorithm>

#include "dlc/calculus.hpp"
#include "dlc/error.hpp"

namespace dlc::testing {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Tensor<Complex> random_tensor(const std::vector<int>& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  Tensor<Complex> t(shape);
  for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = Complex(n(rng), n(rng));
  return t;
}

}  // namespace

Type random_type(std::mt19937_64& rng, int depth) {
  int r = uniform(rng, 0, 9);
  if (depth == 0 || r < 5) {
    static const char* const names[] = {"A", "B", "C"};
    return Type::atom(names[uniform(rng, 0, 2)], uniform(rng, 0, 9) < 3);
  }
  if (r == 5) return Type::unit();
  return Type::tensor(random_type(rng, depth - 1), random_type(rng, depth - 1));
}

Sequent CorpusGenerator::fresh(const Sequent& s) { return rule_rename(s, renames_); }

Sequent CorpusGenerator::leaf() {
  switch (uniform(rng_, 0, 9)) {
    case 0:
    case 1:
    case 2:
      return fresh(rule_id("x", random_type(rng_)));
    case 3:
    case 4:
    case 5:
      return fresh(rule_constant("k" + std::to_string(constants_++),
                                 random_type(rng_, 1), random_type(rng_, 1)));
    case 6: {
      Sequent s;
      s.soup.add(Connection(Term::constant("s" + std::to_string(constants_++)),
                            Term::one(), Type::unit()));
      return s;
    }
    case 7:
    case 8: {
      static const char* const names[] = {"id",  "sigma", "alpha", "lambda", "rho",
                                          "eta", "eps",   "bbar",  "tbar"};
      std::string name = names[uniform(rng_, 0, 8)];
      std::vector<Type> params;
      for (int k = 0; k < combinator_arity().at(name); ++k)
        params.push_back(random_type(rng_, 1));
      Sequent c = combinator_sequent(name, params);
      return fresh(uniform(rng_, 0, 1) ? rule_uncurry(c) : c);
    }
    default:
      return rule_one();
  }
}

Sequent CorpusGenerator::leaf_from(const Type& t) {
  if (uniform(rng_, 0, 1))
    return fresh(rule_constant("k" + std::to_string(constants_++), t,
                               random_type(rng_, 1)));
  return fresh(rule_id("x", t));
}

Sequent CorpusGenerator::leaf_to(const Type& t) {
  if (t.is_unit() && uniform(rng_, 0, 2) == 0) {
    Sequent s;
    s.soup.add(Connection(Term::constant("s" + std::to_string(constants_++)),
                          Term::one(), Type::unit()));
    return s;
  }
  if (uniform(rng_, 0, 1))
    return fresh(rule_constant("k" + std::to_string(constants_++),
                               random_type(rng_, 1), t));
  return fresh(rule_id("x", t));
}

bool CorpusGenerator::apply_random(Sequent& cur) {
  const std::size_t n = cur.context.size();
  auto pos = [&](std::size_t width) {
    return static_cast<std::size_t>(uniform(rng_, 0, static_cast<int>(n - width)));
  };
  try {
    switch (uniform(rng_, 0, 15)) {
      case 0:
        if (n == 0) return false;
        cur = rule_cut(leaf_to(cur.context.front().type), cur);
        return true;
      case 1:
        cur = rule_cut(cur, leaf_from(cur.conclusion.type));
        return true;
      case 2:
        cur = uniform(rng_, 0, 1) ? rule_tensor_r(cur, leaf()) : rule_tensor_r(leaf(), cur);
        return true;
      case 3:
        if (!cur.conclusion.type.is_tensor()) return false;
        cur = rule_app(cur, leaf_to(negate(cur.conclusion.type.left())));
        return true;
      case 4:
        if (n < 2) return false;
        cur = rule_tensor_l(cur, pos(2));
        return true;
      case 5:
        if (n < 1) return false;
        cur = rule_untensor_l(cur, pos(1));
        return true;
      case 6:
        if (n < 2) return false;
        cur = rule_exchange(cur, pos(2));
        return true;
      case 7:
        cur = rule_curry(cur);
        return true;
      case 8:
        cur = rule_uncurry(cur);
        return true;
      case 9:
        cur = rule_negation(cur);
        return true;
      case 10:
        cur = dagger_flip(cur);
        return true;
      case 11:
        cur = uniform(rng_, 0, 1) ? rule_unit_left(cur) : rule_unit_right(cur);
        return true;
      case 12:
        cur = uniform(rng_, 0, 1) ? rule_unit_left_inv(cur) : rule_unit_right_inv(cur);
        return true;
      case 13:
        cur = rule_curry_empty(cur);
        return true;
      case 14:
        cur = rule_uncurry_empty(cur);
        return true;
      default:
        cur = rule_cut(cur, leaf_from(cur.conclusion.type));
        return true;
    }
  } catch (const RuleError&) {
    return false;
  }
}

Sequent CorpusGenerator::next() {
  Sequent cur = leaf();
  int target = uniform(rng_, 1, max_rules_);
  int applied = 0;
  for (int attempt = 0; applied < target && attempt < 64; ++attempt)
    if (apply_random(cur)) ++applied;
  return cur;
}

Sequent CorpusGenerator::next_single() {
  Sequent s = next();
  if (s.context.empty()) s = rule_uncurry_empty(s);
  while (s.context.size() > 1) s = rule_tensor_l(s, 0);
  return s;
}

std::vector<Sequent> make_corpus(std::uint64_t seed, std::size_t n) {
  CorpusGenerator gen(seed);
  std::vector<Sequent> out;
  while (out.size() < n) out.push_back(gen.next());
  return out;
}

Signature random_signature(const Sequent& s, std::mt19937_64& rng) {
  Signature sig;
  sig.dims = {{"A", 2}, {"B", 3}, {"C", 2}};
  for (const auto& [name, type] : validate(s).constants)
    sig.set_value(name, type, random_tensor(leaf_dims(type, sig), rng));
  return sig;
}

WireGraph<Complex> random_wire_graph(std::mt19937_64& rng, long max_product) {
  WireGraph<Complex> g;
  int labels = uniform(rng, 0, 8);
  long product = 1;
  for (int l = 0; l < labels; ++l) {
    int d = uniform(rng, 1, 4);
    if (product * d > max_product) break;
    product *= d;
    g.wire_dims.push_back(d);
  }
  std::vector<int> ends;
  for (int l = 0; l < static_cast<int>(g.wire_dims.size()); ++l) {
    ends.push_back(l);
    ends.push_back(l);
  }
  std::shuffle(ends.begin(), ends.end(), rng);
  int nodes = uniform(rng, 1, 5);
  std::vector<std::vector<int>> axes(nodes);
  std::vector<int> ports;
  for (int e : ends) {
    if (uniform(rng, 0, 3) == 0)
      ports.push_back(e);
    else
      axes[uniform(rng, 0, nodes - 1)].push_back(e);
  }
  for (auto& a : axes) {
    std::vector<int> shape;
    for (int w : a) shape.push_back(g.wire_dims[w]);
    g.nodes.push_back({random_tensor(shape, rng), uniform(rng, 0, 1) == 1, a});
  }
  std::size_t split = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ports.size())));
  g.inputs.assign(ports.begin(), ports.begin() + split);
  g.outputs.assign(ports.begin() + split, ports.end());
  std::normal_distribution<double> nd(0, 1);
  g.scalar = Complex(nd(rng), nd(rng));
  return g;
}

}  // namespace dlc::testing
