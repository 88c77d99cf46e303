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

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "dlc/calculus.hpp"
#include "dlc/model.hpp"

namespace dlc {
namespace {

// Morphisms are single-hypothesis sequents a:A |- b:B.
class Builder {
 public:
  Sequent comb(const std::string& name, const std::vector<Type>& p) {
    return fresh(rule_uncurry(combinator_sequent(name, p)));
  }
  Sequent id(const Type& a) { return comb("id", {a}); }
  /// g . f
  Sequent then(const Sequent& f, const Sequent& g) { return rule_cut(f, fresh(g)); }
  Sequent tensor(const Sequent& f, const Sequent& g) {
    return rule_tensor_l(rule_tensor_r(f, fresh(g)), 0);
  }
  Sequent inverse(const Sequent& f) { return dagger_flip(f); }
  Sequent fresh(const Sequent& s) { return rule_rename(s, counter_); }

 private:
  int counter_ = 0;
};

Sequent chain(Builder& b, std::vector<Sequent> fs) {
  Sequent out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = b.then(out, fs[i]);
  return out;
}

struct Equation {
  std::string name;
  Sequent lhs, rhs;
};

std::vector<Equation> equations() {
  const Type A = Type::atom("A"), B = Type::atom("B"), C = Type::atom("C"),
             D = Type::atom("D"), I = Type::unit(), As = negate(A);
  auto T = [](const Type& x, const Type& y) { return Type::tensor(x, y); };
  Builder b;
  std::vector<Equation> eqs;

  eqs.push_back({"pentagon",
                 b.then(b.comb("alpha", {A, B, T(C, D)}), b.comb("alpha", {T(A, B), C, D})),
                 chain(b, {b.tensor(b.id(A), b.comb("alpha", {B, C, D})),
                           b.comb("alpha", {A, T(B, C), D}),
                           b.tensor(b.comb("alpha", {A, B, C}), b.id(D))})});
  eqs.push_back({"triangle",
                 b.then(b.comb("alpha", {A, I, B}), b.tensor(b.comb("rho", {A}), b.id(B))),
                 b.tensor(b.id(A), b.comb("lambda", {B}))});
  eqs.push_back({"symmetry",
                 b.then(b.comb("sigma", {A, B}), b.comb("sigma", {B, A})),
                 b.id(T(A, B))});
  eqs.push_back({"unit-symmetry", b.comb("rho", {A}),
                 b.then(b.comb("sigma", {A, I}), b.comb("lambda", {A}))});
  eqs.push_back({"hexagon",
                 chain(b, {b.comb("alpha", {A, B, C}), b.comb("sigma", {T(A, B), C}),
                           b.comb("alpha", {C, A, B})}),
                 chain(b, {b.tensor(b.id(A), b.comb("sigma", {B, C})),
                           b.comb("alpha", {A, C, B}),
                           b.tensor(b.comb("sigma", {A, C}), b.id(B))})});
  eqs.push_back({"yanking-left",
                 chain(b, {b.inverse(b.comb("rho", {A})),
                           b.tensor(b.id(A), b.comb("eta", {A})),
                           b.comb("alpha", {A, As, A}),
                           b.tensor(b.comb("eps", {A}), b.id(A)),
                           b.comb("lambda", {A})}),
                 b.id(A)});
  eqs.push_back({"yanking-right",
                 chain(b, {b.inverse(b.comb("lambda", {As})),
                           b.tensor(b.comb("eta", {A}), b.id(As)),
                           b.inverse(b.comb("alpha", {As, A, As})),
                           b.tensor(b.id(As), b.comb("eps", {A})),
                           b.comb("rho", {As})}),
                 b.id(As)});
  Sequent f = rule_constant("f", A, B);
  eqs.push_back({"dagger-involution", dagger_flip(dagger_flip(f)), f});
  eqs.push_back({"eta-from-epsilon",
                 b.then(b.inverse(b.comb("eps", {A})), b.comb("sigma", {A, As})),
                 b.comb("eta", {A})});
  eqs.push_back({"tensor-identity", b.tensor(b.id(A), b.id(B)), b.id(T(A, B))});
  return eqs;
}

Tensor<Complex> random_tensor(const std::vector<int>& shape, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  Tensor<Complex> t(shape);
  for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = Complex(n(rng), n(rng));
  return t;
}

}  // namespace

std::vector<AxiomResult> verify_axioms(const std::vector<int>& dims,
                                       const Signature& base, double tol) {
  const Type f_type = Type::tensor(negate(Type::atom("A")), Type::atom("B"));
  std::mt19937_64 rng(20260418);
  std::vector<AxiomResult> out;
  for (const auto& eq : equations()) {
    AxiomResult r;
    r.name = eq.name;
    r.soup_equal = soup_equiv(eq.lhs, eq.rhs);
    // Every assignment of `dims` to A, B, C, D.
    std::size_t n = dims.size();
    std::size_t combos = n * n * n * n;
    for (std::size_t c = 0; c < combos; ++c) {
      Signature sig = base;
      std::size_t k = c;
      for (const char* atom : {"A", "B", "C", "D"}) {
        sig.dims[atom] = dims[k % n];
        k /= n;
      }
      auto it = base.values.find("f");
      if (it == base.values.end() || it->second.shape() != leaf_dims(f_type, sig))
        sig.set_value("f", f_type, random_tensor(leaf_dims(f_type, sig), rng));
      auto l = interpret(eq.lhs, sig);
      auto rr = interpret(eq.rhs, sig);
      r.max_abs_error = std::max(r.max_abs_error, max_abs_diff(l, rr));
    }
    r.pass = r.soup_equal && r.max_abs_error <= tol;
    out.push_back(r);
  }
  return out;
}

std::string format_axiom(const AxiomResult& r) {
  char err[32];
  std::snprintf(err, sizeof err, "%.3e", r.max_abs_error);
  return "axiom " + r.name + " " + (r.pass ? "PASS" : "FAIL") + " " + err;
}

}  // namespace dlc
