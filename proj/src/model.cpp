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

#include "dlc/model.hpp"

#include <numeric>

#include "dlc/error.hpp"

namespace dlc {

void Signature::set_value(const std::string& name, const Type& type,
                          Tensor<Complex> value) {
  if (value.shape() != leaf_dims(type, *this))
    throw ModelError("value of #" + name + " does not match the shape of " +
                     to_string(type));
  constant_types[name] = type;
  values[name] = std::move(value);
}

Signature make_signature(const SignatureDecl& decl) {
  Signature sig;
  for (const auto& a : decl.atoms) sig.dims[a.name] = a.dim;
  for (const auto& c : decl.constants) {
    sig.constant_types[c.name] = c.type;
    if (!c.value) continue;
    std::vector<int> shape = leaf_dims(c.type, sig);
    typename Tensor<Complex>::Vector data(static_cast<Eigen::Index>(c.value->size()));
    for (std::size_t i = 0; i < c.value->size(); ++i) data(i) = (*c.value)[i];
    sig.values[c.name] = Tensor<Complex>(shape, std::move(data));
  }
  return sig;
}

std::vector<int> leaf_dims(const Type& t, const Signature& sig) {
  std::vector<int> out;
  for (const auto& leaf : atomic_leaves(t)) {
    auto it = sig.dims.find(leaf.name());
    if (it == sig.dims.end())
      throw ModelError("no dimension declared for type " + leaf.name());
    out.push_back(it->second);
  }
  return out;
}

int dim_of(const Type& t, const Signature& sig) {
  auto d = leaf_dims(t, sig);
  return std::accumulate(d.begin(), d.end(), 1, std::multiplies<int>());
}

namespace {

class Compiler {
 public:
  Compiler(const Sequent& j, const Signature& sig)
      : sig_(sig), info_(validate(j, sig.constant_types)) {}

  WireGraph<Complex> run(const Sequent& j) {
    std::vector<int> in_ports, out_ports;
    for (const auto& e : j.context) attach(e, true, in_ports);
    attach(j.conclusion, false, out_ports);
    for (const auto& c : j.soup) {
      auto l = flatten(c.left(), false);
      auto r = flatten(c.right(), true);
      if (l.size() != r.size()) throw ModelError("connection sides differ in width");
      for (std::size_t k = 0; k < l.size(); ++k) unite(l[k], r[k]);
    }
    // One label per class; classes without ends are closed loops.
    std::vector<int> ends(parent_.size(), 0), label(parent_.size(), -1);
    for (std::size_t e = 0; e < parent_.size(); ++e)
      if (is_end_[e]) ++ends[find(static_cast<int>(e))];
    std::vector<bool> loop_done(parent_.size(), false);
    for (std::size_t e = 0; e < parent_.size(); ++e) {
      int root = find(static_cast<int>(e));
      int n = ends[root];
      if (n == 0) {
        if (!loop_done[root]) {
          loop_done[root] = true;
          graph_.scalar *= static_cast<double>(dim_[root]);
        }
        continue;
      }
      if (n != 2)
        throw ModelError("wire with " + std::to_string(n) + " ends (ill-formed sequent)");
      if (dim_[e] != dim_[root]) throw ModelError("wire joins different dimensions");
      if (label[root] < 0) {
        label[root] = static_cast<int>(graph_.wire_dims.size());
        graph_.wire_dims.push_back(dim_[root]);
      }
    }
    for (auto& n : graph_.nodes)
      for (int& w : n.wires) w = label[find(w)];
    for (int p : in_ports) graph_.inputs.push_back(label[find(p)]);
    for (int p : out_ports) graph_.outputs.push_back(label[find(p)]);
    return std::move(graph_);
  }

 private:
  int make(int dim, bool end) {
    parent_.push_back(static_cast<int>(parent_.size()));
    dim_.push_back(dim);
    is_end_.push_back(end);
    return parent_.back();
  }

  int find(int e) {
    while (parent_[e] != e) e = parent_[e] = parent_[parent_[e]];
    return e;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

  void attach(const Typed& e, bool odd, std::vector<int>& ports) {
    auto ends = flatten(e.term, odd);
    auto dims = leaf_dims(e.type, sig_);
    if (ends.size() != dims.size()) throw ModelError("term width differs from its type");
    for (std::size_t k = 0; k < ends.size(); ++k) {
      int p = make(dims[k], true);
      ports.push_back(p);
      unite(ends[k], p);
    }
  }

  // Wire endpoints of t, one per atomic leaf of its type.  Scalars are
  // multiplied into the graph.
  std::vector<int> flatten(const Term& t, bool odd) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto& leaves = var_leaves(t.name());
        std::vector<int> out = leaves;
        if (t.star()) std::reverse(out.begin(), out.end());
        return out;
      }
      case Term::Kind::Const: {
        auto it = sig_.values.find(t.name());
        if (it == sig_.values.end())
          throw SymbolicOnly("constant #" + t.name() + " has no value (symbolic only)");
        bool conj = t.star() != odd;
        const Type& type = info_.constants.at(t.name());
        std::vector<int> dims = leaf_dims(type, sig_);
        if (dims.empty()) {
          Complex v = it->second[0];
          graph_.scalar *= conj ? std::conj(v) : v;
          return {};
        }
        WireNode<Complex> node{it->second, conj, {}};
        for (int d : dims) node.wires.push_back(make(d, true));
        std::vector<int> out = node.wires;
        graph_.nodes.push_back(std::move(node));
        if (t.star()) std::reverse(out.begin(), out.end());
        return out;
      }
      case Term::Kind::One:
        return {};
      case Term::Kind::Dim:
        graph_.scalar *= static_cast<double>(dim_of(t.dim_type(), sig_));
        return {};
      case Term::Kind::Tensor: {
        auto l = flatten(t.left(), odd);
        auto r = flatten(t.right(), odd);
        l.insert(l.end(), r.begin(), r.end());
        return l;
      }
      case Term::Kind::Product:
        for (const auto& f : t.factors()) flatten(f, odd);
        return {};
    }
    return {};
  }

  const std::vector<int>& var_leaves(const std::string& name) {
    auto it = vars_.find(name);
    if (it != vars_.end()) return it->second;
    std::vector<int> ids;
    for (int d : leaf_dims(info_.variables.at(name), sig_)) ids.push_back(make(d, false));
    return vars_[name] = ids;
  }

  const Signature& sig_;
  TypingInfo info_;
  WireGraph<Complex> graph_;
  std::vector<int> parent_, dim_;
  std::vector<bool> is_end_;
  std::map<std::string, std::vector<int>> vars_;
};

}  // namespace

WireGraph<Complex> compile(const Sequent& j, const Signature& sig) {
  return Compiler(j, sig).run(j);
}

Tensor<Complex> interpret(const Sequent& j, const Signature& sig, bool bruteforce) {
  auto g = compile(j, sig);
  return bruteforce ? contract_bruteforce(g) : contract(g);
}

int input_axes(const Sequent& j) {
  int n = 0;
  for (const auto& e : j.context) n += static_cast<int>(atomic_leaves(e.type).size());
  return n;
}

Eigen::MatrixXcd interpret_matrix(const Sequent& j, const Signature& sig) {
  return as_matrix(interpret(j, sig), input_axes(j));
}

bool check_step_preservation(const Sequent& j, const Redex& r,
                             const Signature& sig, double tol) {
  auto before = interpret(j, sig);
  auto after = interpret(step(j, r), sig);
  return max_abs_diff(before, after) <= tol * (1 + max_abs(before));
}

}  // namespace dlc
