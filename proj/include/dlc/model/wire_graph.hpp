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

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "dlc/model/tensor.hpp"

namespace dlc {

/// A tensor node whose axes are attached to wire labels.
template <typename Scalar>
struct WireNode {
  Tensor<Scalar> value;
  bool conjugate = false;
  std::vector<int> wires;  // one label per axis
};

/**
 * A tensor network.  Every wire label has exactly two ends, counting node
 * axes and open ports; inputs and outputs list the labels of the open ports
 * in order.  Closed loops without nodes are folded into `scalar`.
 **/
template <typename Scalar>
struct WireGraph {
  std::vector<int> wire_dims;
  std::vector<WireNode<Scalar>> nodes;
  std::vector<int> inputs, outputs;
  Scalar scalar = Scalar(1);

  std::vector<int> result_shape() const {
    std::vector<int> shape;
    for (int w : inputs) shape.push_back(wire_dims.at(w));
    for (int w : outputs) shape.push_back(wire_dims.at(w));
    return shape;
  }

  /// Throws ModelError unless every label has two ends and shapes agree.
  void check() const {
    std::vector<int> ends(wire_dims.size(), 0);
    for (const auto& n : nodes) {
      if (static_cast<int>(n.wires.size()) != n.value.rank())
        throw ModelError("node rank does not match its wire count");
      for (std::size_t a = 0; a < n.wires.size(); ++a) {
        if (wire_dims.at(n.wires[a]) != n.value.shape()[a])
          throw ModelError("wire " + std::to_string(n.wires[a]) +
                           " has the wrong dimension for its node axis");
        ++ends[n.wires[a]];
      }
    }
    for (int w : inputs) ++ends.at(w);
    for (int w : outputs) ++ends.at(w);
    for (std::size_t w = 0; w < ends.size(); ++w)
      if (ends[w] != 2 && ends[w] != 0)
        throw ModelError("wire " + std::to_string(w) + " has " +
                         std::to_string(ends[w]) + " ends");
  }
};

namespace detail {

template <typename Scalar>
Scalar maybe_conj(const Scalar& v, bool c) {
  return c ? Eigen::numext::conj(v) : v;
}

template <typename Scalar>
struct Labeled {
  Tensor<Scalar> t;
  std::vector<int> labels;
};

// Sums over axes that share a label within one tensor.
template <typename Scalar>
Labeled<Scalar> self_trace(const Labeled<Scalar>& in) {
  std::vector<int> keep_labels, keep_axes;
  std::map<int, int> first;
  bool repeated = false;
  for (int a = 0; a < static_cast<int>(in.labels.size()); ++a) {
    if (first.emplace(in.labels[a], a).second) {
      keep_labels.push_back(in.labels[a]);
      keep_axes.push_back(a);
    } else {
      repeated = true;
    }
  }
  if (!repeated) return in;
  // A label occurring twice is summed; keep only those occurring once.
  std::map<int, int> uses;
  for (int l : in.labels) ++uses[l];
  std::vector<int> out_labels, out_axes;
  for (std::size_t k = 0; k < keep_labels.size(); ++k)
    if (uses[keep_labels[k]] == 1) {
      out_labels.push_back(keep_labels[k]);
      out_axes.push_back(keep_axes[k]);
    }
  std::vector<int> shape;
  for (int a : out_axes) shape.push_back(in.t.shape()[a]);
  Tensor<Scalar> out(shape);
  std::vector<int> idx(in.t.rank(), 0);
  Eigen::Index k = 0;
  do {
    bool diagonal = true;
    for (int a = 0; a < in.t.rank() && diagonal; ++a)
      diagonal = idx[a] == idx[first[in.labels[a]]];
    if (diagonal) {
      std::vector<int> o;
      for (int a : out_axes) o.push_back(idx[a]);
      out[out.offset(o)] += in.t[k];
    }
    ++k;
  } while (in.t.rank() > 0 && next_index(idx, in.t.shape()));
  return {std::move(out), std::move(out_labels)};
}

template <typename Scalar>
Labeled<Scalar> contract_pair(const Labeled<Scalar>& a, const Labeled<Scalar>& b) {
  std::vector<int> shared, free_a, free_b, perm_a, perm_b, shape;
  for (int i = 0; i < static_cast<int>(a.labels.size()); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it == b.labels.end()) free_a.push_back(i);
  }
  for (int j = 0; j < static_cast<int>(b.labels.size()); ++j) {
    auto it = std::find(a.labels.begin(), a.labels.end(), b.labels[j]);
    if (it == a.labels.end()) {
      free_b.push_back(j);
    } else {
      shared.push_back(static_cast<int>(it - a.labels.begin()));
      perm_b.push_back(j);
    }
  }
  perm_a = free_a;
  perm_a.insert(perm_a.end(), shared.begin(), shared.end());
  perm_b.insert(perm_b.end(), free_b.begin(), free_b.end());
  Tensor<Scalar> pa = permute(a.t, perm_a);
  Tensor<Scalar> pb = permute(b.t, perm_b);
  auto ma = as_matrix(pa, static_cast<int>(free_a.size()));
  auto mb = as_matrix(pb, static_cast<int>(shared.size()));
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> prod = ma * mb;
  Labeled<Scalar> out;
  for (int i : free_a) {
    shape.push_back(a.t.shape()[i]);
    out.labels.push_back(a.labels[i]);
  }
  for (int j : free_b) {
    shape.push_back(b.t.shape()[j]);
    out.labels.push_back(b.labels[j]);
  }
  typename Tensor<Scalar>::Vector data =
      Eigen::Map<typename Tensor<Scalar>::Vector>(prod.data(), prod.size());
  out.t = Tensor<Scalar>(shape, std::move(data));
  return out;
}

template <typename Scalar>
Eigen::Index pair_cost(const Labeled<Scalar>& a, const Labeled<Scalar>& b,
                       bool& shares) {
  Eigen::Index size = 1;
  shares = false;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (std::find(b.labels.begin(), b.labels.end(), a.labels[i]) == b.labels.end())
      size *= a.t.shape()[i];
    else
      shares = true;
  }
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end())
      size *= b.t.shape()[j];
  return size;
}

}  // namespace detail

/// Reference contraction: one nested sum over every wire label.
template <typename Scalar>
Tensor<Scalar> contract_bruteforce(const WireGraph<Scalar>& g) {
  g.check();
  std::vector<int> ports = g.inputs;
  ports.insert(ports.end(), g.outputs.begin(), g.outputs.end());
  Tensor<Scalar> out(g.result_shape());
  // Labels with no ends are not summed over.
  std::vector<int> dims(g.wire_dims.size(), 1);
  for (const auto& n : g.nodes)
    for (int w : n.wires) dims[w] = g.wire_dims[w];
  for (int w : ports) dims[w] = g.wire_dims[w];
  std::vector<int> assignment(dims.size(), 0);
  std::vector<int> port_index(ports.size());
  do {
    Scalar v = g.scalar;
    for (const auto& n : g.nodes) {
      Eigen::Index k = 0;
      for (std::size_t a = 0; a < n.wires.size(); ++a)
        k = k * n.value.shape()[a] + assignment[n.wires[a]];
      v *= detail::maybe_conj(n.value[k], n.conjugate);
    }
    for (std::size_t p = 0; p < ports.size(); ++p) port_index[p] = assignment[ports[p]];
    out[out.offset(port_index)] += v;
  } while (!dims.empty() && next_index(assignment, dims));
  return out;
}

/// Greedy pairwise contraction, each step a matrix product.
template <typename Scalar>
Tensor<Scalar> contract(const WireGraph<Scalar>& g) {
  g.check();
  std::vector<detail::Labeled<Scalar>> work;
  for (const auto& n : g.nodes) {
    detail::Labeled<Scalar> l{n.value, n.wires};
    if (n.conjugate) l.t.data() = l.t.data().conjugate();
    work.push_back(detail::self_trace(l));
  }
  while (work.size() > 1) {
    std::size_t bi = 0, bj = 1;
    Eigen::Index best = -1;
    bool best_shares = false;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        bool shares;
        Eigen::Index c = detail::pair_cost(work[i], work[j], shares);
        if (best < 0 || (shares && !best_shares) ||
            (shares == best_shares && c < best)) {
          best = c;
          best_shares = shares;
          bi = i;
          bj = j;
        }
      }
    auto merged = detail::contract_pair(work[bi], work[bj]);
    work.erase(work.begin() + bj);
    work[bi] = std::move(merged);
  }
  detail::Labeled<Scalar> final_t =
      work.empty() ? detail::Labeled<Scalar>{Tensor<Scalar>::scalar(Scalar(1)), {}}
                   : work.front();
  std::vector<int> ports = g.inputs;
  ports.insert(ports.end(), g.outputs.begin(), g.outputs.end());
  std::map<int, int> axis_of;
  for (std::size_t a = 0; a < final_t.labels.size(); ++a)
    axis_of[final_t.labels[a]] = static_cast<int>(a);
  Tensor<Scalar> out(g.result_shape());
  if (out.size() == 0) return out;
  std::vector<int> idx(ports.size(), 0), src(final_t.labels.size(), 0);
  std::map<int, int> seen;
  Eigen::Index k = 0;
  do {
    // Ports joined directly to each other contribute a Kronecker delta.
    bool zero = false;
    seen.clear();
    for (std::size_t p = 0; p < ports.size(); ++p) {
      auto it = axis_of.find(ports[p]);
      if (it != axis_of.end()) {
        src[it->second] = idx[p];
      } else {
        auto [s, fresh] = seen.emplace(ports[p], idx[p]);
        if (!fresh && s->second != idx[p]) zero = true;
      }
    }
    out[k++] = zero ? Scalar(0) : g.scalar * final_t.t[final_t.t.offset(src)];
  } while (!ports.empty() && next_index(idx, out.shape()));
  return out;
}

}  // namespace dlc
