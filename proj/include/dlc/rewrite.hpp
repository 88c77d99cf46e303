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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlc/sequent.hpp"

namespace dlc {

enum class RedexKind {
  Bifunctor,
  Trace,
  Cancel,
  ConsumeRight,  // [t/u]: u is eliminated, its partner becomes t
  ConsumeLeft,   // [u/t]: t is eliminated, its partner becomes u
  ProductSplit
};

const char* to_string(RedexKind k);

struct Redex {
  RedexKind kind;
  /// Index into the (sorted) soup of the sequent the redex was found in.
  std::size_t index;
  Connection target;
};

/**
 * Every enabled redex of s, in soup order; for each connection the kinds are
 * listed in the order of RedexKind.
 **/
std::vector<Redex> enumerate_redexes(const Sequent& s);

/// Redexes of one connection of s.
std::vector<Redex> redexes_at(const Sequent& s, std::size_t index);

/// Applies r; throws RewriteError if r is not enabled in s.
Sequent step(const Sequent& s, const Redex& r);

/// 2 W + 3 |S|, W summing over connections the largest leaf count among the
/// two sides and the type.
int step_bound(const Sequent& s);

struct TraceStep {
  Redex redex;
  Sequent after;
};

struct Normalization {
  Sequent normal;  // canonicalized
  Sequent raw;     // last sequent of the trace, before canonicalization
  std::vector<TraceStep> trace;
  int bound = 0;
};

struct Strategy {
  /// Unset: always the first redex.  Set: uniform choice seeded by it.
  std::optional<std::uint64_t> seed;
};

/// Reduces until no redex is enabled.  Throws RewriteError if the step
/// count passes the bound by a wide margin (an engine bug).
Normalization normalize(const Sequent& s, Strategy strategy = {});

bool is_normal(const Sequent& s);

/// Merges every variable-free scalar connection into one {m1 . m2 ... : 1},
/// using commutativity and {m : n} = {m . n^ : 1}.
Sequent fold_scalars(const Sequent& s);

bool soup_equiv(const Sequent& a, const Sequent& b);

struct ReductionGraph {
  /// Nodes are alpha-equivalence classes, identified by canonical key.
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Indices of nodes with no enabled redex.
  std::vector<std::size_t> sinks;
};

/// Exhaustive exploration of all reduction paths; throws RewriteError when
/// more than `size_cap` classes are reached.
ReductionGraph reduction_graph(const Sequent& s, std::size_t size_cap);

/// `step <n> <kind> <connection> => <sequent>`
std::string format_step(int n, const TraceStep& st);

}  // namespace dlc
