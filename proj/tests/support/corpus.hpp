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
#include <random>
#include <vector>

#include "dlc/model.hpp"
#include "dlc/sequent.hpp"

namespace dlc::testing {

/// A random type over the atoms A, B, C.
Type random_type(std::mt19937_64& rng, int depth = 2);

/**
 * Random derivations: a leaf (identity, constant introduction, scalar
 * constant, combinator or |- 1:I) followed by up to `max_rules` rule
 * applications.  Binary rules take a fresh leaf as the other premise.
 **/
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed, int max_rules = 8)
      : rng_(seed), max_rules_(max_rules) {}

  Sequent next();
  /// A corpus sequent with exactly one hypothesis.
  Sequent next_single();

  std::mt19937_64& rng() { return rng_; }

 private:
  Sequent leaf();
  Sequent leaf_from(const Type& t);
  Sequent leaf_to(const Type& t);
  bool apply_random(Sequent& cur);
  Sequent fresh(const Sequent& s);

  std::mt19937_64 rng_;
  int max_rules_;
  int renames_ = 0;
  int constants_ = 0;
};

std::vector<Sequent> make_corpus(std::uint64_t seed, std::size_t n);

/// Dimensions A=2, B=3, C=2 and random values for every constant of s.
Signature random_signature(const Sequent& s, std::mt19937_64& rng);

/// Random tensor network whose labels have total dimension at most
/// `max_product`.
WireGraph<Complex> random_wire_graph(std::mt19937_64& rng, long max_product);

}  // namespace dlc::testing
