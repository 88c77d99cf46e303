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

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dlc/model/tensor.hpp"
#include "dlc/model/wire_graph.hpp"
#include "dlc/rewrite.hpp"
#include "dlc/sequent.hpp"
#include "dlc/surface.hpp"

namespace dlc {

using Complex = std::complex<double>;

/// Dimensions of atomic types and tensor values of constants.
struct Signature {
  std::map<std::string, int> dims;
  std::map<std::string, Type> constant_types;
  std::map<std::string, Tensor<Complex>> values;

  /// Declares a valued constant, checking its shape.
  void set_value(const std::string& name, const Type& type, Tensor<Complex> value);
};

Signature make_signature(const SignatureDecl& decl);

/// I -> 1, A^ -> dim A, A @ B -> dim A * dim B.
int dim_of(const Type& t, const Signature& sig);

/// Dimensions of the atomic leaves of t.
std::vector<int> leaf_dims(const Type& t, const Signature& sig);

/**
 * Tensor network of a sequent.  Inputs are the atomic leaves of the context
 * types, outputs those of the conclusion type.  A constant occurrence is
 * conjugated when its star parity differs from the parity of its position:
 * conclusion and connection-left positions are even, context and
 * connection-right positions odd.  Throws SymbolicOnly for unvalued
 * constants.
 **/
WireGraph<Complex> compile(const Sequent& j, const Signature& sig);

Tensor<Complex> interpret(const Sequent& j, const Signature& sig,
                          bool bruteforce = false);

/// Number of leading (input) axes of interpret(j, sig).
int input_axes(const Sequent& j);

/// interpret as a matrix: rows over the context, columns over the conclusion.
Eigen::MatrixXcd interpret_matrix(const Sequent& j, const Signature& sig);

/// |interpret(j) - interpret(step(j, r))|_inf <= tol (1 + |interpret(j)|_inf)
bool check_step_preservation(const Sequent& j, const Redex& r,
                             const Signature& sig, double tol = 1e-9);

struct AxiomResult {
  std::string name;
  bool soup_equal = false;
  double max_abs_error = 0;
  bool pass = false;
};

/**
 * Builds both sides of each coherence equation of a dagger compact
 * category from combinators, cut and the flip, and checks them by soup
 * equivalence and by their matrices for every assignment of `dims` to the
 * atomic types A, B, C, D.  A valued constant f : A^ @ B in `base` is used
 * for the dagger involution when its dimensions fit; otherwise f is random.
 **/
std::vector<AxiomResult> verify_axioms(const std::vector<int>& dims,
                                       const Signature& base = {},
                                       double tol = 1e-9);

/// `axiom <name> PASS|FAIL <max-abs-error>`
std::string format_axiom(const AxiomResult& r);

}  // namespace dlc
