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

#include <string>

#include "dlc/sequent.hpp"

namespace dlc {

/**
 * Replaces every variable by a bundle of fresh variables of atomic type:
 * x : A @ B becomes (x1 @ x2), x : A^ becomes y^ with y : A.  Afterwards
 * every variable has a positive atomic type or type I.
 **/
Sequent expand_variables(const Sequent& s);

/**
 * Canonical representative of the alpha-equivalence class of s: variables
 * expanded to atomic wires, then renamed v1, v2, ... by a traversal of the
 * context, the conclusion and the soup, where the soup order and connection
 * orientation are chosen to make the rendering lexicographically least.
 * Throws LinearityError / TypeError on invalid input.
 **/
Sequent canonicalize(const Sequent& s);

/// Rendering of canonicalize(s) that identifies its alpha class.
std::string canonical_key(const Sequent& s);

bool alpha_equiv(const Sequent& a, const Sequent& b);

}  // namespace dlc
