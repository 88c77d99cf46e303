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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlc/term.hpp"
#include "dlc/type.hpp"

namespace dlc {

/// A term together with its type annotation.
struct Typed {
  Term term;
  Type type;

  friend bool operator==(const Typed&, const Typed&) = default;
  friend auto operator<=>(const Typed&, const Typed&) = default;
};

/**
 * A soup connection t :[T] u.  Connections are stored as congruence classes
 * under (t : u) == (u^ : t^); the representative is whichever orientation
 * compares smaller as a (left, right) pair.
 **/
class Connection {
 public:
  Connection(Term left, Term right, Type type);

  const Term& left() const { return left_; }
  const Term& right() const { return right_; }
  const Type& type() const { return type_; }

  friend bool operator==(const Connection&, const Connection&) = default;
  friend auto operator<=>(const Connection&, const Connection&) = default;

 private:
  Term left_, right_;
  Type type_;
};

/// (t : u)_* = t_* : u_*
Connection negate(const Connection& c);

std::string to_string(const Connection& c, bool annotate = false);

/**
 * A finite multiset of connections, kept sorted so that equal multisets
 * compare equal.
 **/
class Soup {
 public:
  Soup() = default;
  Soup(std::vector<Connection> connections);

  void add(Connection c);
  void add(const Soup& other);
  /// Removes the connection at position i of the sorted order.
  void erase(std::size_t i);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Connection& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Soup&, const Soup&) = default;
  friend auto operator<=>(const Soup&, const Soup&) = default;

 private:
  std::vector<Connection> items_;
};

Soup negate(const Soup& s);

/**
 * A typing judgement  t1:A1, ..., tn:An |-_S t:B.
 *
 * `fresh` is the deterministic counter used to name new variables; it does
 * not take part in equality.
 **/
struct Sequent {
  std::vector<Typed> context;
  Soup soup;
  Typed conclusion{Term::one(), Type::unit()};
  int fresh = 0;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.context == b.context && a.soup == b.soup &&
           a.conclusion == b.conclusion;
  }
};

/// Allocates a variable name of the form `_N` that does not occur in s.
std::string fresh_variable(Sequent& s);

/// All variable names occurring in s (each once).
std::set<std::string> variable_names(const Sequent& s);

/// Occurrence count of each variable in s.
std::map<std::string, int> variable_counts(const Sequent& s);

/// Applies f to every term of the sequent (context, soup sides, conclusion).
Sequent map_terms(const Sequent& s, const std::function<Term(const Term&)>& f);

struct LinearityReport {
  bool ok = true;
  /// Variables that do not occur exactly twice, with their counts.
  std::map<std::string, int> violations;
};

LinearityReport check_linearity(const Sequent& s);

/// Types of the variables (unstarred) and constants of a sequent.
struct TypingInfo {
  std::map<std::string, Type> variables;
  std::map<std::string, Type> constants;
};

/// Checks every term against its annotation; throws TypeError.  Constant
/// types may be pre-seeded (e.g. from a signature).
TypingInfo type_check(const Sequent& s,
                      const std::map<std::string, Type>& constant_types = {});

/// Linearity plus typing; throws LinearityError / TypeError.
TypingInfo validate(const Sequent& s,
                    const std::map<std::string, Type>& constant_types = {});

/// A connection whose type may still be unknown.
struct RawConnection {
  Term left, right;
  std::optional<Type> type;
};

struct InferenceResult {
  std::vector<std::optional<Type>> types;
  std::vector<std::size_t> unresolved;
  TypingInfo info;
};

/**
 * Infers the types of unannotated connections from the typed context and
 * conclusion, the annotated connections and the seeded constant types.
 * Throws TypeError on inconsistent typing; reports connections whose type
 * cannot be determined in `unresolved`.  `facts` are extra typed terms that
 * constrain inference without belonging to the sequent.
 **/
InferenceResult infer_connection_types(
    const std::vector<Typed>& context, const Typed& conclusion,
    const std::vector<RawConnection>& soup,
    const std::map<std::string, Type>& constant_types = {},
    const std::vector<Typed>& facts = {});

/// Builds a sequent, inferring connection types; throws TypeError when a
/// connection type cannot be determined.
Sequent make_sequent(std::vector<Typed> context,
                     const std::vector<RawConnection>& soup, Typed conclusion,
                     const std::map<std::string, Type>& constant_types = {},
                     const std::vector<Typed>& facts = {});

/// For each connection in soup order: whether its type annotation must be
/// printed for the sequent to be re-typeable.
std::vector<bool> annotations_needed(const Sequent& s);

/// Tensor form of a context: ((t1 @ t2) @ ...) @ tn.
Typed tensor_form(const std::vector<Typed>& entries);

}  // namespace dlc
