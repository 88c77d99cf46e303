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

#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "doctest.h"
#include "dlc/calculus.hpp"
#include "dlc/canonical.hpp"
#include "dlc/error.hpp"
#include "dlc/rewrite.hpp"
#include "dlc/surface.hpp"

using namespace dlc;

namespace {

Sequent seq(const std::string& text, const std::map<std::string, Type>& k = {}) {
  return parse_sequent({text}, k);
}
Type ty(const std::string& text) { return parse_type({text}); }

const Type A = Type::atom("A");
const Type B = Type::atom("B");

SourceText sample(const std::string& name) {
  std::ifstream in(std::string(DLC_SAMPLES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return {ss.str(), name};
}

}  // namespace

TEST_CASE("identity and one") {
  CHECK(rule_id("x", A) == seq("x:A |- x:A"));
  CHECK(rule_id("x", ty("A @ B")) == seq("x:(A @ B) |- x:(A @ B)"));
  CHECK(rule_id("x", Type::unit()) == seq("x:I |- x:I"));
  CHECK(rule_one() == seq("|- 1:I"));
}

TEST_CASE("constant introduction") {
  Sequent f = rule_constant("f", A, B);
  CHECK(alpha_equiv(f, seq("a:A |- { #f : (a^ @ b) } b:B")));
  CHECK(validate(f).constants.at("f") == ty("A^ @ B"));
}

TEST_CASE("cut") {
  Sequent j = seq("a:A |- { #f : (a^ @ b) } b:B");
  Sequent c = rule_cut(rule_id("x", A), j);
  CHECK(c == seq("x:A |- { x : a, #f : (a^ @ b) } b:B"));
  Sequent ids = rule_cut(rule_id("x", A), rule_id("a", A));
  CHECK(ids == seq("x:A |- { x : a } a:A"));
  CHECK(alpha_equiv(normalize(ids).normal, rule_id("x", A)));
  CHECK_THROWS_AS(rule_cut(rule_id("x", A), rule_id("y", B)), RuleError);
  CHECK_THROWS_AS(rule_cut(rule_id("x", A), rule_id("x", A)), RuleError);
}

TEST_CASE("tensor right") {
  CHECK(rule_tensor_r(rule_id("a", A), rule_id("b", B)) ==
        seq("a:A, b:B |- (a @ b):(A @ B)"));
  Sequent delta = rule_tensor_l(rule_tensor_r(rule_id("c", A), rule_id("d", B)), 0);
  Sequent closed = seq("|- 1:I");
  Sequent r = rule_tensor_r(closed, rule_untensor_l(delta, 0));
  CHECK(r == seq("(c @ d):(A @ B) |- (1 @ (c @ d)):(I @ (A @ B))"));
  CHECK(rule_tensor_r(rule_id("a", A), closed) == seq("a:A |- (a @ 1):(A @ I)"));
  CHECK_THROWS_AS(rule_tensor_r(rule_id("x", A), rule_id("x", B)), RuleError);
}

TEST_CASE("negation") {
  Sequent j = seq("a:A |- { #f : (a^ @ b) } b:B");
  CHECK(rule_negation(j) == seq("a^:A^ |- { #f^ : (b^ @ a) } b^:B^"));
  CHECK(alpha_equiv(rule_negation(rule_id("x", A)), rule_id("y", negate(A))));
  CHECK(rule_negation(rule_negation(j)) == j);
  CHECK_THROWS_AS(rule_negation(seq("a:A, b:B |- (a @ b):(A @ B)")), RuleError);
}

TEST_CASE("curry and uncurry") {
  Sequent j = seq("a:A |- { #f : (a^ @ b) } b:B");
  Sequent c = rule_curry(j);
  CHECK(c == seq("|- { #f : (a^ @ b) } (a^ @ b):(A^ @ B)"));
  CHECK(rule_uncurry(c) == j);
  CHECK(rule_uncurry(seq("|- { #f : (a^ @ 1) } (a^ @ 1):(A^ @ I)")) ==
        seq("a:A |- { #f : (a^ @ 1) } 1:I"));
  CHECK_THROWS_AS(rule_uncurry(rule_id("x", A)), RuleError);
  CHECK_THROWS_AS(rule_curry(rule_one()), RuleError);
  // a variable conclusion of tensor type is split first
  Sequent g = rule_uncurry(rule_id("g", ty("A^ @ B")));
  CHECK(g.context.size() == 2);
  CHECK(g.conclusion.type == B);
}

TEST_CASE("empty-side curry") {
  Sequent j = rule_id("b", B);
  Sequent u = rule_uncurry_empty(j);
  CHECK(alpha_equiv(u, seq("b^:B^, b:B |- 1:I")));
  CHECK(rule_curry_empty(u) == seq("b:B |- b:B"));
}

TEST_CASE("tensor left, its inverse and exchange") {
  Sequent j = seq("a:A, b:B |- { #c : (a^ @ b^ @ d) } d:A");
  Sequent t = rule_tensor_l(j, 0);
  CHECK(t.context.size() == 1);
  CHECK(t.context[0] == Typed{Term::tensor(Term::var("a"), Term::var("b")), ty("A @ B")});
  CHECK(rule_untensor_l(t, 0) == j);
  CHECK_THROWS_AS(rule_untensor_l(rule_id("x", ty("A @ B")), 0), RuleError);
  Sequent e = rule_exchange(j, 0);
  CHECK(e.context[0].type == B);
  CHECK(rule_exchange(e, 0) == j);
  CHECK_THROWS_AS(rule_exchange(j, 1), RuleError);
  CHECK_THROWS_AS(rule_tensor_l(j, 3), RuleError);
}

TEST_CASE("unit rules") {
  Sequent s = seq("x:A |- { #m : 1 } x:A");
  Sequent l = rule_unit_left(s);
  CHECK(l == seq("#m^:I, x:A |- x:A"));
  CHECK(rule_unit_left_inv(l) == s);
  Sequent r = rule_unit_right(s);
  CHECK(r == seq("x:A, #m^:I |- x:A"));
  CHECK(rule_unit_right_inv(r) == s);
  CHECK_THROWS_AS(rule_unit_left(rule_id("x", A)), RuleError);
  CHECK_THROWS_AS(rule_unit_left_inv(rule_id("x", A)), RuleError);
}

TEST_CASE("dagger flip") {
  Sequent j = seq("a:A |- { #f : (a^ @ b) } b:B");
  CHECK(alpha_equiv(dagger_flip(j), seq("b:B |- { #f^ : (b^ @ a) } a:A")));
  CHECK(alpha_equiv(dagger_flip(dagger_flip(j)), j));
  CHECK(alpha_equiv(dagger_flip(rule_id("x", A)), rule_id("x", A)));
  CHECK(alpha_equiv(dagger_flip_by_rules(j), dagger_flip(j)));
  CHECK(alpha_equiv(negation_by_dagger(j), rule_negation(j)));
}

TEST_CASE("flip and negation interchange on a random corpus") {
  testing::CorpusGenerator gen(11);
  for (int i = 0; i < 150; ++i) {
    Sequent s = gen.next_single();
    CHECK(alpha_equiv(dagger_flip(dagger_flip(s)), s));
    CHECK(alpha_equiv(dagger_flip_by_rules(s), dagger_flip(s)));
    CHECK(alpha_equiv(negation_by_dagger(s), rule_negation(s)));
  }
}

TEST_CASE("corpus sequents are well formed") {
  for (const auto& s : testing::make_corpus(5, 200)) CHECK_NOTHROW(validate(s));
}

TEST_CASE("application") {
  std::map<std::string, Type> k{{"f", ty("A^ @ B")}, {"t", A}};
  Sequent f = seq("|- #f : (A^ @ B)", k);
  Sequent t = seq("|- #t : A", k);
  Sequent app = rule_app(f, t);
  REQUIRE(app.soup.size() == 1);
  CHECK(app.conclusion.type == B);
  Term x = app.conclusion.term;
  CHECK(x.is_var());
  CHECK(app.soup[0] == Connection(Term::constant("f"),
                                  Term::tensor(Term::constant("t", true), x), ty("A^ @ B")));
  CHECK_THROWS_AS(rule_app(t, f), RuleError);
}

TEST_CASE("application sugar elaborates to the same shape") {
  std::map<std::string, Type> k{{"f", ty("A^ @ B")}, {"t", A}};
  Sequent s = seq("|- #f(#t) : B", k);
  CHECK(alpha_equiv(s, seq("|- { #f : (#t^ @ x) } x:B", k)));
}

TEST_CASE("lambda sugar") {
  CHECK(alpha_equiv(seq("|- \\x => x : A -o A"), seq("|- (x^ @ x) : (A^ @ A)")));
  CHECK(alpha_equiv(seq("|- \\(a @ b) => (b @ a) : (A @ B) -o (B @ A)"),
                    seq("|- ((a @ b)^ @ (b @ a)) : ((A @ B)^ @ (B @ A))")));
}

TEST_CASE("combinators") {
  CHECK(alpha_equiv(combinator_sequent("eta", {A}),
                    seq("|- (1 @ (x^ @ x)) : (I @ (A^ @ A))")));
  CHECK(alpha_equiv(combinator_sequent("sigma", {A, B}),
                    seq("|- ((a @ b)^ @ (b @ a)) : ((A @ B)^ @ (B @ A))")));
  CHECK(alpha_equiv(combinator_sequent("eps", {A}),
                    seq("|- ((x @ x^)^ @ 1) : ((A @ A^)^ @ I)")));
  CHECK(alpha_equiv(combinator_sequent("lambda", {A}),
                    seq("|- ((1 @ a)^ @ a) : ((I @ A)^ @ A)")));
  CHECK(alpha_equiv(combinator_sequent("rho", {A}),
                    seq("|- ((a @ 1)^ @ a) : ((A @ I)^ @ A)")));
  CHECK(alpha_equiv(combinator_sequent("id", {ty("A @ A")}),
                    parse_sequent(sample("id-AA.dlc"))));
  CHECK(alpha_equiv(combinator_sequent("sbar", {A, A}),
                    parse_sequent(sample("sbar-AA.dlc"))));
  for (const auto& [name, arity] : combinator_arity()) {
    std::vector<Type> params(arity, ty("A @ B"));
    CHECK_NOTHROW(validate(combinator_sequent(name, params)));
  }
  CHECK_THROWS_AS(combinator_sequent("sigma", {A}), TypeError);
  CHECK_THROWS_AS(combinator_sequent("nope", {}), TypeError);
}

TEST_CASE("lollipop elimination replays") {
  Derivation d = check_derivation(parse_derivation(sample("lollipop-elim.dprf")));
  CHECK(alpha_equiv(d.conclusion, seq("t:A, f:(A^ @ B) |- { f : (t^ @ b) } b:B")));
  auto report = derivation_report(d);
  CHECK(report.back().rfind("node 0 OK ", 0) == 0);
}

TEST_CASE("dagger flip script replays") {
  Derivation d = check_derivation(parse_derivation(sample("dagger-flip.dprf")));
  CHECK(alpha_equiv(d.conclusion, seq("b:B |- { #f^ : (b^ @ a) } a:A")));
}

TEST_CASE("cutting without renaming fails") {
  auto script = parse_derivation({"(cut (id x A) (id x A))"});
  try {
    check_derivation(script);
    FAIL("expected a rule error");
  } catch (const RuleError& e) {
    CHECK(std::string(e.what()).find("node 0 (cut") != std::string::npos);
  }
  CHECK_NOTHROW(check_derivation(parse_derivation({"(cut (id x A) (rename (id x A)))"})));
  CHECK_NOTHROW(check_derivation(parse_derivation(sample("cut-rename.dprf"))));
}

TEST_CASE("consume in scripts") {
  Sequent s = seq("x:A |- { x : y } y:A");
  CHECK(alpha_equiv(rule_consume(s, "y"), rule_id("x", A)));
  CHECK_THROWS_AS(rule_consume(rule_id("x", A), "x"), RuleError);
}
