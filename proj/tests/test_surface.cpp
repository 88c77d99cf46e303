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
#include "doctest.h"
#include "dlc/canonical.hpp"
#include "dlc/error.hpp"
#include "dlc/rewrite.hpp"
#include "dlc/surface.hpp"

using namespace dlc;

TEST_CASE("sequent parsing") {
  Sequent id = parse_sequent({"x:A |- x:A"});
  REQUIRE(id.context.size() == 1);
  CHECK(id.context[0].term == Term::var("x"));
  CHECK(id.conclusion.type == Type::atom("A"));
  CHECK(id.soup.empty());

  Sequent s = parse_sequent({"t1:A |- { t1:t2, x:[B] x, D[C]:1 } t2:A"});
  CHECK(s.soup.size() == 3);

  CHECK_THROWS_AS(parse_sequent({"x:A |- y:B"}), LinearityError);
}

TEST_CASE("a loop connection needs its annotation") {
  CHECK_THROWS_AS(parse_sequent({"t1:A |- { t1:t2, x:x, D[C]:1 } t2:A"}), TypeError);
}

TEST_CASE("type grammar") {
  CHECK(parse_type({"A @ B @ C"}) ==
        Type::tensor(Type::tensor(Type::atom("A"), Type::atom("B")), Type::atom("C")));
  CHECK(parse_type({"(A @ B)^"}) == Type::tensor(Type::atom("B", true), Type::atom("A", true)));
  CHECK(parse_type({"I^"}) == Type::unit());
  CHECK(parse_type({"A -o B"}) == Type::tensor(Type::atom("A", true), Type::atom("B")));
  CHECK(parse_type({"A -o B -o C"}) == parse_type({"A -o (B -o C)"}));
}

TEST_CASE("printer") {
  CHECK(print_sequent(parse_sequent({"x:A |- x:A"})) == "x:A |- x:A");
  CHECK(print_sequent(parse_sequent({"x:A |- {} x:A"})) == "x:A |- x:A");
  std::string loop = print_sequent(parse_sequent({"|- { x :[B] x } 1:I"}));
  CHECK(loop == "|- { x :[B] x } 1:I");
}

TEST_CASE("canonical teleportation re-parses") {
  Sequent t = parse_sequent(
      {"x1:T |- { (x1 @ x2^ @ 1) : (x4 @ x4^ @ 1), (1 @ x5^ @ x5) : (1 @ x2^ @ x3) } x3:T"});
  Sequent c = canonicalize(t);
  CHECK(alpha_equiv(parse_sequent({print_sequent(c)}), t));
  Sequent n = normalize(t).normal;
  CHECK(alpha_equiv(parse_sequent({print_sequent(n)}), n));
}

TEST_CASE("round trip over a random corpus") {
  testing::CorpusGenerator gen(42);
  for (int i = 0; i < 300; ++i) {
    Sequent s = gen.next();
    std::string text = print_sequent(s);
    Sequent back = parse_sequent({text}, validate(s).constants);
    CHECK_MESSAGE(back == s, text);
  }
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_sequent({"x:A |-\n  x:A )", "f.dlc"});
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).rfind("f.dlc:2:7:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_sequent({"x:A |- x:"}), SyntaxError);
  CHECK_THROWS_AS(parse_sequent({"x:A |- { x : y"}), SyntaxError);
  CHECK_THROWS_AS(parse_type({"A @"}), SyntaxError);
  CHECK_THROWS_AS(parse_sequent({"x:A |- x:A ?"}), SyntaxError);
}

TEST_CASE("sequent files and comments") {
  auto seqs = parse_sequent_file({"# two sequents\nx:A |- x:A\n\n|- { #m : 1 } 1:I  # trailing\n"});
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[1].soup.size() == 1);
  CHECK(seqs[1].soup[0].left().is_const());
}

TEST_CASE("sugar") {
  SugarSequent s = parse_sugar_sequent({"b:B |- ((#a^ @ b)(#t)) : B"});
  CHECK(s.conclusion.first.kind == SugarTerm::Kind::App);
  SugarSequent l = parse_sugar_sequent({"|- \\x => x : A -o A"});
  CHECK(l.conclusion.first.kind == SugarTerm::Kind::Lambda);
  SugarSequent c = parse_sugar_sequent({"|- $sigma[A, B] : (A @ B) -o (B @ A)"});
  CHECK(c.conclusion.first.kind == SugarTerm::Kind::Comb);
  CHECK(c.conclusion.first.types.size() == 2);
}

TEST_CASE("signatures") {
  SignatureDecl d = parse_signature({"type T dim 2\n"});
  REQUIRE(d.atoms.size() == 1);
  CHECK(d.atoms[0].name == "T");
  CHECK(d.atoms[0].dim == 2);

  d = parse_signature({"type A dim 2\ntype B dim 3\nconst f : (A^ @ B)\n"});
  REQUIRE(d.constants.size() == 1);
  CHECK_FALSE(d.constants[0].value.has_value());
  CHECK(d.constant_types().at("f") == parse_type({"A^ @ B"}));

  d = parse_signature(
      {"type A dim 2\nconst u : (A^ @ A) = [[1+0i,0+0i],[0+0i,1+0i]]\n"});
  REQUIRE(d.constants[0].value.has_value());
  CHECK(*d.constants[0].value ==
        std::vector<std::complex<double>>{1.0, 0.0, 0.0, 1.0});

  d = parse_signature({"type A dim 2\nconst z : A = [0.5-3i, -1e-2+2.5i]\n"});
  CHECK((*d.constants[0].value)[0] == std::complex<double>(0.5, -3));
  CHECK((*d.constants[0].value)[1] == std::complex<double>(-0.01, 2.5));
}

TEST_CASE("signature errors") {
  CHECK_THROWS_AS(parse_signature({"type A dim 0\n"}), SyntaxError);
  CHECK_THROWS_AS(parse_signature({"type A dim 2\ntype A dim 3\n"}), SyntaxError);
  CHECK_THROWS_AS(parse_signature({"const c : Q\n"}), SyntaxError);
  CHECK_THROWS_AS(
      parse_signature({"type A dim 2\nconst u : (A^ @ A) = [[1+0i,0+0i],[0+0i]]\n"}),
      SyntaxError);
  CHECK_THROWS_AS(parse_signature({"type A dim 2\nconst u : A = [1, 2, 3]\n"}),
                  SyntaxError);
}

TEST_CASE("derivation scripts") {
  DerivationScript id = parse_derivation({"(id x A)"});
  CHECK(id.op == "id");
  CHECK(id.names == std::vector<std::string>{"x"});
  CHECK(id.premises.empty());

  DerivationScript two = parse_derivation({"(cut (id a A) (uncurry (id g (A^ @ B))))"});
  CHECK(two.op == "cut");
  REQUIRE(two.premises.size() == 2);
  CHECK(two.premises[1].op == "uncurry");
  CHECK(two.premises[1].premises[0].types[0] == parse_type({"A^ @ B"}));

  DerivationScript neg = parse_derivation({"(neg (id x A))"});
  CHECK(neg.op == "neg");

  DerivationScript hyp = parse_derivation({"(hyp \"a:A |- b:A\")"});
  CHECK(hyp.text == "a:A |- b:A");

  CHECK(parse_derivation({to_string(two)}).op == "cut");
  CHECK_THROWS_AS(parse_derivation({"(frobnicate (id x A))"}), SyntaxError);
  CHECK_THROWS_AS(parse_derivation({"(cut (id x A))"}), SyntaxError);
  CHECK_THROWS_AS(parse_derivation({"(id x A"}), SyntaxError);
  CHECK(derivation_opcodes().count("curry-e") == 1);
}
