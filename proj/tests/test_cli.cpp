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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dlc/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dlc");
  std::ostringstream out, err;
  int code = dlc::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(DLC_SAMPLES_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "dlc-cli-test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("check") {
  Run ok = run({"check", scratch("id.dlc", "x:A |- x:A\n")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);

  Run proof = run({"check", sample("lollipop-elim.dprf")});
  CHECK(proof.code == 0);
  CHECK(proof.out.find("t:A, f:(A^ @ B) |- { f : (t^ @ b) } b:B") != std::string::npos);

  Run bad = run({"check", scratch("bad.dlc", "x:A |- y:A\n")});
  CHECK(bad.code == 1);
  CHECK((bad.out + bad.err).find("x") != std::string::npos);

  Run syntax = run({"check", scratch("syntax.dlc", "x:A |- x:\n")});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("syntax.dlc:1:") != std::string::npos);

  CHECK(run({"check", scratch("cut.dprf", "(cut (id x A) (id x A))\n")}).code == 1);
  CHECK(run({"check", "/nonexistent/file.dlc"}).code == 2);
  CHECK(run({"check", sample("teleport.dsig")}).code == 0);
}

TEST_CASE("normalize") {
  Run t = run({"normalize", sample("teleport.dlc")});
  CHECK(t.code == 0);
  CHECK(t.out.find("v1:T |- v1:T") != std::string::npos);

  Run traced = run({"normalize", "--trace", sample("teleport.dlc")});
  CHECK(traced.out.find("step 1 ") != std::string::npos);

  Run seeded = run({"normalize", "--seed", "5", sample("teleport.dlc")});
  CHECK(seeded.out.find("v1:T |- v1:T") != std::string::npos);

  Run normal = run({"normalize", "--trace", scratch("n.dlc", "x:A |- x:A\n")});
  CHECK(normal.code == 0);
  CHECK(normal.out.find("v1:A |- v1:A") != std::string::npos);
  CHECK(normal.out.find("step ") == std::string::npos);
}

TEST_CASE("normalize scalar pairs agree") {
  std::string sig = sample("scalars.dsig");
  Run a = run({"normalize", "--sig", sig, sample("comm-mn.dlc")});
  Run b = run({"normalize", "--sig", sig, sample("comm-nm.dlc")});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("equiv") {
  CHECK(run({"equiv", sample("alpha-bundle.dlc"), sample("alpha-variable.dlc"), "--sig",
             sample("alpha.dsig")})
            .code == 0);
  CHECK(run({"equiv", sample("id-AA.dlc"), sample("sbar-AA.dlc")}).code == 1);
  CHECK(run({"equiv", sample("id-AA.dlc"), sample("id-AA.dlc")}).code == 0);
}

TEST_CASE("interp") {
  Run t = run({"interp", sample("teleport.dlc"), "--sig", sample("teleport.dsig")});
  CHECK(t.code == 0);
  CHECK(t.out.find("1") != std::string::npos);

  std::string sig = scratch("d3.dsig", "type A dim 3\n");
  Run d = run({"interp", scratch("d3.dlc", "|- { D[A] : 1 } 1:I\n"), "--sig", sig});
  CHECK(d.code == 0);
  CHECK(d.out.find("3") != std::string::npos);

  Run v = run({"interp", "--verify-steps", sample("teleport.dlc"), "--sig", sample("teleport.dsig")});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);

  Run sym = run({"interp", scratch("g.dlc", "b:B |- { #g : (b^ @ a) } a:A\n"), "--sig",
                 sample("constants.dsig")});
  CHECK(sym.code == 2);
  CHECK((sym.out + sym.err).find("symbolic") != std::string::npos);

  Run shape = run({"interp", sample("teleport.dlc"), "--sig",
                   scratch("broken.dsig", "type A dim 2\nconst c : A = [1+0i]\n")});
  CHECK(shape.code == 2);
}

TEST_CASE("axioms") {
  Run a = run({"axioms"});
  CHECK(a.code == 0);
  CHECK(a.out.find("axiom pentagon PASS") != std::string::npos);
  CHECK(a.out.find("FAIL") == std::string::npos);
  Run b = run({"axioms", "--dims", "2,3"});
  CHECK(b.code == 0);
  CHECK(b.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
  CHECK(run({"--help"}).code == 0);
}
