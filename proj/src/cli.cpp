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

#include "dlc/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dlc/calculus.hpp"
#include "dlc/canonical.hpp"
#include "dlc/error.hpp"
#include "dlc/model.hpp"
#include "dlc/rewrite.hpp"
#include "dlc/surface.hpp"

namespace dlc {
namespace {

enum Exit { kOk = 0, kFailed = 1, kUnusable = 2, kInternal = 3 };

struct Unusable : Error {
  using Error::Error;
};

struct RunConfig {
  std::vector<std::string> inputs;
  std::string sig_path;
  std::string proof_path;
  std::optional<std::uint64_t> seed;
  bool trace = false;
  bool verify_steps = false;
  bool bruteforce = false;
  std::vector<int> dims{2};
  double tolerance = 1e-9;
};

SourceText read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Unusable("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return {ss.str(), path};
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out)
      : cfg_(cfg), out_(out) {
    const char* c = std::getenv("DLC_COLOR");
    color_ = c && std::string(c) == "1";
    if (!cfg.sig_path.empty()) {
      decl_ = parse_signature(read_file(cfg.sig_path));
      sig_ = make_signature(decl_);
    }
  }

  int check() {
    int status = kOk;
    std::vector<std::string> files = cfg_.inputs;
    if (!cfg_.proof_path.empty()) files.push_back(cfg_.proof_path);
    for (const auto& path : files) {
      SourceText src = read_file(path);
      if (has_suffix(path, ".dprf")) {
        for (const auto& script : parse_derivation_file(src)) {
          auto d = check_derivation(script, sig_.constant_types);
          for (const auto& line : derivation_report(d)) out_ << line << "\n";
          out_ << path << ": " << mark(true) << " " << print_sequent(d.conclusion) << "\n";
        }
      } else if (has_suffix(path, ".dsig")) {
        auto decl = parse_signature(src);
        out_ << path << ": " << mark(true) << " " << decl.atoms.size() << " types, "
             << decl.constants.size() << " constants\n";
      } else {
        int n = 0;
        for (const auto& s : parse_sequent_file(src, sig_.constant_types))
          out_ << path << ":" << ++n << ": " << mark(true) << " " << print_sequent(s) << "\n";
      }
    }
    return status;
  }

  int normalize_files() {
    for (const auto& path : cfg_.inputs) {
      auto seqs = parse_sequent_file(read_file(path), sig_.constant_types);
      for (const auto& s : seqs) {
        auto n = normalize(s, Strategy{cfg_.seed});
        if (cfg_.trace) {
          out_ << "start " << print_sequent(s) << "\n";
          int k = 0;
          for (const auto& st : n.trace) out_ << format_step(++k, st) << "\n";
        }
        out_ << print_sequent(n.normal) << "\n";
      }
    }
    return kOk;
  }

  int equiv() {
    if (cfg_.inputs.size() != 2) throw Unusable("equiv needs exactly two files");
    std::vector<Sequent> nf;
    for (const auto& path : cfg_.inputs) {
      auto seqs = parse_sequent_file(read_file(path), sig_.constant_types);
      if (seqs.size() != 1)
        throw Unusable(path + " holds " + std::to_string(seqs.size()) +
                       " sequents, expected one");
      nf.push_back(normalize(seqs[0], Strategy{cfg_.seed}).normal);
      out_ << path << ": " << print_sequent(nf.back()) << "\n";
    }
    bool same = canonical_key(nf[0]) == canonical_key(nf[1]);
    out_ << (same ? "equivalent" : "not equivalent") << "\n";
    return same ? kOk : kFailed;
  }

  int interp() {
    if (cfg_.sig_path.empty()) throw Unusable("interp needs --sig");
    int status = kOk;
    for (const auto& path : cfg_.inputs) {
      auto seqs = parse_sequent_file(read_file(path), sig_.constant_types);
      int n = 0;
      for (const auto& s : seqs) {
        ++n;
        Tensor<Complex> t;
        try {
          t = interpret(s, sig_, cfg_.bruteforce);
        } catch (const SymbolicOnly& e) {
          out_ << path << ":" << n << ": symbolic only: " << e.what() << "\n";
          status = kUnusable;
          continue;
        }
        out_ << path << ":" << n << ": shape [";
        for (std::size_t a = 0; a < t.shape().size(); ++a)
          out_ << (a ? ", " : "") << t.shape()[a];
        out_ << "] inputs " << input_axes(s) << "\n";
        auto m = as_matrix(t, input_axes(s));
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          out_ << "  [";
          for (Eigen::Index c = 0; c < m.cols(); ++c)
            out_ << (c ? ", " : "") << format_complex(m(r, c));
          out_ << "]\n";
        }
        if (cfg_.verify_steps) {
          auto norm = normalize(s);
          Sequent cur = s;
          int k = 0;
          for (const auto& st : norm.trace) {
            bool ok = check_step_preservation(cur, st.redex, sig_, cfg_.tolerance);
            out_ << "  step " << ++k << " " << to_string(st.redex.kind) << " "
                 << mark(ok) << "\n";
            if (!ok) status = std::max(status, static_cast<int>(kFailed));
            cur = st.after;
          }
        }
      }
    }
    return status;
  }

  int axioms() {
    for (int d : cfg_.dims)
      if (d < 1 || d > 4) throw Unusable("--dims entries must lie in 1..4");
    bool all = true;
    for (const auto& r : verify_axioms(cfg_.dims, sig_, cfg_.tolerance)) {
      std::string line = format_axiom(r);
      if (color_) {
        auto pos = line.find(r.pass ? " PASS " : " FAIL ");
        line.replace(pos + 1, 4, mark(r.pass));
      }
      out_ << line << "\n";
      all = all && r.pass;
    }
    return all ? kOk : kFailed;
  }

 private:
  std::string mark(bool ok) const {
    std::string word = ok ? "PASS" : "FAIL";
    if (!color_) return word;
    return (ok ? "\x1b[32m" : "\x1b[31m") + word + "\x1b[0m";
  }

  static std::string format_complex(const Complex& z) {
    char buf[64];
    double re = z.real() == 0 ? 0.0 : z.real();
    double im = z.imag() == 0 ? 0.0 : z.imag();
    std::snprintf(buf, sizeof buf, "%.9g%+.9gi", re, im);
    return buf;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  bool color_ = false;
  SignatureDecl decl_;
  Signature sig_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"dlc: checker, normalizer and matrix model for the dagger lambda calculus"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "type and linearity check sequents; replay derivations");
  check->add_option("files", cfg.inputs, "sequent (.dlc), signature (.dsig) or derivation (.dprf) files")
      ->required();
  check->add_option("--proof", cfg.proof_path, "derivation script to replay");
  check->add_option("--sig", cfg.sig_path, "signature giving constant types");

  auto* norm = app.add_subcommand("normalize", "print the normal form of each sequent");
  norm->add_option("file", cfg.inputs, "sequent file")->required();
  norm->add_flag("--trace", cfg.trace, "print every reduction step");
  auto* seed_opt = norm->add_option("--seed", seed, "choose redexes at random with this seed");
  norm->add_option("--sig", cfg.sig_path, "signature giving constant types");

  auto* equiv = app.add_subcommand("equiv", "decide soup equivalence of two sequents");
  equiv->add_option("files", cfg.inputs, "two sequent files")->required()->expected(2);
  equiv->add_option("--sig", cfg.sig_path, "signature giving constant types");

  auto* interp = app.add_subcommand("interp", "print the matrix of each sequent");
  interp->add_option("file", cfg.inputs, "sequent file")->required();
  interp->add_option("--sig", cfg.sig_path, "signature with dimensions and values")->required();
  interp->add_flag("--verify-steps", cfg.verify_steps,
                   "check that each normalization step preserves the matrix");
  interp->add_flag("--bruteforce", cfg.bruteforce, "use the nested-sum contraction");
  interp->add_option("--tol", cfg.tolerance, "relative tolerance for --verify-steps");

  auto* ax = app.add_subcommand("axioms", "check the dagger compact coherence equations");
  ax->add_option("--sig", cfg.sig_path, "signature (a valued f : A^ @ B is used when present)");
  ax->add_option("--dims", cfg.dims, "dimensions to assign to A, B, C, D")->delimiter(',');
  ax->add_option("--tol", cfg.tolerance, "absolute tolerance for the matrix check");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "dlc: " << e.what() << "\n";
    return kUnusable;
  }
  if (seed_opt->count()) cfg.seed = seed;

  try {
    Runner run(cfg, out);
    if (check->parsed()) return run.check();
    if (norm->parsed()) return run.normalize_files();
    if (equiv->parsed()) return run.equiv();
    if (interp->parsed()) return run.interp();
    return run.axioms();
  } catch (const SyntaxError& e) {
    err << "dlc: " << e.what() << "\n";
    return kUnusable;
  } catch (const Unusable& e) {
    err << "dlc: " << e.what() << "\n";
    return kUnusable;
  } catch (const SymbolicOnly& e) {
    err << "dlc: symbolic only: " << e.what() << "\n";
    return kUnusable;
  } catch (const TypeError& e) {
    err << "dlc: type error: " << e.what() << "\n";
    return kFailed;
  } catch (const LinearityError& e) {
    err << "dlc: " << e.what() << "\n";
    return kFailed;
  } catch (const RuleError& e) {
    err << "dlc: rule error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "dlc: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace dlc
