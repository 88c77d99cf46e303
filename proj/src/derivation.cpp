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

#include "dlc/calculus.hpp"
#include "dlc/error.hpp"

namespace dlc {
namespace {

class Checker {
 public:
  explicit Checker(const std::map<std::string, Type>& constants)
      : constants_(constants) {}

  Derivation check(const DerivationScript& d, const std::string& path) {
    Derivation out;
    out.rule = d.op;
    out.path = path;
    for (std::size_t k = 0; k < d.premises.size(); ++k)
      out.premises.push_back(check(d.premises[k], path + "." + std::to_string(k)));
    try {
      out.conclusion = apply(d, out.premises);
      validate(out.conclusion, constants_);
    } catch (const Error& e) {
      throw RuleError("node " + path + " (" + d.op + ", line " +
                      std::to_string(d.line) + "): " + e.what());
    }
    return out;
  }

 private:
  Sequent apply(const DerivationScript& d, const std::vector<Derivation>& p) {
    auto prem = [&](std::size_t k) -> const Sequent& { return p.at(k).conclusion; };
    auto index = [&]() {
      if (d.ints.at(0) < 0) throw RuleError("negative position");
      return static_cast<std::size_t>(d.ints.at(0));
    };
    const std::string& op = d.op;
    if (op == "id") return rule_id(d.names.at(0), d.types.at(0));
    if (op == "one") return rule_one();
    if (op == "hyp") return parse_sequent(SourceText{d.text, "<hyp>"}, constants_);
    if (op == "const") return rule_constant(d.names.at(0), d.types.at(0), d.types.at(1));
    if (op == "comb") return combinator_sequent(d.names.at(0), d.types);
    if (op == "cut") return rule_cut(prem(0), prem(1));
    if (op == "tenr") return rule_tensor_r(prem(0), prem(1));
    if (op == "app") return rule_app(prem(0), prem(1));
    if (op == "tenl") return rule_tensor_l(prem(0), index());
    if (op == "untenl") return rule_untensor_l(prem(0), index());
    if (op == "exch") return rule_exchange(prem(0), index());
    if (op == "curry") return rule_curry(prem(0));
    if (op == "uncurry") return rule_uncurry(prem(0));
    if (op == "curry-e") return rule_curry_empty(prem(0));
    if (op == "uncurry-e") return rule_uncurry_empty(prem(0));
    if (op == "neg") return rule_negation(prem(0));
    if (op == "dagger") return dagger_flip(prem(0));
    if (op == "rename") return rule_rename(prem(0), renames_);
    if (op == "unitl") return rule_unit_left(prem(0));
    if (op == "unitl-") return rule_unit_left_inv(prem(0));
    if (op == "unitr") return rule_unit_right(prem(0));
    if (op == "unitr-") return rule_unit_right_inv(prem(0));
    if (op == "consume") return rule_consume(prem(0), d.names.at(0));
    throw RuleError("unknown rule " + op);
  }

  const std::map<std::string, Type>& constants_;
  int renames_ = 0;
};

void report(const Derivation& d, std::vector<std::string>& out) {
  for (const auto& p : d.premises) report(p, out);
  out.push_back("node " + d.path + " OK " + print_sequent(d.conclusion));
}

}  // namespace

Derivation check_derivation(const DerivationScript& script,
                            const std::map<std::string, Type>& constant_types) {
  return Checker(constant_types).check(script, "0");
}

std::vector<std::string> derivation_report(const Derivation& d) {
  std::vector<std::string> out;
  report(d, out);
  return out;
}

}  // namespace dlc
