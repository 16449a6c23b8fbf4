// Copyright 2026 The tapes Authors
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

// The `tapes` command line. Exit codes: 0 success or equal, 1 unequal or
// suite failure, 2 usage, 3 parse or type error.

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tapes/frontend/elaborate.hpp"
#include "tapes/frontend/parser.hpp"
#include "tapes/frontend/printer.hpp"
#include "tapes/frontend/svg.hpp"
#include "tapes/suites.hpp"

namespace tapes::frontend {

enum Exit { kOk = 0, kUnequal = 1, kUsage = 2, kInvalid = 3 };

namespace cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Rational> parseParams(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) {
    try {
      Rational r(t);
      r.canonicalize();
      out.push_back(r);
    } catch (const std::invalid_argument&) {
      throw UsageError("--param expects a fraction, got '" + t + "'");
    }
  }
  return out;
}

inline TapeTerm resolveTerm(const Module& m, const std::string& nameOrExpr) {
  if (auto it = m.defs.find(nameOrExpr); it != m.defs.end()) return it->second;
  return Elaborator::tapeIn(m, parseTape(nameOrExpr));
}

inline const AnyInterpretation& findInterp(const Module& m, const std::string& name) {
  auto it = m.interps.find(name);
  if (it == m.interps.end()) throw Error(ErrorKind::Resolution, "unknown interpretation '" + name + "'");
  return it->second;
}

inline Bounds parseBounds(const std::vector<std::string>& items, std::uint64_t seed) {
  Bounds b;
  b.seed = seed;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--bound expects key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--bound value must be a natural number in '" + item + "'");
    }
    if (key == "sorts") b.sorts = value;
    else if (key == "monomial-length") b.monomialLength = value;
    else if (key == "polynomial-length") b.polynomialLength = value;
    else if (key == "instances") b.instances = value;
    else if (key == "max-assignments") b.maxAssignments = value;
    else if (key == "polynomial-assignments") b.polynomialAssignments = value;
    else throw UsageError("unknown bound '" + key + "'");
  }
  return b;
}

template <Semiring W>
Report runSuite(const std::string& which, const Interpretation<W>& I, const Bounds& b) {
  if (which == "all") {
    Report r = axiomSuite(I, b);
    r.merge(lemmaSuite(I, b));
    return r;
  }
  if (which == "axioms") return axiomSuite(I, b);
  if (which == "lemmas") return lemmaSuite(I, b);
  if (which == "codiag-tensor") return codiagTensorSuite(I, b);
  if (which == "copy-merge") return copyMergeSuite(I, b);
  if (which == "fccd") return fccdSuite(I, b);
  if (which == "enrichment") return enrichmentSuite(I, b);
  if (which == "opnat") return opNaturalitySuite(I, b);
  if (which == "op-distributor") return opDistributorSuite(I, b);
  if (which == "whiskers") return whiskerSuite(I, b);
  if (which == "transport") return transportSuite(I, b);
  if (which == "coherence") return matrixCoherenceSuite<W>(b.seed);
  throw UsageError("unknown suite '" + which + "'");
}

}  // namespace cli

/// Runs the CLI on `args` (without the program name).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tape diagrams for rig categories with finite coproducts", "tapes"};
  app.require_subcommand(1);

  std::string file, term, interp, left, right, object, output, suite = "all";
  std::vector<std::string> params, bounds;
  std::uint64_t seed = 1;

  auto addParam = [&](CLI::App* sub) {
    sub->add_option("--param", params, "extra +_p instance for a PCA theory (repeatable)");
  };

  auto* check = app.add_subcommand("check", "type all definitions and run check directives");
  check->add_option("FILE", file)->required();
  addParam(check);

  auto* norm = app.add_subcommand("normalize", "print the polynomial normal form of an object");
  norm->add_option("OBJEXPR", object)->required();

  auto* fmt = app.add_subcommand("format", "print a module in canonical layout");
  fmt->add_option("FILE", file)->required();

  auto* eval = app.add_subcommand("eval", "print the matrix of a term");
  eval->add_option("FILE", file)->required();
  eval->add_option("--term", term, "definition name or tape expression")->required();
  eval->add_option("--interp", interp)->required();
  addParam(eval);

  auto* eq = app.add_subcommand("eq", "exit 0 iff two terms denote the same matrix");
  eq->add_option("FILE", file)->required();
  eq->add_option("--left", left)->required();
  eq->add_option("--right", right)->required();
  eq->add_option("--interp", interp)->required();
  addParam(eq);

  auto* suiteCmd = app.add_subcommand("suite", "check axioms and derived laws on random instances");
  suiteCmd->add_option("FILE", file)->required();
  suiteCmd->add_option("--interp", interp)->required();
  suiteCmd->add_option("--seed", seed);
  suiteCmd->add_option("--bound", bounds, "key=value: sorts, monomial-length, polynomial-length, instances, "
                                          "max-assignments, polynomial-assignments");
  suiteCmd->add_option("--suite", suite, "all, axioms, lemmas, codiag-tensor, copy-merge, fccd, enrichment, opnat, "
                                         "op-distributor, whiskers, transport, coherence");
  addParam(suiteCmd);

  auto* render = app.add_subcommand("render", "draw a term as SVG");
  render->add_option("FILE", file)->required();
  render->add_option("--term", term)->required();
  render->add_option("-o,--output", output, "output file; standard output when absent");
  addParam(render);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tapes: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (norm->parsed()) {
      out << toString(Elaborator::freeObject(parseObject(object))) << "\n";
      return kOk;
    }
    std::string text = cli::readFile(file);
    if (fmt->parsed()) {
      out << print(parseModule(text));
      return kOk;
    }
    Module m = loadModule(text, ElabOptions{cli::parseParams(params)});

    if (check->parsed()) {
      int code = kOk;
      for (const auto& c : m.checks) {
        std::string where = file + ":" + std::to_string(c.loc.line) + ":" + std::to_string(c.loc.col) + ": ";
        if (c.kind == CheckDecl::Kind::Type) {
          TapeType got = typeOfTape(c.lhs, m.sig, m.theoryOrEmpty());
          if (!(got == c.expected)) {
            err << where << "type is " << toString(got.dom) << " -> " << toString(got.cod) << ", expected "
                << toString(c.expected.dom) << " -> " << toString(c.expected.cod) << "\n";
            code = kInvalid;
          }
          continue;
        }
        EqResult r = std::visit([&](const auto& I) { return semEq(c.lhs, c.rhs, I); }, cli::findInterp(m, c.interp));
        if (r.status == EqStatus::TypeError) {
          err << where << r.describe() << "\n";
          code = kInvalid;
        } else if (r.status == EqStatus::Unequal) {
          out << where << "unequal: " << r.describe() << "\n";
          if (code == kOk) code = kUnequal;
        }
      }
      return code;
    }
    if (eval->parsed()) {
      TapeTerm t = cli::resolveTerm(m, term);
      typeOfTape(t, m.sig, m.theoryOrEmpty());
      std::visit([&](const auto& I) { out << toString(evalTape(t, I)) << "\n"; }, cli::findInterp(m, interp));
      return kOk;
    }
    if (eq->parsed()) {
      TapeTerm l = cli::resolveTerm(m, left), r = cli::resolveTerm(m, right);
      typeOfTape(l, m.sig, m.theoryOrEmpty());
      typeOfTape(r, m.sig, m.theoryOrEmpty());
      EqResult res = std::visit([&](const auto& I) { return semEq(l, r, I); }, cli::findInterp(m, interp));
      if (res.status == EqStatus::TypeError) {
        err << "tapes: " << res.describe() << "\n";
        return kInvalid;
      }
      if (res.status == EqStatus::Unequal) {
        out << "unequal: " << res.describe() << "\n";
        return kUnequal;
      }
      return kOk;
    }
    if (suiteCmd->parsed()) {
      Bounds b = cli::parseBounds(bounds, seed);
      Report rep = std::visit([&](const auto& I) { return cli::runSuite(suite, I, b); }, cli::findInterp(m, interp));
      rep.write(out);
      return rep.ok() ? kOk : kUnequal;
    }
    if (render->parsed()) {
      TapeTerm t = cli::resolveTerm(m, term);
      typeOfTape(t, m.sig, m.theoryOrEmpty());
      std::string svgText = renderSvg(t);
      if (output.empty()) {
        out << svgText;
      } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw cli::UsageError("cannot write '" + output + "'");
        f << svgText;
      }
      return kOk;
    }
  } catch (const cli::UsageError& e) {
    err << "tapes: " << e.what() << "\n";
    return kUsage;
  } catch (const SourceError& e) {
    err << (file.empty() ? "<arg>" : file) << ":" << e.what() << "\n";
    return kInvalid;
  } catch (const Error& e) {
    err << "tapes: " << kindName(e.kind()) << ": " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}

}  // namespace tapes::frontend
