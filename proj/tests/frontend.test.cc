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


#include "tapes/frontend/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"

using namespace tapes;
using namespace tapes::frontend;
using fixture::mono;
using fixture::poly;

namespace {

namespace fs = std::filesystem;

std::vector<fs::path> corpus() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(TAPES_SAMPLES_DIR)) {
    if (e.path().extension() == ".tape") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string sample(const std::string& name) { return (fs::path(TAPES_SAMPLES_DIR) / name).string(); }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

SourceError sourceErrorOf(const std::string& text) {
  try {
    loadModule(text);
  } catch (const SourceError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return SourceError(ErrorKind::Syntax, {}, "");
}

TapeExpr ref(const std::string& n) {
  TapeExpr e;
  e.kind = TapeExpr::Kind::Ref;
  e.name = n;
  return e;
}

TapeExpr node(TapeExpr::Kind k, TapeExpr l, TapeExpr r) {
  TapeExpr e;
  e.kind = k;
  e.kids = {std::move(l), std::move(r)};
  return e;
}

fs::path writeTemp(const std::string& name, const std::string& text) {
  fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(lexer, operator_tokens) {
  auto toks = lex("op<+_1/3>@AA ; a (x) b (+) c # trailing\n// line\n");
  std::vector<Tok> kinds;
  for (const auto& t : toks) kinds.push_back(t.kind);
  std::vector<Tok> expected{Tok::Ident, Tok::Less,   Tok::PlusSub, Tok::Number, Tok::Slash, Tok::Number,
                            Tok::Greater, Tok::At,   Tok::Ident,   Tok::Semi,   Tok::Ident, Tok::Tensor,
                            Tok::Ident, Tok::Oplus, Tok::Ident,   Tok::End};
  EXPECT_EQ(kinds, expected);
  EXPECT_EQ(normalizeWhitespace("a   ⊗\n\tb ⊕ c"), "a (x) b (+) c");
}

TEST(lexer, positions_in_diagnostics) {
  try {
    lex("sort A;\n  $");
    FAIL();
  } catch (const SourceError& e) {
    EXPECT_EQ(e.loc().line, 2u);
    EXPECT_EQ(e.loc().col, 3u);
    EXPECT_NE(std::string(e.what()).find("2:3:"), std::string::npos);
  }
}

TEST(lexer, decimals_are_rejected) {
  SourceError e = sourceErrorOf("sort A;\ntheory PCA with p = 0.5;");
  EXPECT_EQ(e.loc().line, 2u);
}

TEST(parser, expected_sets) {
  SourceError e = sourceErrorOf("sort ;");
  EXPECT_EQ(e.loc().col, 6u);
  EXPECT_TRUE(e.expected().count("identifier"));
}

TEST(parser, tape_precedence) {
  TapeExpr t = parseTape("a ; b (x) c (+) d");
  ASSERT_EQ(t.kind, TapeExpr::Kind::Seq);
  ASSERT_EQ(t.kids[1].kind, TapeExpr::Kind::Tensor);
  EXPECT_EQ(t.kids[1].kids[1].kind, TapeExpr::Kind::Sum);
  TapeExpr s = parseTape("a ; b ; c");
  EXPECT_EQ(s.kids[0].kind, TapeExpr::Kind::Seq);
}

TEST(parser, object_precedence) {
  ObjExpr o = parseObject("A (+) B (x) C");
  ASSERT_EQ(o.kind, ObjExpr::Kind::Plus);
  EXPECT_EQ(o.kids[1].kind, ObjExpr::Kind::Tensor);
  EXPECT_EQ(toString(Elaborator::freeObject(parseObject("(A (+) 1) (x) (B (+) C)"))), "AB (+) AC (+) B (+) C");
}

TEST(elaborate, generator_and_def_types) {
  Module m = loadModule("sort A;\ngen AND : A A -> A;\ndef d = id0;\n");
  const GeneratorDecl* g = m.sig.findGenerator("AND");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->ar, mono({"A", "A"}));
  EXPECT_EQ(g->coar, mono({"A"}));
  EXPECT_EQ(m.types.at("d"), (TapeType{Polynomial::zero(), Polynomial::zero()}));
}

TEST(elaborate, juxtaposed_sort_names) {
  Module m = loadModule("sort A;\nsort B;\ndef t = id@AB (+) id@{B A};\n");
  EXPECT_EQ(m.types.at("t").dom, poly({mono({"A", "B"}), mono({"B", "A"})}));
}

TEST(elaborate, errors_carry_locations) {
  EXPECT_EQ(sourceErrorOf("sort A;\ndef a = b;\ndef b = id@A;\n").loc().line, 2u);
  EXPECT_EQ(sourceErrorOf("sort A;\ngen f : B -> A;\n").loc().line, 2u);
  EXPECT_EQ(sourceErrorOf("sort A;\ngen f : A (+) A -> A;\n").loc().line, 2u);
  EXPECT_EQ(sourceErrorOf("sort A;\ndef t = id@A ; codiag@A;\n").loc().line, 2u);
  EXPECT_EQ(sourceErrorOf("sort A;\ntheory PCA;\ntheory CM;\n").loc().line, 3u);
  // matrix shape and CM weights are reported at their entry
  EXPECT_EQ(sourceErrorOf("sort A;\ngen f : A -> A;\ntheory PCA;\ninterp I {\n  A = 2;\n  f = [[1]];\n  model = PCA;\n}\n")
                .loc()
                .line,
            6u);
  EXPECT_EQ(sourceErrorOf("sort A;\nsort B;\ntheory PCA;\ninterp I {\n  A = 2;\n  model = PCA;\n}\n").loc().line, 4u);
  EXPECT_EQ(sourceErrorOf("sort A;\ntheory PCA;\ninterp I {\n  A = 2;\n  model = CM;\n}\n").loc().line, 3u);
  EXPECT_EQ(
      sourceErrorOf("sort A;\ngen f : A -> A;\ntheory CM;\ninterp I {\n  A = 1;\n  f = [[1/2]];\n  model = CM;\n}\n")
          .loc()
          .line,
      6u);
}

TEST(printer, minimal_parentheses) {
  using K = TapeExpr::Kind;
  EXPECT_EQ(print(node(K::Seq, node(K::Seq, ref("a"), ref("b")), ref("c"))), "a ; b ; c");
  EXPECT_EQ(print(node(K::Seq, ref("a"), node(K::Seq, ref("b"), ref("c")))), "a ; (b ; c)");
  EXPECT_EQ(print(node(K::Sum, node(K::Tensor, ref("a"), ref("b")), ref("c"))), "(a (x) b) (+) c");
  EXPECT_EQ(print(node(K::Tensor, ref("a"), node(K::Sum, ref("b"), ref("c")))), "a (x) b (+) c");
  EXPECT_EQ(print(node(K::Tensor, node(K::Seq, ref("a"), ref("b")), ref("c"))), "(a ; b) (x) c");
}

TEST(printer, written_parentheses_are_kept) {
  EXPECT_EQ(print(parseTape("(a ; b) ; c")), "(a ; b) ; c");
  EXPECT_EQ(print(parseTape("op<+_2/4>@{A B}")), "op<+_2/4>@{A B}");
}

TEST(corpus, has_at_least_ten_files) { EXPECT_GE(corpus().size(), 10u); }

TEST(corpus, round_trip) {
  for (const auto& p : corpus()) {
    SCOPED_TRACE(p.string());
    std::string text = slurp(p);
    std::string printed = print(parseModule(text));
    EXPECT_EQ(normalizeWhitespace(printed), normalizeWhitespace(text));
    EXPECT_EQ(print(parseModule(printed)), printed);
  }
}

TEST(corpus, every_file_checks) {
  for (const auto& p : corpus()) {
    Outcome r = invoke({"check", p.string()});
    EXPECT_EQ(r.code, 0) << p << "\n" << r.out << r.err;
  }
}

TEST(cli, normalize) {
  Outcome r = invoke({"normalize", "(A (+) 1) (x) (B (+) C)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "AB (+) AC (+) B (+) C\n");
}

TEST(cli, eval_flip) {
  Outcome r = invoke({"eval", sample("boolean.tape"), "--term", "flip", "--interp", "Bool"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[[2/3],[1/3]]\n");
  Outcome withParam = invoke({"eval", sample("boolean.tape"), "--term", "op<+_1/2>@1 ; [FLIP1] (+) [FLIP0] ; codiag@A",
                     "--interp", "Bool", "--param", "1/2"});
  EXPECT_EQ(withParam.code, 0) << withParam.err;
  EXPECT_EQ(withParam.out, "[[1/2],[1/2]]\n");
}

TEST(cli, eq_exit_codes) {
  std::string f = sample("boolean.tape");
  EXPECT_EQ(invoke({"eq", f, "--left", "muxDet", "--right", "choiceDet", "--interp", "Bool"}).code, 0);
  Outcome unequal = invoke({"eq", f, "--left", "muxFail", "--right", "choiceFail", "--interp", "Bool"});
  EXPECT_EQ(unequal.code, 1);
  EXPECT_EQ(unequal.out, "unequal: row=1 col=0 lhs=0 rhs=1/3\n");
  EXPECT_EQ(invoke({"eq", f, "--left", "flip", "--right", "gate", "--interp", "Bool"}).code, 3);
  EXPECT_EQ(invoke({"eq", f, "--left", "flip", "--right", "nosuch", "--interp", "Bool"}).code, 3);
  EXPECT_EQ(invoke({"eq", f, "--left", "flip", "--interp", "Bool"}).code, 2);
  EXPECT_EQ(invoke({"eq", "/nonexistent.tape", "--left", "a", "--right", "b", "--interp", "I"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(cli, diagnostics_name_the_file) {
  fs::path p = writeTemp("tapes_bad.tape", "sort A;\ndef t = id@A ; ;\n");
  Outcome r = invoke({"check", p.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind(p.string() + ":2:", 0), 0u) << r.err;
}

TEST(cli, failing_check_directive) {
  fs::path p = writeTemp("tapes_unequal.tape",
                         "sort A;\ntheory PCA;\ninterp I {\n  A = 2;\n  model = PCA;\n}\n"
                         "check sym+@A,A = id@{A (+) A} in I;\n");
  Outcome r = invoke({"check", p.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(":7:1: unequal:"), std::string::npos) << r.out;
}

TEST(cli, suite_reports) {
  Outcome r = invoke({"suite", sample("coin.tape"), "--interp", "Bool", "--suite", "codiag-tensor", "--bound", "instances=1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count(r.out, " FAIL"), 0u);
  EXPECT_GT(count(r.out, " PASS"), 0u);
  EXPECT_EQ(invoke({"suite", sample("coin.tape"), "--interp", "Bool", "--bound", "colour=3"}).code, 2);
}

TEST(cli, format_is_canonical) {
  std::string text = slurp(sample("counting.tape"));
  Outcome r = invoke({"format", sample("counting.tape")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, print(parseModule(text)));
}

TEST(svg, identity_on_a_sum) {
  std::string s = renderSvg(identityTape(poly({mono({"A"}), mono({"B"})})));
  EXPECT_EQ(count(s, "<path class=\"lane\""), 2u);
  EXPECT_EQ(count(s, "<path class=\"wire\""), 2u);
  EXPECT_NE(s.find(">A</text>"), std::string::npos);
  EXPECT_NE(s.find(">B</text>"), std::string::npos);
}

TEST(svg, codiagonal_merges_two_lanes) {
  std::string s = renderSvg(TapeTerm::codiag(mono({"A"})));
  auto at = s.find("<g class=\"merge\">");
  ASSERT_NE(at, std::string::npos);
  std::string group = s.substr(at, s.find("</g>", at) - at);
  EXPECT_EQ(count(group, "class=\"lane\""), 2u);
}

TEST(svg, deterministic_and_well_formed) {
  for (const auto& p : corpus()) {
    Module m = loadModule(slurp(p));
    for (const auto& name : m.defOrder) {
      SCOPED_TRACE(p.string() + " " + name);
      std::string a = renderSvg(m.defs.at(name)), b = renderSvg(m.defs.at(name));
      EXPECT_EQ(a, b);
      EXPECT_EQ(a.rfind("<?xml", 0), 0u);
      EXPECT_EQ(count(a, "<svg "), 1u);
      EXPECT_TRUE(a.ends_with("</svg>\n"));
      EXPECT_EQ(count(a, "<g"), count(a, "</g>"));
    }
  }
}

TEST(svg, render_writes_the_same_bytes) {
  fs::path o = fs::temp_directory_path() / "tapes_gate.svg";
  ASSERT_EQ(invoke({"render", sample("boolean.tape"), "--term", "gate", "-o", o.string()}).code, 0);
  Outcome r = invoke({"render", sample("boolean.tape"), "--term", "gate"});
  EXPECT_EQ(r.out, slurp(o));
}
