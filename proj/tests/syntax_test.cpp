#include <gtest/gtest.h>

#include <string>

#include "datrtag/fragments.hpp"
#include "datrtag/syntax.hpp"
#include "support/generators.hpp"

namespace datrtag {
namespace {

TEST(ParseTheory, NpTreeBlock) {
  const Theory t = parse_theory("NP_TREE: <> == TREE_NODE <cat> == np <type> == substitution.");
  ASSERT_EQ(t.size(), 1u);
  const NodeDef& np = t.nodes()[0];
  EXPECT_EQ(np.name.text, "NP_TREE");
  ASSERT_EQ(np.sentences.size(), 3u);
  EXPECT_EQ(np.sentences[0].lhs, AtomPath{});
  EXPECT_EQ(np.sentences[0].rhs, std::vector<Descriptor>{LocalNode{NodeName("TREE_NODE")}});
  EXPECT_EQ(np.sentences[2].lhs, make_path({"type"}));
  EXPECT_EQ(np.sentences[2].rhs, std::vector<Descriptor>{AtomValue{Atom("substitution")}});
}

TEST(ParseTheory, EmptyInput) {
  EXPECT_TRUE(parse_theory("").empty());
  EXPECT_TRUE(parse_theory("  % only a comment\n\n").empty());
}

TEST(ParseTheory, EvaluablePathWithQuotedComponent) {
  const Theory t = parse_theory("AUX_TREE: <cat> == <aux_cat \"<form>\">.");
  const Sentence& s = t.nodes()[0].sentences[0];
  ASSERT_EQ(s.rhs.size(), 1u);
  const auto* lp = std::get_if<LocalPath>(&s.rhs[0]);
  ASSERT_NE(lp, nullptr);
  ASSERT_EQ(lp->path.components.size(), 2u);
  EXPECT_EQ(std::get<Atom>(lp->path.components[0]), Atom("aux_cat"));
  const QuotedDescriptor form = GlobalPath{make_path({"form"})};
  EXPECT_EQ(std::get<QuotedDescriptor>(lp->path.components[1]), form);
}

TEST(ParseTheory, DuplicatePathIsRejected) {
  EXPECT_THROW(parse_theory("Foo: <a> == x <a> == y."), DuplicatePath);
}

TEST(ParseTheory, DuplicateNodeIsRejected) {
  EXPECT_THROW(parse_theory("Foo: <a> == x. Foo: <b> == y."), DuplicateNode);
}

TEST(ParseTheory, AllDescriptorForms) {
  const Theory t = parse_theory(R"(
    N:
      <a> == x
      <b> == <c d>
      <c> == M
      <d> == M:<e>
      <e> == "<f>"
      <f> == "M"
      <g> == "M:<h>"
      <h> == x <i> "M" M:<"N:<j>" k>.
    M: <> == y.
  )");
  const auto& s = t.nodes()[0].sentences;
  ASSERT_EQ(s.size(), 8u);
  EXPECT_TRUE(std::holds_alternative<AtomValue>(s[0].rhs[0]));
  EXPECT_TRUE(std::holds_alternative<LocalPath>(s[1].rhs[0]));
  EXPECT_TRUE(std::holds_alternative<LocalNode>(s[2].rhs[0]));
  EXPECT_TRUE(std::holds_alternative<LocalNodePath>(s[3].rhs[0]));
  EXPECT_TRUE(std::holds_alternative<GlobalPath>(s[4].rhs[0]));
  EXPECT_TRUE(std::holds_alternative<GlobalNode>(s[5].rhs[0]));
  EXPECT_TRUE(std::holds_alternative<GlobalNodePath>(s[6].rhs[0]));
  ASSERT_EQ(s[7].rhs.size(), 4u);
  const auto& last = std::get<LocalNodePath>(s[7].rhs[3]);
  const QuotedDescriptor expected = GlobalNodePath{NodeName("N"), make_path({"j"})};
  EXPECT_EQ(std::get<QuotedDescriptor>(last.path.components[0]), expected);
}

TEST(ParseTheory, PathAfterDescriptorStartsNextSentenceOnlyBeforeEquals) {
  // <x> here is a second descriptor; <y> starts a new sentence.
  const Theory t = parse_theory("N: <a> == <b> <x> <y> == z.");
  const auto& s = t.nodes()[0].sentences;
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].rhs.size(), 2u);
  EXPECT_EQ(s[1].lhs, make_path({"y"}));
}

TEST(ParseTheory, UppercaseInsideAtomsIsAllowed) {
  const Theory t = parse_theory("N: <aB c-1 2_x> == vP.");
  EXPECT_EQ(t.nodes()[0].sentences[0].lhs, make_path({"aB", "c-1", "2_x"}));
}

TEST(ParseTheory, CarriageReturnsAreWhitespace) {
  EXPECT_EQ(parse_theory("N:\r\n  <a> == b.\r\n"), parse_theory("N: <a> == b."));
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

class SyntaxErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(SyntaxErrors, ReportPosition) {
  const BadInput& in = GetParam();
  try {
    parse_theory(in.text);
    FAIL() << "accepted: " << in.text;
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), in.line) << e.what();
    EXPECT_EQ(e.column(), in.column) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, SyntaxErrors,
    ::testing::Values(BadInput{"N: <a == b.", 1, 7},          // missing '>'
                      BadInput{"N: <a> == b", 1, 12},         // missing '.'
                      BadInput{"N: <a> = b.", 1, 8},          // single '='
                      BadInput{"n: <a> == b.", 1, 1},         // lowercase node name
                      BadInput{"N: <A> == b.", 1, 5},         // node name in lhs
                      BadInput{"N:\n  <a> == b\n  <c> == .", 3, 10},  // error on a later line
                      BadInput{"N: .", 1, 4},                 // no sentences
                      BadInput{"N: <a> == \"<\"<b>\">\">.", 1, 13},  // nested quotes
                      BadInput{"N: <\"<b>\"> == c.", 1, 5},   // quoted in lhs
                      BadInput{"N: <a> == b; ", 1, 12},       // bad character
                      BadInput{"N: <a> == .", 1, 11}));       // empty rhs

TEST(ParseTheory, AtomSequenceIsMultipleDescriptors) {
  const Theory t = parse_theory("N: <a> == b c.");
  EXPECT_EQ(t.nodes()[0].sentences[0].rhs.size(), 2u);
}

TEST(RenderTheory, EmptyTheoryRendersEmpty) { EXPECT_EQ(render_theory(Theory{}), ""); }

TEST(RenderTheory, Layout) {
  const Theory t = parse_theory("NP_TREE: <> == TREE_NODE <cat> == np <type> == substitution.");
  EXPECT_EQ(render_theory(t),
            "NP_TREE:\n"
            "    <> == TREE_NODE\n"
            "    <cat> == np\n"
            "    <type> == substitution.\n");
}

TEST(RenderTheory, QuotedForms) {
  const std::string text =
      "A:\n"
      "    <cat> == <aux_cat \"<form>\">\n"
      "    <x> == \"B\" \"B:<y z>\" B:<>.\n"
      "\n"
      "B:\n"
      "    <> == undef.\n";
  EXPECT_EQ(render_theory(parse_theory(text)), text);
}

TEST(RenderTheory, BundledFragmentsRoundTrip) {
  for (auto name : fragment_names()) {
    const Theory t = load_fragment(name);
    EXPECT_EQ(parse_theory(render_theory(t)), t) << name;
  }
}

TEST(RenderTheory, GeneratedTheoriesRoundTrip) {
  testing::GeneratorOptions opts;
  opts.varied_atoms = true;
  testing::TheoryGenerator gen(7, opts);
  for (int i = 0; i < 100; ++i) {
    const Theory t = gen.theory();
    const std::string text = render_theory(t);
    EXPECT_EQ(parse_theory(text), t) << text;
  }
}

TEST(GetNode, Lookup) {
  const Theory t = load_fragment("figure1");
  const NodeDef* give = get_node(t, NodeName("Give"));
  ASSERT_NE(give, nullptr);
  EXPECT_EQ(give->sentences.size(), 2u);
  EXPECT_EQ(get_node(t, NodeName("Walk")), nullptr);
  EXPECT_EQ(get_node(Theory{}, NodeName("Give")), nullptr);
}

TEST(ParseAtomPath, Standalone) {
  EXPECT_EQ(parse_atom_path("<parent left cat>"), make_path({"parent", "left", "cat"}));
  EXPECT_EQ(parse_atom_path(" <> "), AtomPath{});
  EXPECT_THROW(parse_atom_path("<a> b"), SyntaxError);
  EXPECT_THROW(parse_atom_path("<a"), SyntaxError);
  EXPECT_THROW(parse_atom_path("<\"<a>\">"), SyntaxError);
}

TEST(Identifiers, Classes) {
  EXPECT_TRUE(is_valid_atom("np"));
  EXPECT_TRUE(is_valid_atom("3sg"));
  EXPECT_TRUE(is_valid_atom("right_form"));
  EXPECT_FALSE(is_valid_atom("Np"));
  EXPECT_FALSE(is_valid_atom("_x"));
  EXPECT_FALSE(is_valid_atom(""));
  EXPECT_TRUE(is_valid_node_name("TREE_NODE"));
  EXPECT_TRUE(is_valid_node_name("Give"));
  EXPECT_FALSE(is_valid_node_name("give"));
  EXPECT_FALSE(is_valid_node_name("A.B"));
}

}  // namespace
}  // namespace datrtag
