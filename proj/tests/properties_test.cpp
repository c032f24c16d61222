#include <gtest/gtest.h>

#include "datrtag/engine.hpp"
#include "support/generators.hpp"
#include "support/properties.hpp"
#include "support/reference_evaluator.hpp"

namespace datrtag {
namespace {

using testing::GeneratorOptions;
using testing::TheoryGenerator;

TEST(Properties, OracleEquivalence) {
  const auto r = testing::check_oracle_equivalence(1000, 1000);
  EXPECT_EQ(r.cases, 1000u);
  EXPECT_TRUE(r.ok()) << r.failures << " failures, first:\n" << r.first_failure;
  // Guard against a generator that only produces errors.
  EXPECT_GT(r.defined, 2000u);
}

TEST(Properties, OracleEquivalenceWithVariedAtoms) {
  GeneratorOptions opts;
  opts.varied_atoms = true;
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    TheoryGenerator gen(seed, opts);
    const Theory t = gen.theory();
    const testing::ReferenceEvaluator ref(t, testing::kPropertyDepth);
    for (int k = 0; k < 5; ++k) {
      const std::string node = TheoryGenerator::node_name(gen.uniform(0, t.size() - 1)).text;
      const AtomPath path = gen.query_path();
      ASSERT_EQ(testing::engine_outcome(t, node, path), ref.query(node, testing::to_strings(path)))
          << render_theory(t) << node << ":" << render_atom_path(path);
    }
  }
}

TEST(Properties, ReferenceSharesTheDepthLimit) {
  const Theory t = parse_theory("A: <> == B. B: <> == C. C: <> == x.");
  EXPECT_TRUE(testing::ReferenceEvaluator(t, 3).query("A", {}).atoms);
  EXPECT_EQ(testing::ReferenceEvaluator(t, 2).query("A", {}).error, "DepthExceeded");
}

TEST(Properties, LongestPrefixIsSelected) {
  const auto r = testing::check_override(2024, 1000);
  EXPECT_EQ(r.cases, 1000u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, RoundTrip) {
  const auto r = testing::check_round_trips(99, 200);
  EXPECT_EQ(r.cases, 202u);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(Properties, ExtensionLaw) {
  std::size_t checked = 0;
  for (std::uint32_t seed = 0; seed < 300; ++seed) {
    TheoryGenerator gen(seed, GeneratorOptions{});
    const Theory t = gen.theory();
    for (int k = 0; k < 5; ++k) {
      const NodeName node = TheoryGenerator::node_name(gen.uniform(0, t.size() - 1));
      const AtomPath path = gen.query_path();
      const auto m = match_longest_prefix(get_node(t, node)->sentences, path);
      if (!m || m->sentence->rhs.size() != 1) continue;
      const QueryContext ctx = QueryContext::at(node, path);
      const Descriptor extended = extend_descriptor(m->sentence->rhs[0], m->suffix);
      const auto direct = testing::engine_outcome(t, node.text, path);
      testing::RefResult via;
      try {
        via.atoms = testing::to_strings(
            evaluate_descriptor(t, extended, ctx, testing::property_config()));
      } catch (const DepthExceeded&) {
        via.error = "DepthExceeded";
      } catch (const NoMatchingSentence&) {
        via.error = "NoMatchingSentence";
      } catch (const UnknownNode&) {
        via.error = "UnknownNode";
      }
      EXPECT_EQ(direct, via) << render_theory(t) << node.text << ":" << render_atom_path(path);
      ++checked;
    }
  }
  EXPECT_GT(checked, 300u);
}

TEST(Properties, AtomValueIgnoresSuffix) {
  TheoryGenerator gen(5, GeneratorOptions{});
  for (int i = 0; i < 500; ++i) {
    const AtomPath lhs = gen.atom_path(3);
    const Atom value = gen.atom();
    Theory t;
    t.add_node(NodeDef{NodeName("N"), {Sentence{lhs, {AtomValue{value}}}}});
    AtomPath query = lhs;
    for (std::size_t n = gen.uniform(0, 4); n > 0; --n) query.push_back(gen.atom());
    EXPECT_EQ(evaluate_query(t, NodeName("N"), query), AtomSeq{value});
  }
}

TEST(Properties, EvaluationIsDeterministic) {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    TheoryGenerator gen(seed, GeneratorOptions{});
    const Theory t = gen.theory();
    const std::string node = TheoryGenerator::node_name(0).text;
    const AtomPath path = gen.query_path();
    const auto first = testing::engine_outcome(t, node, path);
    EXPECT_EQ(testing::engine_outcome(t, node, path), first);
    EXPECT_EQ(testing::engine_outcome(Theory(t), node, path), first);
  }
}

TEST(Properties, GeneratorIsSeeded) {
  TheoryGenerator a(17, GeneratorOptions{});
  TheoryGenerator b(17, GeneratorOptions{});
  EXPECT_EQ(a.theory(), b.theory());
}

TEST(Properties, UnquotedGeneratorAvoidsQuotes) {
  GeneratorOptions opts;
  opts.quoted = false;
  TheoryGenerator gen(3, opts);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(render_theory(gen.theory()).find('"'), std::string::npos);
  }
}

}  // namespace
}  // namespace datrtag
