#include <doctest.h>

#include "signpat/classifier.hpp"
#include "signpat/census.hpp"
#include "signpat/determinantal.hpp"
#include "support/testutil.hpp"

using namespace signpat;

namespace {

Verdict classify_text(const char* text) { return classify(parse_pattern(text)); }

}  // namespace

TEST_CASE("necessary gates: broken chains") {
  // forward chain broken at edge 1, backward chain broken at edge 2;
  // no one-signed Hamiltonian chain either
  SignPattern a = parse_pattern("0 0 0\n+ 0 +\n+ 0 0");
  auto v = necessary_gates(a);
  REQUIRE(v.size() >= 2);
  CHECK(v[0].rule == Gate::L3_1_1);
  CHECK(v[0].detail == std::vector<int>{0, 1});
  bool has_l32 = false;
  for (const auto& g : v) has_l32 |= g.rule == Gate::L3_2;
  CHECK(has_l32);
}

TEST_CASE("necessary gates: clean forward cycle") {
  CHECK(necessary_gates(parse_pattern("0 + 0\n0 0 +\n+ 0 0")).empty());
}

TEST_CASE("necessary gates: mixed 2-cycles at a vertex") {
  // n=4 forward all +, backward (+,-,0,0): vertex 1 sits on a positive and
  // a negative 2-cycle
  SignPattern a = parse_pattern("0 + 0 0\n+ 0 + 0\n0 - 0 +\n+ 0 0 0");
  auto v = necessary_gates(a);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == Gate::L3_3);
  CHECK(v[0].detail == std::vector<int>{1});
  CHECK(describe(v[0]) == "L3_3@v2");
}

TEST_CASE("necessary gates: positive loop on a negative 2-cycle") {
  SignPattern a = parse_pattern("0 + 0\n- + +\n+ 0 0");
  auto v = necessary_gates(a);
  REQUIRE(v.size() == 1);
  CHECK(v[0].rule == Gate::L3_4);
  CHECK(v[0].detail == std::vector<int>{1});
}

TEST_CASE("block decomposition examples") {
  BlockDecomposition d1 = decompose_blocks(parse_pattern("0 + 0\n+ 0 +\n+ - 0"));
  REQUIRE(d1.blocks.size() == 2);
  CHECK(d1.blocks[0] == Block{0, 2, BlockKind::TypeII});
  CHECK(d1.blocks[1] == Block{2, 1, BlockKind::TypeII});

  SignPattern a2 = parse_pattern("0 + 0 0\n+ 0 + 0\n0 + 0 +\n+ 0 0 0");
  BlockDecomposition d2 = decompose_blocks(a2);
  REQUIRE(d2.blocks.size() == 2);
  CHECK(d2.blocks[0] == Block{0, 3, BlockKind::TypeII});
  CHECK(d2.blocks[1] == Block{3, 1, BlockKind::TypeII});

  SignPattern a3 = parse_pattern("0 + 0 0 0\n- 0 + 0 0\n0 - 0 + 0\n0 0 + 0 +\n+ 0 0 0 0");
  BlockDecomposition d3 = decompose_blocks(a3);
  REQUIRE(d3.blocks.size() == 3);
  CHECK(d3.blocks[0] == Block{0, 3, BlockKind::TypeI});
  CHECK(d3.blocks[1] == Block{3, 1, BlockKind::TypeII});
  CHECK(d3.blocks[2] == Block{4, 1, BlockKind::TypeII});

  CHECK_THROWS_AS(decompose_blocks(parse_pattern("0 + -\n+ 0 +\n+ - 0")),
                  std::invalid_argument);
}

TEST_CASE("classify: zero-diagonal families") {
  Verdict v = classify_text("0 + 0\n0 0 +\n+ 0 0");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_10);

  // mixed-sign 2-cycles at one vertex refute
  Verdict w = classify_text("0 + 0 0\n+ 0 + 0\n0 - 0 +\n+ 0 0 0");
  CHECK(w.outcome == Outcome::NotRequires);
  REQUIRE(w.gate.has_value());
  CHECK(w.gate->rule == Gate::L3_3);
  CHECK(w.gate->detail == std::vector<int>{1});
}

TEST_CASE("classify: vertex on both-signed 2-cycles is refuted even when a corner template matches") {
  // a positive 2-cycle on edge {0,1} and a negative one on edge {1,2}
  Verdict v = classify_text("0 + 0\n+ 0 +\n+ - 0");
  CHECK(v.outcome == Outcome::NotRequires);
  REQUIRE(v.gate.has_value());
  CHECK(v.gate->rule == Gate::L3_3);
}

TEST_CASE("classify: one-signed off-diagonal with loops uses the derived rule") {
  Verdict v = classify_text("+ + 0 0 +\n+ - + 0 0\n0 + 0 + 0\n0 0 + 0 +\n+ 0 0 + +");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::L3_9);
  CHECK(v.derived_rule);
  CHECK(rule_string(v) == "L3_9|derived_rule");
}

TEST_CASE("classify: below cycle order and non-cycle graphs") {
  CHECK(classify_text("0 +\n- 0").outcome == Outcome::NotCycle);
  CHECK(classify_text("0 + 0\n+ 0 +\n0 + 0").outcome == Outcome::NotCycle);  // path
  CHECK(classify(SignPattern(4)).outcome == Outcome::NotCycle);
}

TEST_CASE("classify: corner normal form with a nonnegative loop on a positive 2-cycle") {
  // n=4, forward +, backward (+,0,-,0), diagonal (0,0,-,-)
  Verdict v = classify_text("0 + 0 0\n+ 0 + 0\n0 0 - +\n+ 0 - -");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_18);
}

TEST_CASE("classify: singular Type-I block decides the both-sign branch") {
  // n=5, forward +, backward (+,0,-,-,0); the Type-I block {2,3,4} has zero
  // diagonal and forces singularity; Type-II loops are negative
  Verdict v = classify_text("- + 0 0 0\n+ - + 0 0\n0 0 0 + 0\n0 0 - 0 +\n+ 0 0 - 0");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_18);

  // same shape but the Type-I block is sign-nonsingular: no condition fires
  Verdict w = classify_text("- + 0 0 0\n+ - + 0 0\n0 0 - + 0\n0 0 - 0 +\n+ 0 0 - 0");
  CHECK(w.outcome == Outcome::NotRequires);
  CHECK(w.failed_condition == "T3_18_cond2");
}

TEST_CASE("classify: isolated positive loop decides the both-sign branch") {
  // n=5, forward +, backward (+,0,-,0,0), diagonal (-,-,-,-,+): vertex 4
  // rides no 2-cycle and carries the only positive loop
  Verdict v = classify_text("- + 0 0 0\n+ - + 0 0\n0 0 - + 0\n0 0 - - +\n+ 0 0 0 +");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_18);
}

TEST_CASE("classify: negative 2-cycles with an SNS pattern") {
  // forward +, backward (-,-,0), diagonal (0,-,0)
  Verdict v = classify_text("0 + 0\n- - +\n+ - 0");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_15_c2);
}

TEST_CASE("classify: negative 2-cycles with a positive loop off the 2-cycle") {
  // forward +, backward (-,0,0), diagonal (-,-,+): vertex 2 is uncovered
  Verdict v = classify_text("- + 0\n- - +\n+ 0 +");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_15_c3);
  CHECK_FALSE(v.condition3_ambiguous);
}

TEST_CASE("classify: mixed uncovered loops flag the ambiguous loop condition") {
  // n=4, forward +, backward (-,0,0,0), diagonal (-,-,-,+): uncovered
  // vertices 2 and 3 carry loops of both signs
  Verdict v = classify_text("- + 0 0\n- - + 0\n0 0 - +\n+ 0 0 +");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_15_c3);
  CHECK(v.condition3_ambiguous);
}

TEST_CASE("classify: all conditions fail for a sign-ambiguous negative-2-cycle pattern") {
  // forward +, backward (-,-,0), diagonal (-,-,0): not SNS, no positive loop
  Verdict v = classify_text("- + 0\n- - +\n+ - 0");
  CHECK(v.outcome == Outcome::NotRequires);
  CHECK(v.failed_condition == "T3_15_conditions");
}

TEST_CASE("classify: all off-diagonal entries positive with any loops") {
  Verdict v = classify_text("+ + 0\n+ - +\n+ 0 0");
  CHECK(v.outcome == Outcome::Requires);
  CHECK(v.rule == Rule::T3_15_c1);
}

TEST_CASE("classify: zero diagonal, only negative 2-cycles, parity refinement") {
  // even order, all-negative 2-cycles admitting a perfect matching: the
  // all-ones member has a repeated zero eigenvalue
  Verdict even_bad = classify_text("0 + 0 0\n- 0 + 0\n0 - 0 +\n+ 0 - 0");
  CHECK(even_bad.outcome == Outcome::NotRequires);
  CHECK(even_bad.failed_condition == "T3_10_even_neg2cycles_not_sns");

  // even order with backward zeros in both parity classes: sign-nonsingular
  Verdict even_good = classify_text("0 + 0 -\n- 0 + 0\n0 0 0 +\n+ 0 0 0");
  CHECK(even_good.outcome == Outcome::Requires);
  CHECK(even_good.rule == Rule::T3_10);
  CHECK(is_sns(parse_pattern("0 + 0 -\n- 0 + 0\n0 0 0 +\n+ 0 0 0")).is_sns);

  // full even skew cycle: refuted
  Verdict skew = classify_text("0 + 0 -\n- 0 + 0\n0 - 0 +\n+ 0 - 0");
  CHECK(skew.outcome == Outcome::NotRequires);

  // odd order always passes
  Verdict odd = classify_text("0 + -\n- 0 +\n+ - 0");
  CHECK(odd.outcome == Outcome::Requires);
  CHECK(odd.rule == Rule::T3_10);
}

TEST_CASE("classify is invariant under the dihedral group and negation") {
  CensusConfig cfg;
  cfg.n = 4;
  const std::uint64_t space = census_space_size(cfg);
  for (std::uint64_t k = 0; k < 60; ++k) {
    SignPattern a = census_pattern(cfg, mix64(k * 7 + 1) % space);
    Verdict base = classify(a);
    for (const CycleLabeling& lab : cycle_form_labelings(a)) {
      for (bool neg : {false, true}) {
        SignPattern m = relabel(a, lab);
        if (neg) m = negate(m);
        Verdict v = classify(m);
        CHECK(v.outcome == base.outcome);
        if (base.outcome == Outcome::Requires) CHECK(v.rule == base.rule);
      }
    }
    Verdict t = classify(transpose(a));
    CHECK(t.outcome == base.outcome);
  }
}

TEST_CASE("requires verdicts never coexist with gate violations") {
  CensusConfig cfg;
  cfg.n = 3;
  for (std::uint64_t id = 0; id < 800; ++id) {
    SignPattern a = census_pattern(cfg, mix64(id + 17) % census_space_size(cfg));
    Verdict v = classify(a);
    if (v.outcome != Outcome::Requires) continue;
    SignPattern m = relabel(a, v.applied_labeling);
    if (v.negated) m = negate(m);
    CHECK(necessary_gates(m).empty());
  }
}

TEST_CASE("zero-diagonal dispatch agrees with the both-sign corner conditions") {
  // patterns with zero diagonal and 2-cycles of both signs must get the
  // same verdict from the corner-form analysis
  CensusConfig cfg;
  cfg.n = 4;
  cfg.zero_diag = true;
  const std::uint64_t space = census_space_size(cfg);
  int checked = 0;
  for (std::uint64_t id = 0; id < space && checked < 400; ++id) {
    SignPattern a = census_pattern(cfg, id);
    bool pos = false, neg = false;
    for (const TwoCycle& t : two_cycle_signs(a)) (t.sign == Sign::Plus ? pos : neg) = true;
    if (!pos || !neg) continue;
    Verdict v = classify(a);
    if (v.gate.has_value()) continue;  // refuted before any branch
    ++checked;
    // corner analysis: some labeling/negation in corner normal form must
    // exhibit a nonnegative loop on a positive 2-cycle, a singular Type-I
    // block, or an isolated nonnegative loop
    bool corner_requires = false;
    for (const CycleLabeling& lab : cycle_form_labelings(a)) {
      for (bool negf : {false, true}) {
        SignPattern m = relabel(a, lab);
        if (negf) m = negate(m);
        bool normal = backward_entry(m, m.order() - 1) == Sign::Zero;
        for (int e = 0; e < m.order() && normal; ++e)
          normal &= forward_entry(m, e) == Sign::Plus;
        if (!normal) continue;
        for (int e = 0; e < m.order() - 1 && !corner_requires; ++e)
          if (backward_entry(m, e) == Sign::Plus) corner_requires = true;  // zero loops admit +0
      }
    }
    CHECK(corner_requires == (v.outcome == Outcome::Requires));
  }
  CHECK(checked > 0);
}
