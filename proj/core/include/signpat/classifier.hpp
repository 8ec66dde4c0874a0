#pragma once

/**
 * @file classifier.hpp
 * Decision procedure for "does this cycle-graph sign pattern require
 * algebraic positivity?". A pattern first has to survive the necessary
 * gates (irreducibility of A and of B_A, existence of a one-signed
 * Hamiltonian chain, no vertex on 2-cycles of both signs, no loop of the
 * forbidden sign on a negative 2-cycle); the survivors are dispatched by
 * their 2-cycle sign census into four exhaustive branches. Verdicts cite
 * the rule that fired and the labeling/negation under which its hypotheses
 * were verified.
 */

#include <optional>
#include <string>
#include <vector>

#include "signpat/digraph.hpp"
#include "signpat/pattern.hpp"

namespace signpat {

enum class Gate { L3_1_1, L3_1_2, L3_2, L3_3, L3_4 };
std::string to_string(Gate g);

struct GateViolation {
  Gate rule;
  std::vector<int> detail;  // 0-based edge/vertex indices, gate-specific
  bool operator==(const GateViolation&) const = default;
};
/// "L3_3@v2"-style tag with 1-based indices, used in reports.
std::string describe(const GateViolation& v);

/// All violated gates of a cycle-form pattern, in Gate enumeration order.
/// The result is invariant under relabeling and negation of the input.
std::vector<GateViolation> necessary_gates(const SignPattern& form1);

enum class BlockKind { TypeI, TypeII };

struct Block {
  int begin;  // first vertex (0-based, contiguous along the cycle order)
  int size;
  BlockKind kind;  // size-1 blocks are recorded as TypeII; the kind is unused
  bool operator==(const Block&) const = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
};

/// Maximal-run partition of the backward word of a pattern in corner-zero,
/// forward-positive normal form: runs of + backward entries become Type-II
/// blocks, runs of - become Type-I, zeros and sign changes cut.
BlockDecomposition decompose_blocks(const SignPattern& normal_form);

enum class Outcome { Requires, NotRequires, NotCycle };
enum class Rule { None, L3_9, T3_10, T3_15_c1, T3_15_c2, T3_15_c3, T3_18 };
std::string to_string(Outcome o);
std::string to_string(Rule r);

struct Verdict {
  Outcome outcome = Outcome::NotCycle;
  Rule rule = Rule::None;              // set when outcome == Requires
  std::optional<GateViolation> gate;   // gate-based refusal
  std::string failed_condition;        // named failed rule condition otherwise
  CycleLabeling applied_labeling;      // labeling the decision was made under
  bool negated = false;
  bool derived_rule = false;           // positive-2-cycles-with-loops branch
  bool condition3_ambiguous = false;   // readings of the loop condition differ

  bool requires_ap() const { return outcome == Outcome::Requires; }
};

/// Full classification. NotCycle when the off-diagonal support is not an
/// n-cycle (n >= 3); otherwise every input receives a verdict.
Verdict classify(const SignPattern& a);

/// Rule column for reports: the rule name (Requires), the failed condition
/// (NotRequires), with any flags appended after '|'.
std::string rule_string(const Verdict& v);

}  // namespace signpat
