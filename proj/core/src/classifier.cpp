#include "signpat/classifier.hpp"

#include <algorithm>
#include <cassert>

#include "signpat/determinantal.hpp"

namespace signpat {

std::string to_string(Gate g) {
  switch (g) {
    case Gate::L3_1_1: return "L3_1_1";
    case Gate::L3_1_2: return "L3_1_2";
    case Gate::L3_2: return "L3_2";
    case Gate::L3_3: return "L3_3";
    case Gate::L3_4: return "L3_4";
  }
  return "?";
}

std::string describe(const GateViolation& v) {
  std::string s = to_string(v.rule);
  const char* tag = (v.rule == Gate::L3_3 || v.rule == Gate::L3_4) ? "v" : "e";
  for (int d : v.detail) {
    s += (s.find('@') == std::string::npos) ? "@" : ";";
    s += tag;
    s += std::to_string(d + 1);
  }
  return s;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Requires: return "Requires";
    case Outcome::NotRequires: return "NotRequires";
    case Outcome::NotCycle: return "NotCycle";
  }
  return "?";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::None: return "";
    case Rule::L3_9: return "L3_9";
    case Rule::T3_10: return "T3_10";
    case Rule::T3_15_c1: return "T3_15_c1";
    case Rule::T3_15_c2: return "T3_15_c2";
    case Rule::T3_15_c3: return "T3_15_c3";
    case Rule::T3_18: return "T3_18";
  }
  return "?";
}

std::string rule_string(const Verdict& v) {
  std::string s = v.outcome == Outcome::Requires ? to_string(v.rule) : v.failed_condition;
  if (v.derived_rule) s += "|derived_rule";
  if (v.condition3_ambiguous) s += "|condition3_ambiguous";
  return s;
}

namespace {

// Sign of the directed 2-cycle on edge e, Zero if a direction is missing.
Sign edge_two_cycle_sign(const SignPattern& m, int e) {
  Sign f = forward_entry(m, e), g = backward_entry(m, e);
  return (f == Sign::Zero || g == Sign::Zero) ? Sign::Zero : f * g;
}

// Edges incident to vertex v are v-1 and v (mod n).
bool vertex_on_two_cycle_of_sign(const SignPattern& m, int v, Sign s) {
  const int n = m.order();
  return edge_two_cycle_sign(m, (v + n - 1) % n) == s || edge_two_cycle_sign(m, v) == s;
}

bool in_minus_zero(Sign s) { return s != Sign::Plus; }
bool in_plus_zero(Sign s) { return s != Sign::Minus; }

}  // namespace

std::vector<GateViolation> necessary_gates(const SignPattern& m) {
  if (!is_cycle_form(m)) throw std::invalid_argument("necessary_gates: not in cycle form");
  const int n = m.order();
  std::vector<GateViolation> out;

  int fwd_zero = -1, bwd_zero = -1;
  for (int e = 0; e < n; ++e) {
    if (fwd_zero < 0 && forward_entry(m, e) == Sign::Zero) fwd_zero = e;
    if (bwd_zero < 0 && backward_entry(m, e) == Sign::Zero) bwd_zero = e;
  }
  if (fwd_zero >= 0 && bwd_zero >= 0) out.push_back({Gate::L3_1_1, {fwd_zero, bwd_zero}});

  // chain breaks of B_A: forward break needs a_{i,i+1} in -0 and a_{i+1,i}
  // in +0; backward break mirrors it.
  int bfwd = -1, bbwd = -1;
  for (int e = 0; e < n; ++e) {
    if (bfwd < 0 && in_minus_zero(forward_entry(m, e)) && in_plus_zero(backward_entry(m, e)))
      bfwd = e;
    if (bbwd < 0 && in_minus_zero(backward_entry(m, e)) && in_plus_zero(forward_entry(m, e)))
      bbwd = e;
  }
  if (bfwd >= 0 && bbwd >= 0) out.push_back({Gate::L3_1_2, {bfwd, bbwd}});

  auto mono = monotone_n_cycles(m);
  if (mono.empty()) out.push_back({Gate::L3_2, {}});

  if (!mono.empty()) {
    for (int v = 0; v < n; ++v) {
      if (vertex_on_two_cycle_of_sign(m, v, Sign::Plus) &&
          vertex_on_two_cycle_of_sign(m, v, Sign::Minus)) {
        out.push_back({Gate::L3_3, {v}});
        break;
      }
    }
    bool plus_mono = false, minus_mono = false;
    for (const auto& c : mono) (c.sign == Sign::Plus ? plus_mono : minus_mono) = true;
    int bad = -1;
    for (int v = 0; v < n && bad < 0; ++v) {
      if (!vertex_on_two_cycle_of_sign(m, v, Sign::Minus)) continue;
      // a loop agreeing with the sign of some one-signed Hamiltonian chain
      // at a negatively 2-cycled vertex refutes the pattern (on A or -A)
      if (plus_mono && m.at(v, v) == Sign::Plus) bad = v;
      if (minus_mono && m.at(v, v) == Sign::Minus) bad = v;
    }
    if (bad >= 0) out.push_back({Gate::L3_4, {bad}});
  }
  return out;
}

namespace {

bool is_corner_normal_form(const SignPattern& m) {
  if (!is_cycle_form(m)) return false;
  const int n = m.order();
  for (int e = 0; e < n; ++e)
    if (forward_entry(m, e) != Sign::Plus) return false;
  return backward_entry(m, n - 1) == Sign::Zero;
}

}  // namespace

BlockDecomposition decompose_blocks(const SignPattern& m) {
  if (!is_corner_normal_form(m))
    throw std::invalid_argument(
        "decompose_blocks: expected corner-zero, forward-positive normal form");
  const int n = m.order();
  BlockDecomposition d;
  int start = 0;
  Sign run = Sign::Zero;  // Zero = fresh block
  for (int e = 0; e < n - 1; ++e) {
    Sign w = backward_entry(m, e);
    bool extend = (w != Sign::Zero) && (run == Sign::Zero || w == run);
    if (extend) {
      run = w;
      continue;
    }
    int size = e - start + 1;
    d.blocks.push_back({start, size,
                        size == 1 ? BlockKind::TypeII
                                  : (run == Sign::Minus ? BlockKind::TypeI : BlockKind::TypeII)});
    start = e + 1;
    run = Sign::Zero;
  }
  int size = n - start;
  d.blocks.push_back({start, size,
                      size == 1 ? BlockKind::TypeII
                                : (run == Sign::Minus ? BlockKind::TypeI : BlockKind::TypeII)});
  return d;
}

namespace {

struct Candidate {
  CycleLabeling lab;
  bool negated;
  SignPattern m;
};

bool candidate_less(const Candidate& x, const Candidate& y) {
  if (x.lab.perm != y.lab.perm) return x.lab.perm < y.lab.perm;
  if (x.lab.reflected != y.lab.reflected) return x.lab.reflected < y.lab.reflected;
  return x.negated < y.negated;
}

bool forward_all_plus(const SignPattern& m) {
  for (int e = 0; e < m.order(); ++e)
    if (forward_entry(m, e) != Sign::Plus) return false;
  return true;
}

bool backward_all_minus(const SignPattern& m) {
  for (int e = 0; e < m.order(); ++e)
    if (backward_entry(m, e) != Sign::Minus) return false;
  return true;
}

bool offdiag_all_plus(const SignPattern& m) {
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j)
      if (i != j && m.at(i, j) == Sign::Minus) return false;
  return true;
}

Verdict make_requires(Rule rule, const Candidate& c) {
  Verdict v;
  v.outcome = Outcome::Requires;
  v.rule = rule;
  v.applied_labeling = c.lab;
  v.negated = c.negated;
  return v;
}

Verdict make_not_requires(std::string reason, const Candidate& c) {
  Verdict v;
  v.outcome = Outcome::NotRequires;
  v.failed_condition = std::move(reason);
  v.applied_labeling = c.lab;
  v.negated = c.negated;
  return v;
}

// Both-sign branch, condition 2 on a corner-zero forward-positive form:
// a positively 2-cycled vertex with a nonnegative loop, a maximal Type-I
// block that forces singularity, or an isolated vertex (no 2-cycle) whose
// loop is + (such a loop shifts onto the singular 1x1 case) or 0.
bool corner_condition_two(const SignPattern& m) {
  const int n = m.order();
  for (int e = 0; e < n - 1; ++e) {
    if (backward_entry(m, e) != Sign::Plus) continue;
    if (in_plus_zero(m.at(e, e)) || in_plus_zero(m.at(e + 1, e + 1))) return true;
  }
  BlockDecomposition d = decompose_blocks(m);
  for (const Block& b : d.blocks) {
    if (b.size == 1) {
      if (in_plus_zero(m.at(b.begin, b.begin))) return true;  // loop + or 0
      continue;
    }
    if (b.kind != BlockKind::TypeI) continue;
    std::vector<int> idx(b.size);
    for (int k = 0; k < b.size; ++k) idx[k] = b.begin + k;
    SignPattern sub = principal_submatrix(m, idx);
    if (matches_template(sub, type_i_template(b.size)) &&
        requires_singularity(sub, std::max(10, b.size)))
      return true;
  }
  return false;
}

}  // namespace

Verdict classify(const SignPattern& a) {
  const int n = a.order();
  auto labelings = cycle_form_labelings(a);
  if (labelings.empty()) {
    Verdict v;
    v.outcome = Outcome::NotCycle;
    return v;
  }

  std::vector<Candidate> clean;
  std::optional<Candidate> first_violating;
  std::optional<GateViolation> first_violation;
  for (const CycleLabeling& lab : labelings) {
    for (bool neg : {false, true}) {
      SignPattern m = relabel(a, lab);
      if (neg) m = negate(m);
      auto viols = necessary_gates(m);
      Candidate c{lab, neg, std::move(m)};
      if (viols.empty()) {
        clean.push_back(std::move(c));
      } else if (!first_violation) {
        first_violation = viols.front();
        first_violating = std::move(c);
      }
    }
  }
  if (clean.empty()) {
    Verdict v = make_not_requires("gate", *first_violating);
    v.gate = *first_violation;
    v.failed_condition.clear();
    return v;
  }
  std::sort(clean.begin(), clean.end(), candidate_less);

  bool loops = false;
  for (int i = 0; i < n; ++i) loops |= a.at(i, i) != Sign::Zero;
  bool pos2 = false, neg2 = false;
  for (const TwoCycle& t : two_cycle_signs(a)) (t.sign == Sign::Plus ? pos2 : neg2) = true;

  auto first_forward_plus = [&]() -> const Candidate& {
    for (const Candidate& c : clean)
      if (forward_all_plus(c.m)) return c;
    return clean.front();
  };

  if (!loops) {
    // zero diagonal: a one-signed Hamiltonian chain exists and no vertex
    // meets 2-cycles of both signs (the gates guarantee both). Requires
    // holds unless the 2-cycles are all negative and of even order with a
    // sign-ambiguous determinant.
    if (!neg2 || pos2) return make_requires(Rule::T3_10, first_forward_plus());
    if (n % 2 == 1) return make_requires(Rule::T3_10, first_forward_plus());
    if (is_sns(a, std::max(10, n)).is_sns) return make_requires(Rule::T3_10, first_forward_plus());
    return make_not_requires("T3_10_even_neg2cycles_not_sns", first_forward_plus());
  }

  if (pos2 && neg2) {
    const Candidate* cond1_seen = nullptr;
    for (const Candidate& c : clean) {
      if (!is_corner_normal_form(c.m)) continue;
      if (!cond1_seen) cond1_seen = &c;
      if (corner_condition_two(c.m)) return make_requires(Rule::T3_18, c);
    }
    if (cond1_seen) return make_not_requires("T3_18_cond2", *cond1_seen);
    return make_not_requires("T3_18_cond1", clean.front());
  }

  if (!pos2) {
    // loops present, every 2-cycle negative (or none at all).
    bool sns_known = false, sns = false;
    auto pattern_sns = [&]() {
      if (!sns_known) {
        sns = is_sns(a, std::max(10, n)).is_sns;
        sns_known = true;
      }
      return sns;
    };

    const Candidate* hit = nullptr;
    Rule hit_rule = Rule::None;
    bool impl = false, literal = false, strong = false;
    for (const Candidate& c : clean) {
      if (offdiag_all_plus(c.m)) {
        if (!hit) { hit = &c; hit_rule = Rule::T3_15_c1; }
        impl = literal = strong = true;
        break;
      }
    }
    if (!impl) {
      for (const Candidate& c : clean) {
        if (!forward_all_plus(c.m) || backward_all_minus(c.m)) continue;
        bool diag_minus0 = true;
        for (int v = 0; v < n; ++v) diag_minus0 &= in_minus_zero(c.m.at(v, v));
        if (diag_minus0 && pattern_sns()) {
          if (!hit) { hit = &c; hit_rule = Rule::T3_15_c2; }
          impl = literal = strong = true;
          break;
        }
      }
    }
    for (const Candidate& c : clean) {
      if (!forward_all_plus(c.m) || backward_all_minus(c.m)) continue;
      bool covered_ok = true, uncovered_plus = false, uncovered_plus0 = true;
      for (int v = 0; v < n; ++v) {
        bool covered = vertex_on_two_cycle_of_sign(c.m, v, Sign::Minus);
        Sign d = c.m.at(v, v);
        if (covered) covered_ok &= in_minus_zero(d);
        else {
          uncovered_plus |= d == Sign::Plus;
          uncovered_plus0 &= in_plus_zero(d);
        }
      }
      bool c3_impl = covered_ok && uncovered_plus;
      bool c3_lit = uncovered_plus0;
      bool c3_strong = c3_lit && covered_ok && uncovered_plus;
      if (c3_impl && !impl && !hit) { hit = &c; hit_rule = Rule::T3_15_c3; }
      impl |= c3_impl;
      literal |= c3_lit;
      strong |= c3_strong;
    }
    bool ambiguous = (literal != impl) || (strong != impl);
    Verdict v = impl ? make_requires(hit_rule, *hit)
                     : make_not_requires("T3_15_conditions", first_forward_plus());
    v.condition3_ambiguous = ambiguous;
    return v;
  }

  // positive 2-cycles with loops: assembled from the one-signed off-diagonal
  // sufficiency and the gates; flagged as a derived rule.
  for (const Candidate& c : clean) {
    if (offdiag_all_plus(c.m)) {
      Verdict v = make_requires(Rule::L3_9, c);
      v.derived_rule = true;
      return v;
    }
  }
  Verdict v = make_not_requires("L3_9_offdiag_mixed", clean.front());
  v.derived_rule = true;
  return v;
}

}  // namespace signpat
