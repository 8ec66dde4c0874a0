#pragma once

/**
 * @file digraph.hpp
 * The signed digraph D(A) and undirected graph G(A) of a sign pattern:
 * irreducibility tests, 2-cycle signs, monotone Hamiltonian chains of
 * cycle-form patterns, the dihedral relabelings that put a cycle pattern
 * into cycle normal form, and simple-path enumeration with signs.
 *
 * Cycle normal form ("form 1"): nonzeros confined to the diagonal, the
 * super/sub-diagonal and the two corners (0,n-1),(n-1,0), with every cycle
 * edge present in at least one direction. Edge k joins vertices k and
 * (k+1) mod n; its forward entry is a(k, k+1 mod n), its backward entry
 * a(k+1 mod n, k).
 */

#include <vector>

#include "signpat/pattern.hpp"

namespace signpat {

struct SignedArc {
  int from;
  int to;
  Sign sign;
  bool operator==(const SignedArc&) const = default;
};

struct SignedDigraph {
  int n = 0;
  std::vector<SignedArc> arcs;  // one arc per nonzero entry, row-major order
};

SignedDigraph build_digraph(const SignPattern& a);

/// Strong connectivity of D(A). Loops are irrelevant; n = 1 is irreducible.
bool is_irreducible(const SignPattern& a);

/// Every row and column holds a +, and both A and B_A are irreducible.
bool is_ap_irreducible(const SignPattern& a);

struct TwoCycle {
  int i;  // i < j
  int j;
  Sign sign;  // sign(a_ij * a_ji)
  bool operator==(const TwoCycle&) const = default;
};

/// One record per unordered pair i < j with both directions nonzero.
/// Loops are excluded.
std::vector<TwoCycle> two_cycle_signs(const SignPattern& a);

// ---------------------------------------------------------------------------
// Cycle-form machinery

Sign forward_entry(const SignPattern& a, int edge);   // a(k, k+1 mod n)
Sign backward_entry(const SignPattern& a, int edge);  // a(k+1 mod n, k)

/// Does the nonzero support fit cycle normal form (n >= 3)?
bool is_cycle_form(const SignPattern& a);

enum class Orientation { Forward, Backward };

struct MonotoneCycle {
  Orientation orient;
  Sign sign;  // Plus or Minus
  bool operator==(const MonotoneCycle&) const = default;
};

/// The directed Hamiltonian cycles of a cycle-form pattern: the full forward
/// chain and/or the full backward chain when each is nonzero of one sign.
/// Throws std::invalid_argument if the pattern is not in cycle form.
std::vector<MonotoneCycle> monotone_n_cycles(const SignPattern& a);

/// A vertex relabeling that places a pattern into cycle normal form.
/// perm[new_index] = original vertex; relabel() applies it.
struct CycleLabeling {
  std::vector<int> perm;
  bool reflected = false;
  bool operator==(const CycleLabeling&) const = default;
};

SignPattern relabel(const SignPattern& a, const CycleLabeling& lab);

/// Empty iff G(A) is not an n-cycle; otherwise exactly the 2n dihedral
/// labelings, each verified to put A into cycle normal form. Sorted by perm.
std::vector<CycleLabeling> cycle_form_labelings(const SignPattern& a);

struct SignedPath {
  std::vector<int> vertices;  // distinct, consecutive pairs are arcs
  Sign sign;                  // product of arc signs
  int length;                 // arc count == vertices.size() - 1
  bool operator==(const SignedPath&) const = default;
};

/// All simple directed paths s -> r (s != r), lexicographic by vertex list.
/// Loops never participate. Throws if a.order() exceeds the bound.
std::vector<SignedPath> signed_paths(const SignPattern& a, int s, int r,
                                     int order_bound = 12);

}  // namespace signpat
