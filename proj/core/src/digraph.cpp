#include "signpat/digraph.hpp"

#include <algorithm>
#include <numeric>

namespace signpat {

SignedDigraph build_digraph(const SignPattern& a) {
  SignedDigraph d;
  d.n = a.order();
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (a.at(i, j) != Sign::Zero) d.arcs.push_back({i, j, a.at(i, j)});
  return d;
}

namespace {

// Reachability over nonzero off-diagonal support from a single source.
std::vector<bool> reachable_from(const SignPattern& a, int src) {
  const int n = a.order();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{src};
  seen[src] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (w != v && !seen[w] && a.at(v, w) != Sign::Zero) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_irreducible(const SignPattern& a) {
  const int n = a.order();
  if (n == 1) return true;
  for (int v = 0; v < n; ++v) {
    auto seen = reachable_from(a, v);
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  }
  return true;
}

bool is_ap_irreducible(const SignPattern& a) {
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    bool row_plus = false, col_plus = false;
    for (int j = 0; j < n; ++j) {
      row_plus |= a.at(i, j) == Sign::Plus;
      col_plus |= a.at(j, i) == Sign::Plus;
    }
    if (!row_plus || !col_plus) return false;
  }
  if (!is_irreducible(a)) return false;
  return is_irreducible(split_parts(a).b_a);
}

std::vector<TwoCycle> two_cycle_signs(const SignPattern& a) {
  std::vector<TwoCycle> out;
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.at(i, j) != Sign::Zero && a.at(j, i) != Sign::Zero)
        out.push_back({i, j, a.at(i, j) * a.at(j, i)});
  return out;
}

Sign forward_entry(const SignPattern& a, int edge) {
  const int n = a.order();
  return a.at(edge, (edge + 1) % n);
}

Sign backward_entry(const SignPattern& a, int edge) {
  const int n = a.order();
  return a.at((edge + 1) % n, edge);
}

bool is_cycle_form(const SignPattern& a) {
  const int n = a.order();
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == Sign::Zero) continue;
      if (i == j) continue;
      int d = (j - i + n) % n;
      if (d != 1 && d != n - 1) return false;
    }
  }
  for (int e = 0; e < n; ++e)
    if (forward_entry(a, e) == Sign::Zero && backward_entry(a, e) == Sign::Zero) return false;
  return true;
}

std::vector<MonotoneCycle> monotone_n_cycles(const SignPattern& a) {
  if (!is_cycle_form(a)) throw std::invalid_argument("monotone_n_cycles: not in cycle form");
  const int n = a.order();
  std::vector<MonotoneCycle> out;
  for (Orientation o : {Orientation::Forward, Orientation::Backward}) {
    Sign common = Sign::Zero;
    bool ok = true;
    for (int e = 0; e < n && ok; ++e) {
      Sign s = o == Orientation::Forward ? forward_entry(a, e) : backward_entry(a, e);
      if (s == Sign::Zero) ok = false;
      else if (common == Sign::Zero) common = s;
      else if (s != common) ok = false;
    }
    if (ok) out.push_back({o, common});
  }
  return out;
}

SignPattern relabel(const SignPattern& a, const CycleLabeling& lab) {
  return permute_similar(a, lab.perm);
}

std::vector<CycleLabeling> cycle_form_labelings(const SignPattern& a) {
  const int n = a.order();
  std::vector<CycleLabeling> out;
  if (n < 3) return out;

  // Undirected off-diagonal support must be a single n-cycle: every vertex
  // of degree exactly two, connected.
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.at(i, j) != Sign::Zero || a.at(j, i) != Sign::Zero) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
      }
  for (int v = 0; v < n; ++v)
    if (nbr[v].size() != 2) return out;

  for (int start = 0; start < n; ++start) {
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> order{start};
      int prev = -1, cur = start;
      int next = nbr[start][dir];
      while (static_cast<int>(order.size()) < n) {
        order.push_back(next);
        int after = (nbr[next][0] == cur) ? nbr[next][1] : nbr[next][0];
        prev = cur;
        cur = next;
        next = after;
        if (next == start && static_cast<int>(order.size()) < n) break;  // short cycle
      }
      (void)prev;
      if (static_cast<int>(order.size()) != n) return {};  // disconnected or short cycle
      if (next != start) return {};                        // walk did not close
      CycleLabeling lab{order, dir == 1};
      if (!is_cycle_form(relabel(a, lab))) return {};
      out.push_back(std::move(lab));
    }
  }
  std::sort(out.begin(), out.end(), [](const CycleLabeling& x, const CycleLabeling& y) {
    return x.perm != y.perm ? x.perm < y.perm : x.reflected < y.reflected;
  });
  return out;
}

namespace {

void path_dfs(const SignPattern& a, int cur, int target, std::vector<int>& path,
              std::vector<bool>& used, Sign sign, std::vector<SignedPath>& out) {
  if (cur == target) {
    out.push_back({path, sign, static_cast<int>(path.size()) - 1});
    return;
  }
  for (int w = 0; w < a.order(); ++w) {
    if (w == cur || used[w]) continue;
    Sign s = a.at(cur, w);
    if (s == Sign::Zero) continue;
    used[w] = true;
    path.push_back(w);
    path_dfs(a, w, target, path, used, sign * s, out);
    path.pop_back();
    used[w] = false;
  }
}

}  // namespace

std::vector<SignedPath> signed_paths(const SignPattern& a, int s, int r, int order_bound) {
  if (s == r) throw std::invalid_argument("signed_paths: s and r must differ");
  if (a.order() > order_bound) throw std::invalid_argument("signed_paths: order bound exceeded");
  std::vector<SignedPath> out;
  std::vector<int> path{s};
  std::vector<bool> used(a.order(), false);
  used[s] = true;
  path_dfs(a, s, r, path, used, Sign::Plus, out);
  // DFS explores neighbors in increasing vertex order, so the output is
  // already lexicographic by vertex sequence.
  return out;
}

}  // namespace signpat
