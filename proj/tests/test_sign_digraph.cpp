#include <doctest.h>

#include <algorithm>

#include "signpat/digraph.hpp"
#include "signpat/census.hpp"
#include "support/testutil.hpp"

using namespace signpat;

TEST_CASE("build_digraph mirrors the nonzero support") {
  SignPattern a = parse_pattern("0 +\n- 0");
  auto d = build_digraph(a);
  REQUIRE(d.arcs.size() == 2);
  CHECK(d.arcs[0] == SignedArc{0, 1, Sign::Plus});
  CHECK(d.arcs[1] == SignedArc{1, 0, Sign::Minus});

  CHECK(build_digraph(SignPattern(3)).arcs.empty());

  SignPattern loop(2);
  loop.set(0, 0, Sign::Plus);
  auto dl = build_digraph(loop);
  REQUIRE(dl.arcs.size() == 1);
  CHECK(dl.arcs[0] == SignedArc{0, 0, Sign::Plus});
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(parse_pattern("0 + 0\n0 0 +\n+ 0 0")));
  CHECK_FALSE(is_irreducible(parse_pattern("0 0 +\n+ 0 +\n+ 0 0")));  // vertex 2 unreachable
  SignPattern one(1);
  CHECK(is_irreducible(one));
  one.set(0, 0, Sign::Minus);
  CHECK(is_irreducible(one));
}

TEST_CASE("AP-irreducibility") {
  SignPattern k3 = parse_pattern("0 + +\n+ 0 +\n+ + 0");
  CHECK(is_ap_irreducible(k3));

  SignPattern no_plus_row = parse_pattern("0 - 0\n+ 0 +\n+ + 0");
  CHECK_FALSE(is_ap_irreducible(no_plus_row));

  // b_a loses the (1,2) and (2,3) arcs here, so it is reducible
  SignPattern a = parse_pattern("0 + 0\n+ 0 -\n0 + 0");
  SplitParts p = split_parts(a);
  CHECK(p.b_a.at(1, 2) == Sign::Zero);
  CHECK(p.b_a.at(2, 1) == Sign::Plus);
  CHECK_FALSE(is_ap_irreducible(a));
}

TEST_CASE("two-cycle signs") {
  auto t1 = two_cycle_signs(parse_pattern("0 +\n+ 0"));
  REQUIRE(t1.size() == 1);
  CHECK(t1[0] == TwoCycle{0, 1, Sign::Plus});

  auto t2 = two_cycle_signs(parse_pattern("0 +\n- 0"));
  REQUIRE(t2.size() == 1);
  CHECK(t2[0] == TwoCycle{0, 1, Sign::Minus});

  CHECK(two_cycle_signs(parse_pattern("0 +\n0 0")).empty());
}

TEST_CASE("two-cycle signs are negation invariant") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SignPattern a = testutil::random_pattern(5, 0.5, seed);
    CHECK(two_cycle_signs(a) == two_cycle_signs(negate(a)));
  }
}

TEST_CASE("monotone n-cycles of cycle-form patterns") {
  SignPattern fwd = parse_pattern("0 + 0\n0 0 +\n+ 0 0");
  auto m1 = monotone_n_cycles(fwd);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0] == MonotoneCycle{Orientation::Forward, Sign::Plus});

  SignPattern mixed = parse_pattern("0 + 0\n0 0 +\n- 0 0");
  CHECK(monotone_n_cycles(mixed).empty());

  SignPattern both = parse_pattern("0 + -\n- 0 +\n+ - 0");
  auto m2 = monotone_n_cycles(both);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0] == MonotoneCycle{Orientation::Forward, Sign::Plus});
  CHECK(m2[1] == MonotoneCycle{Orientation::Backward, Sign::Minus});

  CHECK_THROWS_AS(monotone_n_cycles(parse_pattern("0 + 0\n0 0 +\n0 0 0")),
                  std::invalid_argument);
}

TEST_CASE("monotone cycle implies a directed Hamiltonian cycle") {
  CensusConfig cfg;
  cfg.n = 4;
  for (std::uint64_t id = 0; id < 500; ++id) {
    SignPattern a = census_pattern(cfg, mix64(id) % census_space_size(cfg));
    if (!monotone_n_cycles(a).empty()) CHECK(testutil::has_directed_hamiltonian_cycle(a));
  }
}

TEST_CASE("cycle labelings for the triangle and a path") {
  SignPattern k3 = parse_pattern("0 + -\n+ 0 +\n- + 0");
  auto labs = cycle_form_labelings(k3);
  CHECK(labs.size() == 6);  // dihedral group of the 3-cycle
  for (const auto& lab : labs) CHECK(is_cycle_form(relabel(k3, lab)));

  SignPattern path = parse_pattern("0 + 0\n+ 0 +\n0 + 0");
  CHECK(cycle_form_labelings(path).empty());
}

TEST_CASE("cycle labelings for order four include the identity") {
  SignPattern a = parse_pattern("0 + 0 0\n- 0 + 0\n0 0 0 +\n+ 0 - 0");
  auto labs = cycle_form_labelings(a);
  CHECK(labs.size() == 8);
  bool has_identity = false;
  for (const auto& lab : labs) {
    CHECK(is_cycle_form(relabel(a, lab)));
    if (lab.perm == std::vector<int>{0, 1, 2, 3}) has_identity = true;
  }
  CHECK(has_identity);

  SignPattern two(2);
  two.set(0, 1, Sign::Plus);
  two.set(1, 0, Sign::Minus);
  CHECK(cycle_form_labelings(two).empty());  // below cycle order
}

TEST_CASE("signed path enumeration") {
  SignPattern cyc = parse_pattern("0 + 0\n0 0 +\n+ 0 0");
  auto p = signed_paths(cyc, 0, 2);
  REQUIRE(p.size() == 1);
  CHECK(p[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(p[0].sign == Sign::Plus);
  CHECK(p[0].length == 2);

  auto q = signed_paths(parse_pattern("0 +\n- 0"), 1, 0);
  REQUIRE(q.size() == 1);
  CHECK(q[0].sign == Sign::Minus);
  CHECK(q[0].length == 1);

  CHECK(signed_paths(parse_pattern("0 +\n0 0"), 1, 0).empty());

  CHECK_THROWS_AS(signed_paths(SignPattern(13), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(signed_paths(cyc, 1, 1), std::invalid_argument);
}

TEST_CASE("signed path signs equal the product of arc signs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    SignPattern a = testutil::random_pattern(5, 0.45, seed);
    for (int s = 0; s < 5; ++s)
      for (int r = 0; r < 5; ++r) {
        if (s == r) continue;
        for (const SignedPath& p : signed_paths(a, s, r)) {
          Sign prod = Sign::Plus;
          for (size_t k = 0; k + 1 < p.vertices.size(); ++k)
            prod = prod * a.at(p.vertices[k], p.vertices[k + 1]);
          CHECK(prod == p.sign);
          CHECK(p.length == static_cast<int>(p.vertices.size()) - 1);
          CHECK(p.vertices.front() == s);
          CHECK(p.vertices.back() == r);
        }
      }
  }
}
