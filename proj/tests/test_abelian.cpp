#include <catch2/catch_amalgamated.hpp>

#include "vb0/abelian.hpp"
#include "vb0/corpus.hpp"
#include "vb0/group.hpp"

using namespace vb0;

TEST_CASE("canonical invariant factors") {
  CHECK(AbelianStructure::canonical({}).str() == "1");
  CHECK(AbelianStructure::canonical({1, 1}).str() == "1");
  CHECK(AbelianStructure::canonical({2, 2}).str() == "C2 x C2");
  CHECK(AbelianStructure::canonical({2, 3}).str() == "C6");
  CHECK(AbelianStructure::canonical({4, 6}).str() == "C2 x C12");
  CHECK(AbelianStructure::canonical({2, 4, 3, 9}).str() == "C6 x C36");
}

TEST_CASE("merge is the direct product on invariant factors") {
  AbelianStructure a = AbelianStructure::canonical({4});
  AbelianStructure b = AbelianStructure::canonical({6});
  CHECK(AbelianStructure::merge(a, b).str() == "C2 x C12");
  CHECK(AbelianStructure::merge(a, AbelianStructure{}).str() == "C4");
}

TEST_CASE("orders multiply out") {
  AbelianStructure s = AbelianStructure::canonical({2, 4, 3});
  CHECK(s.order() == 24);
  CHECK(AbelianStructure{}.order() == 1);
  CHECK(AbelianStructure{}.trivial());
}

TEST_CASE("abelian invariants of built groups") {
  CHECK(abelian_invariants(cyclic_group(12)).str() == "C12");
  CHECK(abelian_invariants(elementary_abelian(2, 3)).str() == "C2 x C2 x C2");
  CHECK(abelian_invariants(direct_product(cyclic_group(4), cyclic_group(6))).str() ==
        "C2 x C12");
  CHECK_THROWS_AS(abelian_invariants(dihedral_group(8)), Error);
}

TEST_CASE("abelianization landmarks") {
  CHECK(abelianization(dihedral_group(8)).str() == "C2 x C2");
  CHECK(abelianization(quaternion_group(8)).str() == "C2 x C2");
  CHECK(abelianization(symmetric_group(4)).str() == "C2");
  CHECK(abelianization(alternating_group(4)).str() == "C3");
  CHECK(abelianization(dicyclic_group(3)).str() == "C4");
  CHECK(abelianization(alternating_group(5)).str() == "1");
}

TEST_CASE("abelianization of products merges") {
  for (int a : {2, 4, 6})
    for (int b : {3, 8}) {
      Group p = direct_product(cyclic_group(a), cyclic_group(b));
      CHECK(abelian_invariants(p) ==
            AbelianStructure::merge(abelian_invariants(cyclic_group(a)),
                                    abelian_invariants(cyclic_group(b))));
    }
}

TEST_CASE("structure from integer relation matrices") {
  // Z^2 / <(2,0),(0,4)> = C2 x C4
  CHECK(structure_from_relations({{2, 0}, {0, 4}}, 2).str() == "C2 x C4");
  // row operations do not change the cokernel
  CHECK(structure_from_relations({{2, 1}, {0, 2}}, 2).str() == "C4");
  // unimodular relations kill everything
  CHECK(structure_from_relations({{1, 0}, {0, 1}}, 2).str() == "1");
  // missing relations leave free rank, which is rejected
  CHECK_THROWS_AS(structure_from_relations({{2, 0}}, 2), Error);
}

TEST_CASE("smith normal form diagonal divisibility") {
  auto d = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  REQUIRE(d.size() == 3);
  for (size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
  // classical example: diag 2, 2, 156
  CHECK(d[0] == 2);
  CHECK(d[1] == 2);
  CHECK(d[2] == 156);
}
