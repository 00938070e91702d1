#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "vb0/cohomology.hpp"
#include "vb0/corpus.hpp"
#include "vb0/exterior.hpp"

using namespace vb0;

TEST_CASE("cohomological multipliers match the classical values") {
  CHECK(multiplier_from_cohomology(dihedral_group(8)).str() == "C2");
  CHECK(multiplier_from_cohomology(quaternion_group(8)).trivial());
  CHECK(multiplier_from_cohomology(symmetric_group(3)).trivial());
  CHECK(multiplier_from_cohomology(alternating_group(4)).str() == "C2");
  CHECK(multiplier_from_cohomology(elementary_abelian(2, 2)).str() == "C2");
  CHECK(multiplier_from_cohomology(elementary_abelian(2, 3)).str() == "C2 x C2 x C2");
  CHECK(multiplier_from_cohomology(cyclic_group(16)).trivial());
}

TEST_CASE("gcd law for products of two cyclic groups, cohomological route") {
  auto m = [](int a, int b) {
    return multiplier_from_cohomology(direct_product(cyclic_group(a), cyclic_group(b)));
  };
  CHECK(m(3, 5).trivial());
  CHECK(m(2, 4).str() == "C2");
  CHECK(m(3, 9).str() == "C3");
  CHECK(m(4, 4).str() == "C4");
}

TEST_CASE("both routes compute the same multiplier") {
  for (const Group& g :
       {dihedral_group(8), dihedral_group(12), quaternion_group(8), symmetric_group(3),
        symmetric_group(4), cyclic_group(12), dicyclic_group(3), modular16(),
        elementary_abelian(2, 3), alternating_group(4)}) {
    AbelianStructure viaCocycles = multiplier_from_cohomology(g);
    AbelianStructure viaWedge = schur_multiplier(g);
    INFO(g.label());
    CHECK(viaCocycles == viaWedge);
  }
}

TEST_CASE("exhaustive cochain counting confirms the linear algebra") {
  std::vector<Group> tiny;
  for (int n = 1; n <= 4; ++n) tiny.push_back(cyclic_group(n));
  tiny.push_back(elementary_abelian(2, 2));
  for (const Group& g : tiny)
    for (long long N : {2LL, 3LL, 4LL}) {
      CocycleSpace cs = cocycle_space(g, N);
      INFO(g.label() << " mod " << N);
      CHECK(cs.h2_order == exhaustive_h2_oracle(g, N));
    }
}

TEST_CASE("klein four group has eight classes mod 2") {
  CHECK(cocycle_space(elementary_abelian(2, 2), 2).h2_order == 8);
  CHECK(exhaustive_h2_oracle(elementary_abelian(2, 2), 2) == 8);
}

TEST_CASE("universal coefficients bookkeeping at the group order") {
  for (const Group& g : {dihedral_group(8), quaternion_group(8), symmetric_group(3),
                         cyclic_group(12), elementary_abelian(2, 2), alternating_group(4)}) {
    CocycleSpace cs = cocycle_space(g);
    long long m_order = multiplier_from_cohomology(g).order();
    INFO(g.label());
    CHECK(cs.h2_order == cs.hom_order * m_order);
  }
}

TEST_CASE("universal coefficients bookkeeping at a chosen modulus") {
  for (const Group& g : {dihedral_group(8), symmetric_group(3), cyclic_group(12)})
    for (long long N : {2LL, 3LL, 4LL, 6LL}) {
      CocycleSpace full = cocycle_space(g);
      CocycleSpace cs = cocycle_space(g, N);
      long long m_part = 1;
      for (long long d : multiplier_from_cohomology(g).factors) m_part *= std::gcd(d, N);
      INFO(g.label() << " mod " << N);
      CHECK(cs.h2_order == cs.hom_order * m_part);
      CHECK(full.G == &g);
    }
}

TEST_CASE("b0 restriction families agree with each other and with the wedge route") {
  for (const Group& g : {dihedral_group(8), quaternion_group(8), symmetric_group(3),
                         alternating_group(4), dihedral_group(16)}) {
    B0Result bi = b0_cohomological(g, B0Mode::Bicyclic);
    B0Result all = b0_cohomological(g, B0Mode::AllAbelian);
    INFO(g.label());
    CHECK(bi.B0_structure == all.B0_structure);
    CHECK(bi.M_structure == all.M_structure);
    CHECK(bi.M_structure == multiplier_from_cohomology(g));
    CHECK(bi.B0_structure.trivial());

    MultiplierResult wedge = bogomolov_tilde(g);
    CHECK(bi.M_structure == wedge.multiplier);
    CHECK(bi.B0_structure == wedge.b0);
  }
}

TEST_CASE("cohomology order cap") {
  Group big = direct_product(cyclic_group(2), symmetric_group(4));
  CHECK_THROWS_AS(cocycle_space(big), Error);
  CHECK_THROWS_AS(multiplier_from_cohomology(big), Error);
  Group c6c6 = direct_product(cyclic_group(6), cyclic_group(6));
  CHECK(multiplier_from_cohomology(c6c6, 36).str() == "C6");
}

TEST_CASE("exhaustive oracle refuses oversized state spaces") {
  CHECK_THROWS_AS(exhaustive_h2_oracle(dihedral_group(8), 4), Error);
  CHECK_THROWS_AS(exhaustive_h2_oracle(cyclic_group(2), 0), Error);
}
