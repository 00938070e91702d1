#include <catch2/catch_amalgamated.hpp>

#include "vb0/corpus.hpp"
#include "vb0/group.hpp"

using namespace vb0;

TEST_CASE("table validation rejects broken tables") {
  // swap one entry of C3's table to break associativity
  std::vector<std::vector<int>> rows = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  rows[1][1] = 1;
  CHECK_THROWS_AS(Group::from_table(rows, "bad"), Error);
}

TEST_CASE("identity and inverses") {
  Group g = dihedral_group(8);
  CHECK(g.id() == 0);
  for (Elt a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, g.inv(a)) == 0);
    CHECK(g.mul(g.inv(a), a) == 0);
  }
}

TEST_CASE("element orders divide the group order") {
  for (const Group& g : {dihedral_group(12), dicyclic_group(3), symmetric_group(4)})
    for (Elt a = 0; a < g.order(); ++a) CHECK(g.order() % g.elt_order(a) == 0);
}

TEST_CASE("center of small groups") {
  CHECK(center(dihedral_group(8)).elems == std::vector<Elt>{0, 2});
  CHECK(center(quaternion_group(8)).elems == std::vector<Elt>{0, 2});
  CHECK(center(symmetric_group(3)).order() == 1);
  CHECK(center(cyclic_group(12)).order() == 12);
}

TEST_CASE("derived subgroup of dihedral groups is the rotation square") {
  // order 2m, rotations are indices 0..m-1
  for (int m : {3, 4, 5, 6, 8}) {
    Group g = dihedral_group(2 * m);
    Subgroup d = derived_subgroup(g);
    CHECK((int)d.elems.size() == (m % 2 ? m : m / 2));
    for (Elt e : d.elems) CHECK(e < m);
  }
}

TEST_CASE("derived series landmarks") {
  CHECK(derived_subgroup(symmetric_group(4)).order() == 12);
  CHECK(derived_subgroup(alternating_group(4)).order() == 4);
  CHECK(derived_subgroup(alternating_group(5)).order() == 60);
  CHECK(derived_subgroup(cyclic_group(16)).order() == 1);
}

TEST_CASE("subgroup generation and closure") {
  Group g = symmetric_group(4);
  std::vector<Elt> all(g.order());
  for (Elt e = 0; e < g.order(); ++e) all[e] = e;
  Subgroup whole = subgroup_generated(g, small_generating_set(g, all));
  CHECK(whole.order() == 24);
  Subgroup t = subgroup_generated(g, {});
  CHECK(t.order() == 1);
}

TEST_CASE("lagrange holds for every generated subgroup of s4") {
  Group g = symmetric_group(4);
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); b += 5) {
      Subgroup s = subgroup_generated(g, {a, b});
      CHECK(g.order() % s.order() == 0);
    }
}

TEST_CASE("normality detection") {
  Group g = symmetric_group(3);
  // A3 = even permutations
  std::vector<Elt> even;
  for (Elt a = 0; a < 6; ++a)
    if (g.elt_order(a) != 2) even.push_back(a);
  CHECK(is_normal(g, Subgroup::of(g, even)));
  // a 2-element subgroup generated by a transposition is not normal
  for (Elt a = 1; a < 6; ++a)
    if (g.elt_order(a) == 2) {
      CHECK(!is_normal(g, subgroup_generated(g, {a})));
      break;
    }
}

TEST_CASE("all normal subgroups of a4") {
  auto ns = all_normal_subgroups(alternating_group(4));
  std::vector<int> sizes;
  for (auto& s : ns) sizes.push_back((int)s.order());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 4, 12});
}

TEST_CASE("quotient of d8 by its center is klein") {
  Group g = dihedral_group(8);
  QuotientResult q = quotient(g, center(g));
  CHECK(q.Q.order() == 4);
  CHECK(q.Q.is_abelian());
  for (Elt a = 0; a < 4; ++a) CHECK(q.Q.mul(a, a) == 0);
}

TEST_CASE("quotient of s4 by the klein four subgroup is s3") {
  Group g = symmetric_group(4);
  for (const Subgroup& n : all_normal_subgroups(g))
    if (n.order() == 4) {
      QuotientResult q = quotient(g, n);
      CHECK(q.Q.order() == 6);
      CHECK(is_isomorphic_bruteforce(q.Q, symmetric_group(3)));
    }
}

TEST_CASE("quotient map is a homomorphism onto") {
  Group g = dicyclic_group(3);
  for (const Subgroup& n : all_normal_subgroups(g)) {
    QuotientResult q = quotient(g, n);
    Homomorphism h{&g, &q.Q, q.coset_of};
    h.validate();
    CHECK(h.is_surjective());
    CHECK(h.kernel().elems == n.elems);
  }
}

TEST_CASE("direct product orders and commutativity structure") {
  Group p = direct_product(cyclic_group(3), dihedral_group(8));
  CHECK(p.order() == 24);
  CHECK(derived_subgroup(p).order() == 2);
  CHECK(center(p).order() == 6);
}

TEST_CASE("isomorphism bruteforce separates d8 from q8") {
  CHECK(is_isomorphic_bruteforce(dihedral_group(8), quaternion_group(8)) == false);
  CHECK(is_isomorphic_bruteforce(dihedral_group(6), symmetric_group(3)));
  CHECK(is_isomorphic_bruteforce(cyclic_group(6),
                                 direct_product(cyclic_group(2), cyclic_group(3))));
}

TEST_CASE("relabeling preserves isomorphism type") {
  Group g = quaternion_group(8);
  Group r = relabel(g, 12345);
  CHECK(r.flat_table() != g.flat_table());
  CHECK(is_isomorphic_bruteforce(g, r));
}

TEST_CASE("abelian subgroup enumeration of q8") {
  auto subs = abelian_subgroups(quaternion_group(8));
  // trivial, center, three cyclic of order 4
  CHECK(subs.size() == 5);
  auto maximal = inclusion_maximal(subs);
  CHECK(maximal.size() == 3);
  for (auto& s : maximal) CHECK(s.order() == 4);
}

TEST_CASE("subgroup_as_group round trips") {
  Group g = dihedral_group(12);
  Subgroup rot = subgroup_generated(g, {1});
  SubgroupAsGroup h = subgroup_as_group(rot);
  CHECK(h.H.order() == 6);
  CHECK(h.H.is_abelian());
  for (Elt e = 0; e < h.H.order(); ++e) CHECK(h.from_parent[h.to_parent[e]] == e);
}

TEST_CASE("commutator subgroup bilinearity landmarks") {
  Group g = dihedral_group(16);
  Subgroup whole = Subgroup::of(g, [&] {
    std::vector<Elt> a(g.order());
    for (Elt e = 0; e < g.order(); ++e) a[e] = e;
    return a;
  }());
  Subgroup g2 = commutator_subgroup(g, whole, whole);
  CHECK(g2.order() == 4);
  Subgroup g3 = commutator_subgroup(g, g2, whole);
  CHECK(g3.order() == 2);
  Subgroup g4 = commutator_subgroup(g, g3, whole);
  CHECK(g4.order() == 1);
}

TEST_CASE("upper central series of d16 reaches the top") {
  Group g = dihedral_group(16);
  CHECK(center(g).order() == 2);
  QuotientResult q = quotient(g, center(g));
  CHECK(center(q.Q).order() == 2);  // second center has order 4 upstairs
}

TEST_CASE("order profiles distinguish d8 and q8") {
  CHECK(order_profile(dihedral_group(8)) != order_profile(quaternion_group(8)));
  CHECK(order_profile(dihedral_group(8)) ==
        order_profile(relabel(dihedral_group(8), 99)));
}
