#include <catch2/catch_amalgamated.hpp>

#include "vb0/corpus.hpp"
#include "vb0/extensions.hpp"
#include "vb0/verify.hpp"

using namespace vb0;

namespace {

Subgroup by_elems(const Group& g, std::vector<Elt> elems) {
  return Subgroup::of(g, std::move(elems));
}

}  // namespace

TEST_CASE("canonical extensions validate and are exact") {
  Group d8 = dihedral_group(8);
  for (const Subgroup& N : all_normal_subgroups(d8)) {
    CanonicalExtension c = canonical_extension(d8, N);
    CHECK(c.E.N->order() == N.order());
    CHECK(c.E.Q->order() == d8.order() / N.order());
    CHECK(c.E.chi.image().elems == N.elems);
  }
}

TEST_CASE("the center of q8 fails verbal preservation for the abelian law") {
  Group q8 = quaternion_group(8);
  CanonicalExtension c = canonical_extension(q8, center(q8));
  Variety ab = named_variety("abelian");
  VpReport rep = is_vp_extension(c.E, ab);
  CHECK_FALSE(rep.vp);
  REQUIRE(rep.witness.has_value());
  auto [law_idx, tuple] = *rep.witness;
  CHECK(law_idx == 0);
  REQUIRE(tuple.size() == 2);
  // the witness tuple commutes in the quotient but no lift commutes in q8
  const Group& Q = *c.E.Q;
  CHECK(Q.comm(tuple[0], tuple[1]) == Q.id());
}

TEST_CASE("a chain inside a cyclic group preserves every law") {
  Group c4 = cyclic_group(4);
  CanonicalExtension c = canonical_extension(c4, by_elems(c4, {0, 2}));
  for (const char* name : {"abelian", "nilpotent-2"}) {
    VpReport rep = is_vp_extension(c.E, named_variety(name));
    CHECK(rep.vp);
    CHECK_FALSE(rep.witness.has_value());
  }
}

TEST_CASE("marginal detection matches the marginal subgroup") {
  Group d8 = dihedral_group(8);
  Variety ab = named_variety("abelian");
  // center is marginal for the abelian variety, the rotation subgroup is not
  CanonicalExtension zc = canonical_extension(d8, center(d8));
  CHECK(is_marginal_extension(zc.E, ab));
  CanonicalExtension rot = canonical_extension(d8, by_elems(d8, {0, 1, 2, 3}));
  CHECK_FALSE(is_marginal_extension(rot.E, ab));
}

TEST_CASE("criterion report on a marginal subgroup ties vp to the value set") {
  Variety ab = named_variety("abelian");

  Group q8 = quaternion_group(8);
  CanonicalExtension qc = canonical_extension(q8, center(q8));
  CriterionReport qr = vp_criterion_check(qc.E, ab);
  CHECK(qr.marginal);
  CHECK_FALSE(qr.vp);
  CHECK_FALSE(qr.intersection_trivial);  // -1 is a commutator and central
  CHECK(qr.intersection.size() == 2);
  CHECK(qr.biconditional);
  CHECK(qr.witness.has_value());

  Group c12 = cyclic_group(12);
  CanonicalExtension cc = canonical_extension(c12, by_elems(c12, {0, 6}));
  CriterionReport cr = vp_criterion_check(cc.E, ab);
  CHECK(cr.marginal);
  CHECK(cr.vp);
  CHECK(cr.intersection_trivial);
  CHECK(cr.biconditional);
}

TEST_CASE("vp_criterion biconditional holds for central subgroups across small groups") {
  Variety ab = named_variety("abelian");
  for (const Group& g : {dihedral_group(8), quaternion_group(8), dicyclic_group(3),
                         modular16(), dihedral_group(12)}) {
    for (const Subgroup& N : detail::central_subgroups(g)) {
      if (N.order() == 1) continue;
      CanonicalExtension c = canonical_extension(g, N);
      CriterionReport r = vp_criterion_check(c.E, ab);
      INFO(g.label() << " with central N of order " << N.order());
      CHECK(r.marginal);
      CHECK(r.biconditional);
    }
  }
}

TEST_CASE("is_vp_subgroup shortcut agrees with the extension form") {
  Group q8 = quaternion_group(8);
  Variety ab = named_variety("abelian");
  VpReport direct = is_vp_subgroup(q8, center(q8), ab);
  CanonicalExtension c = canonical_extension(q8, center(q8));
  VpReport via = is_vp_extension(c.E, ab);
  CHECK(direct.vp == via.vp);
  CHECK_FALSE(direct.vp);
}

TEST_CASE("an extension is equivalent to itself and to a relabel of its middle") {
  Group d8 = dihedral_group(8);
  CanonicalExtension c = canonical_extension(d8, center(d8));
  EquivalenceReport self = are_equivalent(c.E, c.E);
  REQUIRE(self.equivalent);
  for (Elt a = 0; a < d8.order(); ++a) CHECK(self.iso[a] == a);

  // transport the middle through a relabeling permutation
  RelabeledGroup rl = relabel_with_map(d8, 7);
  Extension e2;
  e2.N = c.E.N;
  e2.G = &rl.g;
  e2.Q = c.E.Q;
  std::vector<Elt> chi2(c.E.N->order()), pi2(d8.order());
  for (Elt n = 0; n < c.E.N->order(); ++n) chi2[n] = rl.perm[c.E.chi(n)];
  for (Elt a = 0; a < d8.order(); ++a) pi2[rl.perm[a]] = c.E.pi(a);
  e2.chi = Homomorphism{c.E.N, &rl.g, std::move(chi2)};
  e2.pi = Homomorphism{&rl.g, c.E.Q, std::move(pi2)};
  e2.validate();

  EquivalenceReport rep = are_equivalent(c.E, e2);
  REQUIRE(rep.equivalent);
  // the iso must commute with both legs
  for (Elt n = 0; n < c.E.N->order(); ++n) CHECK(rep.iso[c.E.chi(n)] == e2.chi(n));
  for (Elt a = 0; a < d8.order(); ++a) CHECK(e2.pi(rep.iso[a]) == c.E.pi(a));
}

TEST_CASE("inequivalent extensions with the same ends are told apart") {
  // c4 and klein both extend c2 by c2
  Group c4 = cyclic_group(4);
  Group kl = elementary_abelian(2, 2);
  CanonicalExtension a = canonical_extension(c4, by_elems(c4, {0, 2}));
  CanonicalExtension b = canonical_extension(kl, by_elems(kl, {0, 1}));

  // rewire b onto a's end groups; both ends are c2 so the tables match
  Extension b2;
  b2.N = a.E.N;
  b2.G = b.E.G;
  b2.Q = a.E.Q;
  b2.chi = Homomorphism{a.E.N, b.E.G, b.E.chi.map};
  b2.pi = Homomorphism{b.E.G, a.E.Q, b.E.pi.map};
  b2.validate();

  EquivalenceReport rep = are_equivalent(a.E, b2);
  CHECK_FALSE(rep.equivalent);
}

TEST_CASE("d8 and q8 are inequivalent extensions of c2 by the klein group") {
  Group d8 = dihedral_group(8);
  Group q8 = quaternion_group(8);
  CanonicalExtension a = canonical_extension(d8, center(d8));
  CanonicalExtension b = canonical_extension(q8, center(q8));
  REQUIRE(a.E.N->flat_table() == b.E.N->flat_table());
  REQUIRE(a.E.Q->flat_table() == b.E.Q->flat_table());
  CHECK_FALSE(are_equivalent(a.E, b.E).equivalent);
}

TEST_CASE("equivalence requires identical end group tables") {
  Group d8 = dihedral_group(8);
  Group c12 = cyclic_group(12);
  CanonicalExtension a = canonical_extension(d8, center(d8));
  CanonicalExtension b = canonical_extension(c12, by_elems(c12, {0, 6}));
  CHECK_THROWS_AS(are_equivalent(a.E, b.E), Error);
}

TEST_CASE("extension validation catches miswired maps") {
  Group d8 = dihedral_group(8);
  CanonicalExtension c = canonical_extension(d8, center(d8));
  Extension broken = c.E;
  broken.pi.map[3] = c.E.pi(c.E.pi.map[3] == 0 ? 1 : 0);
  CHECK_THROWS_AS(broken.validate(), Error);
}
