#include <catch2/catch_amalgamated.hpp>

#include "vb0/corpus.hpp"
#include "vb0/words.hpp"

using namespace vb0;

TEST_CASE("word parsing and printing round trip") {
  // left-normed chains print flat
  for (auto [in, out] : std::vector<std::pair<const char*, const char*>>{
           {"[x1,x2]", "[x1,x2]"},
           {"[[x1,x2],x3]", "[x1,x2,x3]"},
           {"[x1,x2,x3]", "[x1,x2,x3]"},
           {"[x1,[x2,x3]]", "[x1,[x2,x3]]"},
           {"[[x1,x2],[x3,x4]]", "[x1,x2,[x3,x4]]"}}) {
    OCWord w = parse_word(in);
    CHECK(w.str() == out);
    CHECK(parse_word(w.str()).str() == out);
  }
  CHECK(parse_word("x1").weight() == 1);
  CHECK(parse_word("[[x1,x2],x3]").weight() == 3);
}

TEST_CASE("word parser rejects malformed input") {
  CHECK_THROWS_AS(parse_word("[x1,x1]"), Error);   // reused variable
  CHECK_THROWS_AS(parse_word("[x1,x2"), Error);    // unbalanced
  CHECK_THROWS_AS(parse_word("hello"), Error);
  CHECK_THROWS_AS(OCWord::comm(parse_word("x1"), parse_word("x1")), Error);
}

TEST_CASE("gamma words match iterated commutator evaluation") {
  Group g = dihedral_group(16);
  OCWord g3 = parse_word("[[x1,x2],x3]");
  for (Elt a = 0; a < g.order(); a += 3)
    for (Elt b = 0; b < g.order(); b += 5)
      for (Elt c = 0; c < g.order(); c += 7)
        CHECK(g3.evaluate(g, {a, b, c}) == g.comm(g.comm(a, b), c));
}

TEST_CASE("bracket places the second word on fresh variables") {
  OCWord u = parse_word("[x1,x2]");
  OCWord v = bracket(u, parse_word("x1"));
  CHECK(v.str() == "[x1,x2,x3]");
  OCWord w = bracket(u, u);
  CHECK(w.str() == "[x1,x2,[x3,x4]]");
}

TEST_CASE("compose substitutes and multiplies weight") {
  OCWord u = parse_word("[x1,x2]");
  CHECK(compose(u, u).str() == "[x1,x2,[x3,x4]]");
  CHECK(compose(u, u).weight() == 4);
  CHECK(compose(parse_word("x1"), u).str() == "[x1,x2]");
  CHECK(compose(parse_word("[[x1,x2],x3]"), u).weight() == 6);
}

TEST_CASE("word program agrees with direct evaluation") {
  Group g = dicyclic_group(3);
  OCWord w = parse_word("[x1,[x2,x3]]");
  WordProgram p = WordProgram::compile(w);
  std::vector<Elt> stack(p.ops.size());
  for (Elt a = 0; a < g.order(); a += 2)
    for (Elt b = 0; b < g.order(); b += 3)
      for (Elt c = 0; c < g.order(); c += 5)
        CHECK(p.run(g, {a, b, c}, stack.data()) == w.evaluate(g, {a, b, c}));
}

TEST_CASE("value set of the commutator word on q8") {
  Group g = quaternion_group(8);
  // commutator values are exactly {1, -1}
  CHECK(value_set(named_variety("abelian"), g) == std::vector<Elt>{0, 2});
}

TEST_CASE("every element of a5 is a commutator") {
  Group g = alternating_group(5);
  CHECK((int)value_set(named_variety("abelian"), g).size() == 60);
}

TEST_CASE("verbal subgroup equals derived subgroup for the abelian law") {
  for (const Group& g : {dihedral_group(12), symmetric_group(4), quaternion_group(16),
                         modular16(), alternating_group(4)})
    CHECK(verbal_subgroup(named_variety("abelian"), g).elems == derived_subgroup(g).elems);
}

TEST_CASE("marginal subgroup equals center for the abelian law") {
  for (const Group& g : {dihedral_group(8), symmetric_group(3), dicyclic_group(4),
                         cyclic_group(9), extraspecial32_plus()})
    CHECK(marginal_subgroup(named_variety("abelian"), g).elems == center(g).elems);
}

TEST_CASE("nilpotent law verbal subgroups walk the lower central series") {
  Group g = dihedral_group(16);
  CHECK(verbal_subgroup(named_variety("nilpotent-1"), g).order() == 4);
  CHECK(verbal_subgroup(named_variety("nilpotent-2"), g).elems == std::vector<Elt>{0, 4});
  CHECK(verbal_subgroup(named_variety("nilpotent-3"), g).order() == 1);
}

TEST_CASE("nilpotent-2 marginal subgroup of d16 is the second center") {
  Group g = dihedral_group(16);
  CHECK(marginal_subgroup(named_variety("nilpotent-2"), g).elems ==
        std::vector<Elt>{0, 2, 4, 6});
}

TEST_CASE("value set respects quotient maps") {
  Group g = dihedral_group(16);
  QuotientResult q = quotient(g, derived_subgroup(g));
  auto tg = value_set(named_variety("abelian"), g);
  auto tq = value_set(named_variety("abelian"), q.Q);
  std::vector<Elt> mapped;
  for (Elt e : tg) mapped.push_back(q.coset_of[e]);
  std::sort(mapped.begin(), mapped.end());
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
  CHECK(mapped == tq);
}

TEST_CASE("hall bracket with the abelian law is the mixed commutator with g") {
  Group g = dihedral_group(8);
  Subgroup whole = Subgroup::of(g, [&] {
    std::vector<Elt> a(g.order());
    for (Elt e = 0; e < g.order(); ++e) a[e] = e;
    return a;
  }());
  for (const Subgroup& n : all_normal_subgroups(g))
    CHECK(hall_bracket(named_variety("abelian"), n, g).elems ==
          commutator_subgroup(g, n, whole).elems);
}

TEST_CASE("hall bracket of the whole group is the verbal subgroup") {
  for (const Group& g : {dihedral_group(12), quaternion_group(8)}) {
    Subgroup whole = Subgroup::of(g, [&] {
      std::vector<Elt> a(g.order());
      for (Elt e = 0; e < g.order(); ++e) a[e] = e;
      return a;
    }());
    for (const char* vn : {"abelian", "nilpotent-2"})
      CHECK(hall_bracket(named_variety(vn), whole, g).elems ==
            verbal_subgroup(named_variety(vn), g).elems);
  }
}

TEST_CASE("named variety forms") {
  CHECK(named_variety("abelian").laws.size() == 1);
  CHECK(named_variety("nilpotent-3").laws[0].weight() == 4);
  CHECK(named_variety("compose:[x1,x2]:[x1,x2]").laws[0].weight() == 4);
  CHECK(named_variety("law:[x1,[x2,x3]]").laws[0].str() == "[x1,[x2,x3]]");
  CHECK_THROWS_AS(named_variety("nilpotent-0"), Error);
  CHECK_THROWS_AS(named_variety("frobnicate"), Error);
  CHECK_THROWS_AS(named_variety("law:x1"), Error);  // weight 1 law rejected
}

TEST_CASE("evaluation cap triggers") {
  Group g = symmetric_group(4);
  CHECK_THROWS_AS(value_set(named_variety("nilpotent-3"), g, 1000), Error);
}
