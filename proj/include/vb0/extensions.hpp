#pragma once
// Extensions 1 -> N -> G -> Q -> 1, the verbal-preservation property with
// respect to a variety, the marginal criterion for it, and equivalence of
// extensions by brute-force isomorphism search.

#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "vb0/group.hpp"
#include "vb0/words.hpp"

namespace vb0 {

struct Extension {
  const Group* N = nullptr;
  const Group* G = nullptr;
  const Group* Q = nullptr;
  Homomorphism chi;  // N -> G, injective
  Homomorphism pi;   // G -> Q, surjective

  void validate() const {
    if (chi.src != N || chi.dst != G || pi.src != G || pi.dst != Q)
      fail(ErrorKind::BadElement, "extension maps wired to the wrong groups");
    chi.validate();
    pi.validate();
    if (!chi.is_injective()) fail(ErrorKind::BadElement, "chi is not injective");
    if (!pi.is_surjective()) fail(ErrorKind::BadElement, "pi is not surjective");
    if (chi.image().elems != pi.kernel().elems)
      fail(ErrorKind::BadElement, "extension is not exact: image(chi) != kernel(pi)");
  }
};

// The extension 1 -> N -> G -> G/N -> 1 with owned copies of the end groups.
struct CanonicalExtension {
  std::shared_ptr<Group> sub;  // N as a group in its own right
  std::shared_ptr<Group> quo;  // G/N
  Extension E;
};

inline CanonicalExtension canonical_extension(const Group& g, const Subgroup& N) {
  CanonicalExtension c;
  SubgroupAsGroup sg = subgroup_as_group(N);
  std::vector<Elt> to_parent = sg.to_parent;
  c.sub = std::make_shared<Group>(std::move(sg.H));
  QuotientResult q = quotient(g, N);
  std::vector<Elt> coset_of = q.coset_of;
  c.quo = std::make_shared<Group>(std::move(q.Q));
  c.E.N = c.sub.get();
  c.E.G = &g;
  c.E.Q = c.quo.get();
  c.E.chi = Homomorphism{c.sub.get(), &g, std::move(to_parent)};
  c.E.pi = Homomorphism{&g, c.quo.get(), std::move(coset_of)};
  c.E.validate();
  return c;
}

struct VpReport {
  bool vp = true;
  // law index into the variety plus the Q-tuple with no law-killing lift
  std::optional<std::pair<size_t, std::vector<Elt>>> witness;
};

// Every tuple over Q on which a law vanishes must admit a lift to G on which
// the law vanishes too.
inline VpReport is_vp_extension(const Extension& E, const Variety& V,
                                long long cap = kDefaultEvalCap) {
  const Group& G = *E.G;
  const Group& Q = *E.Q;
  std::vector<Elt> fiber = E.pi.kernel().elems;  // = chi(N)
  std::vector<Elt> rep(Q.order(), -1);
  for (Elt a = 0; a < G.order(); ++a)
    if (rep[E.pi(a)] < 0) rep[E.pi(a)] = a;

  for (size_t li = 0; li < V.laws.size(); ++li) {
    WordProgram prog = WordProgram::compile(V.laws[li]);
    int s = prog.nvars;
    long long lifts = 1;
    for (int i = 0; i < s; ++i) lifts *= (long long)fiber.size();
    detail::check_eval_cap(Q, s, lifts, cap);
    std::vector<Elt> stack(prog.ops.size());
    std::vector<Elt> gtuple(s);
    bool all_ok = detail::for_each_tuple(Q, s, [&](const std::vector<Elt>& qs) {
      if (prog.run(Q, qs, stack.data()) != Q.id()) return true;
      // search the fibers for a vanishing lift
      std::vector<size_t> pick(s, 0);
      while (true) {
        for (int i = 0; i < s; ++i) gtuple[i] = G.mul(fiber[pick[i]], rep[qs[i]]);
        if (prog.run(G, gtuple, stack.data()) == G.id()) return true;
        int i = 0;
        while (i < s && ++pick[i] == fiber.size()) pick[i++] = 0;
        if (i == s) return false;  // no lift for this tuple
      }
    });
    if (!all_ok) {
      // recompute the failing tuple for the witness
      VpReport r;
      r.vp = false;
      detail::for_each_tuple(Q, s, [&](const std::vector<Elt>& qs) {
        if (prog.run(Q, qs, stack.data()) != Q.id()) return true;
        std::vector<size_t> pick(s, 0);
        while (true) {
          for (int i = 0; i < s; ++i) gtuple[i] = G.mul(fiber[pick[i]], rep[qs[i]]);
          if (prog.run(G, gtuple, stack.data()) == G.id()) return true;
          int i = 0;
          while (i < s && ++pick[i] == fiber.size()) pick[i++] = 0;
          if (i == s) {
            r.witness = {li, qs};
            return false;
          }
        }
      });
      return r;
    }
  }
  return {};
}

inline bool is_marginal_extension(const Extension& E, const Variety& V,
                                  long long cap = kDefaultEvalCap) {
  Subgroup marg = marginal_subgroup(V, *E.G, cap);
  for (Elt n = 0; n < E.N->order(); ++n)
    if (!marg.contains(E.chi(n))) return false;
  return true;
}

// Both sides of the marginal criterion: verbal preservation on one side,
// triviality of chi(N) meet the raw value set on the other.
struct CriterionReport {
  bool marginal = false;
  bool vp = false;
  std::vector<Elt> intersection;  // chi(N) cut with T(G), contains the identity
  bool intersection_trivial = false;
  bool biconditional = false;  // vp == intersection_trivial
  std::optional<std::pair<size_t, std::vector<Elt>>> witness;
};

inline CriterionReport vp_criterion_check(const Extension& E, const Variety& V,
                                          long long cap = kDefaultEvalCap) {
  CriterionReport r;
  r.marginal = is_marginal_extension(E, V, cap);
  VpReport vp = is_vp_extension(E, V, cap);
  r.vp = vp.vp;
  r.witness = vp.witness;
  std::vector<char> in_t(E.G->order(), 0);
  for (Elt t : value_set(V, *E.G, cap)) in_t[t] = 1;
  for (Elt n = 0; n < E.N->order(); ++n)
    if (in_t[E.chi(n)]) r.intersection.push_back(E.chi(n));
  std::sort(r.intersection.begin(), r.intersection.end());
  r.intersection_trivial = r.intersection.size() == 1;
  r.biconditional = r.vp == r.intersection_trivial;
  return r;
}

inline VpReport is_vp_subgroup(const Group& g, const Subgroup& N, const Variety& V,
                               long long cap = kDefaultEvalCap) {
  CanonicalExtension c = canonical_extension(g, N);
  return is_vp_extension(c.E, V, cap);
}

// Equivalence of two extensions of the same N by the same Q: an isomorphism
// of the middle groups commuting with both legs. N and Q are identified by
// element index, so both extensions must use the same tables for them.
struct EquivalenceReport {
  bool equivalent = false;
  std::vector<Elt> iso;  // map G1 -> G2 when equivalent
};

inline EquivalenceReport are_equivalent(const Extension& E1, const Extension& E2,
                                        int order_cap = 16) {
  if (E1.N->flat_table() != E2.N->flat_table() || E1.Q->flat_table() != E2.Q->flat_table())
    fail(ErrorKind::BadElement, "extension equivalence needs identical end groups");
  const Group& A = *E1.G;
  const Group& B = *E2.G;
  if (A.order() != B.order()) return {};
  if (A.order() > order_cap) fail(ErrorKind::CapExceeded, "equivalence search cap exceeded");

  std::vector<Elt> all(A.order());
  std::iota(all.begin(), all.end(), 0);
  auto gens = small_generating_set(A, all);
  size_t k = gens.size();
  // express every element of A over the generators
  std::vector<std::vector<int>> word(A.order());
  std::vector<char> seen(A.order(), 0);
  std::vector<Elt> queue{A.id()};
  seen[A.id()] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (size_t i = 0; i < k; ++i) {
      Elt nxt = A.mul(queue[head], gens[i]);
      if (!seen[nxt]) {
        seen[nxt] = 1;
        word[nxt] = word[queue[head]];
        word[nxt].push_back((int)i);
        queue.push_back(nxt);
      }
    }
  // candidate images must match order and quotient coset
  std::vector<std::vector<Elt>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int o = A.elt_order(gens[i]);
    for (Elt b = 0; b < B.order(); ++b)
      if (B.elt_order(b) == o && E2.pi(b) == E1.pi(gens[i])) candidates[i].push_back(b);
    if (candidates[i].empty()) return {};
  }
  if (k == 0) {
    // trivial middle group
    EquivalenceReport r;
    r.equivalent = true;
    r.iso = {B.id()};
    return r;
  }
  std::vector<size_t> pos(k, 0);
  std::vector<Elt> f(A.order());
  while (true) {
    for (Elt a = 0; a < A.order(); ++a) {
      Elt x = B.id();
      for (int gi : word[a]) x = B.mul(x, candidates[gi][pos[gi]]);
      f[a] = x;
    }
    bool ok = true;
    std::vector<char> hit(B.order(), 0);
    for (Elt a = 0; a < A.order() && ok; ++a) {
      if (hit[f[a]]) ok = false;
      hit[f[a]] = 1;
    }
    for (Elt a = 0; a < A.order() && ok; ++a)
      for (Elt b = 0; b < A.order() && ok; ++b)
        if (f[A.mul(a, b)] != B.mul(f[a], f[b])) ok = false;
    for (Elt n = 0; ok && n < E1.N->order(); ++n)
      if (f[E1.chi(n)] != E2.chi(n)) ok = false;
    for (Elt a = 0; ok && a < A.order(); ++a)
      if (E2.pi(f[a]) != E1.pi(a)) ok = false;
    if (ok) {
      EquivalenceReport r;
      r.equivalent = true;
      r.iso = std::move(f);
      return r;
    }
    size_t i = 0;
    while (i < k && ++pos[i] == candidates[i].size()) pos[i++] = 0;
    if (i == k) return {};
  }
}

}  // namespace vb0
