#pragma once

// Finite groups as multiplication tables, with the subgroup machinery the
// rest of the library builds on.  Everything is index-based: elements are
// ints into an n x n table.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "common.hpp"

namespace vb0 {

using Elt = int;

struct Permutation {
  std::vector<int> img;  // 0-based images

  static Permutation identity(int degree) {
    Permutation p;
    p.img.resize(degree);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }
  int degree() const { return (int)img.size(); }
  int operator()(int x) const { return img[x]; }
  // (a*b)(x) = b(a(x)): apply a first
  Permutation operator*(const Permutation& b) const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t x = 0; x < img.size(); ++x) r.img[x] = b.img[img[x]];
    return r;
  }
  Permutation inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t x = 0; x < img.size(); ++x) r.img[img[x]] = (int)x;
    return r;
  }
  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator<(const Permutation& o) const { return img < o.img; }
  bool valid() const {
    std::vector<char> seen(img.size(), 0);
    for (int x : img) {
      if (x < 0 || x >= (int)img.size() || seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  }
};

class Group {
 public:
  static constexpr int kDefaultTableCap = 256;

  static Group from_table(const std::vector<std::vector<int>>& rows, std::string label = "",
                          int table_cap = kDefaultTableCap) {
    int n = (int)rows.size();
    if (n == 0) fail(ErrorKind::BadFormat, "empty multiplication table");
    if (n > table_cap)
      fail(ErrorKind::TableCapExceeded,
           "table order " + std::to_string(n) + " exceeds cap " + std::to_string(table_cap));
    Group g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.tab_.resize((size_t)n * n);
    for (int i = 0; i < n; ++i) {
      if ((int)rows[i].size() != n)
        fail(ErrorKind::BadFormat, "row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < n; ++j) {
        int v = rows[i][j];
        if (v < 0 || v >= n)
          fail(ErrorKind::BadElement, "entry out of range at (" + std::to_string(i) + "," +
                                          std::to_string(j) + "): " + std::to_string(v));
        g.tab_[(size_t)i * n + j] = v;
      }
    }
    g.find_identity();
    g.check_associative();
    g.build_inverses();
    return g;
  }

  // For engine-built tables that are groups by construction (e.g. regular
  // coset actions).  Identity and inverses are still verified; the cubic
  // associativity sweep is skipped above the exhaustive cap.
  static Group from_table_trusted(std::vector<Elt> flat, int n, std::string label = "") {
    Group g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.tab_ = std::move(flat);
    if ((int)g.tab_.size() != n * n) fail(ErrorKind::BadFormat, "flat table size mismatch");
    g.find_identity();
    if (n <= kDefaultTableCap) g.check_associative();
    g.build_inverses();
    return g;
  }

  static Group from_permutations(int degree, const std::vector<Permutation>& gens,
                                 std::string label = "", long long closure_cap = 1000000,
                                 int table_cap = kDefaultTableCap) {
    for (auto& p : gens) {
      if (p.degree() != degree) fail(ErrorKind::BadFormat, "generator degree mismatch");
      if (!p.valid()) fail(ErrorKind::BadFormat, "generator is not a permutation");
    }
    std::map<Permutation, int> index;
    std::vector<Permutation> elems;
    elems.push_back(Permutation::identity(degree));
    index[elems[0]] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
      for (auto& gpe : gens) {
        Permutation q = elems[head] * gpe;
        if (index.count(q)) continue;
        if ((long long)elems.size() + 1 > closure_cap)
          fail(ErrorKind::ClosureCapExceeded, "permutation closure exceeds cap");
        if ((int)elems.size() + 1 > table_cap)
          fail(ErrorKind::TableCapExceeded, "permutation group order exceeds table cap " +
                                                std::to_string(table_cap));
        index[q] = (int)elems.size();
        elems.push_back(std::move(q));
      }
    }
    int n = (int)elems.size();
    Group g;
    g.n_ = n;
    g.label_ = std::move(label);
    g.tab_.resize((size_t)n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.tab_[(size_t)i * n + j] = index.at(elems[i] * elems[j]);
    g.id_ = 0;
    g.check_associative_skip_ok();
    g.build_inverses();
    return g;
  }

  int order() const { return n_; }
  Elt id() const { return id_; }
  Elt mul(Elt a, Elt b) const { return tab_[(size_t)a * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt a, Elt b) const { return mul(mul(inv(b), a), b); }  // a^b
  Elt comm(Elt a, Elt b) const { return mul(mul(inv(a), mul(inv(b), a)), b); }  // [a,b]
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  bool is_abelian() const {
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  int elt_order(Elt a) const {
    int k = 1;
    Elt x = a;
    while (x != id_) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  long long exponent() const {
    long long e = 1;
    for (Elt a = 0; a < n_; ++a) e = std::lcm(e, (long long)elt_order(a));
    return e;
  }

  Elt pow(Elt a, long long k) const {
    long long o = elt_order(a);
    k %= o;
    if (k < 0) k += o;
    Elt r = id_;
    for (long long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  const std::vector<Elt>& flat_table() const { return tab_; }

 private:
  int n_ = 0;
  Elt id_ = 0;
  std::vector<Elt> tab_, inv_;
  std::string label_;

  void find_identity() {
    for (Elt e = 0; e < n_; ++e) {
      bool ok = true;
      for (Elt a = 0; a < n_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        id_ = e;
        return;
      }
    }
    fail(ErrorKind::NoIdentity, "table has no two-sided identity");
  }

  void check_associative() const {
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b)
        for (Elt c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail(ErrorKind::NonAssociative,
                 "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")");
  }
  void check_associative_skip_ok() const {
    if (n_ <= kDefaultTableCap) check_associative();
  }

  void build_inverses() {
    inv_.assign(n_, -1);
    for (Elt a = 0; a < n_; ++a) {
      for (Elt b = 0; b < n_; ++b)
        if (mul(a, b) == id_ && mul(b, a) == id_) {
          inv_[a] = b;
          break;
        }
      if (inv_[a] < 0) fail(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
    }
  }
};

// A subgroup is a sorted element list plus a membership mask.  The parent
// Group must outlive the Subgroup.
struct Subgroup {
  const Group* G = nullptr;
  std::vector<Elt> elems;
  std::vector<char> mask;

  int order() const { return (int)elems.size(); }
  bool contains(Elt e) const { return mask[e]; }
  bool operator==(const Subgroup& o) const { return G == o.G && elems == o.elems; }

  static Subgroup of(const Group& g, std::vector<Elt> sorted_elems) {
    Subgroup s;
    s.G = &g;
    s.elems = std::move(sorted_elems);
    s.mask.assign(g.order(), 0);
    for (Elt e : s.elems) s.mask[e] = 1;
    return s;
  }
};

inline Subgroup trivial_subgroup(const Group& g) { return Subgroup::of(g, {g.id()}); }

inline Subgroup full_subgroup(const Group& g) {
  std::vector<Elt> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::of(g, std::move(all));
}

inline Subgroup subgroup_generated(const Group& g, const std::vector<Elt>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> queue{g.id()};
  in[g.id()] = 1;
  for (Elt x : gens)
    if (x < 0 || x >= g.order()) fail(ErrorKind::BadElement, "generator index out of range");
  for (size_t head = 0; head < queue.size(); ++head) {
    for (Elt x : gens) {
      Elt y = g.mul(queue[head], x);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup::of(g, std::move(queue));
}

// Greedy small generating set of a subgroup (or the whole group).
inline std::vector<Elt> small_generating_set(const Group& g, const std::vector<Elt>& elems) {
  std::vector<Elt> gens;
  Subgroup cur = subgroup_generated(g, {});
  for (Elt e : elems) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = subgroup_generated(g, gens);
    if (cur.order() == (int)elems.size()) break;
  }
  return gens;
}

inline bool is_subgroup(const Group& g, const std::vector<Elt>& sorted_elems) {
  Subgroup s = Subgroup::of(g, sorted_elems);
  if (!s.contains(g.id())) return false;
  for (Elt a : sorted_elems) {
    if (!s.contains(g.inv(a))) return false;
    for (Elt b : sorted_elems)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

inline Subgroup center(const Group& g) {
  std::vector<Elt> z;
  for (Elt a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elt b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup::of(g, std::move(z));
}

inline Subgroup centralizer(const Group& g, const std::vector<Elt>& S) {
  std::vector<Elt> c;
  for (Elt a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Elt s : S)
      if (g.mul(a, s) != g.mul(s, a)) {
        ok = false;
        break;
      }
    if (ok) c.push_back(a);
  }
  return Subgroup::of(g, std::move(c));
}

// <[a,b] : a in A, b in B>
inline Subgroup commutator_subgroup(const Group& g, const Subgroup& A, const Subgroup& B) {
  std::set<Elt> gens;
  for (Elt a : A.elems)
    for (Elt b : B.elems) gens.insert(g.comm(a, b));
  return subgroup_generated(g, {gens.begin(), gens.end()});
}

inline Subgroup derived_subgroup(const Group& g) {
  Subgroup full = full_subgroup(g);
  return commutator_subgroup(g, full, full);
}

// gamma_1 = G, gamma_{i+1} = [gamma_i, G]; returned until stabilization.
inline std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{full_subgroup(g)};
  Subgroup full = full_subgroup(g);
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), full);
    if (next.elems == series.back().elems) break;
    series.push_back(std::move(next));
  }
  return series;
}

// Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i); returned until stabilization.
inline std::vector<Subgroup> upper_central_series(const Group& g) {
  std::vector<Subgroup> series{trivial_subgroup(g)};
  while (true) {
    const Subgroup& z = series.back();
    std::vector<Elt> next;
    for (Elt a = 0; a < g.order(); ++a) {
      bool ok = true;
      for (Elt b = 0; b < g.order() && ok; ++b) ok = z.contains(g.comm(a, b));
      if (ok) next.push_back(a);
    }
    if (next == z.elems) break;
    series.push_back(Subgroup::of(g, std::move(next)));
  }
  return series;
}

// Nilpotency class, or -1 if not nilpotent.
inline int nilpotency_class(const Group& g) {
  auto lcs = lower_central_series(g);
  if (lcs.back().order() != 1) return -1;
  return (int)lcs.size() - 1;
}

inline bool is_normal(const Group& g, const Subgroup& s) {
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt h : s.elems)
      if (!s.contains(g.conj(h, x))) return false;
  return true;
}

inline Subgroup normal_closure(const Group& g, const std::vector<Elt>& gens) {
  std::set<Elt> acc(gens.begin(), gens.end());
  while (true) {
    Subgroup s = subgroup_generated(g, {acc.begin(), acc.end()});
    bool grew = false;
    for (Elt h : s.elems)
      for (Elt x = 0; x < g.order(); ++x) {
        Elt c = g.conj(h, x);
        if (!s.contains(c)) {
          acc.insert(c);
          grew = true;
        }
      }
    if (!grew) return s;
  }
}

struct Homomorphism {
  const Group* src = nullptr;
  const Group* dst = nullptr;
  std::vector<Elt> map;

  Elt operator()(Elt e) const { return map[e]; }

  void validate() const {
    if ((int)map.size() != src->order()) fail(ErrorKind::NotHomomorphism, "map size mismatch");
    for (Elt e : map)
      if (e < 0 || e >= dst->order()) fail(ErrorKind::BadElement, "image out of range");
    for (Elt a = 0; a < src->order(); ++a)
      for (Elt b = 0; b < src->order(); ++b)
        if (map[src->mul(a, b)] != dst->mul(map[a], map[b]))
          fail(ErrorKind::NotHomomorphism, "f(ab) != f(a)f(b) at (" + std::to_string(a) + "," +
                                               std::to_string(b) + ")");
  }

  Subgroup kernel() const {
    std::vector<Elt> k;
    for (Elt a = 0; a < src->order(); ++a)
      if (map[a] == dst->id()) k.push_back(a);
    return Subgroup::of(*src, std::move(k));
  }
  Subgroup image() const {
    std::set<Elt> im(map.begin(), map.end());
    return Subgroup::of(*dst, {im.begin(), im.end()});
  }
  bool is_injective() const {
    std::set<Elt> im(map.begin(), map.end());
    return (int)im.size() == src->order();
  }
  bool is_surjective() const {
    std::set<Elt> im(map.begin(), map.end());
    return (int)im.size() == dst->order();
  }

  static Homomorphism compose(const Homomorphism& second, const Homomorphism& first) {
    Homomorphism h;
    h.src = first.src;
    h.dst = second.dst;
    h.map.resize(first.map.size());
    for (size_t i = 0; i < first.map.size(); ++i) h.map[i] = second.map[first.map[i]];
    return h;
  }
};

struct QuotientResult {
  Group Q;
  std::vector<Elt> coset_of;  // element of G -> element of Q
  std::vector<Elt> rep_of;    // element of Q -> representative in G
};

inline QuotientResult quotient(const Group& g, const Subgroup& N) {
  if (!is_normal(g, N)) fail(ErrorKind::NotNormal, "quotient by non-normal subgroup");
  int n = g.order();
  std::vector<Elt> rep(n, -1);
  std::vector<Elt> reps;
  for (Elt a = 0; a < n; ++a) {
    if (rep[a] >= 0) continue;
    Elt r = a;  // smallest index in the coset since we scan upward
    for (Elt h : N.elems) rep[g.mul(a, h)] = r;
    reps.push_back(r);
  }
  int q = (int)reps.size();
  std::map<Elt, int> idx;
  for (int i = 0; i < q; ++i) idx[reps[i]] = i;
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) rows[i][j] = idx.at(rep[g.mul(reps[i], reps[j])]);
  QuotientResult out;
  out.Q = Group::from_table(rows, g.label().empty() ? "quotient" : g.label() + "/N");
  out.rep_of = reps;
  out.coset_of.resize(n);
  for (Elt a = 0; a < n; ++a) out.coset_of[a] = idx.at(rep[a]);
  return out;
}

inline Homomorphism quotient_map(const Group& g, const QuotientResult& qr) {
  Homomorphism h;
  h.src = &g;
  h.dst = &qr.Q;
  h.map = qr.coset_of;
  return h;
}

inline Group direct_product(const Group& a, const Group& b, int table_cap = 65536) {
  long long n = (long long)a.order() * b.order();
  if (n > table_cap) fail(ErrorKind::TableCapExceeded, "product order exceeds cap");
  int nb = b.order();
  std::vector<Elt> flat((size_t)n * n);
  for (int i = 0; i < (int)n; ++i)
    for (int j = 0; j < (int)n; ++j) {
      int ai = i / nb, bi = i % nb, aj = j / nb, bj = j % nb;
      flat[(size_t)i * n + j] = a.mul(ai, aj) * nb + b.mul(bi, bj);
    }
  std::string label = (a.label().empty() ? "A" : a.label()) + " x " +
                      (b.label().empty() ? "B" : b.label());
  return Group::from_table_trusted(std::move(flat), (int)n, label);
}

inline std::vector<std::pair<Elt, Elt>> commuting_pairs(const Group& g) {
  std::vector<std::pair<Elt, Elt>> out;
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = 0; b < g.order(); ++b)
      if (g.mul(a, b) == g.mul(b, a)) out.emplace_back(a, b);
  return out;
}

// All subgroups generated by a commuting pair (includes cyclic ones).
inline std::vector<Subgroup> bicyclic_subgroups(const Group& g, int order_cap = 64) {
  if (g.order() > order_cap)
    fail(ErrorKind::CapExceeded, "bicyclic enumeration cap exceeded: |G| = " +
                                     std::to_string(g.order()));
  std::set<std::vector<Elt>> seen;
  std::vector<Subgroup> out;
  for (Elt a = 0; a < g.order(); ++a)
    for (Elt b = a; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) continue;
      Subgroup s = subgroup_generated(g, {a, b});
      if (seen.insert(s.elems).second) out.push_back(std::move(s));
    }
  return out;
}

// Join-closure of the normal closures of the conjugacy classes; this is the
// full lattice of normal subgroups.
inline std::vector<Subgroup> all_normal_subgroups(const Group& g, int order_cap = 64) {
  if (g.order() > order_cap)
    fail(ErrorKind::CapExceeded,
         "normal subgroup enumeration cap exceeded: |G| = " + std::to_string(g.order()));
  std::set<std::vector<Elt>> family;
  family.insert(trivial_subgroup(g).elems);
  std::vector<std::vector<Elt>> work;
  std::vector<char> classed(g.order(), 0);
  for (Elt a = 0; a < g.order(); ++a) {
    if (classed[a]) continue;
    for (Elt x = 0; x < g.order(); ++x) classed[g.conj(a, x)] = 1;
    auto cl = normal_closure(g, {a});
    if (family.insert(cl.elems).second) work.push_back(cl.elems);
  }
  // close under pairwise join
  std::vector<std::vector<Elt>> all(family.begin(), family.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<Elt> gens = all[i];
      gens.insert(gens.end(), all[j].begin(), all[j].end());
      Subgroup join = subgroup_generated(g, gens);
      if (family.insert(join.elems).second) all.push_back(join.elems);
    }
  std::vector<Subgroup> out;
  for (auto& e : all) out.push_back(Subgroup::of(g, e));
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.elems < y.elems;
  });
  return out;
}

// All subgroups of an abelian group: join-closure of the cyclic subgroups.
inline std::vector<Subgroup> all_subgroups_abelian(const Group& g, int order_cap = 64) {
  if (!g.is_abelian()) fail(ErrorKind::NotAbelian, "subgroup enumeration requires abelian group");
  if (g.order() > order_cap) fail(ErrorKind::CapExceeded, "subgroup enumeration cap exceeded");
  std::set<std::vector<Elt>> family;
  family.insert(trivial_subgroup(g).elems);
  for (Elt a = 0; a < g.order(); ++a) family.insert(subgroup_generated(g, {a}).elems);
  std::vector<std::vector<Elt>> all(family.begin(), family.end());
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<Elt> gens = all[i];
      gens.insert(gens.end(), all[j].begin(), all[j].end());
      Subgroup join = subgroup_generated(g, gens);
      if (family.insert(join.elems).second) all.push_back(join.elems);
    }
  std::vector<Subgroup> out;
  for (auto& e : all) out.push_back(Subgroup::of(g, e));
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.elems < y.elems;
  });
  return out;
}

// All abelian subgroups of g: closure of the trivial subgroup under adjoining
// a centralizing element.
inline std::vector<Subgroup> abelian_subgroups(const Group& g, int order_cap = 64) {
  if (g.order() > order_cap)
    fail(ErrorKind::CapExceeded,
         "abelian subgroup enumeration cap exceeded: |G| = " + std::to_string(g.order()));
  std::set<std::vector<Elt>> family{trivial_subgroup(g).elems};
  std::vector<std::vector<Elt>> work{trivial_subgroup(g).elems};
  for (size_t head = 0; head < work.size(); ++head) {
    std::vector<Elt> cur = work[head];
    for (Elt x = 0; x < g.order(); ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      bool central = true;
      for (Elt a : cur)
        if (g.mul(a, x) != g.mul(x, a)) {
          central = false;
          break;
        }
      if (!central) continue;
      std::vector<Elt> gens = cur;
      gens.push_back(x);
      Subgroup ext = subgroup_generated(g, gens);
      if (family.insert(ext.elems).second) work.push_back(ext.elems);
    }
  }
  std::vector<Subgroup> out;
  for (auto& e : family) out.push_back(Subgroup::of(g, e));
  return out;
}

// Members of the family not strictly contained in another member.
inline std::vector<Subgroup> inclusion_maximal(const std::vector<Subgroup>& family) {
  std::vector<Subgroup> out;
  for (size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < family.size() && !dominated; ++j) {
      if (i == j || family[j].order() <= family[i].order()) continue;
      bool inside = true;
      for (Elt e : family[i].elems)
        if (!family[j].contains(e)) {
          inside = false;
          break;
        }
      dominated = inside;
    }
    if (!dominated) out.push_back(family[i]);
  }
  return out;
}

struct SubgroupAsGroup {
  Group H;
  std::vector<Elt> to_parent;       // element of H -> element of G
  std::vector<Elt> from_parent;     // element of G -> element of H or -1
};

inline SubgroupAsGroup subgroup_as_group(const Subgroup& s, int table_cap = 4096) {
  const Group& g = *s.G;
  int h = s.order();
  if (h > table_cap) fail(ErrorKind::TableCapExceeded, "subgroup too large to materialize");
  std::vector<Elt> from(g.order(), -1);
  for (int i = 0; i < h; ++i) from[s.elems[i]] = i;
  std::vector<Elt> flat((size_t)h * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      Elt p = g.mul(s.elems[i], s.elems[j]);
      if (from[p] < 0) fail(ErrorKind::NotClosed, "element set is not closed");
      flat[(size_t)i * h + j] = from[p];
    }
  SubgroupAsGroup out{Group::from_table_trusted(std::move(flat), h, "subgroup"), s.elems, from};
  return out;
}

// Invariant factors of an abelian subgroup via generator relations and SNF.
inline AbelianStructure abelian_invariants(const Subgroup& s) {
  const Group& g = *s.G;
  for (Elt a : s.elems)
    for (Elt b : s.elems)
      if (g.mul(a, b) != g.mul(b, a))
        fail(ErrorKind::NotAbelian, "abelian_invariants on nonabelian subgroup");
  auto gens = small_generating_set(g, s.elems);
  size_t k = gens.size();
  if (k == 0) return {};
  // BFS over the Cayley graph of the subgroup collecting relation rows
  std::map<Elt, IntRow> expr;
  std::vector<Elt> queue{g.id()};
  expr[g.id()] = IntRow(k, 0);
  IntMat relations;
  for (size_t head = 0; head < queue.size(); ++head) {
    Elt cur = queue[head];
    for (size_t i = 0; i < k; ++i) {
      Elt nxt = g.mul(cur, gens[i]);
      IntRow cand = expr[cur];
      cand[i] += 1;
      auto it = expr.find(nxt);
      if (it == expr.end()) {
        expr[nxt] = cand;
        queue.push_back(nxt);
      } else {
        IntRow rel(k);
        bool nz = false;
        for (size_t j = 0; j < k; ++j) {
          rel[j] = cand[j] - it->second[j];
          nz |= rel[j] != 0;
        }
        if (nz) relations.push_back(std::move(rel));
      }
    }
  }
  return structure_from_relations(relations, k);
}

inline AbelianStructure abelian_invariants(const Group& g) {
  return abelian_invariants(full_subgroup(g));
}

inline AbelianStructure abelianization(const Group& g) {
  auto qr = quotient(g, derived_subgroup(g));
  return abelian_invariants(qr.Q);
}

// Deterministic relabeling by a seeded permutation; fixture for invariance
// checks.
struct RelabeledGroup {
  Group g;
  std::vector<Elt> perm;  // old element -> new element, an isomorphism
};

inline RelabeledGroup relabel_with_map(const Group& g, unsigned seed) {
  int n = g.order();
  std::vector<Elt> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[p[a]][p[b]] = p[g.mul(a, b)];
  Group out = Group::from_table(rows, g.label() + " (relabeled)",
                                std::max(n, Group::kDefaultTableCap));
  return {std::move(out), std::move(p)};
}

inline Group relabel(const Group& g, unsigned seed) { return relabel_with_map(g, seed).g; }

// Order profile: multiset of element orders.  Equal profiles are necessary
// for isomorphism; used as a cheap screen.
inline std::vector<int> order_profile(const Group& g) {
  std::vector<int> prof(g.order());
  for (Elt a = 0; a < g.order(); ++a) prof[a] = g.elt_order(a);
  std::sort(prof.begin(), prof.end());
  return prof;
}

// Exhaustive isomorphism test for small groups via generator image search.
inline bool is_isomorphic_bruteforce(const Group& A, const Group& B, int order_cap = 24) {
  if (A.order() != B.order()) return false;
  if (A.order() > order_cap) fail(ErrorKind::CapExceeded, "isomorphism search cap exceeded");
  if (order_profile(A) != order_profile(B)) return false;
  std::vector<Elt> all(A.order());
  std::iota(all.begin(), all.end(), 0);
  auto gens = small_generating_set(A, all);
  size_t k = gens.size();
  if (k == 0) return B.order() == 1;
  // express every element of A as a word in the generators (BFS)
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
  std::vector<Elt> img(k, 0);
  std::vector<std::vector<Elt>> candidates(k);
  for (size_t i = 0; i < k; ++i) {
    int o = A.elt_order(gens[i]);
    for (Elt b = 0; b < B.order(); ++b)
      if (B.elt_order(b) == o) candidates[i].push_back(b);
    if (candidates[i].empty()) return false;
  }
  std::vector<size_t> pos(k, 0);
  while (true) {
    for (size_t i = 0; i < k; ++i) img[i] = candidates[i][pos[i]];
    // build the induced map and check it
    std::vector<Elt> f(A.order());
    for (Elt a = 0; a < A.order(); ++a) {
      Elt x = B.id();
      for (int gi : word[a]) x = B.mul(x, img[gi]);
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
    if (ok) return true;
    size_t i = 0;
    while (i < k && ++pos[i] == candidates[i].size()) pos[i++] = 0;
    if (i == k) return false;
  }
}

}  // namespace vb0
