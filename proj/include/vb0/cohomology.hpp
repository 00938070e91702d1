#pragma once
// Normalized 2-cocycle linear algebra over Z/N. The Schur multiplier falls
// out as cocycles modulo coboundaries and carry classes (connecting images of
// homs into Z/N), and B0 as the classes whose restriction to every abelian
// subgroup in a chosen family dies the same way.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vb0/abelian.hpp"
#include "vb0/group.hpp"

namespace vb0 {

constexpr int kCohomologyOrderCap = 32;

// Coordinates for normalized 2-cochains: one slot per ordered pair of
// non-identity elements; f(1,.) = f(.,1) = 0 by omission.
struct PairCoords {
  int n = 0;
  int m = 0;
  std::vector<int> coord_of;                 // x*n+y -> coordinate, -1 on identity pairs
  std::vector<std::pair<Elt, Elt>> pair_at;  // coordinate -> (x, y)

  static PairCoords of(const Group& g) {
    PairCoords pc;
    pc.n = g.order();
    pc.coord_of.assign((size_t)pc.n * pc.n, -1);
    for (Elt x = 0; x < pc.n; ++x)
      for (Elt y = 0; y < pc.n; ++y) {
        if (x == g.id() || y == g.id()) continue;
        pc.coord_of[(size_t)x * pc.n + y] = pc.m++;
        pc.pair_at.emplace_back(x, y);
      }
    return pc;
  }
  int at(Elt x, Elt y) const { return coord_of[(size_t)x * n + y]; }
};

namespace detail {

inline std::vector<std::pair<long long, int>> prime_power_split(long long N) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= N; ++p)
    if (N % p == 0) {
      int e = 0;
      while (N % p == 0) N /= p, ++e;
      out.emplace_back(p, e);
    }
  if (N > 1) out.emplace_back(N, 1);
  return out;
}

struct RightKernel {
  std::vector<modring::Row> basis;
  long long logp = 0;  // valuation of the kernel size, certified
};

// Right kernel {v : Av = 0} of the listed rows, via column insertion with
// coefficient tracking. Completeness comes from |colspace| * |kernel| = q^w.
inline RightKernel right_kernel(const std::vector<modring::Row>& rows, size_t width,
                                const modring::ChainRing& R) {
  modring::RowReducer red(R, rows.size(), width);
  for (size_t j = 0; j < width; ++j) {
    modring::Row col(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
    red.insert_original(std::move(col), j);
  }
  RightKernel out;
  out.basis = red.kernel_rows();
  out.logp = (long long)width * R.e;
  for (int v : red.pivot_vals()) out.logp -= R.e - v;
  return out;
}

// Generating homs G -> Z/p^e as value rows over all of G, verified pointwise.
inline std::vector<modring::Row> hom_value_rows(const Group& g, const modring::ChainRing& R) {
  int n = g.order();
  std::vector<Elt> nonid;
  for (Elt a = 0; a < n; ++a)
    if (a != g.id()) nonid.push_back(a);
  std::vector<int> u_of(n, -1);
  for (size_t i = 0; i < nonid.size(); ++i) u_of[nonid[i]] = (int)i;
  size_t u = nonid.size();
  modring::RowReducer red(R, u);
  for (Elt a : nonid)
    for (Elt b : nonid) {
      modring::Row row(u, 0);
      row[u_of[a]] += 1;
      row[u_of[b]] += 1;
      Elt ab = g.mul(a, b);
      if (ab != g.id()) row[u_of[ab]] -= 1;
      red.insert_plain(std::move(row));
    }
  std::vector<modring::Row> homs;
  for (auto& s : right_kernel(red.pivot_rows(), u, R).basis) {
    modring::Row full(n, 0);
    for (size_t i = 0; i < u; ++i) full[nonid[i]] = R.norm(s[i]);
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        if (R.norm(full[a] + full[b] - full[g.mul(a, b)]) != 0)
          fail(ErrorKind::InternalDisagreement, "hom solver returned a non-hom");
    homs.push_back(std::move(full));
  }
  return homs;
}

inline std::vector<modring::Row> coboundary_rows(const Group& g, const PairCoords& pc,
                                                 const modring::ChainRing& R) {
  std::vector<modring::Row> rows;
  for (Elt t = 0; t < g.order(); ++t) {
    if (t == g.id()) continue;
    modring::Row row(pc.m, 0);
    for (int c = 0; c < pc.m; ++c) {
      auto [x, y] = pc.pair_at[c];
      long long v = (x == t) + (y == t);
      if (g.mul(x, y) == t) v -= 1;
      row[c] = R.norm(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Carry of adding integer lifts of a hom: the connecting image in H^2.
inline modring::Row carry_row(const Group& g, const PairCoords& pc, const modring::ChainRing& R,
                              const modring::Row& hom) {
  modring::Row row(pc.m, 0);
  for (int c = 0; c < pc.m; ++c) {
    auto [x, y] = pc.pair_at[c];
    long long t = hom[x] + hom[y] - hom[g.mul(x, y)];
    if (t != 0 && t != R.q) fail(ErrorKind::InternalDisagreement, "carry of a non-hom");
    row[c] = t / R.q;
  }
  return row;
}

inline bool cocycle_ok(const Group& g, const PairCoords& pc, const modring::ChainRing& R,
                       const modring::Row& f) {
  auto get = [&](Elt x, Elt y) -> long long {
    int c = pc.at(x, y);
    return c < 0 ? 0 : f[c];
  };
  for (Elt x = 0; x < g.order(); ++x)
    for (Elt y = 0; y < g.order(); ++y)
      for (Elt z = 0; z < g.order(); ++z)
        if (R.norm(get(x, y) + get(g.mul(x, y), z) - get(y, z) - get(x, g.mul(y, z))) != 0)
          return false;
  return true;
}

struct CocycleKernel {
  std::vector<modring::Row> basis;
  long long z_logp = 0;
};

// Solutions of the cocycle identity. The constraint block only quantifies the
// third slot over a generating set; the result is verified on every triple.
inline CocycleKernel cocycle_kernel(const Group& g, const PairCoords& pc,
                                    const modring::ChainRing& R) {
  int n = g.order();
  std::vector<Elt> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<Elt> gens = small_generating_set(g, all);
  modring::RowReducer red(R, pc.m);
  modring::Row row(pc.m);
  for (Elt x = 0; x < n; ++x) {
    if (x == g.id()) continue;
    for (Elt y = 0; y < n; ++y) {
      if (y == g.id()) continue;
      for (Elt s : gens) {
        if (s == g.id()) continue;
        std::fill(row.begin(), row.end(), 0);
        auto add = [&](Elt a, Elt b, long long c) {
          int idx = pc.at(a, b);
          if (idx >= 0) row[idx] = R.norm(row[idx] + c);
        };
        add(x, y, 1);
        add(g.mul(x, y), s, 1);
        add(y, s, -1);
        add(x, g.mul(y, s), -1);
        red.insert_plain(row);
      }
    }
  }
  RightKernel rk = right_kernel(red.pivot_rows(), pc.m, R);
  for (auto& f : rk.basis)
    if (!cocycle_ok(g, pc, R, f))
      fail(ErrorKind::InternalDisagreement, "restricted cocycle system admits a non-cocycle");
  return {std::move(rk.basis), rk.logp};
}

}  // namespace detail

struct CocycleBlock {
  modring::ChainRing ring;
  std::vector<modring::Row> kernel_basis;
  std::vector<modring::Row> coboundary_basis;
  std::vector<modring::Row> carry_basis;
  std::vector<modring::Row> hom_rows;  // generating homs as value rows over G
  long long hom_count = 1;             // |Hom(G, Z/p^e)|
  long long h2 = 1;                    // |H^2(G, Z/p^e)|
};

struct CocycleSpace {
  const Group* G = nullptr;
  long long N = 1;
  PairCoords coords;
  std::vector<CocycleBlock> blocks;  // one per prime power in N
  long long h2_order = 1;            // |H^2(G, Z/N)|
  long long hom_order = 1;           // |Hom(G, Z/N)|
};

inline CocycleSpace cocycle_space(const Group& g, long long N = 0,
                                  int order_cap = kCohomologyOrderCap) {
  int n = g.order();
  if (n > order_cap)
    fail(ErrorKind::CapExceeded, "cohomology cap exceeded: |G| = " + std::to_string(n));
  CocycleSpace cs;
  cs.G = &g;
  cs.N = N ? N : n;
  if (cs.N < 1) fail(ErrorKind::BadElement, "modulus must be positive");
  cs.coords = PairCoords::of(g);
  for (auto [p, e] : detail::prime_power_split(cs.N)) {
    modring::ChainRing R(p, e);
    CocycleBlock b{R};
    auto ck = detail::cocycle_kernel(g, cs.coords, R);
    b.kernel_basis = std::move(ck.basis);
    b.coboundary_basis = detail::coboundary_rows(g, cs.coords, R);
    b.hom_rows = detail::hom_value_rows(g, R);
    for (auto& h : b.hom_rows) b.carry_basis.push_back(detail::carry_row(g, cs.coords, R, h));
    for (auto& r : b.coboundary_basis)
      if (!detail::cocycle_ok(g, cs.coords, R, r))
        fail(ErrorKind::InternalDisagreement, "coboundary fails the cocycle identity");
    for (auto& r : b.carry_basis)
      if (!detail::cocycle_ok(g, cs.coords, R, r))
        fail(ErrorKind::InternalDisagreement, "carry class fails the cocycle identity");

    modring::RowReducer bred(R, cs.coords.m);
    for (auto& r : b.coboundary_basis) bred.insert_plain(r);
    long long b_logp = 0;
    for (int v : bred.pivot_vals()) b_logp += R.e - v;
    if (ck.z_logp < b_logp)
      fail(ErrorKind::InternalDisagreement, "coboundary space exceeds the cocycle space");
    b.h2 = ipow(p, (int)(ck.z_logp - b_logp));

    modring::RowReducer hred(R, n);
    for (auto& h : b.hom_rows) hred.insert_plain(h);
    b.hom_count = 1;
    for (int v : hred.pivot_vals()) b.hom_count *= ipow(p, R.e - v);

    cs.h2_order *= b.h2;
    cs.hom_order *= b.hom_count;
    cs.blocks.push_back(std::move(b));
  }
  return cs;
}

// Cocycles modulo coboundaries and carries, per prime: the Schur multiplier.
inline AbelianStructure multiplier_from_cohomology(const Group& g,
                                                   int order_cap = kCohomologyOrderCap) {
  CocycleSpace cs = cocycle_space(g, 0, order_cap);
  std::vector<long long> factors;
  for (auto& b : cs.blocks) {
    std::vector<modring::Row> t = b.coboundary_basis;
    t.insert(t.end(), b.carry_basis.begin(), b.carry_basis.end());
    for (long long f : modring::quotient_factors(b.kernel_basis, t, cs.coords.m, b.ring))
      factors.push_back(f);
  }
  return AbelianStructure::canonical(factors);
}

enum class B0Mode { Bicyclic, AllAbelian };

inline const char* mode_name(B0Mode m) { return m == B0Mode::Bicyclic ? "bicyclic" : "all-abelian"; }

struct B0Block {
  modring::ChainRing ring;
  std::vector<modring::Row> s_basis;   // full cocycle solution space
  std::vector<modring::Row> t_rows;    // coboundaries + carries
  std::vector<modring::Row> b0_basis;  // classes restricting trivially to the family
};

struct B0Data {
  PairCoords coords;
  std::vector<Subgroup> family;  // inclusion-maximal members actually used
  std::vector<B0Block> blocks;
};

// A class dies on A iff its restriction lies in A's coboundary+carry span;
// membership is linearized through the annihilator of that span.
inline B0Data b0_blocks(const Group& g, B0Mode mode, int order_cap = kCohomologyOrderCap) {
  int n = g.order();
  if (n > order_cap)
    fail(ErrorKind::CapExceeded, "cohomology cap exceeded: |G| = " + std::to_string(n));
  B0Data d;
  d.coords = PairCoords::of(g);
  d.family = inclusion_maximal(mode == B0Mode::Bicyclic ? bicyclic_subgroups(g, order_cap)
                                                        : abelian_subgroups(g, order_cap));
  struct Mat {
    SubgroupAsGroup sg;
    PairCoords pc;
  };
  std::vector<Mat> mats;
  for (auto& A : d.family) {
    Mat m{subgroup_as_group(A), {}};
    m.pc = PairCoords::of(m.sg.H);
    mats.push_back(std::move(m));
  }
  for (auto [p, e] : detail::prime_power_split(n)) {
    modring::ChainRing R(p, e);
    B0Block blk{R};
    blk.s_basis = detail::cocycle_kernel(g, d.coords, R).basis;
    blk.t_rows = detail::coboundary_rows(g, d.coords, R);
    for (auto& h : detail::hom_value_rows(g, R))
      blk.t_rows.push_back(detail::carry_row(g, d.coords, R, h));

    size_t r = blk.s_basis.size();
    modring::RowReducer cons(R, r);
    for (auto& M : mats) {
      auto urows = detail::coboundary_rows(M.sg.H, M.pc, R);
      for (auto& h : detail::hom_value_rows(M.sg.H, R))
        urows.push_back(detail::carry_row(M.sg.H, M.pc, R, h));
      modring::RowReducer ured(R, M.pc.m);
      for (auto& u : urows) ured.insert_plain(std::move(u));
      for (auto& w : detail::right_kernel(ured.pivot_rows(), M.pc.m, R).basis) {
        modring::Row crow(r, 0);
        for (size_t i = 0; i < r; ++i) {
          long long acc = 0;
          for (int c = 0; c < M.pc.m; ++c) {
            auto [a, b] = M.pc.pair_at[c];
            acc += w[c] * blk.s_basis[i][d.coords.at(M.sg.to_parent[a], M.sg.to_parent[b])];
          }
          crow[i] = R.norm(acc);
        }
        cons.insert_plain(std::move(crow));
      }
    }
    for (auto& t : detail::right_kernel(cons.pivot_rows(), r, R).basis) {
      modring::Row row(d.coords.m, 0);
      for (size_t i = 0; i < r; ++i) {
        long long ti = R.norm(t[i]);
        if (ti == 0) continue;
        for (int c = 0; c < d.coords.m; ++c)
          row[c] = R.norm(row[c] + ti * blk.s_basis[i][c]);
      }
      blk.b0_basis.push_back(std::move(row));
    }
    d.blocks.push_back(std::move(blk));
  }
  return d;
}

struct B0Result {
  AbelianStructure M_structure;
  AbelianStructure B0_structure;
  B0Mode mode = B0Mode::Bicyclic;
};

inline B0Result b0_cohomological(const Group& g, B0Mode mode = B0Mode::Bicyclic,
                                 int order_cap = kCohomologyOrderCap) {
  B0Data d = b0_blocks(g, mode, order_cap);
  std::vector<long long> mf, bf;
  for (auto& blk : d.blocks) {
    for (long long f : modring::quotient_factors(blk.s_basis, blk.t_rows, d.coords.m, blk.ring))
      mf.push_back(f);
    for (long long f : modring::quotient_factors(blk.b0_basis, blk.t_rows, d.coords.m, blk.ring))
      bf.push_back(f);
  }
  B0Result r;
  r.M_structure = AbelianStructure::canonical(mf);
  r.B0_structure = AbelianStructure::canonical(bf);
  r.mode = mode;
  return r;
}

// Brute-force |H^2(G, Z/N)| over every normalized 2-cochain. Tiny groups only.
inline long long exhaustive_h2_oracle(const Group& g, long long N,
                                      long long state_cap = 1LL << 24) {
  if (N < 1) fail(ErrorKind::BadElement, "modulus must be positive");
  PairCoords pc = PairCoords::of(g);
  long long states = 1;
  for (int i = 0; i < pc.m; ++i) {
    if (states > state_cap / N)
      fail(ErrorKind::CapExceeded, "exhaustive H2 state space too large");
    states *= N;
  }
  int n = g.order();
  auto is_cocycle = [&](const std::vector<long long>& f) {
    auto get = [&](Elt x, Elt y) -> long long {
      int c = pc.at(x, y);
      return c < 0 ? 0 : f[c];
    };
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        for (Elt z = 0; z < n; ++z) {
          long long v = get(x, y) + get(g.mul(x, y), z) - get(y, z) - get(x, g.mul(y, z));
          if ((v % N + N) % N != 0) return false;
        }
    return true;
  };
  long long z_count = 0;
  std::vector<long long> f(pc.m, 0);
  while (true) {
    if (is_cocycle(f)) ++z_count;
    int i = 0;
    while (i < pc.m && ++f[i] == N) f[i++] = 0;
    if (i == pc.m) break;
  }
  // distinct coboundaries of normalized 1-cochains
  std::set<std::vector<long long>> bset;
  std::vector<long long> phi(n, 0);
  std::vector<Elt> nonid;
  for (Elt a = 0; a < n; ++a)
    if (a != g.id()) nonid.push_back(a);
  while (true) {
    std::vector<long long> df(pc.m, 0);
    for (int c = 0; c < pc.m; ++c) {
      auto [x, y] = pc.pair_at[c];
      long long v = phi[x] + phi[y] - phi[g.mul(x, y)];
      df[c] = (v % N + N) % N;
    }
    bset.insert(std::move(df));
    size_t i = 0;
    while (i < nonid.size() && ++phi[nonid[i]] == N) phi[nonid[i++]] = 0;
    if (i == nonid.size()) break;
  }
  return z_count / (long long)bset.size();
}

}  // namespace vb0
