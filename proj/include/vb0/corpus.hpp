#pragma once
// Built-in group families and the bundled corpus.

#include <string>
#include <vector>

#include "vb0/group.hpp"
#include "vb0/io.hpp"

namespace vb0 {

inline Group cyclic_group(int n, std::string label = "") {
  if (n < 1) fail(ErrorKind::BadElement, "cyclic order must be positive");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return Group::from_table(rows, label.empty() ? "c" + std::to_string(n) : label);
}

// Order 2m: r^i s^j with idx = j*m + i.
inline Group dihedral_group(int order, std::string label = "") {
  if (order < 2 || order % 2) fail(ErrorKind::BadElement, "dihedral order must be even");
  int m = order / 2;
  auto idx = [m](int i, int j) { return j * m + ((i % m + m) % m); };
  std::vector<std::vector<int>> rows(order, std::vector<int>(order));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l)
          rows[idx(i, j)][idx(k, l)] = idx(j ? i - k : i + k, j ^ l);
  return Group::from_table(rows, label.empty() ? "d" + std::to_string(order) : label);
}

// Order 4m: a^(2m) = 1, b^2 = a^m, a^b = a^-1; idx = j*2m + i for a^i b^j.
inline Group dicyclic_group(int m, std::string label = "") {
  if (m < 2) fail(ErrorKind::BadElement, "dicyclic parameter must be at least 2");
  int n = 2 * m;
  auto idx = [n](int i, int j) { return j * n + ((i % n + n) % n); };
  std::vector<std::vector<int>> rows(4 * m, std::vector<int>(4 * m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int e = j ? i - k : i + k;
          if (j && l) e += m;
          rows[idx(i, j)][idx(k, l)] = idx(e, j ^ l);
        }
  return Group::from_table(rows, label.empty() ? "dic" + std::to_string(m) : label);
}

inline Group quaternion_group(int order, std::string label = "") {
  if (order % 4 || order < 8) fail(ErrorKind::BadElement, "generalized quaternion order must be 4m, m >= 2");
  return dicyclic_group(order / 4, label.empty() ? "q" + std::to_string(order) : label);
}

inline Group symmetric_group(int k, std::string label = "") {
  if (k < 1) fail(ErrorKind::BadElement, "bad symmetric degree");
  std::vector<Permutation> gens;
  Permutation swap = Permutation::identity(k), cyc = Permutation::identity(k);
  if (k >= 2) {
    std::swap(swap.img[0], swap.img[1]);
    for (int i = 0; i < k; ++i) cyc.img[i] = (i + 1) % k;
    gens = {swap, cyc};
  } else {
    gens = {swap};
  }
  return Group::from_permutations(k, gens, label.empty() ? "s" + std::to_string(k) : label);
}

inline Group alternating_group(int k, std::string label = "") {
  if (k < 3) fail(ErrorKind::BadElement, "bad alternating degree");
  Permutation a = Permutation::identity(k), b = Permutation::identity(k);
  a.img[0] = 1; a.img[1] = 2; a.img[2] = 0;
  if (k % 2) {
    for (int i = 0; i < k; ++i) b.img[i] = (i + 1) % k;
  } else {
    for (int i = 1; i < k; ++i) b.img[i] = i % (k - 1) + 1;
  }
  return Group::from_permutations(k, {a, b}, label.empty() ? "a" + std::to_string(k) : label);
}

inline Group elementary_abelian(int p, int k, std::string label = "") {
  if (p < 2 || k < 0) fail(ErrorKind::BadElement, "bad elementary abelian parameters");
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int out = 0, pw = 1, x = a, y = b;
      for (int i = 0; i < k; ++i) {
        out += ((x + y) % p) * pw;
        x /= p; y /= p; pw *= p;
      }
      rows[a][b] = out;
    }
  return Group::from_table(rows, label.empty()
                                     ? "elemab" + std::to_string(p) + "_" + std::to_string(k)
                                     : label);
}

// C8 : C2 with a^b = a^5; idx = j*8 + i for a^i b^j.
inline Group modular16(std::string label = "mod16") {
  auto idx = [](int i, int j) { return j * 8 + ((i % 8 + 8) % 8); };
  std::vector<std::vector<int>> rows(16, std::vector<int>(16));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 8; ++k)
        for (int l = 0; l < 2; ++l)
          rows[idx(i, j)][idx(k, l)] = idx(i + (j ? 5 * k : k), (j + l) % 2);
  return Group::from_table(rows, label);
}

inline Group renamed(const Group& g, std::string label) {
  return Group::from_table_trusted(g.flat_table(), g.order(), std::move(label));
}

inline Elt central_involution(const Group& g) {
  Subgroup z = center(g);
  for (Elt x : z.elems)
    if (x != g.id() && g.elt_order(x) == 2) return x;
  fail(ErrorKind::BadElement, "no central involution");
}

// Quotient of A x B identifying the central involutions.
inline Group central_product(const Group& a, const Group& b, std::string label) {
  Group p = direct_product(a, b);
  Elt za = central_involution(a), zb = central_involution(b);
  Subgroup d = subgroup_generated(p, {(Elt)(za * b.order() + zb)});
  QuotientResult q = quotient(p, d);
  return renamed(q.Q, label);
}

inline Group extraspecial32_plus(std::string label = "es32p") {
  return central_product(dihedral_group(8), dihedral_group(8), label);
}

inline Group extraspecial32_minus(std::string label = "es32m") {
  return central_product(dihedral_group(8), quaternion_group(8), label);
}

// Heisenberg group over Z/4: triples (a,b,c), (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
inline Group heisenberg4(std::string label = "heis4") {
  auto idx = [](int a, int b, int c) { return a * 16 + b * 4 + c; };
  std::vector<std::vector<int>> rows(64, std::vector<int>(64));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int x = 0; x < 4; ++x)
          for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z)
              rows[idx(a, b, c)][idx(x, y, z)] =
                  idx((a + x) % 4, (b + y) % 4, (c + z + a * y) % 4);
  return Group::from_table(rows, label);
}

// Upper unitriangular 4x4 matrices over F2 acting on column vectors in F2^4.
inline Group unitriangular4(std::string label = "ut4f2") {
  std::vector<Permutation> gens;
  for (int i = 0; i + 1 < 4; ++i) {
    Permutation p = Permutation::identity(16);
    for (int v = 0; v < 16; ++v) p.img[v] = v ^ (((v >> (i + 1)) & 1) << i);
    gens.push_back(p);
  }
  return Group::from_permutations(16, gens, label);
}

// Central extension of F2^dv by F2^du twisted by a bilinear map F: the entry
// F[i][j] is a dv-bit mask, f(u,u') = xor of F[i][j] over bits i of u, j of u'.
inline Group special2_group(int du, int dv, const std::vector<std::vector<int>>& F,
                            std::string label) {
  if ((int)F.size() != du) fail(ErrorKind::BadElement, "bilinear matrix shape");
  int nu = 1 << du, nv = 1 << dv, n = nu * nv;
  std::vector<int> f(nu * nu, 0);
  for (int u = 0; u < nu; ++u)
    for (int w = 0; w < nu; ++w) {
      int acc = 0;
      for (int i = 0; i < du; ++i)
        if ((u >> i) & 1)
          for (int j = 0; j < du; ++j)
            if ((w >> j) & 1) acc ^= F[i][j];
      f[u * nu + w] = acc;
    }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int u = 0; u < nu; ++u)
    for (int v = 0; v < nv; ++v)
      for (int x = 0; x < nu; ++x)
        for (int y = 0; y < nv; ++y)
          rows[u * nv + v][x * nv + y] = (u ^ x) * nv + (v ^ y ^ f[u * nu + x]);
  return Group::from_table(rows, label, std::max(n, Group::kDefaultTableCap));
}

// The groups shipped with the tool. Filenames carry the storage format;
// perm entries double as parser coverage for the cycle notation reader.
inline std::vector<std::pair<std::string, Group>> bundled_corpus() {
  auto pad = [](int n) { return (n < 10 ? "0" : "") + std::to_string(n); };
  std::vector<std::pair<std::string, Group>> out;
  for (int n = 1; n <= 32; ++n)
    out.push_back({"c" + pad(n) + ".mtable", cyclic_group(n, "c" + std::to_string(n))});
  out.push_back({"elemab04.mtable", elementary_abelian(2, 2, "elemab4")});
  out.push_back({"elemab08.mtable", elementary_abelian(2, 3, "elemab8")});
  out.push_back({"elemab16.mtable", elementary_abelian(2, 4, "elemab16")});
  out.push_back({"klein.perm", elementary_abelian(2, 2, "klein")});
  for (int n = 6; n <= 32; n += 2)
    out.push_back({"d" + pad(n) + ".mtable", dihedral_group(n, "d" + std::to_string(n))});
  out.push_back({"q08.mtable", quaternion_group(8, "q8")});
  out.push_back({"q16.mtable", quaternion_group(16, "q16")});
  out.push_back({"s3.perm", symmetric_group(3, "s3")});
  out.push_back({"s4.perm", symmetric_group(4, "s4")});
  out.push_back({"a4.perm", alternating_group(4, "a4")});
  out.push_back({"dic3.mtable", dicyclic_group(3, "dic3")});
  out.push_back({"mod16.mtable", modular16()});
  out.push_back({"es32p.mtable", extraspecial32_plus()});
  out.push_back({"es32m.mtable", extraspecial32_minus()});
  out.push_back({"c2q8.mtable", renamed(direct_product(cyclic_group(2), quaternion_group(8)),
                                        "c2q8")});
  out.push_back({"heis4.mtable", heisenberg4()});
  out.push_back({"ut4f2.mtable", unitriangular4()});
  out.push_back({"sp64a.mtable",
                 special2_group(4, 2,
                                {{1, 0, 2, 3}, {0, 1, 1, 2}, {0, 0, 1, 0}, {0, 0, 0, 0}},
                                "sp64a")});
  return out;
}

inline void write_bundled_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  for (const auto& [name, g] : bundled_corpus()) {
    bool perm = name.size() > 5 && name.substr(name.size() - 5) == ".perm";
    std::string body = perm ? write_group_perm(g) : write_group_mtable(g);
    write_text_file((fs::path(dir) / name).string(), "# label: " + g.label() + "\n" + body);
  }
}

}  // namespace vb0
