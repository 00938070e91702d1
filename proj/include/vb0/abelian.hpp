#pragma once

// Structure computations for finite abelian groups: integer Smith normal
// form (arbitrary precision), integer lattice quotients, and a faster
// elimination path over Z/p^e used by the cohomology engine.  The two paths
// are independent and cross-checked in the test suite.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"

namespace vb0 {

using BigInt = boost::multiprecision::cpp_int;

// Invariant factor list d1 | d2 | ... | dk, each > 1.  Empty = trivial group.
struct AbelianStructure {
  std::vector<long long> factors;

  bool trivial() const { return factors.empty(); }
  long long order() const {
    long long o = 1;
    for (long long d : factors) o *= d;
    return o;
  }
  bool operator==(const AbelianStructure& o) const { return factors == o.factors; }
  bool operator!=(const AbelianStructure& o) const { return !(*this == o); }

  std::string str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << " x ";
      os << "C" << factors[i];
    }
    return os.str();
  }

  // Build the canonical chain from an arbitrary factor list (order preserved
  // up to isomorphism, factors <= 1 dropped).
  static AbelianStructure canonical(const std::vector<long long>& raw);
  // Direct sum.
  static AbelianStructure merge(const AbelianStructure& a, const AbelianStructure& b) {
    std::vector<long long> all = a.factors;
    all.insert(all.end(), b.factors.begin(), b.factors.end());
    return canonical(all);
  }
};

namespace detail {

inline void factorize(long long n, std::map<long long, std::vector<int>>& acc) {
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    acc[p].push_back(e);
  }
  if (n > 1) acc[n].push_back(1);
}

}  // namespace detail

inline AbelianStructure AbelianStructure::canonical(const std::vector<long long>& raw) {
  std::map<long long, std::vector<int>> primary;
  for (long long d : raw) {
    if (d > 1) detail::factorize(d, primary);
  }
  size_t rank = 0;
  for (auto& [p, es] : primary) {
    std::sort(es.begin(), es.end(), std::greater<int>());
    rank = std::max(rank, es.size());
  }
  std::vector<long long> chain(rank, 1);
  for (auto& [p, es] : primary)
    for (size_t i = 0; i < es.size(); ++i) chain[i] *= ipow(p, es[i]);
  std::reverse(chain.begin(), chain.end());
  AbelianStructure s;
  s.factors = chain;
  return s;
}

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form.

using IntRow = std::vector<BigInt>;
using IntMat = std::vector<IntRow>;

namespace detail {

inline void snf_swap_rows(IntMat& m, size_t a, size_t b) { std::swap(m[a], m[b]); }
inline void snf_swap_cols(IntMat& m, size_t a, size_t b) {
  for (auto& r : m) std::swap(r[a], r[b]);
}

}  // namespace detail

// Diagonal of the Smith normal form, including zeros, length min(rows, cols).
inline std::vector<BigInt> smith_normal_form(IntMat m) {
  size_t nr = m.size(), nc = nr ? m[0].size() : 0;
  size_t t = 0;
  size_t lim = std::min(nr, nc);
  while (t < lim) {
    // locate pivot: least |entry| in the trailing submatrix
    size_t pi = nr, pj = nc;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < nc; ++j) {
        if (m[i][j] == 0) continue;
        if (pi == nr || abs(m[i][j]) < abs(m[pi][pj])) pi = i, pj = j;
      }
    if (pi == nr) break;  // all zero
    detail::snf_swap_rows(m, t, pi);
    detail::snf_swap_cols(m, t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < nr; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (size_t j = t; j < nc; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          detail::snf_swap_rows(m, t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < nc; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (size_t i = t; i < nr; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          detail::snf_swap_cols(m, t, j);
          dirty = true;
        }
      }
      if (!dirty) {
        // pivot must divide the rest of the submatrix
        for (size_t i = t + 1; i < nr && !dirty; ++i)
          for (size_t j = t + 1; j < nc && !dirty; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (size_t c = t; c < nc; ++c) m[t][c] += m[i][c];
              dirty = true;
            }
      }
    }
    ++t;
  }
  std::vector<BigInt> diag;
  for (size_t i = 0; i < lim; ++i) diag.push_back(i < t ? abs(m[i][i]) : BigInt(0));
  return diag;
}

// Structure of Z^ngens / rowspan(relations).  Errors if the quotient is
// infinite (rank of relations below ngens).
inline AbelianStructure structure_from_relations(const IntMat& relations, size_t ngens) {
  if (ngens == 0) return {};
  IntMat m = relations;
  for (auto& r : m)
    if (r.size() != ngens) fail(ErrorKind::InconsistentSpan, "relation width mismatch");
  auto diag = smith_normal_form(m);
  size_t rank = 0;
  std::vector<long long> factors;
  for (auto& d : diag)
    if (d != 0) ++rank;
  if (rank < ngens) fail(ErrorKind::InconsistentSpan, "relation lattice has infinite quotient");
  for (auto& d : diag)
    if (d > 1) factors.push_back(d.convert_to<long long>());
  return AbelianStructure::canonical(factors);
}

namespace detail {

// Triangular basis (pivot columns strictly increasing) of the row span.
inline IntMat triangular_basis(IntMat rows, size_t m) {
  IntMat basis;
  for (size_t c = 0; c < m; ++c) {
    // gather rows with support starting at column c
    std::vector<size_t> live;
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i][c] != 0) live.push_back(i);
    if (live.empty()) continue;
    // gcd-fold onto a single row
    while (live.size() > 1) {
      std::sort(live.begin(), live.end(), [&](size_t a, size_t b) {
        return abs(rows[a][c]) < abs(rows[b][c]);
      });
      size_t a = live[0];
      bool all_zero = true;
      for (size_t k = 1; k < live.size(); ++k) {
        size_t b = live[k];
        BigInt q = rows[b][c] / rows[a][c];
        for (size_t j = c; j < m; ++j) rows[b][j] -= q * rows[a][j];
        if (rows[b][c] != 0) all_zero = false;
      }
      std::vector<size_t> next{live[0]};
      for (size_t k = 1; k < live.size(); ++k)
        if (rows[live[k]][c] != 0) next.push_back(live[k]);
      live = next;
      if (all_zero) break;
    }
    size_t piv = live[0];
    if (rows[piv][c] < 0)
      for (size_t j = c; j < m; ++j) rows[piv][j] = -rows[piv][j];
    basis.push_back(rows[piv]);
    for (size_t j = 0; j < m; ++j) rows[piv][j] = 0;
  }
  return basis;
}

}  // namespace detail

// Structure of span(numerator) / span(denominator) for integer row lattices
// in Z^m.  Requires denominator span contained in numerator span and the
// quotient finite; otherwise raises InconsistentSpan.
inline AbelianStructure quotient_structure(const IntMat& numerator, const IntMat& denominator,
                                           size_t m) {
  IntMat num = numerator, den = denominator;
  for (auto& r : num)
    if (r.size() != m) fail(ErrorKind::InconsistentSpan, "numerator width mismatch");
  for (auto& r : den)
    if (r.size() != m) fail(ErrorKind::InconsistentSpan, "denominator width mismatch");
  IntMat basis = detail::triangular_basis(num, m);
  size_t r = basis.size();
  if (r == 0) {
    if (!den.empty())
      for (auto& row : den)
        for (auto& x : row)
          if (x != 0) fail(ErrorKind::InconsistentSpan, "denominator not inside numerator span");
    return {};
  }
  std::vector<size_t> pivcol(r);
  for (size_t i = 0; i < r; ++i) {
    size_t c = 0;
    while (basis[i][c] == 0) ++c;
    pivcol[i] = c;
  }
  // express each denominator row in the basis
  IntMat coeffs;
  for (auto row : den) {
    IntRow y(r, 0);
    for (size_t i = 0; i < r; ++i) {
      BigInt v = row[pivcol[i]];
      if (v % basis[i][pivcol[i]] != 0)
        fail(ErrorKind::InconsistentSpan, "denominator not inside numerator span");
      BigInt q = v / basis[i][pivcol[i]];
      y[i] = q;
      if (q != 0)
        for (size_t j = pivcol[i]; j < m; ++j) row[j] -= q * basis[i][j];
    }
    for (auto& x : row)
      if (x != 0) fail(ErrorKind::InconsistentSpan, "denominator not inside numerator span");
    coeffs.push_back(y);
  }
  auto diag = smith_normal_form(coeffs);
  size_t rank = 0;
  for (auto& d : diag)
    if (d != 0) ++rank;
  if (rank < r) fail(ErrorKind::InconsistentSpan, "quotient of spans is infinite");
  std::vector<long long> factors;
  for (auto& d : diag)
    if (d > 1) factors.push_back(d.convert_to<long long>());
  return AbelianStructure::canonical(factors);
}

// ---------------------------------------------------------------------------
// Elimination over the chain ring Z/p^e.  Every element is unit * p^v, which
// keeps pivoting exact without rational arithmetic.

namespace modring {

struct ChainRing {
  long long p;
  int e;
  long long q;  // p^e

  ChainRing(long long p_, int e_) : p(p_), e(e_), q(ipow(p_, e_)) {}

  long long norm(long long a) const {
    a %= q;
    return a < 0 ? a + q : a;
  }
  int val(long long a) const {
    a = norm(a);
    if (a == 0) return e;
    int v = 0;
    while (a % p == 0) a /= p, ++v;
    return v;
  }
  // inverse of a unit mod q
  long long unit_inv(long long u) const {
    u = norm(u);
    long long t0 = 0, t1 = 1, r0 = q, r1 = u;
    while (r1 != 0) {
      long long k = r0 / r1;
      t0 -= k * t1;
      std::swap(t0, t1);
      r0 -= k * r1;
      std::swap(r0, r1);
    }
    if (r0 != 1) fail(ErrorKind::BadElement, "not a unit mod p^e");
    return norm(t0);
  }
};

using Row = std::vector<long long>;

// Howell-style row reduction over Z/p^e with optional tracking of how each
// pivot row decomposes over the originally inserted generators.  Tracking
// also collects the left kernel of the inserted generator list.
class RowReducer {
 public:
  RowReducer(ChainRing ring, size_t width, size_t n_originals = 0)
      : R(ring), m(width), k(n_originals), pivot_of_col(width, -1) {}

  const ChainRing& ring() const { return R; }

  void insert_original(Row row, size_t index) {
    Row c;
    if (k) {
      c.assign(k, 0);
      c[index] = 1;
    }
    insert(std::move(row), std::move(c));
  }
  void insert_plain(Row row) { insert(std::move(row), {}); }

  // Reduce r against the pivots.  Returns the residue; if out_coef is given
  // and the residue is zero, *out_coef holds coefficients over the originals
  // with r = sum coef_i * original_i.
  Row reduce(Row r, Row* out_coef = nullptr) const {
    Row acc;
    if (out_coef) acc.assign(k, 0);
    for (size_t c = 0; c < m; ++c) {
      long long a = R.norm(r[c]);
      r[c] = a;
      if (a == 0) continue;
      int idx = pivot_of_col[c];
      if (idx < 0) continue;
      int w = lead_val[idx];
      int v = R.val(a);
      if (v < w) continue;  // not reducible here
      long long factor = R.norm((a / ipow(R.p, w)));
      const Row& pr = rows[idx];
      for (size_t j = c; j < m; ++j) r[j] = R.norm(r[j] - factor * pr[j]);
      if (out_coef)
        for (size_t j = 0; j < k; ++j) acc[j] = R.norm(acc[j] + factor * coefs[idx][j]);
    }
    if (out_coef) *out_coef = std::move(acc);
    return r;
  }

  bool contains(const Row& r) const {
    Row res = reduce(r);
    for (long long x : res)
      if (x != 0) return false;
    return true;
  }

  // Membership with expression over originals; nullopt if not in the span.
  std::optional<Row> express(const Row& r) const {
    Row coef;
    Row res = reduce(r, &coef);
    for (long long x : res)
      if (x != 0) return std::nullopt;
    return coef;
  }

  size_t pivot_count() const { return rows.size(); }
  long long span_size() const {
    long long s = 1;
    for (int v : lead_val) s *= ipow(R.p, R.e - v);
    return s;
  }
  const std::vector<Row>& pivot_rows() const { return rows; }
  const std::vector<int>& pivot_vals() const { return lead_val; }
  const std::vector<Row>& kernel_rows() const { return kernel; }

 private:
  ChainRing R;
  size_t m, k;
  std::vector<Row> rows, coefs;
  std::vector<int> lead_col, lead_val;
  std::vector<int> pivot_of_col;
  std::vector<Row> kernel;  // coefficient rows over originals reducing to 0

  void insert(Row row, Row coef) {
    std::vector<std::pair<Row, Row>> work;
    work.emplace_back(std::move(row), std::move(coef));
    while (!work.empty()) {
      auto [r, c] = std::move(work.back());
      work.pop_back();
      size_t col = 0;
      while (col < m) {
        long long a = R.norm(r[col]);
        r[col] = a;
        if (a == 0) {
          ++col;
          continue;
        }
        int v = R.val(a);
        int idx = pivot_of_col[col];
        if (idx < 0) {
          normalize(r, c, col, v);
          install(std::move(r), std::move(c), col, v, work);
          goto next_work;
        }
        int w = lead_val[idx];
        if (v >= w) {
          long long factor = R.norm(a / ipow(R.p, w));
          subtract(r, c, rows[idx], coefs[idx], factor, col);
        } else {
          // incoming has the better pivot: swap it in, keep reducing the old
          normalize(r, c, col, v);
          std::swap(r, rows[idx]);
          std::swap(c, coefs[idx]);
          lead_val[idx] = v;
          if (v > 0) push_shadow(rows[idx], coefs[idx], v, work);
        }
      }
      if (!c.empty()) {
        bool nz = false;
        for (long long x : c) nz |= (x != 0);
        if (nz) kernel.push_back(std::move(c));
      }
    next_work:;
    }
  }

  void normalize(Row& r, Row& c, size_t col, int v) {
    long long u = R.norm(r[col]) / ipow(R.p, v);
    long long ui = R.unit_inv(u);
    if (ui == 1) return;
    for (size_t j = col; j < m; ++j) r[j] = R.norm(r[j] * ui);
    for (auto& x : c) x = R.norm(x * ui);
  }

  void subtract(Row& r, Row& c, const Row& pr, const Row& pc, long long factor, size_t col) {
    for (size_t j = col; j < m; ++j) r[j] = R.norm(r[j] - factor * pr[j]);
    if (!c.empty() && !pc.empty())
      for (size_t j = 0; j < k; ++j) c[j] = R.norm(c[j] - factor * pc[j]);
  }

  void install(Row r, Row c, size_t col, int v, std::vector<std::pair<Row, Row>>& work) {
    int idx = (int)rows.size();
    rows.push_back(std::move(r));
    coefs.push_back(std::move(c));
    lead_col.push_back((int)col);
    lead_val.push_back(v);
    pivot_of_col[col] = idx;
    if (v > 0) push_shadow(rows[idx], coefs[idx], v, work);
  }

  void push_shadow(const Row& r, const Row& c, int v, std::vector<std::pair<Row, Row>>& work) {
    long long f = ipow(R.p, R.e - v);
    Row sr(m), sc(c.size());
    for (size_t j = 0; j < m; ++j) sr[j] = R.norm(r[j] * f);
    for (size_t j = 0; j < c.size(); ++j) sc[j] = R.norm(c[j] * f);
    work.emplace_back(std::move(sr), std::move(sc));
  }
};

// Valuations of the Smith form diagonal of a matrix over Z/p^e; entries are
// in [0, e], one per pivot found.
inline std::vector<int> snf_valuations(std::vector<Row> w, size_t cols, const ChainRing& R) {
  std::vector<int> vals;
  size_t nr = w.size();
  size_t t = 0;
  while (t < std::min(nr, cols)) {
    size_t pi = nr, pj = cols;
    int best = R.e + 1;
    for (size_t i = t; i < nr; ++i)
      for (size_t j = t; j < cols; ++j) {
        long long a = R.norm(w[i][j]);
        w[i][j] = a;
        if (a == 0) continue;
        int v = R.val(a);
        if (v < best) best = v, pi = i, pj = j;
      }
    if (pi == nr) break;
    std::swap(w[t], w[pi]);
    for (size_t i = 0; i < nr; ++i) std::swap(w[i][t], w[i][pj]);
    // normalize pivot to p^best
    long long u = R.norm(w[t][t]) / ipow(R.p, best);
    long long ui = R.unit_inv(u);
    for (size_t j = t; j < cols; ++j) w[t][j] = R.norm(w[t][j] * ui);
    long long piv = ipow(R.p, best);
    for (size_t i = t + 1; i < nr; ++i) {
      long long a = R.norm(w[i][t]);
      if (a == 0) continue;
      long long f = a / piv;  // exact: val(a) >= best
      for (size_t j = t; j < cols; ++j) w[i][j] = R.norm(w[i][j] - f * w[t][j]);
    }
    for (size_t j = t + 1; j < cols; ++j) {
      long long a = R.norm(w[t][j]);
      if (a == 0) continue;
      long long f = a / piv;
      for (size_t i = t; i < nr; ++i) w[i][j] = R.norm(w[i][j] - f * w[i][t]);
    }
    vals.push_back(best);
    ++t;
  }
  return vals;
}

// Prime-power factors (p^w, w >= 1) of span(S) / span(T) inside (Z/p^e)^m.
// S is a generator list; T must lie inside span(S).
inline std::vector<long long> quotient_factors(const std::vector<Row>& S,
                                               const std::vector<Row>& T, size_t m,
                                               const ChainRing& R) {
  size_t kgen = S.size();
  if (kgen == 0) {
    for (auto& t : T)
      for (long long x : t)
        if (R.norm(x) != 0) fail(ErrorKind::InconsistentSpan, "span quotient: T outside S");
    return {};
  }
  RowReducer red(R, m, kgen);
  for (size_t i = 0; i < kgen; ++i) red.insert_original(S[i], i);
  std::vector<Row> relations = red.kernel_rows();
  for (auto& t : T) {
    auto coef = red.express(t);
    if (!coef) fail(ErrorKind::InconsistentSpan, "span quotient: T outside S");
    relations.push_back(*coef);
  }
  auto vals = snf_valuations(std::move(relations), kgen, R);
  std::vector<long long> factors;
  for (int v : vals)
    if (v > 0) factors.push_back(ipow(R.p, v));
  for (size_t i = vals.size(); i < kgen; ++i) factors.push_back(R.q);
  return factors;
}

}  // namespace modring

}  // namespace vb0
