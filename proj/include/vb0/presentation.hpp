#pragma once

// Finite presentations and coset enumeration.  The enumerator is HLT
// scan-and-fill with a deduction stack (new edges trigger targeted relator
// scans via precomputed rotations) and a lookahead collapse pass when the
// coset budget runs out.  Coincidences merge immediately through union-find.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "group.hpp"
#include "words.hpp"

namespace vb0 {

struct Presentation {
  int ngens = 0;
  std::vector<Word> relators;
  std::string label;
};

// Word grammar for relators: factors x<k> or x<k>^e (e possibly negative),
// separated by '*' or whitespace.
inline Word word_pow(const Word& w, int e) {
  Word base = e < 0 ? w.inverse() : w;
  if (e < 0) e = -e;
  Word r;
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

namespace detail {

struct RelatorParser {
  const std::string& s;
  size_t pos = 0;

  void err(const std::string& what) const {
    fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && (std::isspace((unsigned char)s[pos]) || s[pos] == '*')) ++pos;
  }
  int exponent() {
    skip();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected exponent");
    int e = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) e = e * 10 + (s[pos++] - '0');
    return neg ? -e : e;
  }
  Word sequence(bool nested) {
    Word w;
    while (true) {
      skip();
      if (pos >= s.size()) {
        if (nested) err("missing ')'");
        return w;
      }
      char ch = s[pos];
      if (ch == ')') {
        if (!nested) err("unmatched ')'");
        return w;
      }
      if (ch == '(') {
        ++pos;
        Word inner = sequence(true);
        ++pos;  // consume ')'
        w = w * word_pow(inner, exponent());
        continue;
      }
      if (ch == '1') {
        ++pos;
        continue;
      }
      if (ch != 'x' && ch != 'X') err("expected generator");
      ++pos;
      if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected index");
      int v = 0;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
      if (v < 1) err("generator index must be >= 1");
      w.push(v, exponent());
    }
  }
};

}  // namespace detail

inline Word parse_relator(const std::string& text) {
  detail::RelatorParser p{text};
  return p.sequence(false);
}

// Presentation of G on its nonidentity elements with all product relators.
struct CayleyPresentation {
  Presentation P;
  std::vector<Elt> gen_elt;  // generator index (1-based) -> element of G
  std::vector<int> elt_gen;  // element -> generator index or 0 for identity
};

inline CayleyPresentation cayley_presentation(const Group& g) {
  CayleyPresentation cp;
  cp.elt_gen.assign(g.order(), 0);
  cp.gen_elt.push_back(-1);  // 1-based
  for (Elt a = 0; a < g.order(); ++a) {
    if (a == g.id()) continue;
    cp.gen_elt.push_back(a);
    cp.elt_gen[a] = (int)cp.gen_elt.size() - 1;
  }
  cp.P.ngens = (int)cp.gen_elt.size() - 1;
  cp.P.label = g.label().empty() ? "cayley" : "cayley(" + g.label() + ")";
  for (Elt a = 0; a < g.order(); ++a) {
    if (a == g.id()) continue;
    for (Elt b = 0; b < g.order(); ++b) {
      if (b == g.id()) continue;
      Elt c = g.mul(a, b);
      Word w = Word::gen(cp.elt_gen[a]) * Word::gen(cp.elt_gen[b]);
      if (c != g.id()) w = w * Word::gen(cp.elt_gen[c], -1);
      cp.P.relators.push_back(std::move(w));
    }
  }
  return cp;
}

struct TCOptions {
  uint32_t max_cosets = 2000000;
  size_t max_bytes = size_t(1500) * 1000 * 1000;
  std::string what = "coset enumeration";
};

struct CosetTable {
  int ngens = 0;
  uint32_t index = 0;            // live cosets, compacted
  std::vector<uint32_t> tab;     // index * 2*ngens, fully defined on success
  uint64_t total_defined = 0;

  uint32_t at(uint32_t coset, int col) const { return tab[(size_t)coset * 2 * ngens + col]; }
};

namespace detail {

constexpr uint32_t kUndef = 0xffffffffu;

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, TCOptions opt)
      : ngens(p.ngens), ncols(2 * p.ngens), opt_(opt) {
    for (auto& r : p.relators) add_relator(to_cols(r));
    for (auto& w : subgroup) subgroup_.push_back(to_cols(w));
    build_rotations();
    row_limit_ = opt_.max_cosets;
    if (ncols > 0) {
      size_t by_bytes = opt_.max_bytes / (sizeof(uint32_t) * ncols);
      row_limit_ = (uint32_t)std::min<size_t>(row_limit_, by_bytes);
    }
    if (row_limit_ < 1) row_limit_ = 1;
  }

  CosetTable run() {
    alloc_coset();  // coset 0
    for (auto& w : subgroup_) {
      scan(0, w.data(), (int)w.size(), true);
      drain();
    }
    bool stable = false;
    while (!stable) {
      main_pass();
      stable = verify_pass();
    }
    return compact();
  }

 private:
  int ngens;
  int ncols;
  TCOptions opt_;
  uint32_t row_limit_ = 0;

  std::vector<uint32_t> tab_;
  std::vector<uint32_t> rep_;
  uint32_t nrows_ = 0;
  uint32_t nlive_ = 0;
  uint64_t total_defined_ = 0;

  std::vector<int> relbuf_;
  std::vector<std::pair<int, int>> relators_;  // offset, len into relbuf_
  std::vector<std::vector<int>> subgroup_;
  std::vector<int> rotbuf_;
  std::vector<std::vector<std::pair<int, int>>> rot_by_first_;  // col -> (offset,len)
  std::vector<std::pair<uint32_t, int>> deductions_;
  std::vector<uint32_t> deadq_;
  uint64_t edges_set_ = 0;

  static int invcol(int c) { return c ^ 1; }

  std::vector<int> to_cols(const Word& w) const {
    std::vector<int> cols;
    for (auto& l : w.letters) {
      if (l.var < 1 || l.var > ngens)
        fail(ErrorKind::BadFormat, "relator references x" + std::to_string(l.var) +
                                       " beyond generator count " + std::to_string(ngens));
      int c = 2 * (l.var - 1) + (l.exp < 0 ? 1 : 0);
      for (int k = 0; k < std::abs(l.exp); ++k) cols.push_back(c);
    }
    // free + cyclic reduction
    std::vector<int> red;
    for (int c : cols) {
      if (!red.empty() && red.back() == invcol(c))
        red.pop_back();
      else
        red.push_back(c);
    }
    while (red.size() >= 2 && red.front() == invcol(red.back())) {
      red.erase(red.begin());
      red.pop_back();
    }
    return red;
  }

  void add_relator(std::vector<int> cols) {
    if (cols.empty()) return;
    relators_.emplace_back((int)relbuf_.size(), (int)cols.size());
    relbuf_.insert(relbuf_.end(), cols.begin(), cols.end());
  }

  void build_rotations() {
    rot_by_first_.assign(std::max(1, ncols), {});
    for (auto [off, len] : relators_) {
      for (int p = 0; p < len; ++p) {
        int ro = (int)rotbuf_.size();
        for (int k = 0; k < len; ++k) rotbuf_.push_back(relbuf_[off + (p + k) % len]);
        rot_by_first_[rotbuf_[ro]].emplace_back(ro, len);
      }
    }
  }

  uint32_t rep(uint32_t x) {
    uint32_t r = x;
    while (rep_[r] != r) r = rep_[r];
    while (rep_[x] != r) {
      uint32_t nxt = rep_[x];
      rep_[x] = r;
      x = nxt;
    }
    return r;
  }
  bool dead(uint32_t x) { return rep_[x] != x; }

  uint32_t* row(uint32_t c) { return tab_.data() + (size_t)c * ncols; }

  // May run a lookahead collapse; never allocates.
  void ensure_space() {
    if (nrows_ < row_limit_) return;
    lookahead();
    if (nrows_ >= row_limit_)
      fail(ErrorKind::CosetCapExceeded,
           opt_.what + ": coset limit " + std::to_string(row_limit_) + " exceeded");
  }

  uint32_t alloc_coset() {
    tab_.resize((size_t)(nrows_ + 1) * ncols, kUndef);
    rep_.push_back(nrows_);
    ++nlive_;
    ++total_defined_;
    return nrows_++;
  }

  void set_edge(uint32_t a, int c, uint32_t b) {
    row(a)[c] = b;
    row(b)[invcol(c)] = a;
    ++edges_set_;
    deductions_.emplace_back(a, c);
  }

  // Scan word at base; fill gaps with new cosets only if fill is set.
  void scan(uint32_t base, const int* w, int len, bool fill) {
    uint32_t f = rep(base), b = f;
    int i = 0, j = len;
    while (true) {
      while (i < j) {
        uint32_t nxt = row(f)[w[i]];
        if (nxt == kUndef) break;
        f = rep(nxt);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i) {
        uint32_t nxt = row(b)[invcol(w[j - 1])];
        if (nxt == kUndef) break;
        b = rep(nxt);
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_edge(f, w[i], b);
        return;
      }
      if (!fill) return;
      ensure_space();  // may collapse cosets
      f = rep(f);
      b = rep(b);
      if (row(f)[w[i]] != kUndef) continue;  // lookahead filled it; rescan
      uint32_t beta = alloc_coset();
      set_edge(f, w[i], beta);
      f = beta;
      ++i;
    }
  }

  void coincidence(uint32_t a, uint32_t b) {
    merge(a, b);
    while (!deadq_.empty()) {
      uint32_t d = deadq_.back();
      deadq_.pop_back();
      for (int c = 0; c < ncols; ++c) {
        uint32_t e = row(d)[c];
        if (e == kUndef) continue;
        row(d)[c] = kUndef;
        if (row(e)[invcol(c)] == d) row(e)[invcol(c)] = kUndef;
        uint32_t u = rep(d), v = rep(e);
        if (row(u)[c] != kUndef)
          merge(rep(row(u)[c]), v);
        else if (row(v)[invcol(c)] != kUndef)
          merge(rep(row(v)[invcol(c)]), u);
        else
          set_edge(u, c, v);
      }
    }
  }

  void merge(uint32_t a, uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --nlive_;
    deadq_.push_back(b);
  }

  void drain() {
    while (!deductions_.empty()) {
      auto [a0, c] = deductions_.back();
      deductions_.pop_back();
      uint32_t a = rep(a0);
      uint32_t b = row(a)[c];
      if (b == kUndef) continue;  // edge was dissolved by a coincidence
      b = rep(b);
      for (auto [off, len] : rot_by_first_[c]) scan(a, rotbuf_.data() + off, len, false);
      for (auto [off, len] : rot_by_first_[invcol(c)]) scan(b, rotbuf_.data() + off, len, false);
    }
  }

  void main_pass() {
    drain();
    for (uint32_t a = 0; a < nrows_; ++a) {
      if (dead(a)) continue;
      for (auto [off, len] : relators_) {
        scan(a, relbuf_.data() + off, len, true);
        drain();
        if (dead(a)) break;
      }
      if (dead(a)) continue;
      for (int c = 0; c < ncols; ++c) {
        if (dead(a)) break;
        if (row(a)[c] != kUndef) continue;
        ensure_space();
        uint32_t ar = rep(a);
        if (row(ar)[c] != kUndef) continue;
        uint32_t beta = alloc_coset();
        set_edge(ar, c, beta);
        drain();
      }
    }
  }

  // Deduction-only sweep; returns true if the table is complete and nothing
  // changed.
  bool verify_pass() {
    uint64_t defined_before = total_defined_;
    uint64_t edges_before = edges_set_;
    uint32_t live_before = nlive_;
    for (auto& w : subgroup_) {
      scan(0, w.data(), (int)w.size(), false);
      drain();
    }
    for (uint32_t a = 0; a < nrows_; ++a) {
      if (dead(a)) continue;
      for (auto [off, len] : relators_) {
        scan(a, relbuf_.data() + off, len, false);
        drain();
        if (dead(a)) break;
      }
    }
    if (nlive_ != live_before || total_defined_ != defined_before || edges_set_ != edges_before)
      return false;
    for (uint32_t a = 0; a < nrows_; ++a) {
      if (dead(a)) continue;
      for (int c = 0; c < ncols; ++c)
        if (row(a)[c] == kUndef) return false;
    }
    return true;
  }

  // Scan everything without defining, hoping coincidences free space.
  void lookahead() {
    for (uint32_t a = 0; a < nrows_; ++a) {
      if (dead(a)) continue;
      for (auto [off, len] : relators_) {
        scan(a, relbuf_.data() + off, len, false);
        if (dead(a)) break;
      }
    }
    drain();
  }

  CosetTable compact() {
    std::vector<uint32_t> newid(nrows_, kUndef);
    uint32_t live = 0;
    for (uint32_t a = 0; a < nrows_; ++a)
      if (!dead(a)) newid[a] = live++;
    CosetTable t;
    t.ngens = ngens;
    t.index = live;
    t.total_defined = total_defined_;
    t.tab.assign((size_t)live * ncols, kUndef);
    for (uint32_t a = 0; a < nrows_; ++a) {
      if (dead(a)) continue;
      for (int c = 0; c < ncols; ++c) {
        uint32_t e = row(a)[c];
        if (e == kUndef) fail(ErrorKind::IncompleteTable, opt_.what + ": incomplete coset table");
        t.tab[(size_t)newid[a] * ncols + c] = newid[rep(e)];
      }
    }
    return t;
  }
};

}  // namespace detail

inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_words = {},
                               TCOptions opt = {}) {
  if (p.ngens < 0) fail(ErrorKind::BadFormat, "negative generator count");
  if (p.ngens == 0) {
    CosetTable t;
    t.index = 1;
    t.total_defined = 1;
    return t;
  }
  detail::Enumerator e(p, subgroup_words, opt);
  return e.run();
}

// The image of the presented group as a concrete Group, valid when the
// enumeration ran over the trivial subgroup (regular action).
struct PresentedImage {
  Group G;
  std::vector<Elt> gen_image;  // 1-based generator -> element
};

inline PresentedImage image_group(const CosetTable& t, std::string label = "presented",
                                  int table_cap = 65536) {
  uint32_t n = t.index;
  if ((long long)n > table_cap) fail(ErrorKind::TableCapExceeded, "presented image exceeds cap");
  int ncols = 2 * t.ngens;
  // permutation realizing right multiplication by the element of each coset
  std::vector<std::vector<uint32_t>> perm(n);
  std::vector<char> seen(n, 0);
  perm[0].resize(n);
  for (uint32_t x = 0; x < n; ++x) perm[0][x] = x;
  seen[0] = 1;
  std::vector<uint32_t> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t c = queue[head];
    for (int col = 0; col < ncols; ++col) {
      uint32_t d = t.tab[(size_t)c * ncols + col];
      if (seen[d]) continue;
      seen[d] = 1;
      perm[d].resize(n);
      for (uint32_t x = 0; x < n; ++x) perm[d][x] = t.tab[(size_t)perm[c][x] * ncols + col];
      queue.push_back(d);
    }
  }
  for (uint32_t c = 0; c < n; ++c)
    if (!seen[c]) fail(ErrorKind::IncompleteTable, "coset graph not connected");
  std::vector<Elt> flat((size_t)n * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) flat[(size_t)a * n + b] = (Elt)perm[b][a];
  PresentedImage out{Group::from_table_trusted(std::move(flat), (int)n, std::move(label)), {}};
  out.gen_image.assign(t.ngens + 1, 0);
  for (int v = 1; v <= t.ngens; ++v) out.gen_image[v] = (Elt)t.tab[(size_t)0 * ncols + 2 * (v - 1)];
  return out;
}

// Check that gen_images kill all relators in target; returns the witness
// relator index or -1.
inline int first_unkilled_relator(const Presentation& p, const Group& target,
                                  const std::vector<Elt>& gen_images_1based) {
  std::vector<Elt> assign(p.ngens);
  for (int v = 1; v <= p.ngens; ++v) assign[v - 1] = gen_images_1based[v];
  for (size_t i = 0; i < p.relators.size(); ++i)
    if (p.relators[i].evaluate(target, assign) != target.id()) return (int)i;
  return -1;
}

// Homomorphism from a presented image to target determined by generator
// images; verified edge by edge over the coset table.
inline Homomorphism induced_hom(const CosetTable& t, const PresentedImage& img,
                                const Group& target, const std::vector<Elt>& gen_images_1based) {
  uint32_t n = t.index;
  int ncols = 2 * t.ngens;
  std::vector<Elt> f(n, -1);
  f[0] = target.id();
  std::vector<uint32_t> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t c = queue[head];
    for (int v = 1; v <= t.ngens; ++v) {
      uint32_t d = t.tab[(size_t)c * ncols + 2 * (v - 1)];
      Elt want = target.mul(f[c], gen_images_1based[v]);
      if (f[d] < 0) {
        f[d] = want;
        queue.push_back(d);
      } else if (f[d] != want) {
        fail(ErrorKind::NotHomomorphism, "generator images do not extend to the image group");
      }
    }
  }
  Homomorphism h;
  h.src = &img.G;
  h.dst = &target;
  h.map.assign(f.begin(), f.end());
  h.validate();
  return h;
}

}  // namespace vb0
