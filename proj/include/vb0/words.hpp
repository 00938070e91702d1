#pragma once

// Word algebra: free-group words, outer commutator words (binary trees with
// disjoint variable sets), varieties as law lists, evaluation, value sets,
// verbal and marginal subgroups, and the bracket-generator sweep
// [N V* G] = < v(g1,...,gi n,...,gs) v(g1,...,gs)^-1 >.

#include <cctype>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "group.hpp"

namespace vb0 {

struct Letter {
  int var;  // 1-based
  int exp;  // nonzero

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.var == b.var && a.exp == b.exp;
  }
};

struct Word {
  std::vector<Letter> letters;

  static Word empty_word() { return {}; }
  static Word gen(int var, int exp = 1) {
    Word w;
    if (exp != 0) w.letters.push_back({var, exp});
    return w;
  }
  bool empty() const { return letters.empty(); }
  int max_var() const {
    int m = 0;
    for (auto& l : letters) m = std::max(m, l.var);
    return m;
  }
  void push(int var, int exp) {
    if (exp == 0) return;
    if (!letters.empty() && letters.back().var == var) {
      letters.back().exp += exp;
      if (letters.back().exp == 0) letters.pop_back();
      return;
    }
    letters.push_back({var, exp});
  }
  Word operator*(const Word& o) const {
    Word r = *this;
    for (auto& l : o.letters) r.push(l.var, l.exp);
    return r;
  }
  Word inverse() const {
    Word r;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.push(it->var, -it->exp);
    return r;
  }
  std::string str() const {
    if (letters.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i) os << "*";
      os << "x" << letters[i].var;
      if (letters[i].exp != 1) os << "^" << letters[i].exp;
    }
    return os.str();
  }
  Elt evaluate(const Group& g, const std::vector<Elt>& assign) const {
    Elt r = g.id();
    for (auto& l : letters) {
      if (l.var < 1 || l.var > (int)assign.size())
        fail(ErrorKind::MissingAssignment, "no assignment for x" + std::to_string(l.var));
      r = g.mul(r, g.pow(assign[l.var - 1], l.exp));
    }
    return r;
  }
};

// Outer commutator word: a leaf variable or a commutator of two o.c. words
// over disjoint variable sets.
class OCWord {
 public:
  static OCWord leaf(int var) {
    if (var < 1) fail(ErrorKind::BadFormat, "variable index must be >= 1");
    OCWord w;
    w.root_ = std::make_shared<Node>(Node{var, nullptr, nullptr});
    return w;
  }
  static OCWord comm(const OCWord& a, const OCWord& b) {
    auto va = a.variables(), vb = b.variables();
    for (int x : va)
      for (int y : vb)
        if (x == y)
          fail(ErrorKind::VariableReuse, "variable x" + std::to_string(x) + " used in both arguments");
    OCWord w;
    w.root_ = std::make_shared<Node>(Node{0, a.root_, b.root_});
    return w;
  }

  bool is_leaf() const { return root_->var != 0; }
  int leaf_var() const { return root_->var; }
  OCWord left() const { return OCWord(root_->l); }
  OCWord right() const { return OCWord(root_->r); }

  int weight() const { return weight_of(root_.get()); }
  std::vector<int> variables() const {
    std::vector<int> v;
    collect(root_.get(), v);
    std::sort(v.begin(), v.end());
    return v;
  }
  int max_var() const {
    auto v = variables();
    return v.empty() ? 0 : v.back();
  }

  OCWord shifted(int delta) const { return OCWord(shift(root_.get(), delta)); }

  // Renumber variables to 1..weight preserving their order.
  OCWord canonicalized() const {
    auto vars = variables();
    std::map<int, int> to;
    for (size_t i = 0; i < vars.size(); ++i) to[vars[i]] = (int)i + 1;
    return OCWord(remap(root_.get(), to));
  }

  std::string str() const {
    std::ostringstream os;
    print(root_.get(), os);
    return os.str();
  }

  // Expansion as a free-group word: [a,b] -> a^-1 b^-1 a b.
  Word as_word() const { return expand(root_.get()); }

  bool operator==(const OCWord& o) const { return eq(root_.get(), o.root_.get()); }

  Elt evaluate(const Group& g, const std::vector<Elt>& assign) const {
    return eval(root_.get(), g, assign);
  }

 private:
  struct Node {
    int var;  // > 0 leaf; 0 commutator
    std::shared_ptr<const Node> l, r;
  };
  std::shared_ptr<const Node> root_;

  OCWord() = default;
  explicit OCWord(std::shared_ptr<const Node> r) : root_(std::move(r)) {}

  static int weight_of(const Node* n) {
    return n->var ? 1 : weight_of(n->l.get()) + weight_of(n->r.get());
  }
  static void collect(const Node* n, std::vector<int>& v) {
    if (n->var)
      v.push_back(n->var);
    else {
      collect(n->l.get(), v);
      collect(n->r.get(), v);
    }
  }
  static std::shared_ptr<const Node> shift(const Node* n, int d) {
    if (n->var) return std::make_shared<Node>(Node{n->var + d, nullptr, nullptr});
    return std::make_shared<Node>(Node{0, shift(n->l.get(), d), shift(n->r.get(), d)});
  }
  static std::shared_ptr<const Node> remap(const Node* n, const std::map<int, int>& to) {
    if (n->var) return std::make_shared<Node>(Node{to.at(n->var), nullptr, nullptr});
    return std::make_shared<Node>(Node{0, remap(n->l.get(), to), remap(n->r.get(), to)});
  }
  static void print(const Node* n, std::ostringstream& os) {
    if (n->var) {
      os << "x" << n->var;
      return;
    }
    // left-normed chains render flat: [[a,b],c] as [a,b,c]
    os << "[";
    std::vector<const Node*> chain;
    const Node* cur = n;
    while (!cur->var) {
      chain.push_back(cur->r.get());
      cur = cur->l.get();
    }
    print(cur, os);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      os << ",";
      print(*it, os);
    }
    os << "]";
  }
  static Word expand(const Node* n) {
    if (n->var) return Word::gen(n->var);
    Word a = expand(n->l.get()), b = expand(n->r.get());
    return a.inverse() * b.inverse() * a * b;
  }
  static bool eq(const Node* a, const Node* b) {
    if (a->var != b->var) return false;
    if (a->var) return true;
    return eq(a->l.get(), b->l.get()) && eq(a->r.get(), b->r.get());
  }
  static Elt eval(const Node* n, const Group& g, const std::vector<Elt>& assign) {
    if (n->var) {
      if (n->var > (int)assign.size())
        fail(ErrorKind::MissingAssignment, "no assignment for x" + std::to_string(n->var));
      return assign[n->var - 1];
    }
    Elt a = eval(n->l.get(), g, assign), b = eval(n->r.get(), g, assign);
    return g.comm(a, b);
  }

  friend struct WordProgram;
};

// The commutator bracket of two words placed on disjoint variables:
// [u, w] with w's variables shifted past u's.
inline OCWord bracket(const OCWord& u, const OCWord& w) {
  return OCWord::comm(u, w.shifted(u.max_var()));
}

// Composite u o v: substitute a fresh copy of v into each argument of u.
// Weight multiplies.
inline OCWord compose(const OCWord& u, const OCWord& v) {
  OCWord cu = u.canonicalized(), cv = v.canonicalized();
  int t = cv.weight();
  // substitute leaf i by cv shifted by (i-1)*t
  struct Sub {
    const OCWord& cv;
    int t;
    OCWord run(const OCWord& node) {
      if (node.is_leaf()) return cv.shifted((node.leaf_var() - 1) * t);
      return OCWord::comm(run(node.left()), run(node.right()));
    }
  } sub{cv, t};
  return sub.run(cu);
}

// Left-normed [x1,...,xc]; c = 1 gives the bare variable.
inline OCWord gamma_word(int c) {
  if (c < 1) fail(ErrorKind::BadFormat, "gamma word needs c >= 1");
  OCWord w = OCWord::leaf(1);
  for (int i = 2; i <= c; ++i) w = OCWord::comm(w, OCWord::leaf(i));
  return w;
}

// --- parsing ---------------------------------------------------------------

namespace detail {

struct WordParser {
  const std::string& s;
  size_t pos = 0;
  std::set<int> used;

  explicit WordParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  [[noreturn]] void err(const std::string& what) {
    fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos));
  }

  OCWord parse() {
    skip_ws();
    OCWord w = expr();
    skip_ws();
    if (pos != s.size()) err("trailing input");
    return w;
  }

  OCWord expr() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of input");
    if (s[pos] == '[') {
      ++pos;
      std::vector<OCWord> parts{expr()};
      skip_ws();
      while (pos < s.size() && s[pos] == ',') {
        ++pos;
        parts.push_back(expr());
        skip_ws();
      }
      if (pos >= s.size() || s[pos] != ']') err("expected ']' or ','");
      ++pos;
      if (parts.size() < 2) err("commutator needs at least two entries");
      OCWord w = parts[0];
      for (size_t i = 1; i < parts.size(); ++i) w = OCWord::comm(w, parts[i]);
      return w;
    }
    if (s[pos] == 'x' || s[pos] == 'X') {
      ++pos;
      if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) err("expected variable index");
      int v = 0;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
      if (v < 1) err("variable index must be >= 1");
      if (!used.insert(v).second)
        fail(ErrorKind::VariableReuse, "variable x" + std::to_string(v) + " reused");
      return OCWord::leaf(v);
    }
    err("expected 'x<k>' or '['");
  }
};

}  // namespace detail

inline OCWord parse_word(const std::string& text) { return detail::WordParser(text).parse(); }

// --- varieties --------------------------------------------------------------

struct Variety {
  std::string name;
  std::vector<OCWord> laws;

  static Variety make(std::string name, std::vector<OCWord> laws) {
    for (auto& w : laws)
      if (w.weight() < 2) fail(ErrorKind::BadFormat, "variety laws must have weight >= 2");
    return Variety{std::move(name), std::move(laws)};
  }
};

// "abelian", "nilpotent-<c>", "compose:<w1>:<w2>", "law:<word>"
inline Variety named_variety(const std::string& name) {
  if (name == "abelian") return Variety::make("abelian", {gamma_word(2)});
  if (name.rfind("law:", 0) == 0) return Variety::make(name, {parse_word(name.substr(4))});
  if (name.rfind("nilpotent-", 0) == 0) {
    int c = 0;
    try {
      c = std::stoi(name.substr(10));
    } catch (...) {
      fail(ErrorKind::BadFormat, "bad variety name: " + name);
    }
    if (c < 1) fail(ErrorKind::BadFormat, "nilpotency class must be >= 1");
    return Variety::make(name, {gamma_word(c + 1)});
  }
  if (name.rfind("compose:", 0) == 0) {
    std::string rest = name.substr(8);
    size_t sep = rest.find(':');
    if (sep == std::string::npos) fail(ErrorKind::BadFormat, "compose variety needs two words");
    OCWord u = parse_word(rest.substr(0, sep));
    OCWord v = parse_word(rest.substr(sep + 1));
    return Variety::make(name, {compose(u, v)});
  }
  fail(ErrorKind::BadFormat, "unknown variety: " + name);
}

// --- evaluation over tuples -------------------------------------------------

// Postfix program for fast repeated evaluation.
struct WordProgram {
  struct Op {
    bool is_comm;
    int var;  // for leaves
  };
  std::vector<Op> ops;
  int nvars = 0;

  static WordProgram compile(const OCWord& w) {
    WordProgram p;
    OCWord c = w.canonicalized();
    p.nvars = c.weight();
    build(c, p.ops);
    return p;
  }

  Elt run(const Group& g, const std::vector<Elt>& assign, Elt* stack) const {
    int sp = 0;
    for (auto& op : ops) {
      if (op.is_comm) {
        Elt b = stack[--sp];
        Elt a = stack[--sp];
        stack[sp++] = g.comm(a, b);
      } else {
        stack[sp++] = assign[op.var - 1];
      }
    }
    return stack[0];
  }

 private:
  static void build(const OCWord& w, std::vector<Op>& ops) {
    if (w.is_leaf()) {
      ops.push_back({false, w.leaf_var()});
      return;
    }
    build(w.left(), ops);
    build(w.right(), ops);
    ops.push_back({true, 0});
  }
};

constexpr long long kDefaultEvalCap = 100000000;  // tuple evaluations

namespace detail {

inline void check_eval_cap(const Group& g, int weight, long long extra_factor,
                           long long cap) {
  long long tuples = 1;
  for (int i = 0; i < weight; ++i) {
    tuples *= g.order();
    if (tuples > cap) fail(ErrorKind::EvalCapExceeded, "tuple enumeration exceeds cap");
  }
  if (extra_factor > 0 && tuples > cap / extra_factor)
    fail(ErrorKind::EvalCapExceeded, "tuple enumeration exceeds cap");
}

// Iterate all tuples in G^s, calling fn(assign).  Returns false if fn asked
// to stop early.
template <typename F>
bool for_each_tuple(const Group& g, int s, F&& fn) {
  std::vector<Elt> assign(s, 0);
  while (true) {
    if (!fn(assign)) return false;
    int i = 0;
    while (i < s && ++assign[i] == g.order()) assign[i++] = 0;
    if (i == s) return true;
  }
}

}  // namespace detail

// T_v(G): all values of one law.
inline std::vector<Elt> value_set(const OCWord& law, const Group& g,
                                  long long cap = kDefaultEvalCap) {
  WordProgram p = WordProgram::compile(law);
  detail::check_eval_cap(g, p.nvars, 1, cap);
  std::vector<char> hit(g.order(), 0);
  int count = 0;
  std::vector<Elt> stack(p.ops.size());
  detail::for_each_tuple(g, p.nvars, [&](const std::vector<Elt>& assign) {
    Elt v = p.run(g, assign, stack.data());
    if (!hit[v]) {
      hit[v] = 1;
      ++count;
    }
    return count < g.order();  // the set cannot grow past G
  });
  std::vector<Elt> out;
  for (Elt e = 0; e < g.order(); ++e)
    if (hit[e]) out.push_back(e);
  return out;
}

// T(G) for a variety: union of the law value sets.
inline std::vector<Elt> value_set(const Variety& v, const Group& g,
                                  long long cap = kDefaultEvalCap) {
  std::vector<char> hit(g.order(), 0);
  for (auto& law : v.laws)
    for (Elt e : value_set(law, g, cap)) hit[e] = 1;
  std::vector<Elt> out;
  for (Elt e = 0; e < g.order(); ++e)
    if (hit[e]) out.push_back(e);
  return out;
}

inline Subgroup verbal_subgroup(const Variety& v, const Group& g,
                                long long cap = kDefaultEvalCap) {
  return subgroup_generated(g, value_set(v, g, cap));
}

inline Subgroup verbal_subgroup(const OCWord& law, const Group& g,
                                long long cap = kDefaultEvalCap) {
  return subgroup_generated(g, value_set(law, g, cap));
}

// V*(G) = { a : v(g1,...,gi a,...,gs) = v(g1,...,gs) for all laws, tuples,
// positions }.
inline Subgroup marginal_subgroup(const Variety& v, const Group& g,
                                  long long cap = kDefaultEvalCap) {
  std::vector<char> marginal(g.order(), 1);
  for (auto& law : v.laws) {
    WordProgram p = WordProgram::compile(law);
    detail::check_eval_cap(g, p.nvars, g.order(), cap);
    std::vector<Elt> stack(p.ops.size());
    std::vector<Elt> mod(p.nvars);
    for (Elt a = 0; a < g.order(); ++a) {
      if (!marginal[a]) continue;
      if (a == g.id()) continue;
      bool ok = detail::for_each_tuple(g, p.nvars, [&](const std::vector<Elt>& assign) {
        Elt base = p.run(g, assign, stack.data());
        for (int i = 0; i < p.nvars; ++i) {
          mod = assign;
          mod[i] = g.mul(assign[i], a);
          if (p.run(g, mod, stack.data()) != base) return false;
        }
        return true;
      });
      if (!ok) marginal[a] = 0;
    }
  }
  std::vector<Elt> out;
  for (Elt e = 0; e < g.order(); ++e)
    if (marginal[e]) out.push_back(e);
  return Subgroup::of(g, std::move(out));
}

// [N V* G] = < v(g1,...,gi n,...,gs) v(g1,...,gs)^-1 > over all laws of V,
// tuples, positions, n in N.
inline Subgroup hall_bracket(const Variety& v, const Subgroup& N, const Group& g,
                             long long cap = kDefaultEvalCap) {
  std::set<Elt> gens;
  for (auto& law : v.laws) {
    WordProgram p = WordProgram::compile(law);
    detail::check_eval_cap(g, p.nvars, (long long)g.order() * std::max(1, p.nvars), cap);
    std::vector<Elt> stack(p.ops.size());
    std::vector<Elt> mod(p.nvars);
    detail::for_each_tuple(g, p.nvars, [&](const std::vector<Elt>& assign) {
      Elt base_inv = g.inv(p.run(g, assign, stack.data()));
      for (int i = 0; i < p.nvars; ++i) {
        for (Elt n : N.elems) {
          if (n == g.id()) continue;
          mod = assign;
          mod[i] = g.mul(assign[i], n);
          gens.insert(g.mul(p.run(g, mod, stack.data()), base_inv));
        }
      }
      return true;
    });
  }
  return subgroup_generated(g, {gens.begin(), gens.end()});
}

inline Subgroup hall_bracket(const OCWord& law, const Subgroup& N, const Group& g,
                             long long cap = kDefaultEvalCap) {
  return hall_bracket(Variety{"law", {law}}, N, g, cap);
}

}  // namespace vb0
