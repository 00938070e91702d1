#pragma once
// Flat text formats. Groups: "mtable n" with n table rows, or "perm n" with
// one generator per line in 1-based cycle notation ("()" for the identity).
// Presentations: "fp n" with one relator per line. "# label: ..." names the
// object; other "#" lines are comments.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "vb0/group.hpp"
#include "vb0/presentation.hpp"

namespace vb0 {

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct ParsedLines {
  std::vector<std::string> lines;  // non-comment, non-empty
  std::string label;
};

inline ParsedLines strip_comments(const std::string& text) {
  ParsedLines out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      std::string rest = trim(t.substr(1));
      if (rest.rfind("label:", 0) == 0) out.label = trim(rest.substr(6));
      continue;
    }
    out.lines.push_back(t);
  }
  return out;
}

inline Permutation parse_cycles(const std::string& text, int degree) {
  Permutation p = Permutation::identity(degree);
  std::vector<char> seen(degree, 0);
  size_t pos = 0;
  bool saw_cycle = false;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail(ErrorKind::BadFormat, "expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      if (pos == start) fail(ErrorKind::BadFormat, "expected point in cycle notation");
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree) fail(ErrorKind::BadElement, "cycle point out of range");
      cycle.push_back(pt - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    saw_cycle = true;
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (seen[from]) fail(ErrorKind::BadFormat, "point repeated in cycle notation");
      seen[from] = 1;
      p.img[from] = to;
    }
    skip_ws();
  }
  if (!saw_cycle) fail(ErrorKind::BadFormat, "empty permutation line");
  if (!p.valid()) fail(ErrorKind::BadFormat, "cycles do not form a permutation");
  return p;
}

}  // namespace detail

inline Group read_group_text(const std::string& text, const std::string& fallback_label = "") {
  detail::ParsedLines pl = detail::strip_comments(text);
  if (pl.lines.empty()) fail(ErrorKind::BadFormat, "empty group file");
  std::istringstream head(pl.lines[0]);
  std::string kind;
  int n = 0;
  head >> kind >> n;
  std::string label = pl.label.empty() ? fallback_label : pl.label;
  if (kind == "mtable") {
    if (n < 1) fail(ErrorKind::BadFormat, "mtable needs a positive order");
    if ((int)pl.lines.size() != n + 1) fail(ErrorKind::BadFormat, "mtable row count mismatch");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      std::istringstream rs(pl.lines[i + 1]);
      for (int j = 0; j < n; ++j)
        if (!(rs >> rows[i][j])) fail(ErrorKind::BadFormat, "short mtable row");
      int extra;
      if (rs >> extra) fail(ErrorKind::BadFormat, "long mtable row");
    }
    return Group::from_table(rows, label);
  }
  if (kind == "perm") {
    if (n < 1) fail(ErrorKind::BadFormat, "perm needs a positive degree");
    std::vector<Permutation> gens;
    for (size_t i = 1; i < pl.lines.size(); ++i)
      gens.push_back(detail::parse_cycles(pl.lines[i], n));
    if (gens.empty()) fail(ErrorKind::BadFormat, "perm file without generators");
    return Group::from_permutations(n, gens, label);
  }
  fail(ErrorKind::BadFormat, "unknown group format: " + kind);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path);
  out << content;
}

inline Group read_group_file(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  return read_group_text(read_text_file(path), stem);
}

inline std::string write_group_mtable(const Group& g) {
  std::ostringstream out;
  if (!g.label().empty()) out << "# label: " << g.label() << "\n";
  out << "mtable " << g.order() << "\n";
  for (Elt a = 0; a < g.order(); ++a) {
    for (Elt b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << "\n";
  }
  return out.str();
}

inline std::string cycle_notation(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> seen(p.degree(), 0);
  bool any = false;
  for (int s = 0; s < p.degree(); ++s) {
    if (seen[s] || p(s) == s) continue;
    any = true;
    out << "(";
    int x = s;
    bool first = true;
    do {
      seen[x] = 1;
      out << (first ? "" : " ") << (x + 1);
      first = false;
      x = p(x);
    } while (x != s);
    out << ")";
  }
  if (!any) out << "()";
  return out.str();
}

// Right regular action of a small generating set.
inline std::string write_group_perm(const Group& g) {
  std::ostringstream out;
  if (!g.label().empty()) out << "# label: " << g.label() << "\n";
  out << "perm " << g.order() << "\n";
  std::vector<Elt> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  auto gens = small_generating_set(g, all);
  if (gens.empty()) gens.push_back(g.id());
  for (Elt s : gens) {
    Permutation p = Permutation::identity(g.order());
    for (Elt a = 0; a < g.order(); ++a) p.img[a] = g.mul(a, s);
    out << cycle_notation(p) << "\n";
  }
  return out.str();
}

inline Presentation read_presentation_text(const std::string& text,
                                           const std::string& fallback_label = "") {
  detail::ParsedLines pl = detail::strip_comments(text);
  if (pl.lines.empty()) fail(ErrorKind::BadFormat, "empty presentation file");
  std::istringstream head(pl.lines[0]);
  std::string kind;
  int n = -1;
  head >> kind >> n;
  if (kind != "fp" || n < 0) fail(ErrorKind::BadFormat, "presentation file must start 'fp <n>'");
  Presentation p;
  p.ngens = n;
  p.label = pl.label.empty() ? fallback_label : pl.label;
  for (size_t i = 1; i < pl.lines.size(); ++i) {
    Word w = parse_relator(pl.lines[i]);
    if (w.max_var() > n) fail(ErrorKind::BadElement, "relator uses unknown generator");
    p.relators.push_back(std::move(w));
  }
  return p;
}

inline Presentation read_presentation_file(const std::string& path) {
  std::string stem = std::filesystem::path(path).stem().string();
  return read_presentation_text(read_text_file(path), stem);
}

inline std::string write_presentation(const Presentation& p) {
  std::ostringstream out;
  if (!p.label.empty()) out << "# label: " << p.label << "\n";
  out << "fp " << p.ngens << "\n";
  for (const Word& w : p.relators) out << w.str() << "\n";
  return out.str();
}

// --- corpus ------------------------------------------------------------------

struct CorpusEntry {
  std::string label;
  Group g;
  std::string path;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<std::pair<std::string, std::string>> skipped;  // path, reason

  const Group* find(const std::string& label) const {
    for (auto& e : entries)
      if (e.label == label) return &e.g;
    return nullptr;
  }
};

inline Corpus load_corpus(const std::string& dir) {
  Corpus c;
  if (!std::filesystem::is_directory(dir)) fail(ErrorKind::IoError, "not a directory: " + dir);
  std::vector<std::string> paths;
  for (auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file()) paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  std::vector<std::string> labels;
  for (auto& p : paths) {
    try {
      Group g = read_group_file(p);
      std::string label = g.label();
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
        c.skipped.emplace_back(p, "duplicate label: " + label);
        continue;
      }
      labels.push_back(label);
      c.entries.push_back({label, std::move(g), p});
    } catch (const Error& err) {
      c.skipped.emplace_back(p, err.what());
    }
  }
  std::sort(c.entries.begin(), c.entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.g.order() != b.g.order() ? a.g.order() < b.g.order() : a.label < b.label;
  });
  return c;
}

}  // namespace vb0
