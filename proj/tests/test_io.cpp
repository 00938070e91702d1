#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "vb0/corpus.hpp"
#include "vb0/io.hpp"

using namespace vb0;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("vb0_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("mtable round trip preserves the table and label") {
  Group d8 = dihedral_group(4);
  std::string text = write_group_mtable(d8);
  Group back = read_group_text(text);
  REQUIRE(back.order() == d8.order());
  REQUIRE(back.label() == d8.label());
  for (Elt a = 0; a < d8.order(); ++a)
    for (Elt b = 0; b < d8.order(); ++b) CHECK(back.mul(a, b) == d8.mul(a, b));
}

TEST_CASE("perm round trip reproduces the group up to isomorphism") {
  for (const Group& g : {quaternion_group(8), symmetric_group(4), cyclic_group(12)}) {
    Group back = read_group_text(write_group_perm(g));
    REQUIRE(back.order() == g.order());
    CHECK(is_isomorphic_bruteforce(back, g));
    CHECK(back.label() == g.label());
  }
}

TEST_CASE("perm format accepts cycle notation") {
  Group s3 = read_group_text("perm 3\n(1 2)\n(1 2 3)\n", "s3");
  REQUIRE(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());

  Group triv = read_group_text("perm 3\n()\n");
  CHECK(triv.order() == 1);
}

TEST_CASE("label comments and fallbacks") {
  Group g = read_group_text("# label: widget\n# a remark\nmtable 1\n0\n", "ignored");
  CHECK(g.label() == "widget");
  Group h = read_group_text("mtable 1\n0\n", "fallback");
  CHECK(h.label() == "fallback");
}

TEST_CASE("malformed group files are rejected") {
  CHECK_THROWS_AS(read_group_text(""), Error);
  CHECK_THROWS_AS(read_group_text("# only comments\n"), Error);
  CHECK_THROWS_AS(read_group_text("blob 4\n"), Error);
  CHECK_THROWS_AS(read_group_text("mtable 0\n"), Error);
  CHECK_THROWS_AS(read_group_text("mtable 2\n0 1\n"), Error);          // missing row
  CHECK_THROWS_AS(read_group_text("mtable 2\n0 1\n1\n"), Error);       // short row
  CHECK_THROWS_AS(read_group_text("mtable 2\n0 1\n1 0 0\n"), Error);   // long row
  CHECK_THROWS_AS(read_group_text("perm 3\n"), Error);                 // no generators
  CHECK_THROWS_AS(read_group_text("perm 3\n(1 4)\n"), Error);          // point out of range
  CHECK_THROWS_AS(read_group_text("perm 3\n(1 2\n"), Error);           // unbalanced
  CHECK_THROWS_AS(read_group_text("perm 3\n(1 1 2)\n"), Error);        // repeated point
}

TEST_CASE("a well formed table that is not a group is rejected") {
  CHECK_THROWS_AS(read_group_text("mtable 2\n0 1\n1 1\n"), Error);
  CHECK_THROWS_AS(read_group_text("mtable 3\n0 1 2\n1 2 0\n2 1 0\n"), Error);
}

TEST_CASE("group files read back with the stem as fallback label") {
  TempDir tmp("io_stem");
  Group q8 = quaternion_group(8);
  std::string text = write_group_mtable(q8);
  // strip the label comment so the stem has to supply it
  text = text.substr(text.find('\n') + 1);
  std::string path = (tmp.path / "mystery.mtable").string();
  write_text_file(path, text);
  Group back = read_group_file(path);
  CHECK(back.label() == "mystery");
  CHECK(is_isomorphic_bruteforce(back, q8));
}

TEST_CASE("presentation round trip") {
  Presentation p;
  p.ngens = 2;
  p.label = "dihedral";
  p.relators = {parse_relator("x1^4"), parse_relator("x2^2"), parse_relator("(x1 x2)^2")};
  Presentation back = read_presentation_text(write_presentation(p));
  REQUIRE(back.ngens == 2);
  REQUIRE(back.label == "dihedral");
  REQUIRE(back.relators.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(back.relators[i].str() == p.relators[i].str());
}

TEST_CASE("presentation files reject bad headers and unknown generators") {
  CHECK_THROWS_AS(read_presentation_text(""), Error);
  CHECK_THROWS_AS(read_presentation_text("group 2\n"), Error);
  CHECK_THROWS_AS(read_presentation_text("fp 2\nx3^2\n"), Error);
  Presentation free2 = read_presentation_text("fp 2\n");
  CHECK(free2.relators.empty());
}

TEST_CASE("missing files raise io errors") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/vb0/file.mtable"), Error);
  CHECK_THROWS_AS(load_corpus("/nonexistent/vb0/dir"), Error);
}

TEST_CASE("load_corpus collects, sorts and reports skips") {
  TempDir tmp("io_corpus");
  write_text_file((tmp.path / "b.mtable").string(), write_group_mtable(symmetric_group(3)));
  write_text_file((tmp.path / "a.perm").string(), write_group_perm(cyclic_group(2)));
  write_text_file((tmp.path / "dup.mtable").string(), write_group_mtable(symmetric_group(3)));
  write_text_file((tmp.path / "junk.mtable").string(), "mtable 2\n0 1\n");

  Corpus c = load_corpus(tmp.path.string());
  REQUIRE(c.entries.size() == 2);
  CHECK(c.entries[0].g.order() == 2);  // sorted by order
  CHECK(c.entries[1].label == "s3");
  REQUIRE(c.skipped.size() == 2);
  CHECK(c.find("s3") != nullptr);
  CHECK(c.find("nope") == nullptr);

  bool saw_dup = false, saw_junk = false;
  for (auto& [path, reason] : c.skipped) {
    if (path.find("dup") != std::string::npos) {
      saw_dup = true;
      CHECK(reason.find("duplicate label") != std::string::npos);
    }
    if (path.find("junk") != std::string::npos) saw_junk = true;
  }
  CHECK(saw_dup);
  CHECK(saw_junk);
}

TEST_CASE("empty corpus directory loads as empty") {
  TempDir tmp("io_empty");
  Corpus c = load_corpus(tmp.path.string());
  CHECK(c.entries.empty());
  CHECK(c.skipped.empty());
}

TEST_CASE("the bundled corpus writes out and loads back cleanly") {
  TempDir tmp("io_bundle");
  write_bundled_corpus(tmp.path.string());
  Corpus c = load_corpus(tmp.path.string());
  auto bundle = bundled_corpus();
  REQUIRE(c.entries.size() == bundle.size());
  CHECK(c.skipped.empty());
  CHECK(c.find("q8") != nullptr);
  CHECK(c.find("sp64a") != nullptr);
  CHECK(c.entries.back().g.order() == 64);
  for (auto& [file, g] : bundle) {
    const Group* got = c.find(g.label());
    REQUIRE(got != nullptr);
    CHECK(got->order() == g.order());
  }
}
