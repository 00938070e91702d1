// vb0: invariants of finite groups from multiplication tables, plus the
// verification campaigns over a corpus directory.
//
// Exit codes: 0 success, 1 check failure, 2 usage or input problem,
// 3 cap exceeded.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vb0/cohomology.hpp"
#include "vb0/corpus.hpp"
#include "vb0/exterior.hpp"
#include "vb0/extensions.hpp"
#include "vb0/io.hpp"
#include "vb0/verify.hpp"
#include "vb0/words.hpp"

using nlohmann::ordered_json;
using namespace vb0;

namespace {

constexpr int kSchemaVersion = 1;

int exit_code_for(const Error& e) {
  if (is_cap_error(e)) return 3;
  switch (e.kind) {
    case ErrorKind::NonAssociative:
    case ErrorKind::NoIdentity:
    case ErrorKind::NoInverse:
    case ErrorKind::NotClosed:
    case ErrorKind::BadElement:
    case ErrorKind::NotNormal:
    case ErrorKind::NotAbelian:
    case ErrorKind::NotSubgroup:
    case ErrorKind::NotHomomorphism:
    case ErrorKind::SyntaxError:
    case ErrorKind::VariableReuse:
    case ErrorKind::MissingAssignment:
    case ErrorKind::BadFormat:
    case ErrorKind::IoError:
      return 2;
    default:
      return 1;
  }
}

ordered_json structure_json(const AbelianStructure& s) {
  ordered_json a = ordered_json::array();
  for (long long f : s.factors) a.push_back(f);
  return a;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["attempted"] = r.attempted;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  j["failures"] = ordered_json::array();
  for (const auto& w : r.failures)
    j["failures"].push_back({{"instance", w.instance}, {"note", w.note}});
  j["skips"] = ordered_json::array();
  for (const auto& w : r.skips)
    j["skips"].push_back({{"instance", w.instance}, {"reason", w.note}});
  j["ms"] = r.ms;
  return j;
}

ordered_json summary_json(const GroupSummary& s) {
  ordered_json j;
  j["label"] = s.label;
  j["order"] = s.order;
  j["multiplier"] = structure_json(s.multiplier);
  j["m_zero"] = structure_json(s.m_zero);
  j["b0"] = structure_json(s.b0);
  j["multiplier_cohomology"] =
      s.multiplier_cohomology ? structure_json(*s.multiplier_cohomology) : ordered_json();
  j["b0_cohomology"] = s.b0_cohomology ? structure_json(*s.b0_cohomology) : ordered_json();
  j["agree"] = s.agree;
  j["ms_wedge"] = s.ms_wedge;
  j["ms_cohomology"] = s.ms_cohomology;
  return j;
}

Variety variety_from_flags(const std::string& variety, const std::string& word) {
  if (!word.empty()) return Variety::make("law:" + word, {parse_word(word)});
  return named_variety(variety);
}

void print_elems(const std::string& head, const std::vector<Elt>& v) {
  std::cout << head << " (" << v.size() << "):";
  for (Elt e : v) std::cout << " " << e;
  std::cout << "\n";
}

struct VerbResult {
  int code = 0;
};

int do_multiplier(const std::string& path) {
  Group g = read_group_file(path);
  AbelianStructure m = schur_multiplier(g);
  std::cout << "label: " << g.label() << "\norder: " << g.order()
            << "\nmultiplier: " << m.str() << "\n";
  return 0;
}

int do_b0(const std::string& path, const std::string& method, const std::string& mode_name,
          long long modulus) {
  Group g = read_group_file(path);
  B0Mode mode = mode_name == "all-abelian" ? B0Mode::AllAbelian : B0Mode::Bicyclic;
  std::cout << "label: " << g.label() << "\norder: " << g.order() << "\n";
  bool mismatch = false;
  if (method == "exterior" || method == "both") {
    MultiplierResult r = bogomolov_tilde(g);
    std::cout << "multiplier: " << r.multiplier.str() << "\nm_zero: " << r.m_zero.str()
              << "\nb0: " << r.b0.str() << "\n";
    if (method == "both") {
      B0Result c = b0_cohomological(g, mode);
      std::cout << "multiplier_cohomology: " << c.M_structure.str()
                << "\nb0_cohomology: " << c.B0_structure.str() << "\n";
      mismatch = !(c.M_structure == r.multiplier && c.B0_structure == r.b0);
      std::cout << "agreement: " << (mismatch ? "no" : "yes") << "\n";
    }
  } else {
    B0Result c = b0_cohomological(g, mode);
    std::cout << "multiplier_cohomology: " << c.M_structure.str()
              << "\nb0_cohomology: " << c.B0_structure.str() << "\n";
  }
  if (modulus > 0) {
    CocycleSpace cs = cocycle_space(g, modulus);
    std::cout << "h2_order mod " << modulus << ": " << cs.h2_order << "\nhom_order mod "
              << modulus << ": " << cs.hom_order << "\n";
  }
  return mismatch ? 1 : 0;
}

int do_values(const std::string& which, const std::string& path, const std::string& variety,
              const std::string& word) {
  Group g = read_group_file(path);
  Variety v = variety_from_flags(variety, word);
  std::cout << "label: " << g.label() << "\nvariety: " << v.name << "\n";
  if (which == "tvalues")
    print_elems("values", value_set(v, g));
  else if (which == "verbal")
    print_elems("verbal", verbal_subgroup(v, g).elems);
  else
    print_elems("marginal", marginal_subgroup(v, g).elems);
  return 0;
}

int do_vp_check(const std::string& path, const std::string& normal, const std::string& variety,
                const std::string& word) {
  Group g = read_group_file(path);
  Variety v = variety_from_flags(variety, word);
  std::vector<Elt> gens;
  std::stringstream ss(normal);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) gens.push_back(std::stoi(tok));
  for (Elt e : gens)
    if (e < 0 || e >= g.order()) fail(ErrorKind::BadElement, "element index out of range");
  Subgroup N = subgroup_generated(g, gens);
  if (!is_normal(g, N)) fail(ErrorKind::NotNormal, "generated subgroup is not normal");
  print_elems("N", N.elems);
  VpReport rep = is_vp_subgroup(g, N, v);
  std::cout << "variety: " << v.name << "\nvp: " << (rep.vp ? "true" : "false") << "\n";
  if (rep.witness) {
    std::cout << "witness: law " << rep.witness->first << " at quotient tuple";
    for (Elt e : rep.witness->second) std::cout << " " << e;
    std::cout << "\n";
  }
  return 0;
}

int do_verify(const std::vector<std::string>& ids, const std::string& corpus_dir, int max_order,
              bool stretch, const std::string& out) {
  Corpus corpus = load_corpus(corpus_dir);
  for (const auto& [p, why] : corpus.skipped)
    std::cerr << "skipped " << p << ": " << why << "\n";
  std::vector<std::string> run_ids;
  for (const auto& id : ids) {
    if (id == "all") {
      run_ids = campaign_ids();
      break;
    }
    run_ids.push_back(id);
  }
  CachedEngine eng;
  CampaignOptions opt;
  opt.max_order = max_order;
  opt.stretch = stretch;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["corpus"] = corpus_dir;
  j["propositions"] = ordered_json::array();
  bool any_failed = false;
  for (const auto& id : run_ids) {
    VerificationReport r = run_campaign(id, corpus, eng, opt);
    any_failed |= !r.ok();
    std::printf("%-14s attempted %5lld passed %5lld failed %3lld skipped %3lld  %8.0fms\n",
                r.id.c_str(), r.attempted, r.passed, r.failed, r.skipped, r.ms);
    for (const auto& w : r.failures)
      std::cout << "  FAIL " << w.instance << " :: " << w.note << "\n";
    j["propositions"].push_back(report_json(r));
  }
  if (!out.empty()) write_text_file(out, j.dump(2) + "\n");
  return any_failed ? 1 : 0;
}

int do_report(const std::string& corpus_dir, int max_order, bool stretch,
              const std::string& out) {
  Corpus corpus = load_corpus(corpus_dir);
  for (const auto& [p, why] : corpus.skipped)
    std::cerr << "skipped " << p << ": " << why << "\n";
  CachedEngine eng;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["corpus"] = corpus_dir;
  j["groups"] = ordered_json::array();
  bool any_failed = false;
  for (const auto& e : corpus.entries) {
    if (e.g.order() > max_order && !(stretch && e.g.order() <= 64)) continue;
    GroupSummary s = summarize_group(eng, e.g);
    any_failed |= !s.agree;
    std::printf("%-10s order %3d  M %-12s B0t %-8s %s\n", s.label.c_str(), s.order,
                s.multiplier.str().c_str(), s.b0.str().c_str(),
                s.agree ? "" : "DISAGREE");
    j["groups"].push_back(summary_json(s));
  }
  CampaignOptions opt;
  opt.max_order = max_order == 32 ? 0 : max_order;
  opt.stretch = stretch;
  j["propositions"] = ordered_json::array();
  for (const auto& id : campaign_ids()) {
    VerificationReport r = run_campaign(id, corpus, eng, opt);
    any_failed |= !r.ok();
    std::printf("%-14s attempted %5lld passed %5lld failed %3lld skipped %3lld  %8.0fms\n",
                r.id.c_str(), r.attempted, r.passed, r.failed, r.skipped, r.ms);
    j["propositions"].push_back(report_json(r));
  }
  if (!out.empty()) write_text_file(out, j.dump(2) + "\n");
  return any_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of finite groups and proposition verification"};
  app.require_subcommand(1);

  std::string groupfile, corpus_dir, out, normal, word, mode_name = "bicyclic";
  std::string method = "both", variety = "abelian";
  long long modulus = 0;
  int max_order = 0;
  bool stretch = false;
  std::vector<std::string> ids;

  auto* mult = app.add_subcommand("multiplier", "Schur multiplier of a group file");
  mult->add_option("groupfile", groupfile)->required();

  auto* b0 = app.add_subcommand("b0", "B0-tilde by one or both routes");
  b0->add_option("groupfile", groupfile)->required();
  b0->add_option("--method", method)->check(CLI::IsMember({"exterior", "cohomology", "both"}));
  b0->add_option("--mode", mode_name)->check(CLI::IsMember({"bicyclic", "all-abelian"}));
  b0->add_option("--modulus", modulus);

  auto* tv = app.add_subcommand("tvalues", "word value set T(G)");
  auto* vb = app.add_subcommand("verbal", "verbal subgroup V(G)");
  auto* mg = app.add_subcommand("marginal", "marginal subgroup V*(G)");
  for (auto* c : {tv, vb, mg}) {
    c->add_option("groupfile", groupfile)->required();
    c->add_option("--variety", variety);
    c->add_option("--word", word);
  }

  auto* vp = app.add_subcommand("vp-check", "verbal-preserving check for a normal subgroup");
  vp->add_option("groupfile", groupfile)->required();
  vp->add_option("--normal", normal, "comma-separated element indices")->required();
  vp->add_option("--variety", variety);
  vp->add_option("--word", word);

  auto* ver = app.add_subcommand("verify", "run verification campaigns");
  ver->add_option("ids", ids, "campaign ids or 'all'")->required();
  ver->add_option("--corpus", corpus_dir)->required();
  ver->add_option("--max-order", max_order);
  ver->add_flag("--stretch", stretch, "include order-64 entries");
  ver->add_option("-o,--out", out);

  auto* rep = app.add_subcommand("report", "group invariants plus all campaigns");
  rep->add_option("--corpus", corpus_dir)->required();
  rep->add_option("--max-order", max_order);
  rep->add_flag("--stretch", stretch, "include order-64 entries");
  rep->add_option("-o,--out", out);

  auto* gen = app.add_subcommand("gen-corpus", "write the bundled corpus to a directory");
  gen->add_option("dir", corpus_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (mult->parsed()) return do_multiplier(groupfile);
    if (b0->parsed()) return do_b0(groupfile, method, mode_name, modulus);
    if (tv->parsed()) return do_values("tvalues", groupfile, variety, word);
    if (vb->parsed()) return do_values("verbal", groupfile, variety, word);
    if (mg->parsed()) return do_values("marginal", groupfile, variety, word);
    if (vp->parsed()) return do_vp_check(groupfile, normal, variety, word);
    if (ver->parsed()) return do_verify(ids, corpus_dir, max_order, stretch, out);
    if (rep->parsed()) return do_report(corpus_dir, max_order == 0 ? 32 : max_order, stretch, out);
    if (gen->parsed()) {
      write_bundled_corpus(corpus_dir);
      std::cout << "wrote " << bundled_corpus().size() << " groups to " << corpus_dir << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
