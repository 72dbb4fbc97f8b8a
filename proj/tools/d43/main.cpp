#include "suites.hpp"

#include "d43/a2branch.hpp"
#include "d43/affine.hpp"
#include "d43/graph_io.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <thread>

namespace {

using d43::Report;
using d43::cli::RunOptions;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const Report& r, const std::string& format, bool timings) {
  std::cout << (format == "text" ? r.to_text() : r.to_json(timings));
  return r.ok() ? 0 : kExitFail;
}

int enumerate(long l, const std::string& format) {
  const auto all = d43::enumerate_Bl(l);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = d43::kSchemaVersion;
    j["level"] = l;
    j["count"] = all.size();
    j["elements"] = nlohmann::ordered_json::array();
    for (const auto& b : all) j["elements"].push_back({{"coords", b.x}, {"tableau", d43::to_tableau(b).label()}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& b : all) {
      const std::string t = d43::to_tableau(b).render();
      std::cout << b.str() << "\t" << (t.empty() ? "φ" : t) << "\n";
    }
  }
  return 0;
}

int graph(long l, const std::string& format, const std::string& arrows) {
  const auto g = d43::crystal_graph(l, d43::parse_arrows(arrows));
  std::cout << (format == "json" ? d43::to_json(g) : d43::to_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystal bases of the level l KR crystals of type G2^(1): enumeration and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool timings = false;
  app.add_option("--jobs,-j", jobs, "Worker threads for parallel suites")->check(CLI::Range(1u, 1024u));
  app.add_flag("--timings", timings, "Include wall-clock timings in JSON reports");

  std::function<int()> action;
  long level = 1;
  std::string fmt_en, fmt_gr, fmt_de, fmt_te, fmt_pe, fmt_ve;
  const auto report_formats = CLI::IsMember({"json", "text"});
  auto add_level = [&](CLI::App* sub) {
    sub->add_option("--level,-l", level, "Level l")->required()->check(CLI::Range(1L, 100000L));
  };

  auto* en = app.add_subcommand("enumerate", "List the elements of B_l");
  add_level(en);
  en->add_option("--format", fmt_en, "text or json")->default_val("text")->check(report_formats);
  en->callback([&] { action = [&] { return enumerate(level, fmt_en); }; });

  std::string arrows = "012";
  auto* gr = app.add_subcommand("graph", "Crystal graph of B_l");
  add_level(gr);
  gr->add_option("--format", fmt_gr, "dot or json")->default_val("dot")->check(CLI::IsMember({"dot", "json"}));
  gr->add_option("--arrows", arrows, "Colors to include, e.g. 012")->default_val("012");
  gr->callback([&] { action = [&] { return graph(level, fmt_gr, arrows); }; });

  auto* de = app.add_subcommand("decompose", "{0,1}-components of B_l");
  add_level(de);
  de->add_option("--format", fmt_de, "text or json")->default_val("text")->check(report_formats);
  de->callback([&] { action = [&] { return emit(d43::cli::decompose_suite(level, {jobs}), fmt_de, timings); }; });

  bool connected = false;
  auto* te = app.add_subcommand("tensor", "B_l ⊗ B_l");
  add_level(te);
  te->add_flag("--check-connected", connected, "Check that B_l ⊗ B_l is connected")->required();
  te->add_option("--format", fmt_te, "json or text")->default_val("json")->check(report_formats);
  te->callback([&] { action = [&] { return emit(d43::cli::tensor_suite(level, {jobs}), fmt_te, timings); }; });

  long p1_max = 4;
  auto* ch = app.add_subcommand("check", "Structural checks");
  ch->require_subcommand(1);
  auto* pe = ch->add_subcommand("perfect", "Perfectness axioms of B_l");
  add_level(pe);
  pe->add_option("--p1-max", p1_max, "Largest level for the connectedness check")->default_val(4);
  pe->add_option("--format", fmt_pe, "json or text")->default_val("json")->check(report_formats);
  pe->callback([&] { action = [&] { return emit(d43::cli::perfect_suite(level, p1_max, {jobs}), fmt_pe, timings); }; });

  auto* ve = app.add_subcommand("verify", "Verification suites");
  ve->require_subcommand(1);
  ve->fallthrough();
  ve->add_option("--format", fmt_ve, "json or text")->default_val("json")->check(report_formats);

  bool symbolic = false;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  auto* rm = ve->add_subcommand("rmatrix", "R-matrix on V^1 ⊗ V^1");
  rm->add_flag("--symbolic-ybe", symbolic, "Check Yang-Baxter exactly in q, x, y, z");
  rm->add_option("--samples", samples, "Sample points for Yang-Baxter")->default_val(20)->check(CLI::Range(2, 100000));
  rm->add_option("--seed", seed, "Seed for the sample points")->default_val(1);
  rm->callback([&] {
    action = [&] { return emit(d43::cli::rmatrix_suite(symbolic, samples, seed, {jobs}), fmt_ve, timings); };
  });

  long lmax = 5;
  auto* ap = ve->add_subcommand("appendix", "Closed forms of tables A to D");
  ap->add_option("--lmax", lmax, "Largest level")->default_val(5)->check(CLI::Range(1L, 100000L));
  ap->callback([&] { action = [&] { return emit(d43::cli::appendix_suite(lmax, {jobs}), fmt_ve, timings); }; });

  long lemma_max = 4;
  auto* le = ve->add_subcommand("lemmas", "Operator identities on B_{>=0} and B_l");
  le->add_option("--lmax", lemma_max, "Largest level")->default_val(4)->check(CLI::Range(2L, 1000L));
  le->callback([&] { action = [&] { return emit(d43::cli::lemmas_suite(lemma_max, {jobs}), fmt_ve, timings); }; });

  long coh_level = 4, box = 2;
  auto* co = ve->add_subcommand("coherent", "Embeddings into B_infinity and coverage");
  co->add_option("--level", coh_level, "Largest level for embeddings")->default_val(4)->check(CLI::Range(1L, 100000L));
  co->add_option("--box", box, "Coordinate radius for coverage")->default_val(2)->check(CLI::Range(0L, 100L));
  co->callback([&] { action = [&] { return emit(d43::cli::coherent_suite(coh_level, box, {jobs}), fmt_ve, timings); }; });

  std::string dump_path;
  auto* re = ve->add_subcommand("relations", "Defining relations, polarization and lowering identities of V^1");
  re->add_option("--dump-rep", dump_path, "Write the representation matrices as JSON to this file ('-' for stderr)");
  re->callback([&] {
    action = [&] {
      if (!dump_path.empty()) {
        const std::string j = d43::cli::representation_json();
        if (dump_path == "-") {
          std::cerr << j;
        } else {
          std::ofstream out(dump_path);
          if (!out) throw std::runtime_error("cannot write " + dump_path);
          out << j;
        }
      }
      return emit(d43::cli::relations_suite({jobs}), fmt_ve, timings);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
