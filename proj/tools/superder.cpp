// superder: command-line front end for the Lie superalgebra engine.
//
// Exit codes: 0 success, 1 mathematical failure or invalid algebra,
// 2 I/O error, 3 parse error (files or arguments).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superder/analysis.hpp"
#include "superder/fixtures.hpp"
#include "superder/generator.hpp"

namespace fs = std::filesystem;
using namespace superder;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kIoFailure = 2;
constexpr int kParseFailure = 3;

fs::path fixture_dir() {
  if (const char* env = std::getenv("SUPERDER_FIXTURES"); env && *env) return env;
#ifdef SUPERDER_DEFAULT_FIXTURES
  return SUPERDER_DEFAULT_FIXTURES;
#else
  return "fixtures";
#endif
}

/// Existing paths are used as given; otherwise relative names are looked up
/// in the fixture directory.
std::string resolve(const std::string& path) {
  if (fs::exists(path)) return path;
  const fs::path p(path);
  if (p.is_relative()) {
    const fs::path candidate = fixture_dir() / p;
    if (fs::exists(candidate)) return candidate.string();
  }
  return path;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json violations_json(const ValidationReport& report, const GradedBasis& basis) {
  Json out = Json::array();
  for (const auto& v : report.violations) {
    Json item{{"kind", to_string(v.kind)},
              {"indices", {v.i, v.j, v.k}},
              {"labels", {basis.label(v.i), basis.label(v.j), basis.label(v.k)}},
              {"defect", to_string(v.defect)}};
    if (v.kind == Violation::Kind::Jacobi) item["component"] = basis.label(v.component);
    out.push_back(std::move(item));
  }
  return out;
}

/// Loads a valid algebra or reports the problem; returns the exit code to use
/// on failure through `code`.
std::optional<LieSuperalgebra> load_or_report(const std::string& path, bool json, int& code) {
  try {
    const AlgebraDraft draft = parse_algebra_draft(read_file(resolve(path)));
    const ValidationReport report = draft.table.validate();
    if (!report.ok()) {
      if (json) {
        print_json(Json{{"file", path}, {"valid", false}, {"violations", violations_json(report, draft.table.basis())}});
      } else {
        std::cerr << path << ": not a Lie superalgebra (" << report.violations.size() << " violations)\n";
        for (const auto& v : report.violations) std::cerr << "  " << describe(v, draft.table.basis()) << "\n";
      }
      code = kMathFailure;
      return std::nullopt;
    }
    return draft.table.build(draft.name);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kIoFailure;
  } catch (const ParseError& e) {
    std::cerr << path << ": parse error: " << e.what() << "\n";
    code = kParseFailure;
  }
  return std::nullopt;
}

int cmd_validate(const std::string& path, bool json) {
  int code = kOk;
  const auto g = load_or_report(path, json, code);
  if (!g) return code;
  if (json) {
    print_json(Json{{"file", path}, {"valid", true}, {"name", g->name()}, {"dims", to_json(g->dims())},
                    {"violations", Json::array()}});
  } else {
    std::cout << path << ": ok, " << g->name() << " " << to_string(g->dims()) << "\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& path, bool json) {
  int code = kOk;
  const auto g = load_or_report(path, json, code);
  if (!g) return code;
  const AnalysisReport report = analyze(*g);
  if (json) {
    print_json(to_json(report));
  } else {
    std::cout << to_text(report);
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const std::string& path, const std::string& theorems, bool json) {
  int code = kOk;
  const auto g = load_or_report(path, json, code);
  if (!g) return code;
  std::vector<std::string> ids;
  if (theorems != "all") ids = split_list(theorems);

  std::vector<TheoremReport> reports;
  try {
    reports = verify_all(*g, ids);
  } catch (const UnknownTheoremError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseFailure;
  }

  bool failed = false;
  Json out = Json::array();
  for (const auto& r : reports) {
    failed = failed || (r.applicable && !r.holds);
    out.push_back(to_json(r));
  }
  if (json) {
    print_json(Json{{"file", path}, {"name", g->name()}, {"results", out}, {"failures", failed}});
  } else {
    for (const auto& r : reports) {
      std::cout << (r.applicable ? (r.holds ? "holds " : "FAILS ") : "n/a   ") << r.theorem;
      if (!r.applicable) std::cout << "  (requires " << r.witnesses[0]["failed_hypothesis"].get<std::string>() << ")";
      if (!r.dims.empty()) std::cout << "  " << r.dims.dump();
      std::cout << "\n";
    }
  }
  return failed ? kMathFailure : kOk;
}

Json complement_json(const LieSuperalgebra& g, const GradedSubspace& k) {
  Json basis = Json::array();
  for (const auto& v : k.basis()) basis.push_back(terms_json(g.basis(), v));
  return Json{{"algebra", g.name()}, {"dims", to_json(k.dims())}, {"basis", std::move(basis)}};
}

int cmd_stem_reduce(const std::string& path, const std::string& out_dir, bool json) {
  int code = kOk;
  const auto g = load_or_report(path, json, code);
  if (!g) return code;
  try {
    const StemReduction reduction = stem_reduce(*g);
    const IsoclinismPair pair = inverse(reduction.pair);
    const std::string base = fs::path(path).stem().string();
    const std::string stem_file = base + "_stem.json";
    const std::string pair_file = base + "_pair.json";
    const std::string complement_file = base + "_complement.json";
    fs::create_directories(out_dir);
    write_file((fs::path(out_dir) / stem_file).string(), serialize_algebra(reduction.stem));
    write_file((fs::path(out_dir) / complement_file).string(), complement_json(*g, reduction.complement).dump(2) + "\n");
    write_file((fs::path(out_dir) / pair_file).string(),
               serialize_pair(pair, stem_file, fs::path(path).filename().string()));
    const bool verified = verify_isoclinism(pair).holds;
    if (json) {
      print_json(Json{{"input", path},
                      {"stem", (fs::path(out_dir) / stem_file).string()},
                      {"stem_dims", to_json(reduction.stem.dims())},
                      {"complement", (fs::path(out_dir) / complement_file).string()},
                      {"complement_dims", to_json(reduction.complement.dims())},
                      {"pair", (fs::path(out_dir) / pair_file).string()},
                      {"pair_verified", verified}});
    } else {
      std::cout << "stem      " << reduction.stem.name() << " " << to_string(reduction.stem.dims()) << " -> "
                << (fs::path(out_dir) / stem_file).string() << "\n";
      std::cout << "complement " << to_string(reduction.complement.dims()) << " -> "
                << (fs::path(out_dir) / complement_file).string() << "\n";
      std::cout << "pair      " << (verified ? "verified" : "NOT verified") << " -> "
                << (fs::path(out_dir) / pair_file).string() << "\n";
    }
    return verified ? kOk : kMathFailure;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  }
}

int cmd_verify_pair(const std::string& source_path, const std::string& target_path, const std::string& pair_path,
                    bool json) {
  int code = kOk;
  const auto source = load_or_report(source_path, json, code);
  if (!source) return code;
  const auto target = load_or_report(target_path, json, code);
  if (!target) return code;

  IsoclinismPair pair;
  try {
    pair = parse_pair(read_file(resolve(pair_path)), *source, *target);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const DimensionError& e) {
    std::cerr << pair_path << ": shape mismatch: " << e.what() << "\n";
    if (json) print_json(Json{{"pair", pair_path}, {"holds", false}, {"shape_error", e.what()}});
    return kMathFailure;
  } catch (const ParseError& e) {
    std::cerr << pair_path << ": parse error: " << e.what() << "\n";
    return kParseFailure;
  }

  Json checks = Json::array();
  bool failed = false;
  auto record = [&](const std::string& name, bool applicable, bool holds, const std::string& detail) {
    failed = failed || (applicable && !holds);
    checks.push_back(Json{{"check", name}, {"applicable", applicable}, {"holds", holds}, {"detail", detail}});
    if (!json) {
      std::cout << (applicable ? (holds ? "holds " : "FAILS ") : "n/a   ") << name;
      if (!detail.empty()) std::cout << "  " << detail;
      std::cout << "\n";
    }
  };

  const IsoclinismReport square = verify_isoclinism(pair);
  record("isoclinism", true, square.holds, square.holds ? "" : square.failure);
  if (square.holds) {
    const NilindexReport n = check_nilindex_invariance(pair);
    auto text = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
    record("nilindex-invariance", true, n.holds, text(n.source) + " vs " + text(n.target));

    const CheckReport image = check_theta_center_image(pair);
    record("theta-center-image", image.applicable, image.holds, image.detail);

    if (image.applicable) {
      const TransportReport t = check_transport(pair);
      record("central-transport", true, t.injective && t.lands_in_central,
             "rank " + std::to_string(t.rank) + " of " + to_string(t.source_dims));
    } else {
      record("central-transport", false, false, "source is not stem");
    }
  } else {
    for (const char* name : {"nilindex-invariance", "theta-center-image", "central-transport"}) {
      record(name, false, false, "pair is not an isoclinism");
    }
  }

  if (json) {
    Json witness = square.witness ? Json(square.witness_labels) : Json(nullptr);
    print_json(Json{{"source", source_path},
                    {"target", target_path},
                    {"pair", pair_path},
                    {"checks", checks},
                    {"witness", witness},
                    {"failures", failed}});
  }
  return failed ? kMathFailure : kOk;
}

std::optional<std::pair<GradedDims, GradedDims>> parse_dims(const std::string& text) {
  static const std::regex pattern(R"(\(?(\d+)\|(\d+)\)?,\(?(\d+)\|(\d+)\)?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  auto num = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
  return std::make_pair(GradedDims{num(1), num(2)}, GradedDims{num(3), num(4)});
}

int cmd_generate(const std::string& dims_text, std::uint64_t seed, std::size_t count, const std::string& out_dir,
                 bool json) {
  const auto dims = parse_dims(dims_text);
  if (!dims) {
    std::cerr << "error: --dims expects 'p|q,r|s' (generating part V, central part W)\n";
    return kParseFailure;
  }
  try {
    NilpotentGenerator gen(dims->first, dims->second, seed);
    fs::create_directories(out_dir);
    Json files = Json::array();
    for (std::size_t i = 0; i < count; ++i) {
      const LieSuperalgebra g = gen.next();
      const std::string file = (fs::path(out_dir) / ("gen_" + std::to_string(seed) + "_" + std::to_string(i) + ".json")).string();
      write_file(file, serialize_algebra(g));
      const auto n = nilindex(g);
      files.push_back(Json{{"file", file}, {"name", g.name()}, {"nilindex", n ? Json(*n) : Json(nullptr)}});
      if (!json) std::cout << file << "  " << g.name() << " " << to_string(g.dims()) << "\n";
    }
    if (json) print_json(Json{{"seed", seed}, {"count", count}, {"files", files}});
    return kOk;
  } catch (const GeneratorGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseFailure;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  }
}

int cmd_fixtures(const std::string& out_dir, bool json) {
  try {
    fs::create_directories(out_dir);
    Json files = Json::array();
    for (const auto& f : fixtures::all()) {
      const std::string file = (fs::path(out_dir) / f.file).string();
      write_file(file, serialize_algebra(f.algebra));
      files.push_back(file);
      if (!json) std::cout << file << "\n";
    }
    if (json) print_json(Json{{"files", files}});
    return kOk;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure theory of finite-dimensional Lie superalgebras"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  std::string path;
  auto* validate = app.add_subcommand("validate", "Parse an algebra file and check the superalgebra axioms");
  validate->add_option("path", path, "Algebra file")->required();
  validate->add_flag("--json", json, "Machine-readable output");

  bool text = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report structural invariants and derivation dimensions");
  analyze_cmd->add_option("path", path, "Algebra file")->required();
  analyze_cmd->add_flag("--json", json, "Machine-readable output");
  analyze_cmd->add_flag("--text", text, "Human-readable output (default)");

  std::string theorems = "all";
  auto* verify = app.add_subcommand("verify", "Check the structural results on central derivations");
  verify->add_option("path", path, "Algebra file")->required();
  verify->add_option("--theorems", theorems, "'all' or a comma-separated list of check ids");
  verify->add_flag("--json", json, "Machine-readable output");

  std::string out_dir = ".";
  auto* stem = app.add_subcommand("stem-reduce", "Quotient to an isoclinic stem algebra and emit the pair");
  stem->add_option("path", path, "Algebra file")->required();
  stem->add_option("--out", out_dir, "Output directory");
  stem->add_flag("--json", json, "Machine-readable output");

  std::string source, target, pair_file;
  auto* verify_pair = app.add_subcommand("verify-pair", "Check an isoclinism pair between two algebras");
  verify_pair->add_option("source", source, "Source algebra file")->required();
  verify_pair->add_option("target", target, "Target algebra file")->required();
  verify_pair->add_option("pair", pair_file, "Pair file")->required();
  verify_pair->add_flag("--json", json, "Machine-readable output");

  std::string dims = "2|0,1|0";
  std::uint64_t seed = 1;
  std::size_t count = 1;
  auto* generate = app.add_subcommand("generate", "Emit random superalgebras of nilindex at most 2");
  generate->add_option("--dims", dims, "Generating part and central part, 'p|q,r|s'");
  generate->add_option("--seed", seed, "Generator seed");
  generate->add_option("--count", count, "Number of algebras");
  generate->add_option("--out", out_dir, "Output directory");
  generate->add_flag("--json", json, "Machine-readable output");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the built-in fixture library");
  fixtures_cmd->add_option("--out", out_dir, "Output directory");
  fixtures_cmd->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseFailure;
  }
  if (text) json = false;

  if (*validate) return cmd_validate(path, json);
  if (*analyze_cmd) return cmd_analyze(path, json);
  if (*verify) return cmd_verify(path, theorems, json);
  if (*stem) return cmd_stem_reduce(path, out_dir, json);
  if (*verify_pair) return cmd_verify_pair(source, target, pair_file, json);
  if (*generate) return cmd_generate(dims, seed, count, out_dir, json);
  if (*fixtures_cmd) return cmd_fixtures(out_dir, json);
  return kParseFailure;
}
