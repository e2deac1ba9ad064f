// twogen: embeds presented countable groups into 2-generator groups and
// checks the free-group claims behind the construction.
//
//   twogen embed --example Q --bound 4 --mode tf
//   twogen embed --file group.pres --bound 6 --format gap
//   twogen verify identities --imax 50
//   twogen verify basis --n 8
//   twogen verify witness --group C2 --max-degree 8
//   twogen examples zinf --bound 3
//
// Exit codes: 0 ok, 1 failed check or golden mismatch, 2 usage or parse
// error, 3 torsion-free mode on a presentation without the assertion,
// 4 schema-level embedding refused.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twogen/builtin_examples.hpp"
#include "twogen/embedder.hpp"
#include "twogen/identities.hpp"
#include "twogen/presentation.hpp"
#include "twogen/report.hpp"
#include "twogen/stallings.hpp"
#include "twogen/witness.hpp"

namespace {

using namespace twogen;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kModeViolation = 3;
constexpr int kSchemaRefused = 4;

struct RunConfig {
  std::string file;
  std::string example;
  long p = 2;
  long bound = 0;
  std::string mode = "general";
  std::string format = "dsl";
  std::string simplify = "none";
  bool schema = false;

  long imax = 50;
  std::size_t basis_n = 8;

  std::string group = "C2";
  std::string word;
  std::size_t max_degree = 8;
  std::uint64_t max_steps = 20'000'000;
  long time_ms = 60'000;
  std::uint64_t seed = WitnessOptions{}.seed;
  bool nondeterministic = false;
  unsigned threads = 4;
  bool strict = false;

  std::string golden_dir = TWOGEN_GOLDEN_DIR;
  bool write_golden = false;
};

struct Failure {
  int code;
  std::string message;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string load_source(RunConfig const& cfg) {
  if (!cfg.file.empty() && !cfg.example.empty()) {
    throw Failure{kUsage, "give either --file or --example, not both"};
  }
  if (!cfg.example.empty()) {
    auto e = example_from_name(cfg.example);
    if (!e) {
      throw Failure{kUsage, "unknown example '" + cfg.example +
                                "' (choose zinf, Q or prufer)"};
    }
    return example_source(*e, cfg.p);
  }
  if (!cfg.file.empty() && cfg.file != "-") {
    std::ifstream in(cfg.file);
    if (!in) {
      throw Failure{kUsage, "cannot read " + cfg.file};
    }
    return read_all(in);
  }
  return read_all(std::cin);
}

EmbedMode parse_mode(std::string const& m) {
  if (m == "general") {
    return EmbedMode::general;
  }
  if (m == "tf" || m == "torsion-free") {
    return EmbedMode::torsion_free;
  }
  throw Failure{kUsage, "unknown mode '" + m + "'"};
}

Presentation parse_or_fail(std::string const& src) {
  try {
    return parse(src);
  } catch (ParseError const& e) {
    throw Failure{kUsage, std::string("parse error at ") + e.what()};
  }
}

int embed_error_code(EmbedError const& e) {
  switch (e.kind()) {
    case EmbedError::Kind::torsion_free_not_asserted:
      return kModeViolation;
    case EmbedError::Kind::schema_refused:
      return kSchemaRefused;
    default:
      return kUsage;
  }
}

std::string provenance_block(EmbeddingResult const& r) {
  std::string out;
  for (auto const& note : r.provenance) {
    out += "# " + note + "\n";
  }
  return out;
}

nlohmann::json to_json(EmbeddingResult const& r, std::size_t dropped) {
  nlohmann::json j;
  j["mode"] = to_string(r.mode);
  j["generators"] = {"x", "y"};
  j["relators"] = nlohmann::json::array();
  for (auto const& w : r.target.relators) {
    j["relators"].push_back(to_string(w));
  }
  j["schemas"] = nlohmann::json::array();
  for (auto const& s : r.target.schemas) {
    j["schemas"].push_back(to_string(s));
  }
  j["gamma"] = nlohmann::json::object();
  for (auto const& [g, w] : r.gamma.explicit_images()) {
    j["gamma"][to_string(g)] = to_string(w);
  }
  j["provenance"] = r.provenance;
  j["dropped_trivial"] = dropped;
  return j;
}

int cmd_embed(RunConfig const& cfg) {
  Presentation src = parse_or_fail(load_source(cfg));
  EmbedMode mode = parse_mode(cfg.mode);
  Simplify simplify = Simplify::none;
  if (cfg.simplify == "cyclic") {
    simplify = Simplify::cyclic;
  } else if (cfg.simplify != "none") {
    throw Failure{kUsage, "unknown --simplify '" + cfg.simplify + "'"};
  }

  EmbeddingResult r;
  std::size_t dropped = 0;
  try {
    if (cfg.schema) {
      r = embed_schema(src, mode);
    } else {
      if (!src.schemas.empty()) {
        bool all_bounded = true;
        for (auto const& s : src.schemas) {
          all_bounded = all_bounded && s.range.bounded();
        }
        if (cfg.bound < 1 && !all_bounded) {
          throw Failure{kUsage,
                        "presentation has unbounded relator schemas; pass "
                        "--bound N (>= 1) or --schema"};
        }
      }
      long cap = cfg.bound >= 1 ? cfg.bound : std::numeric_limits<long>::max();
      auto inst = instantiate(src, Bounds{cap, {}});
      dropped = inst.dropped;
      r = embed(inst.presentation, mode, simplify);
      for (std::size_t k = 0; k < r.provenance.size(); ++k) {
        r.provenance[k] = inst.origin[k] + " -> " + r.provenance[k];
      }
    }
  } catch (EmbedError const& e) {
    throw Failure{embed_error_code(e), e.what()};
  }
  if (dropped > 0) {
    std::cerr << "note: dropped " << dropped
              << " freely trivial relator instance(s)\n";
  }

  if (cfg.format == "json") {
    std::cout << to_json(r, dropped).dump(2) << "\n";
  } else if (cfg.format == "gap") {
    try {
      std::cout << serialize(r.target, Format::gap);
    } catch (PresentationError const& e) {
      throw Failure{kUsage, e.what()};
    }
  } else if (cfg.format == "dsl") {
    std::cout << "# mode: " << to_string(r.mode) << "\n"
              << serialize(r.target) << provenance_block(r)
              << describe_gamma(r);
  } else {
    throw Failure{kUsage, "unknown --format '" + cfg.format + "'"};
  }
  return kOk;
}

void emit(std::vector<CheckRecord> const& rs, std::string const& format) {
  if (format == "json") {
    std::cout << to_json_lines(rs);
  } else if (format == "table" || format == "dsl") {
    std::cout << to_table(rs);
  } else {
    throw Failure{kUsage, "unknown --format '" + format + "'"};
  }
}

int cmd_verify_identities(RunConfig const& cfg) {
  if (cfg.imax < 1) {
    throw Failure{kUsage, "--imax must be >= 1"};
  }
  auto report = check_identities(cfg.imax);
  emit(records(report), cfg.format);
  std::cerr << report.results.size() - report.failures() << "/"
            << report.results.size() << " identities hold\n";
  return report.all_passed() ? kOk : kCheckFailed;
}

int cmd_verify_basis(RunConfig const& cfg) {
  if (cfg.basis_n < 1) {
    throw Failure{kUsage, "--n must be >= 1"};
  }
  std::vector<CheckRecord> rs;
  bool ok = true;
  std::vector<Word> words;
  for (std::size_t n = 1; n <= cfg.basis_n; ++n) {
    words.push_back(universal_word(static_cast<long>(n)));
    long r = rank(fold(build_graph(words)));
    bool free_basis = r == static_cast<long>(n);
    ok = ok && free_basis;
    rs.push_back(basis_record(n, r, free_basis));
  }
  emit(rs, cfg.format);
  return ok ? kOk : kCheckFailed;
}

int cmd_verify_witness(RunConfig const& cfg) {
  std::string const& g = cfg.group;
  if (g.size() < 2 || g[0] != 'C') {
    throw Failure{kUsage, "--group takes C<n>, e.g. C2"};
  }
  long order_n = 0;
  try {
    order_n = std::stol(g.substr(1));
  } catch (std::exception const&) {
    throw Failure{kUsage, "--group takes C<n>, e.g. C2"};
  }
  if (order_n < 1) {
    throw Failure{kUsage, "--group order must be >= 1"};
  }
  auto src = parse("gens a[i] for i >= 1; rels a[1]^" + std::to_string(order_n));
  auto target = embed(src, EmbedMode::general).target;
  Word query = universal_word(1);
  if (!cfg.word.empty()) {
    try {
      query = parse_word(cfg.word);
    } catch (ParseError const& e) {
      throw Failure{kUsage, std::string("bad --word: ") + e.what()};
    }
  }
  WitnessOptions opt;
  opt.max_degree = cfg.max_degree;
  opt.max_steps = cfg.max_steps;
  opt.time_limit = std::chrono::milliseconds(cfg.time_ms);
  opt.seed = cfg.seed;
  opt.deterministic = !cfg.nondeterministic;
  opt.threads = cfg.threads;
  WitnessReport rep;
  try {
    rep = find_witness(target, query, opt);
  } catch (std::invalid_argument const& e) {
    throw Failure{kUsage, e.what()};
  }
  bool valid = validate_witness(target, query, rep);
  emit({witness_record(g, query, rep, valid)}, cfg.format);
  if (rep.status == WitnessStatus::witness_found) {
    return valid ? kOk : kCheckFailed;
  }
  std::cerr << "no witness found (" << to_string(rep.status)
            << "); this says nothing about whether the word is trivial\n";
  return cfg.strict ? kCheckFailed : kOk;
}

Presentation cyclic_target(Presentation t) {
  for (auto& w : t.relators) {
    w = cyclic_reduce(w);
  }
  return t;
}

int cmd_examples(RunConfig const& cfg) {
  auto e = example_from_name(cfg.example);
  if (!e) {
    throw Failure{kUsage, "unknown example '" + cfg.example +
                              "' (choose zinf, Q or prufer)"};
  }
  if (cfg.bound < 1) {
    throw Failure{kUsage, "--bound N (>= 1) is required"};
  }
  Presentation src = example_presentation(*e, cfg.p);
  EmbedMode mode = example_mode(*e);
  auto inst = instantiate(src, cfg.bound);
  auto r = embed(inst.presentation, mode, Simplify::cyclic);
  std::string target_text = serialize(cyclic_target(r.target));

  std::cout << "# example " << example_name(*e) << ", bound " << cfg.bound
            << ", " << to_string(mode) << " mode\n"
            << "# source\n"
            << serialize(src) << "# target\n"
            << target_text << describe_gamma(r);

  auto path = std::filesystem::path(cfg.golden_dir) /
              (golden_stem(*e, cfg.p, cfg.bound) + ".txt");
  if (cfg.write_golden) {
    std::ofstream out(path);
    if (!out) {
      throw Failure{kUsage, "cannot write " + path.string()};
    }
    out << target_text;
    std::cout << "golden: written " << path.string() << "\n";
    return kOk;
  }
  std::ifstream in(path);
  if (!in) {
    std::cout << "golden: none stored for " << path.filename().string()
              << "\n";
    return kOk;
  }
  std::string golden = read_all(in);
  if (golden == target_text) {
    std::cout << "golden: match " << path.filename().string() << "\n";
    return kOk;
  }
  if (*e == Example::prufer) {
    // Different grouping of the same relators is still a match.
    try {
      auto stored = parse(golden);
      auto now = cyclic_target(r.target);
      if (stored.relators == now.relators) {
        std::cout << "golden: match up to free equality "
                  << path.filename().string() << "\n";
        return kOk;
      }
    } catch (ParseError const&) {
    }
  }
  std::cout << "golden: MISMATCH " << path.filename().string() << "\n";
  std::istringstream a(golden);
  std::istringstream b(target_text);
  std::string la;
  std::string lb;
  std::size_t line = 1;
  while (true) {
    bool more_a = static_cast<bool>(std::getline(a, la));
    bool more_b = static_cast<bool>(std::getline(b, lb));
    if (!more_a && !more_b) {
      break;
    }
    if (la != lb) {
      std::cout << "  line " << line << ":\n  - " << la << "\n  + " << lb
                << "\n";
    }
    la.clear();
    lb.clear();
    ++line;
  }
  return kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Embeds presented countable groups into 2-generator groups"};
  app.require_subcommand(1);

  auto* embed_cmd = app.add_subcommand("embed", "embed a presentation");
  embed_cmd->add_option("--file", cfg.file, "presentation file ('-' = stdin)");
  embed_cmd->add_option("--example", cfg.example, "built-in: zinf, Q, prufer");
  embed_cmd->add_option("--p", cfg.p, "prime for the prufer example");
  embed_cmd->add_option("--bound", cfg.bound, "instantiate schemas up to N");
  embed_cmd->add_option("--mode", cfg.mode, "general | tf")
      ->check(CLI::IsMember({"general", "tf", "torsion-free"}));
  embed_cmd->add_option("--format", cfg.format, "dsl | gap | json")
      ->check(CLI::IsMember({"dsl", "gap", "json"}));
  embed_cmd->add_option("--simplify", cfg.simplify, "none | cyclic")
      ->check(CLI::IsMember({"none", "cyclic"}));
  embed_cmd->add_flag("--schema", cfg.schema,
                      "embed relator schemas without instantiating");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->require_subcommand(1);
  verify_cmd->add_option("--format", cfg.format, "table | json");
  auto* ident_cmd =
      verify_cmd->add_subcommand("identities", "free-group identity suite");
  ident_cmd->add_option("--imax", cfg.imax, "check i = 1..imax");
  ident_cmd->add_option("--format", cfg.format, "table | json");
  auto* basis_cmd = verify_cmd->add_subcommand(
      "basis", "free-basis check of a_1..a_n by Stallings folding");
  basis_cmd->add_option("--n", cfg.basis_n, "number of universal words");
  basis_cmd->add_option("--format", cfg.format, "table | json");
  auto* witness_cmd = verify_cmd->add_subcommand(
      "witness", "finite permutation witness that gamma(a_1) != 1");
  witness_cmd->add_option("--group", cfg.group, "C<n>, the cyclic group");
  witness_cmd->add_option("--word", cfg.word, "query word over x, y");
  witness_cmd->add_option("--max-degree", cfg.max_degree);
  witness_cmd->add_option("--max-steps", cfg.max_steps);
  witness_cmd->add_option("--time-ms", cfg.time_ms);
  witness_cmd->add_option("--seed", cfg.seed);
  witness_cmd->add_flag("--nondeterministic", cfg.nondeterministic,
                        "race several seeds in parallel");
  witness_cmd->add_option("--threads", cfg.threads);
  witness_cmd->add_flag("--strict", cfg.strict, "exit 1 unless found");
  witness_cmd->add_option("--format", cfg.format, "table | json");

  auto* examples_cmd =
      app.add_subcommand("examples", "built-in examples against golden files");
  examples_cmd->add_option("name", cfg.example, "zinf | Q | prufer")
      ->required();
  examples_cmd->add_option("--bound", cfg.bound)->required();
  examples_cmd->add_option("--p", cfg.p, "prime for prufer");
  examples_cmd->add_option("--golden-dir", cfg.golden_dir);
  examples_cmd->add_flag("--write-golden", cfg.write_golden);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }
  if (verify_cmd->parsed() && cfg.format == "dsl") {
    cfg.format = "table";
  }

  try {
    if (embed_cmd->parsed()) {
      return cmd_embed(cfg);
    }
    if (ident_cmd->parsed()) {
      return cmd_verify_identities(cfg);
    }
    if (basis_cmd->parsed()) {
      return cmd_verify_basis(cfg);
    }
    if (witness_cmd->parsed()) {
      return cmd_verify_witness(cfg);
    }
    if (examples_cmd->parsed()) {
      return cmd_examples(cfg);
    }
  } catch (Failure const& f) {
    std::cerr << "twogen: " << f.message << "\n";
    return f.code;
  } catch (std::exception const& e) {
    std::cerr << "twogen: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
