#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "mondrian/filters.hpp"
#include "mondrian/io.hpp"
#include "mondrian/oracle.hpp"
#include "mondrian/pieces.hpp"
#include "mondrian/pipeline.hpp"
#include "mondrian/solver.hpp"

namespace mondrian::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << data;
}

// Writes to `path`, or to `out` when path is empty or "-".
void Emit(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
  } else {
    WriteFile(path, data);
  }
}

GapMode ParseGapMode(const std::string& s) {
  if (s == "mixed") return GapMode::kMixed;
  if (s == "strict") return GapMode::kStrict;
  throw InputError("gap mode must be mixed or strict");
}

Symmetry ParseSymmetry(const std::string& s) {
  if (s == "auto") return Symmetry::kAuto;
  if (s == "none") return Symmetry::kNone;
  if (s == "square") return Symmetry::kSquare;
  if (s == "mirror") return Symmetry::kMirror;
  throw InputError("symmetry must be auto, none, square or mirror");
}

double Seconds(std::chrono::nanoseconds d) {
  return std::chrono::duration<double>(d).count();
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

// ---- pieces ---------------------------------------------------------------

struct PiecesArgs {
  std::int64_t width = 0, height = 0, r = 0;
  std::string format = "text";
};

int CmdPieces(const PiecesArgs& a, std::ostream& out, std::ostream& err) {
  PieceSetResult made = MakePieceSet(a.width, a.height, a.r);
  if (auto* bad = std::get_if<InfeasibleCase>(&made)) {
    err << "infeasible: " << bad->Describe() << "\n";
    return kInvalidInput;
  }
  const PieceSet& ps = std::get<PieceSet>(made);
  if (a.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const Piece& p : ps.pieces()) {
      arr.push_back({{"index", p.index},
                     {"w", p.width},
                     {"h", p.height},
                     {"class", p.class_id}});
    }
    out << nlohmann::json{{"format", "mondrian-pieces/1"},
                          {"width", a.width},
                          {"height", a.height},
                          {"r", a.r},
                          {"area", ps.spec().piece_area},
                          {"classes", ps.class_count()},
                          {"entries", arr}}
               .dump(2)
        << "\n";
    return kOk;
  }
  if (a.format != "text") throw InputError("pieces supports text or json");
  out << a.width << "x" << a.height << " r=" << a.r
      << " area=" << ps.spec().piece_area << ": " << ps.size()
      << " entries, " << ps.class_count() << " classes\n";
  for (const Piece& p : ps.pieces()) {
    out << std::setw(4) << p.index << "  " << p.width << "x" << p.height
        << "  class " << p.class_id << "\n";
  }
  return kOk;
}

// ---- scan -----------------------------------------------------------------

struct ScanArgs {
  bool squares = false;
  std::int64_t min = 1, max = 0;
  std::int64_t max_height = 0;  // rectangles: 1..max x 1..max_height
  std::string stages = "side,perimeter,gap,hole";
  std::string gap_mode = "mixed";
  bool no_singletons = false;
  int workers = 0;
  std::string format = "csv";
  std::string output;
  bool refine = false;
  std::string refine_nodes = "10^8";
  std::int64_t case_timeout_ms = 0;
  bool quiet = false;
};

int CmdScan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max < a.min || a.min < 1) throw InputError("empty or invalid range");
  PipelineOptions opts;
  opts.stages = StageSet::Parse(a.stages);
  opts.gap_mode = ParseGapMode(a.gap_mode);
  opts.include_singletons = !a.no_singletons;
  if (a.case_timeout_ms > 0) {
    opts.case_timeout = std::chrono::milliseconds(a.case_timeout_ms);
  }
  if (a.refine) {
    SearchLimits lim;
    lim.max_nodes = ParseCount(a.refine_nodes);
    opts.refine = lim;
  }
  if (!(a.format == "csv" || a.format == "json" || a.format == "text")) {
    throw InputError("scan supports csv, json or text");
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> boards;
  if (a.squares || a.max_height == 0) {
    for (std::int64_t n = a.min; n <= a.max; ++n) boards.emplace_back(n, n);
  } else {
    for (std::int64_t w = a.min; w <= a.max; ++w) {
      for (std::int64_t h = a.min; h <= a.max_height; ++h) {
        boards.emplace_back(w, h);
      }
    }
  }
  const int workers = ResolveWorkers(a.workers);
  const auto progress = [&](const BoardSummary& b) {
    if (a.quiet) return;
    if (b.error) {
      err << "board " << b.width << "x" << b.height << " failed: " << *b.error
          << "\n";
    } else if (b.survives()) {
      err << "board " << b.width << "x" << b.height << " survives\n";
    } else if (b.width % 50 == 0 && b.height == b.width) {
      err << "scanned through " << b.width << "\n";
    }
  };
  const std::vector<BoardSummary> result =
      ScanBoards(boards, opts, workers, progress);

  std::vector<PipelineVerdict> verdicts;
  std::vector<std::string> survivors;
  bool crashed = false;
  bool timeouts = false;
  for (const BoardSummary& b : result) {
    crashed = crashed || b.error.has_value();
    verdicts.insert(verdicts.end(), b.verdicts.begin(), b.verdicts.end());
    for (const auto& v : b.verdicts) timeouts |= v.stage == Stage::kTimeout;
    if (b.survives() && !b.error) {
      survivors.push_back(b.width == b.height
                              ? std::to_string(b.width)
                              : std::to_string(b.width) + "x" +
                                    std::to_string(b.height));
    }
  }
  std::string summary = "survivors:";
  for (const auto& s : survivors) summary += " " + s;
  summary += "\n";

  std::string data;
  if (a.format == "csv") {
    data = io::VerdictsToCsv(verdicts);
  } else if (a.format == "json") {
    data = io::VerdictsToJson(verdicts);
  } else {
    std::ostringstream os;
    for (const auto& v : verdicts) {
      os << v.spec.width << "x" << v.spec.height << " r=" << v.spec.piece_count
         << " " << StageName(v.stage);
      if (v.surviving_candidates > 0) {
        os << " (" << v.surviving_candidates << " candidates)";
      }
      if (v.refuted_candidates > 0) {
        os << " refuted=" << v.refuted_candidates;
      }
      os << "\n";
    }
    os << summary;
    data = os.str();
  }
  Emit(a.output, data, out);
  if (a.format != "text") err << summary;
  if (timeouts) err << "note: some cases timed out and count as survivors\n";
  for (const auto& v : verdicts) {
    if (v.witness) {
      err << "perfect partition found for " << v.spec.width << "x"
          << v.spec.height << " r=" << v.spec.piece_count << "\n";
    }
  }
  return crashed ? kCaseFailure : kOk;
}

// ---- perimeters -----------------------------------------------------------

struct PerimetersArgs {
  std::int64_t width = 0, height = 0, r = 0;
  std::string gap_mode = "mixed";
  bool no_singletons = false;
  bool survivors_only = false;
  std::int64_t limit = 0;
  std::string format = "text";
};

int CmdPerimeters(const PerimetersArgs& a, std::ostream& out,
                  std::ostream& err) {
  PieceSetResult made = MakePieceSet(a.width, a.height, a.r);
  if (auto* bad = std::get_if<InfeasibleCase>(&made)) {
    err << "infeasible: " << bad->Describe() << "\n";
    return kInvalidInput;
  }
  const PieceSet& ps = std::get<PieceSet>(made);
  const GapMode mode = ParseGapMode(a.gap_mode);
  PerimeterOptions popts;
  popts.include_singletons = !a.no_singletons;
  nlohmann::json arr = nlohmann::json::array();
  std::int64_t shown = 0, total = 0;
  auto dims = [&](const SideSubset& s) {
    std::string o = "{";
    for (std::size_t i = 0; i < s.members.size(); ++i) {
      const Piece& p = ps[s.members[i]];
      o += (i ? ", " : "") + std::to_string(p.width) + "x" +
           std::to_string(p.height);
    }
    return o + "}";
  };
  ForEachPerimeterCandidate(ps, popts, [&](const PerimeterCandidate& c) {
    ++total;
    const GapResult gap = GapCheck(c, ps, mode);
    const HoleResult hole = HoleCheck(c, ps);
    if (a.survivors_only && !(gap.pass && hole.pass)) return true;
    ++shown;
    if (a.format == "json") {
      nlohmann::json j = nlohmann::json::parse(io::PerimeterToJson(ps, c));
      j["gap_pass"] = gap.pass;
      j["hole_pass"] = hole.pass;
      j["max_hole_width"] = hole.max_hole_width;
      j["max_hole_height"] = hole.max_hole_height;
      nlohmann::json gaps = nlohmann::json::array();
      for (const SideGap& s : gap.sides) {
        gaps.push_back({{"extent", s.extent}, {"fillable", s.fillable},
                        {"witness", s.witness}});
      }
      j["gaps"] = gaps;
      arr.push_back(std::move(j));
    } else {
      out << "bottom " << dims(c.bottom) << " top " << dims(c.top) << " left "
          << dims(c.left) << " right " << dims(c.right) << "\n  gaps";
      for (const SideGap& s : gap.sides) {
        out << " " << s.extent << (s.fillable ? "" : "!");
      }
      out << " gap=" << (gap.pass ? "PASS" : "FAIL") << " mwh="
          << hole.max_hole_width << " mhh=" << hole.max_hole_height
          << " fitting=" << hole.fitting_classes
          << " hole=" << (hole.pass ? "PASS" : "FAIL") << "\n";
    }
    return a.limit == 0 || shown < a.limit;
  });
  if (a.format == "json") {
    out << nlohmann::json{{"format", "mondrian-perimeters/1"},
                          {"candidates", arr}}
               .dump(2)
        << "\n";
  }
  err << shown << " of " << total << " candidates listed\n";
  return kOk;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::int64_t width = 0, height = 0, r = 0;
  bool no_filters = false;
  std::string generic_fixture;
  std::string symmetry = "auto";
  std::string gap_mode = "mixed";
  int workers = 0;
  bool canonical = false;
  bool lemma_audit = false;
  std::string limit_nodes;
  std::int64_t limit_time_ms = 0;
  std::string witness = "witness";
  std::string format = "text";
};

struct CaseReport {
  CaseSpec spec;
  std::string verdict;  // FOUND / EXHAUSTED / LIMIT
  std::string decided_by;
  SolveResult result;
};

int CmdSolve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  SearchOptions so;
  so.symmetry = ParseSymmetry(a.symmetry);
  so.workers = ResolveWorkers(a.workers);
  so.canonical_witness = a.canonical;
  so.lemma_audit = a.lemma_audit;
  if (!a.limit_nodes.empty()) so.limits.max_nodes = ParseCount(a.limit_nodes);
  if (a.limit_time_ms > 0) {
    so.limits.max_time = std::chrono::milliseconds(a.limit_time_ms);
  }

  std::vector<CaseReport> reports;
  if (!a.generic_fixture.empty()) {
    const oracle::GuillotineInstance inst =
        io::GuillotineFromJson(ReadFile(a.generic_fixture));
    auto entries =
        oracle::EntriesWithRotations(inst.pieces, a.width, a.height);
    EngineProblem p = EngineProblem::Generic(a.width, a.height, entries, so);
    SolveResult r = Run(p);
    reports.push_back({CaseSpec{a.width, a.height,
                                static_cast<std::int64_t>(inst.pieces.size()),
                                0},
                       std::string(StatusName(r.status)), "solver", r});
  } else {
    std::vector<CaseSpec> cases;
    if (a.r > 0) {
      cases.push_back(MakeCase(a.width, a.height, a.r));
    } else {
      EnumerateOptions eo;
      if (a.lemma_audit) eo.min_pieces = 2;
      cases = EnumerateCases(a.width, a.height, eo);
    }
    PipelineOptions po;
    po.gap_mode = ParseGapMode(a.gap_mode);
    for (const CaseSpec& spec : cases) {
      PieceSetResult made = MakePieceSet(spec);
      if (auto* bad = std::get_if<InfeasibleCase>(&made)) {
        if (a.r > 0) {
          err << "infeasible: " << bad->Describe() << "\n";
          return kInvalidInput;
        }
        continue;
      }
      const PieceSet& ps = std::get<PieceSet>(made);
      if (!a.no_filters && spec.piece_count >= kMinPerfectPieces) {
        const PipelineVerdict v = RunCase(spec, po);
        if (v.eliminated()) {
          SolveResult none;
          none.stats.elapsed = v.elapsed;
          reports.push_back({spec, "EXHAUSTED",
                             "filter " + std::string(StageName(v.stage)),
                             none});
          continue;
        }
      }
      SolveResult r = Run(EngineProblem::Pmp(ps, so));
      reports.push_back({spec, std::string(StatusName(r.status)), "solver", r});
    }
  }

  bool limit = false;
  const CaseReport* found = nullptr;
  for (const CaseReport& c : reports) {
    limit |= c.result.status == SolveStatus::kLimit;
    if (c.result.tiling && !found) found = &c;
  }
  if (a.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const CaseReport& c : reports) {
      nlohmann::json j = nlohmann::json::parse(
          io::SolveResultToJson(c.result, c.spec.width, c.spec.height));
      j["r"] = c.spec.piece_count;
      j["status"] = c.verdict;
      j["decided_by"] = c.decided_by;
      arr.push_back(std::move(j));
    }
    out << nlohmann::json{{"format", "mondrian-solve-run/1"}, {"cases", arr}}
               .dump(2)
        << "\n";
  } else {
    if (reports.empty()) out << "no feasible piece count for this board\n";
    for (const CaseReport& c : reports) {
      out << c.spec.width << "x" << c.spec.height << " r=" << c.spec.piece_count
          << ": " << c.verdict << " (" << c.decided_by << ", "
          << c.result.stats.nodes << " nodes, "
          << Fixed(Seconds(c.result.stats.elapsed), 3) << " s";
      if (c.result.stats.tasks > 1) {
        out << ", " << c.result.stats.tasks_finished << "/"
            << c.result.stats.tasks << " tasks";
      }
      out << ")\n";
    }
  }
  if (found) {
    const Tiling& t = *found->result.tiling;
    TilingCheck check;
    check.require_noncongruent = true;
    if (auto e = ValidateTiling(t, check)) {
      err << "internal error: witness fails validation: " << *e << "\n";
      return kCaseFailure;
    }
    WriteFile(a.witness + ".json", io::TilingToJson(t));
    WriteFile(a.witness + ".svg", io::RenderSvg(t));
    err << "witness written to " << a.witness << ".json and " << a.witness
        << ".svg\n";
  }
  if (limit) {
    err << "search budget exhausted before a verdict\n";
    return kLimit;
  }
  return kOk;
}

// ---- render ---------------------------------------------------------------

struct RenderArgs {
  std::string input;
  std::string format = "svg";
  std::string output;
  bool no_labels = false;
  double size = 720.0;
};

int CmdRender(const RenderArgs& a, std::ostream& out, std::ostream&) {
  const std::string text = ReadFile(a.input);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw io::FormatError(std::string("malformed JSON: ") + e.what());
  }
  const std::string tag =
      j.is_object() && j.contains("format") && j["format"].is_string()
          ? j["format"].get<std::string>()
          : "";
  Tiling t;
  std::string title;
  TilingCheck partial;
  partial.require_cover = false;
  if (tag == io::kPerimeterFormat) {
    const io::PerimeterDocument doc = io::PerimeterFromJson(text);
    const PieceSet ps = std::get<PieceSet>(MakePieceSet(doc.spec));
    t = io::PerimeterLayout(ps, doc.candidate);
    if (auto e = ValidateTiling(t, partial)) throw io::FormatError(*e);
    title = "perimeter " + std::to_string(doc.spec.width) + "x" +
            std::to_string(doc.spec.height) +
            " r=" + std::to_string(doc.spec.piece_count);
  } else if (tag == io::kGuillotineFormat) {
    t = io::GuillotineFromJson(text).witness;
    title = "guillotine instance";
  } else {
    t = io::TilingFromJson(text, partial);
    title = "tiling";
  }
  std::string data;
  if (a.format == "svg") {
    io::SvgOptions o;
    o.labels = !a.no_labels;
    o.size_px = a.size;
    o.title = title;
    data = io::RenderSvg(t, o);
  } else if (a.format == "ascii" || a.format == "text") {
    data = io::RenderAscii(t);
  } else {
    throw InputError("render supports svg or ascii");
  }
  Emit(a.output, data, out);
  return kOk;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::int64_t width = 0, height = 0;
  int cuts = 4;
  std::uint64_t seed = 1;
  std::string output;
};

int CmdGenerate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const auto inst =
        oracle::RandomGuillotine(a.width, a.height, a.cuts, a.seed);
    Emit(a.output, io::GuillotineToJson(inst), out);
  } catch (const oracle::GenerationFailed& e) {
    err << e.what() << "; try another seed\n";
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace

unsigned long long ParseCount(const std::string& text) {
  const auto fail = [&] { throw InputError("not a count: '" + text + "'"); };
  std::size_t pos = 0;
  try {
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
      const unsigned long long base = std::stoull(text.substr(0, caret), &pos);
      if (pos != caret) fail();
      const std::string ex = text.substr(caret + 1);
      const unsigned long long e = std::stoull(ex, &pos);
      if (pos != ex.size()) fail();
      unsigned long long v = 1;
      for (unsigned long long i = 0; i < e; ++i) {
        if (v > ~0ULL / std::max(base, 1ULL)) fail();
        v *= base;
      }
      return v;
    }
    if (text.find_first_of("eE") != std::string::npos) {
      const double d = std::stod(text, &pos);
      if (pos != text.size() || d < 0 || d > 1.8e19 || d != std::floor(d)) {
        fail();
      }
      return static_cast<unsigned long long>(d);
    }
    if (!text.empty() && text[0] == '-') fail();
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) fail();
    return v;
  } catch (const std::logic_error&) {
    fail();
  }
  return 0;
}

int ResolveWorkers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("MONDRIAN_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::logic_error&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Search tools for perfect Mondrian partitions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mondrian 1.0.0");

  PiecesArgs pa;
  auto* pieces = app.add_subcommand("pieces", "List the piece set of a case");
  pieces->add_option("W", pa.width)->required();
  pieces->add_option("H", pa.height)->required();
  pieces->add_option("r", pa.r)->required();
  pieces->add_option("--format", pa.format, "text or json");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Run the filter pipeline on boards");
  scan->add_flag("--squares", sa.squares, "Scan n x n boards (default)");
  scan->add_option("--min", sa.min, "Smallest side");
  scan->add_option("--max", sa.max, "Largest side")->required();
  scan->add_option("--max-height", sa.max_height,
                   "Scan all W x H rectangles with H up to this value");
  scan->add_option("--stages", sa.stages, "Comma separated filter stages");
  scan->add_option("--gap-mode", sa.gap_mode, "mixed or strict");
  scan->add_flag("--no-singletons", sa.no_singletons,
                 "Require at least two pieces on every side");
  scan->add_option("--workers", sa.workers, "Worker threads");
  scan->add_option("--format", sa.format, "csv, json or text");
  scan->add_option("-o,--output", sa.output, "Output file");
  scan->add_flag("--refine", sa.refine,
                 "Run the boundary-constrained solver on surviving candidates");
  scan->add_option("--refine-nodes", sa.refine_nodes,
                   "Node budget per refined candidate");
  scan->add_option("--case-timeout", sa.case_timeout_ms,
                   "Milliseconds per case before it is reported as TIMEOUT");
  scan->add_flag("-q,--quiet", sa.quiet, "No progress on stderr");

  PerimetersArgs ra;
  auto* perims =
      app.add_subcommand("perimeters", "List perimeter candidates of a case");
  perims->add_option("W", ra.width)->required();
  perims->add_option("H", ra.height)->required();
  perims->add_option("r", ra.r)->required();
  perims->add_option("--gap-mode", ra.gap_mode, "mixed or strict");
  perims->add_flag("--no-singletons", ra.no_singletons);
  perims->add_flag("--survivors", ra.survivors_only,
                   "Only candidates passing gap and hole checks");
  perims->add_option("--limit", ra.limit, "Stop after this many");
  perims->add_option("--format", ra.format, "text or json");

  SolveArgs va;
  auto* solve = app.add_subcommand("solve", "Search for a tiling");
  solve->add_option("W", va.width)->required();
  solve->add_option("H", va.height)->required();
  solve->add_option("r", va.r, "Piece count (default: every feasible one)");
  solve->add_flag("--no-filters", va.no_filters);
  solve->add_option("--generic-fixture", va.generic_fixture,
                    "Tile the board with the pieces of a guillotine instance");
  solve->add_option("--symmetry", va.symmetry, "auto, none, square or mirror");
  solve->add_option("--gap-mode", va.gap_mode, "mixed or strict");
  solve->add_option("--workers", va.workers, "Worker threads");
  solve->add_flag("--canonical-witness", va.canonical);
  solve->add_flag("--lemma-audit", va.lemma_audit,
                  "Allow piece counts below seven");
  solve->add_option("--limit-nodes", va.limit_nodes, "e.g. 10^7 or 1e7");
  solve->add_option("--limit-time", va.limit_time_ms, "Milliseconds");
  solve->add_option("--witness", va.witness,
                    "Path prefix for the witness JSON and SVG");
  solve->add_option("--format", va.format, "text or json");

  RenderArgs da;
  auto* render = app.add_subcommand("render", "Draw a tiling or perimeter");
  render->add_option("input", da.input)->required();
  render->add_option("--format", da.format, "svg or ascii");
  render->add_option("-o,--output", da.output, "Output file");
  render->add_flag("--no-labels", da.no_labels);
  render->add_option("--size", da.size, "Longest side in pixels");

  GenerateArgs ga;
  auto* generate =
      app.add_subcommand("generate", "Make a random guillotine instance");
  generate->add_option("W", ga.width)->required();
  generate->add_option("H", ga.height)->required();
  generate->add_option("--cuts", ga.cuts);
  generate->add_option("--seed", ga.seed);
  generate->add_option("-o,--output", ga.output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    if (app.get_subcommands().empty()) err << app.help();
    return kUsage;
  }

  try {
    if (pieces->parsed()) return CmdPieces(pa, out, err);
    if (scan->parsed()) return CmdScan(sa, out, err);
    if (perims->parsed()) return CmdPerimeters(ra, out, err);
    if (solve->parsed()) return CmdSolve(va, out, err);
    if (render->parsed()) return CmdRender(da, out, err);
    if (generate->parsed()) return CmdGenerate(ga, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCaseFailure;
  }
  return kUsage;
}

}  // namespace mondrian::cli
