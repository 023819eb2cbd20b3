#include "mondrian/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace mondrian::io {

using nlohmann::json;

namespace {

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

void ExpectFormat(const json& j, std::string_view tag) {
  if (!j.is_object() || !j.contains("format") ||
      j["format"] != std::string(tag)) {
    throw FormatError("expected a document with format '" + std::string(tag) +
                      "'");
  }
}

template <typename T>
T Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

json PiecesJson(const Tiling& t) {
  json arr = json::array();
  for (const PlacedPiece& p : t.pieces) {
    arr.push_back({{"w", p.width},
                   {"h", p.height},
                   {"x", p.x},
                   {"y", p.y},
                   {"class", p.class_id}});
  }
  return arr;
}

Tiling TilingFromObject(const json& j) {
  Tiling t{Field<std::int64_t>(j, "width"), Field<std::int64_t>(j, "height"),
           {}};
  const json pieces = Field<json>(j, "pieces");
  if (!pieces.is_array()) throw FormatError("'pieces' must be an array");
  int next_class = 0;
  for (const json& p : pieces) {
    PlacedPiece pc{Field<std::int64_t>(p, "x"), Field<std::int64_t>(p, "y"),
                   Field<std::int64_t>(p, "w"), Field<std::int64_t>(p, "h"),
                   next_class};
    if (p.contains("class")) pc.class_id = Field<int>(p, "class");
    ++next_class;
    t.pieces.push_back(pc);
  }
  return t;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

double Ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

json SideJson(const PieceSet& ps, const SideSubset& side) {
  json arr = json::array();
  for (int m : side.members) arr.push_back({{"w", ps[m].width}, {"h", ps[m].height}});
  return arr;
}

int FindEntry(const PieceSet& ps, const json& p) {
  const auto w = Field<std::int64_t>(p, "w");
  const auto h = Field<std::int64_t>(p, "h");
  for (int i = 0; i < ps.size(); ++i) {
    if (ps[i].width == w && ps[i].height == h) return i;
  }
  throw FormatError("piece " + std::to_string(w) + "x" + std::to_string(h) +
                    " is not in the piece set");
}

SideSubset SideFromJson(const PieceSet& ps, const json& arr, Axis axis) {
  if (!arr.is_array()) throw FormatError("a side must be an array of pieces");
  SideSubset s{axis, {}, 0};
  for (const json& p : arr) {
    const int e = FindEntry(ps, p);
    s.members.push_back(e);
    s.span_sum += axis == Axis::kHorizontal ? ps[e].width : ps[e].height;
  }
  std::sort(s.members.begin(), s.members.end());
  return s;
}

// 1.5 -> "1.5", 2.0 -> "2"
std::string Num(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << std::noshowpoint << v;
  return os.str();
}

}  // namespace

std::string TilingToJson(const Tiling& t) {
  return Dump({{"format", kTilingFormat},
               {"width", t.width},
               {"height", t.height},
               {"pieces", PiecesJson(t)}});
}

Tiling TilingFromJson(std::string_view text, const TilingCheck& check) {
  const json j = Parse(text);
  // Solve reports embed the tiling; accept either form.
  if (j.is_object() && j.contains("format") && j["format"] == kSolveFormat) {
    if (!j.contains("tiling")) throw FormatError("solve report has no tiling");
    return TilingFromJson(j["tiling"].dump(), check);
  }
  ExpectFormat(j, kTilingFormat);
  Tiling t = TilingFromObject(j);
  if (auto err = ValidateTiling(t, check)) throw FormatError(*err);
  return t;
}

std::string PerimeterToJson(const PieceSet& ps, const PerimeterCandidate& c) {
  auto corner = [&](int e) {
    return json{{"w", ps[e].width}, {"h", ps[e].height}};
  };
  return Dump({{"format", kPerimeterFormat},
               {"width", ps.spec().width},
               {"height", ps.spec().height},
               {"pieces", ps.spec().piece_count},
               {"bottom", SideJson(ps, c.bottom)},
               {"right", SideJson(ps, c.right)},
               {"top", SideJson(ps, c.top)},
               {"left", SideJson(ps, c.left)},
               {"corners",
                {{"bottom_left", corner(c.corners.bottom_left)},
                 {"bottom_right", corner(c.corners.bottom_right)},
                 {"top_left", corner(c.corners.top_left)},
                 {"top_right", corner(c.corners.top_right)}}}});
}

PerimeterDocument PerimeterFromJson(std::string_view text) {
  const json j = Parse(text);
  ExpectFormat(j, kPerimeterFormat);
  const auto w = Field<std::int64_t>(j, "width");
  const auto h = Field<std::int64_t>(j, "height");
  const auto r = Field<std::int64_t>(j, "pieces");
  PieceSetResult made = [&] {
    try {
      return MakePieceSet(w, h, r);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }();
  if (auto* bad = std::get_if<InfeasibleCase>(&made)) {
    throw FormatError(bad->Describe());
  }
  const PieceSet& ps = std::get<PieceSet>(made);
  PerimeterCandidate c;
  c.bottom = SideFromJson(ps, Field<json>(j, "bottom"), Axis::kHorizontal);
  c.top = SideFromJson(ps, Field<json>(j, "top"), Axis::kHorizontal);
  c.left = SideFromJson(ps, Field<json>(j, "left"), Axis::kVertical);
  c.right = SideFromJson(ps, Field<json>(j, "right"), Axis::kVertical);
  const json corners = Field<json>(j, "corners");
  c.corners.bottom_left = FindEntry(ps, Field<json>(corners, "bottom_left"));
  c.corners.bottom_right = FindEntry(ps, Field<json>(corners, "bottom_right"));
  c.corners.top_left = FindEntry(ps, Field<json>(corners, "top_left"));
  c.corners.top_right = FindEntry(ps, Field<json>(corners, "top_right"));
  if (auto err = ValidateCandidate(c, ps)) throw FormatError(*err);
  return {ps.spec(), c};
}

Tiling PerimeterLayout(const PieceSet& ps, const PerimeterCandidate& c) {
  const std::int64_t W = ps.spec().width;
  const std::int64_t H = ps.spec().height;
  Tiling t{W, H, {}};
  std::vector<bool> placed(ps.size(), false);
  auto put = [&](int e, std::int64_t x, std::int64_t y) {
    if (placed[e]) return;
    placed[e] = true;
    t.pieces.push_back({x, y, ps[e].width, ps[e].height, ps[e].class_id});
  };
  const Corners& k = c.corners;
  put(k.bottom_left, 0, 0);
  put(k.bottom_right, W - ps[k.bottom_right].width, 0);
  put(k.top_left, 0, H - ps[k.top_left].height);
  put(k.top_right, W - ps[k.top_right].width, H - ps[k.top_right].height);
  auto interior = [&](const SideSubset& side) {
    std::vector<int> out;
    for (int m : side.members) {
      if (m != k.bottom_left && m != k.bottom_right && m != k.top_left &&
          m != k.top_right) {
        out.push_back(m);
      }
    }
    return out;
  };
  std::int64_t x = ps[k.bottom_left].width;
  for (int m : interior(c.bottom)) {
    put(m, x, 0);
    x += ps[m].width;
  }
  x = ps[k.top_left].width;
  for (int m : interior(c.top)) {
    put(m, x, H - ps[m].height);
    x += ps[m].width;
  }
  std::int64_t y = ps[k.bottom_left].height;
  for (int m : interior(c.left)) {
    put(m, 0, y);
    y += ps[m].height;
  }
  y = ps[k.bottom_right].height;
  for (int m : interior(c.right)) {
    put(m, W - ps[m].width, y);
    y += ps[m].height;
  }
  return t;
}

std::string VerdictCsvHeader() {
  return "W,H,r,stage,survivingCandidates,elapsed_ms\n";
}

std::string VerdictCsvRow(const PipelineVerdict& v) {
  std::ostringstream os;
  os << v.spec.width << ',' << v.spec.height << ',' << v.spec.piece_count
     << ',' << StageName(v.stage) << ',' << v.surviving_candidates << ','
     << std::fixed << std::setprecision(3) << Ms(v.elapsed) << '\n';
  return os.str();
}

std::string VerdictsToCsv(const std::vector<PipelineVerdict>& verdicts) {
  std::string out = VerdictCsvHeader();
  for (const auto& v : verdicts) out += VerdictCsvRow(v);
  return out;
}

std::string VerdictsToJson(const std::vector<PipelineVerdict>& verdicts) {
  json arr = json::array();
  for (const auto& v : verdicts) {
    json row = {{"W", v.spec.width},
                {"H", v.spec.height},
                {"r", v.spec.piece_count},
                {"stage", StageName(v.stage)},
                {"survivingCandidates", v.surviving_candidates},
                {"refutedCandidates", v.refuted_candidates},
                {"elapsed_ms", std::round(Ms(v.elapsed) * 1000) / 1000}};
    if (v.witness) {
      row["witness"] = json::parse(TilingToJson(*v.witness));
    }
    arr.push_back(std::move(row));
  }
  return Dump({{"format", kVerdictFormat}, {"verdicts", arr}});
}

std::string SolveResultToJson(const SolveResult& r, std::int64_t width,
                              std::int64_t height) {
  json j = {{"format", kSolveFormat},
            {"width", width},
            {"height", height},
            {"status", StatusName(r.status)},
            {"nodes", r.stats.nodes},
            {"elapsed_ms", std::round(Ms(r.stats.elapsed) * 1000) / 1000},
            {"tasks", r.stats.tasks},
            {"tasks_finished", r.stats.tasks_finished},
            {"max_depth", r.stats.max_depth}};
  if (r.tiling) j["tiling"] = json::parse(TilingToJson(*r.tiling));
  return Dump(j);
}

std::string GuillotineToJson(const oracle::GuillotineInstance& inst) {
  json pieces = json::array();
  for (const auto& [w, h] : inst.pieces) pieces.push_back({{"w", w}, {"h", h}});
  return Dump({{"format", kGuillotineFormat},
               {"width", inst.width},
               {"height", inst.height},
               {"seed", inst.seed},
               {"pieces", pieces},
               {"witness", json::parse(TilingToJson(inst.witness))}});
}

oracle::GuillotineInstance GuillotineFromJson(std::string_view text) {
  const json j = Parse(text);
  ExpectFormat(j, kGuillotineFormat);
  oracle::GuillotineInstance inst;
  inst.width = Field<std::int64_t>(j, "width");
  inst.height = Field<std::int64_t>(j, "height");
  inst.seed = j.contains("seed") ? Field<std::uint64_t>(j, "seed") : 0;
  const json pieces = Field<json>(j, "pieces");
  if (!pieces.is_array()) throw FormatError("'pieces' must be an array");
  for (const json& p : pieces) {
    const auto w = Field<std::int64_t>(p, "w");
    const auto h = Field<std::int64_t>(p, "h");
    if (w < 1 || h < 1) throw FormatError("piece with non-positive side");
    inst.pieces.emplace_back(w, h);
  }
  if (j.contains("witness")) {
    inst.witness = TilingFromJson(j["witness"].dump());
    if (inst.witness.width != inst.width ||
        inst.witness.height != inst.height) {
      throw FormatError("witness board differs from the instance board");
    }
  } else {
    inst.witness = {inst.width, inst.height, {}};
  }
  return inst;
}

std::string RenderSvg(const Tiling& t, const SvgOptions& options) {
  const double scale =
      options.size_px / static_cast<double>(std::max(t.width, t.height));
  const double pad = 8.0;
  const double w = t.width * scale;
  const double h = t.height * scale;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Num(w + 2 * pad)
     << "\" height=\"" << Num(h + 2 * pad) << "\" viewBox=\"0 0 "
     << Num(w + 2 * pad) << ' ' << Num(h + 2 * pad) << "\" data-format=\""
     << kSvgFormat << "\">\n";
  os << "<!-- " << kSvgFormat << " board " << t.width << "x" << t.height
     << " pieces " << t.pieces.size() << " -->\n";
  if (!options.title.empty()) os << "<title>" << options.title << "</title>\n";
  os << "<rect class=\"board\" x=\"" << Num(pad) << "\" y=\"" << Num(pad)
     << "\" width=\"" << Num(w) << "\" height=\"" << Num(h)
     << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"3\"/>\n";
  static constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#ffdd00",
                                             "#f4f4f4", "#2ca02c", "#ff7f0e",
                                             "#9467bd", "#8c564b"};
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const PlacedPiece& p = t.pieces[i];
    // SVG y grows downwards; board y grows upwards.
    const double x = pad + p.x * scale;
    const double y = pad + (t.height - p.y - p.height) * scale;
    os << "<rect class=\"piece\" x=\"" << Num(x) << "\" y=\"" << Num(y)
       << "\" width=\"" << Num(p.width * scale) << "\" height=\""
       << Num(p.height * scale) << "\" fill=\"" << kPalette[i % 8]
       << "\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    if (options.labels) {
      const double fs = std::clamp(
          std::min(p.width, p.height) * scale / 4.0, 6.0, 18.0);
      os << "<text x=\"" << Num(x + p.width * scale / 2) << "\" y=\""
         << Num(y + p.height * scale / 2)
         << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" "
            "font-family=\"sans-serif\" font-size=\""
         << Num(fs) << "\">" << p.width << "×" << p.height
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string RenderAscii(const Tiling& t, int max_columns) {
  const std::int64_t cols = std::min<std::int64_t>(t.width, max_columns);
  const std::int64_t rows = std::max<std::int64_t>(
      1, std::llround(static_cast<double>(t.height) * cols / t.width / 2.0));
  std::vector<std::string> grid(rows, std::string(cols, '.'));
  for (std::size_t i = 0; i < t.pieces.size(); ++i) {
    const PlacedPiece& p = t.pieces[i];
    const char ch = i < 26 ? static_cast<char>('A' + i)
                           : (i < 52 ? static_cast<char>('a' + i - 26) : '#');
    for (std::int64_t r = 0; r < rows; ++r) {
      // Sample the cell centre in board coordinates; row 0 is the top.
      const double by = (rows - r - 0.5) * t.height / rows;
      if (by < p.y || by >= p.y + p.height) continue;
      for (std::int64_t c = 0; c < cols; ++c) {
        const double bx = (c + 0.5) * t.width / cols;
        if (bx >= p.x && bx < p.x + p.width) grid[r][c] = ch;
      }
    }
  }
  std::string out;
  for (const auto& line : grid) out += line + "\n";
  return out;
}

}  // namespace mondrian::io
