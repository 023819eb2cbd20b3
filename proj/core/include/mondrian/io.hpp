#ifndef MONDRIAN_IO_HPP_
#define MONDRIAN_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mondrian/filters.hpp"
#include "mondrian/oracle.hpp"
#include "mondrian/pieces.hpp"
#include "mondrian/pipeline.hpp"
#include "mondrian/solver.hpp"
#include "mondrian/tiling.hpp"

namespace mondrian::io {

// Format tags written into every document and render.
inline constexpr std::string_view kTilingFormat = "mondrian-tiling/1";
inline constexpr std::string_view kPerimeterFormat = "mondrian-perimeter/1";
inline constexpr std::string_view kVerdictFormat = "mondrian-verdicts/1";
inline constexpr std::string_view kSolveFormat = "mondrian-solve/1";
inline constexpr std::string_view kGuillotineFormat = "mondrian-guillotine/1";
inline constexpr std::string_view kSvgFormat = "mondrian-svg/1";

// Malformed or invalid input; what() is a diagnostic for the user.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"format", "width", "height", "pieces": [{"w","h","x","y","class"}]}
std::string TilingToJson(const Tiling& t);
// Parses and checks geometry with ValidateTiling(check).
Tiling TilingFromJson(std::string_view text, const TilingCheck& check = {});

struct PerimeterDocument {
  CaseSpec spec;
  PerimeterCandidate candidate;
};

// Sides list pieces as {"w","h"}; corners are named explicitly.
std::string PerimeterToJson(const PieceSet& ps, const PerimeterCandidate& c);
// Rebuilds the piece set and candidate; throws FormatError when a piece is
// not in the set or ValidateCandidate rejects the structure.
PerimeterDocument PerimeterFromJson(std::string_view text);

// Boundary pieces of a candidate at concrete positions: corners in the
// corners, interior side pieces packed in ascending width (bottom, top) or
// height (left, right) order.
Tiling PerimeterLayout(const PieceSet& ps, const PerimeterCandidate& c);

// CSV header: W,H,r,stage,survivingCandidates,elapsed_ms
std::string VerdictCsvHeader();
std::string VerdictCsvRow(const PipelineVerdict& v);
std::string VerdictsToCsv(const std::vector<PipelineVerdict>& verdicts);
std::string VerdictsToJson(const std::vector<PipelineVerdict>& verdicts);

std::string SolveResultToJson(const SolveResult& r, std::int64_t width,
                              std::int64_t height);

std::string GuillotineToJson(const oracle::GuillotineInstance& inst);
oracle::GuillotineInstance GuillotineFromJson(std::string_view text);

struct SvgOptions {
  // Longest board side in pixels.
  double size_px = 720.0;
  bool labels = true;
  std::string title;
};

// Deterministic SVG: one <rect> per piece labelled "w×h", plus the board
// outline.
std::string RenderSvg(const Tiling& t, const SvgOptions& options = {});

// Character-cell sketch; each piece is drawn with a letter, '.' is empty.
std::string RenderAscii(const Tiling& t, int max_columns = 72);

}  // namespace mondrian::io

#endif  // MONDRIAN_IO_HPP_
