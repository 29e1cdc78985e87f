#pragma once

#include "branching/config.hpp"
#include "branching/drawing.hpp"
#include "branching/geometric.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace branching {

/// Malformed drawing or geometry file. `where` is "line:column" for syntax
/// errors, a JSON pointer such as "/edges/3/u" for schema errors, or "build"
/// when the description is well formed but not a valid drawing.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& message);
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Dart reference in the text form "<edge>.<segment>+" (forward) or "-".
std::string format_dart(const DartRef& ref);
std::optional<DartRef> parse_dart(std::string_view text);

/// Canonical drawing file (JSON, one node or edge per line):
///   {"format": "branching-drawing", "version": 1,
///    "nodes": [{"id": 0, "kind": "real", "rotation": ["0.0+", "5.1-"]}, ...],
///    "edges": [{"id": 0, "u": 0, "v": 1}, ...],
///    "outer_face": "0.0+",                                  (optional)
///    "placements": [{"node": 7, "host": "2.0+", "outer": "9.0-"}],  (optional)
///    "allow_loops": true}                                   (optional)
/// Rotations are counterclockwise. Output is deterministic for a given drawing.
std::string write_drawing(const Drawing& d);
std::string write_drawing_spec(const DrawingSpec& spec);
DrawingSpec read_drawing_spec(std::string_view text);
Drawing read_drawing(std::string_view text);

/// Geometry file:
///   {"format": "geometric", "version": 1,
///    "vertices": [[id, x, y], ...],
///    "edges": [{"id": 0, "u": 0, "v": 1, "waypoints": [[x, y], ...]}, ...]}
std::string write_geometric(const GeometricDrawing& g);
GeometricDrawing read_geometric(std::string_view text);

/// Constants, seed and output path of one run.
struct RunConfig {
    Constants constants;
    std::uint64_t seed = 0;
    std::string output;  // empty: standard output
};

/// Environment variable naming a constants file when --config is absent.
inline constexpr const char* kConfigEnv = "BRN_CONFIG";

/// Reads the constants file named by `path`, else by $BRN_CONFIG, else keeps
/// the defaults. Throws std::invalid_argument on unreadable files or bad values.
RunConfig load_run_config(const std::optional<std::string>& path);

}  // namespace branching
