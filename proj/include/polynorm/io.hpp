#pragma once

// Polytope input files, report rendering (table / JSON / CSV) and the
// on-disk report cache.

#include "polynorm/bounds.hpp"

#include <filesystem>
#include <iosfwd>

namespace polynorm {

/// Unreadable or malformed input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolytopeInput {
  std::string name;
  std::vector<IntVector> points;
};

/// {"name": optional string, "vertices": [[int, ...], ...]}. Coordinates may
/// also be decimal strings for values beyond 64 bits.
PolytopeInput parse_json_input(std::string_view text);

/// One point per line, whitespace-separated integers; '#' comments and blank
/// lines are skipped.
PolytopeInput parse_text_input(std::string_view text);

/// Reads a file, picking the JSON parser when the first non-blank character is '{'.
PolytopeInput read_input_file(const std::filesystem::path& path);

/// A family spec such as bruns:4, or a path to an input file.
PolytopeInput load_input(const std::string& spec_or_path);

std::string write_text_input(const PolytopeInput& input);
std::string write_json_input(const PolytopeInput& input);

enum class Format { table, json, csv };
Format parse_format(std::string_view name);

void render_table(std::ostream& out, const nlohmann::ordered_json& report);
void render_json(std::ostream& out, const nlohmann::ordered_json& report);
/// Header plus one row per report; nested objects are flattened to dotted
/// column names, arrays and witnesses are left out.
void render_csv(std::ostream& out, const std::vector<nlohmann::ordered_json>& reports);

/// "(1,1,3)" for a JSON point array.
std::string format_point(const nlohmann::ordered_json& point);

/// Reports stored under a hash of the sorted vertex list, the k search cap
/// and the tool version. Lattice-equivalent inputs (translates, unimodular
/// images) are different keys.
class ReportCache {
 public:
  explicit ReportCache(std::filesystem::path directory);

  static std::string key(const std::vector<IntVector>& vertices, int max_k);

  std::optional<nlohmann::ordered_json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::ordered_json& report) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace polynorm
