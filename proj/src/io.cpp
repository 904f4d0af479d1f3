#include "polynorm/io.hpp"

#include "polynorm/catalog.hpp"
#include "polynorm/version.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace polynorm {

using nlohmann::ordered_json;

namespace {

Integer parse_integer(std::string_view token) {
  const bool sign = !token.empty() && (token.front() == '-' || token.front() == '+');
  const std::string_view digits = sign ? token.substr(1) : token;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("not an integer: '" + std::string(token) + "'");
  }
  const Integer value{std::string(digits)};
  return token.front() == '-' ? Integer(-value) : value;
}

Integer json_to_integer(const nlohmann::json& x) {
  if (x.is_number_unsigned()) return Integer(x.get<unsigned long long>());
  if (x.is_number_integer()) return Integer(x.get<long long>());
  if (x.is_string()) return parse_integer(x.get<std::string>());
  throw InputError("coordinate is not an integer: " + x.dump());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string scalar_text(const ordered_json& x, const char* null_text = "n/a") {
  if (x.is_null()) return null_text;
  if (x.is_string()) return x.get<std::string>();
  if (x.is_boolean()) return x.get<bool>() ? "yes" : "no";
  return x.dump();
}

std::string csv_cell(const ordered_json& x) {
  if (x.is_null()) return "";
  if (x.is_boolean()) return x.get<bool>() ? "true" : "false";
  if (!x.is_string()) return x.dump();
  const std::string s = x.get<std::string>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, ordered_json>>& out) {
  for (const auto& [key, value] : j.items()) {
    if (prefix.empty() && key == "witnesses") continue;
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten(value, name, out);
    } else if (!value.is_array()) {
      out.emplace_back(name, value);
    }
  }
}

}  // namespace

PolytopeInput parse_json_input(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array()) {
    throw InputError("JSON input needs a \"vertices\" array");
  }
  PolytopeInput input;
  if (j.contains("name") && !j["name"].is_null()) {
    if (!j["name"].is_string()) throw InputError("\"name\" must be a string");
    input.name = j["name"].get<std::string>();
  }
  for (const auto& row : j["vertices"]) {
    if (!row.is_array()) throw InputError("each vertex must be an array of integers");
    IntVector x(static_cast<Eigen::Index>(row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) x(static_cast<Eigen::Index>(i)) = json_to_integer(row[i]);
    input.points.push_back(std::move(x));
  }
  return input;
}

PolytopeInput parse_text_input(std::string_view text) {
  PolytopeInput input;
  std::istringstream lines{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(lines, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<Integer> coords;
    for (std::string token; fields >> token;) {
      try {
        coords.push_back(parse_integer(token));
      } catch (const InputError& e) {
        throw InputError("line " + std::to_string(number) + ": " + e.what());
      }
    }
    IntVector x(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) x(static_cast<Eigen::Index>(i)) = coords[i];
    input.points.push_back(std::move(x));
  }
  return input;
}

PolytopeInput read_input_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  PolytopeInput input = first != std::string::npos && text[first] == '{' ? parse_json_input(text) : parse_text_input(text);
  if (input.name.empty()) input.name = path.stem().string();
  return input;
}

PolytopeInput load_input(const std::string& spec_or_path) {
  if (is_family_spec(spec_or_path) && !std::filesystem::exists(spec_or_path)) {
    try {
      return PolytopeInput{spec_or_path, family_points(spec_or_path)};
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return read_input_file(spec_or_path);
}

std::string write_text_input(const PolytopeInput& input) {
  std::ostringstream out;
  if (!input.name.empty()) out << "# " << input.name << '\n';
  for (const auto& x : input.points) {
    for (Eigen::Index i = 0; i < x.size(); ++i) out << (i ? " " : "") << x(i);
    out << '\n';
  }
  return out.str();
}

std::string write_json_input(const PolytopeInput& input) {
  ordered_json j;
  j["name"] = input.name;
  auto rows = ordered_json::array();
  for (const auto& x : input.points) rows.push_back(json_point(x));
  j["vertices"] = rows;
  return j.dump(2) + "\n";
}

Format parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InputError("unknown format '" + std::string(name) + "'");
}

std::string format_point(const ordered_json& point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ',';
    out += scalar_text(point[i]);
  }
  return out + ")";
}

void render_table(std::ostream& out, const ordered_json& r) {
  const auto row = [&](const std::string& label, const std::string& value) {
    out << std::left << std::setw(24) << label << value << '\n';
  };
  row("polytope", r["name"].get<std::string>());
  std::string vertices;
  for (const auto& v : r["vertices"]) vertices += (vertices.empty() ? "" : " ") + format_point(v);
  row("vertices", vertices);
  for (const char* key : {"dim", "num_vertices", "num_lattice_points", "volume_normalized", "degree", "d_P", "nu_P"}) {
    row(key, scalar_text(r[key]));
  }
  for (const char* key : {"m_P", "k_P"}) row(key, scalar_text(r[key], "undefined"));
  for (const char* key : {"very_ample", "smooth", "normal", "gamma", "m_prime"}) row(key, scalar_text(r[key]));
  row("regularity", scalar_text(r["regularity"], "undefined"));
  row("eg_rhs", scalar_text(r["eg_rhs"]));
  row("eg_holds", scalar_text(r["eg_holds"], "undefined"));

  out << "bounds\n";
  for (const auto& [name, value] : r["bounds"].items()) {
    std::string text = scalar_text(value);
    const std::string target = r["bound_targets"].value(name, "none");
    if (!value.is_null() && target != "none") text += "  (on " + target + ")";
    row("  " + name, text);
  }
  if (r.value("classical_degenerate", false)) row("  note", "codim <= 0, classical bounds degenerate");

  out << "witnesses\n";
  const auto& w = r["witnesses"];
  if (!w["hole"].is_null()) {
    row("  hole", "k=" + scalar_text(w["hole"]["k"]) + " " + format_point(w["hole"]["point"]));
  }
  if (!w["sigma_max"].is_null()) {
    const auto& s = w["sigma_max"];
    std::string parts;
    for (const auto& g : s["parts"]) parts += (parts.empty() ? "" : " + ") + format_point(g);
    row("  sigma_max", "x=" + format_point(s["x"]) + " v=" + format_point(s["vertex"]) +
                           " length=" + scalar_text(s["length"]) + " [" + parts + "]");
  }
  if (!w["non_saturation"].is_null()) {
    const auto& s = w["non_saturation"];
    row("  non_saturation", "x=" + format_point(s["x"]) + " v=" + format_point(s["vertex"]) + " target " +
                                format_point(s["target"]) + " not representable");
  }
}

void render_json(std::ostream& out, const ordered_json& report) { out << report.dump(2) << '\n'; }

void render_csv(std::ostream& out, const std::vector<ordered_json>& reports) {
  if (reports.empty()) return;
  std::vector<std::pair<std::string, ordered_json>> header;
  flatten(reports.front(), "", header);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i].first;
  out << '\n';
  for (const auto& r : reports) {
    std::vector<std::pair<std::string, ordered_json>> cells;
    flatten(r, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i].second);
    out << '\n';
  }
}

ReportCache::ReportCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::string ReportCache::key(const std::vector<IntVector>& vertices, int max_k) {
  std::vector<IntVector> sorted = vertices;
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  std::string text = std::string(tool_version) + "|" + std::to_string(max_k);
  for (const auto& v : sorted) text += "|" + to_string(v);
  std::uint64_t hash = 14695981039346656037ull;  // FNV-1a
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

std::optional<ordered_json> ReportCache::load(const std::string& key) const {
  const auto path = directory_ / (key + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    ordered_json entry = ordered_json::parse(in);
    if (entry.value("tool_version", "") != tool_version || !entry.contains("report")) return std::nullopt;
    return entry["report"];
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ReportCache::store(const std::string& key, const ordered_json& report) const {
  std::filesystem::create_directories(directory_);
  ordered_json entry;
  entry["key"] = key;
  entry["tool_version"] = tool_version;
  entry["report"] = report;
  const auto path = directory_ / (key + ".json");
  const auto staging = directory_ / (key + ".json.tmp");
  {
    std::ofstream out(staging, std::ios::trunc);
    if (!out) throw InputError("cannot write cache entry " + staging.string());
    out << entry.dump() << '\n';
  }
  std::filesystem::rename(staging, path);
}

}  // namespace polynorm
