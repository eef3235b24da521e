#pragma once

// Corpus manifests. Two encodings are accepted:
//
//   JSON lines:  {"path": "t1/a.txt", "subcorpus": "T1", "id": "a"}
//   CSV:         header "path,subcorpus" or "path,subcorpus,id", RFC 4180 quoting
//
// Blank lines are ignored. Relative paths resolve against the manifest's
// directory. A missing id defaults to the path as written.

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "texcomp/error.hpp"

namespace texcomp {

struct ManifestEntry {
  std::string path;  // as written in the manifest
  std::string subcorpus;
  std::string id;
  std::filesystem::path resolved;

  bool operator==(const ManifestEntry&) const = default;
};

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  return buf.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline Error manifest_error(std::size_t line, const std::string& what) {
  return Error(ErrorCode::kInvalidManifest,
               "manifest line " + std::to_string(line) + ": " + what);
}

inline std::vector<std::string> split_csv_record(std::string_view line,
                                                 std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw manifest_error(line_no, "unterminated quoted field");
  return fields;
}

}  // namespace detail

inline std::vector<ManifestEntry> parse_manifest(std::string_view content,
                                                 const std::filesystem::path& base_dir = {}) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    const auto end = content.find('\n', start);
    const auto stop = end == std::string_view::npos ? content.size() : end;
    lines.push_back(content.substr(start, stop - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }

  std::vector<ManifestEntry> entries;
  bool csv = false;
  bool csv_has_id = false;
  bool first = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = detail::trim(lines[i]);
    if (line.empty()) continue;

    if (first) {
      first = false;
      if (line.front() != '{') {
        const auto header = detail::split_csv_record(line, line_no);
        if (header.size() == 2 && header[0] == "path" && header[1] == "subcorpus") {
          csv = true;
        } else if (header.size() == 3 && header[0] == "path" &&
                   header[1] == "subcorpus" && header[2] == "id") {
          csv = true;
          csv_has_id = true;
        } else {
          throw detail::manifest_error(
              line_no, "expected a JSON object or the CSV header path,subcorpus[,id]");
        }
        continue;
      }
    }

    ManifestEntry entry;
    if (csv) {
      const auto fields = detail::split_csv_record(line, line_no);
      if (fields.size() != (csv_has_id ? 3u : 2u)) {
        throw detail::manifest_error(line_no, "wrong number of CSV fields");
      }
      entry.path = fields[0];
      entry.subcorpus = fields[1];
      if (csv_has_id) entry.id = fields[2];
    } else {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw detail::manifest_error(line_no, e.what());
      }
      if (!j.is_object()) throw detail::manifest_error(line_no, "not a JSON object");
      const auto str_field = [&](const char* key, bool required) -> std::string {
        const auto it = j.find(key);
        if (it == j.end() || it->is_null()) {
          if (required) throw detail::manifest_error(line_no, std::string("missing ") + key);
          return {};
        }
        if (!it->is_string()) {
          throw detail::manifest_error(line_no, std::string(key) + " must be a string");
        }
        return it->get<std::string>();
      };
      entry.path = str_field("path", true);
      entry.subcorpus = str_field("subcorpus", true);
      entry.id = str_field("id", false);
    }
    if (entry.path.empty()) throw detail::manifest_error(line_no, "empty path");
    if (entry.subcorpus.empty()) throw detail::manifest_error(line_no, "empty subcorpus");
    if (entry.id.empty()) entry.id = entry.path;
    const std::filesystem::path p(entry.path);
    entry.resolved = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    entries.push_back(std::move(entry));
  }

  std::set<std::string_view> ids;
  for (const ManifestEntry& e : entries) {
    if (!ids.insert(e.id).second) {
      throw Error(ErrorCode::kInvalidManifest, "duplicate document id: " + e.id);
    }
  }
  return entries;
}

inline std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  const std::string content = read_text_file(path);
  return parse_manifest(content, path.parent_path());
}

}  // namespace texcomp
