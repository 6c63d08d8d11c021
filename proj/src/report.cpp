#include "chainlab/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "chainlab/errors.hpp"

namespace chainlab {

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw analysis_error("cannot write " + tmp.string());
    out << content;
    if (!out) throw analysis_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

std::string timestamp_string() {
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  return epoch && *epoch ? epoch : "unset";
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_comment(const std::string& line) {
  comments_.push_back(line);
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size())
    throw analysis_error("CsvTable: row width does not match header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::render() const {
  std::string out;
  for (const std::string& c : comments_) out += "# " + c + "\n";
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) out += ",";
    out += header_[i];
  }
  out += "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

RunManifest::RunManifest(std::string command, std::string profile,
                         std::uint64_t config_hash)
    : command_(std::move(command)),
      profile_(std::move(profile)),
      config_hash_(config_hash) {}

void RunManifest::emit(const std::filesystem::path& dir,
                       const std::string& name, const std::string& kind,
                       const std::string& content) {
  write_text_atomic(dir / name, content);
  artifacts_.push_back({name, kind, fnv1a64(content)});
}

void RunManifest::write(const std::filesystem::path& dir) const {
  nlohmann::json j;
  j["tool"] = tool_name;
  j["version"] = tool_version;
  j["command"] = command_;
  j["profile"] = profile_;
  j["config_hash"] = hex64(config_hash_);
  j["timestamp"] = timestamp_string();
  nlohmann::json arts = nlohmann::json::object();
  for (const Artifact& a : artifacts_) {
    arts[a.name] = {{"kind", a.kind}, {"checksum", hex64(a.checksum)}};
  }
  j["artifacts"] = arts;
  write_text_atomic(dir / "manifest.json", j.dump(2) + "\n");
}

}  // namespace chainlab
