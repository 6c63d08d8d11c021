#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace chainlab {

inline constexpr const char* tool_name = "chainlab";
inline constexpr const char* tool_version = "1.0.0";

// Fixed scientific notation with 9 significant digits ("%.8e"): enough to
// identify doubles across runs while keeping CSVs diffable.
std::string format_sci(double v);

// Writes via a temp file in the target directory, then renames, so readers
// never observe partial artifacts.
void write_text_atomic(const std::filesystem::path& path,
                       const std::string& content);

// FNV-1a 64-bit; used for config and artifact fingerprints.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

// "SOURCE_DATE_EPOCH" when set, the literal "unset" otherwise: artifacts
// never embed wall-clock time.
std::string timestamp_string();

// Simple column-oriented CSV: header + rows of preformatted cells.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  // Optional "# key: value" comment lines ahead of the header.
  void add_comment(const std::string& line);
  std::string render() const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Collects artifacts for one CLI run and emits manifest.json: tool version,
// profile, config hash, timestamp, and a checksum per artifact.
class RunManifest {
 public:
  RunManifest(std::string command, std::string profile,
              std::uint64_t config_hash);

  // Writes the artifact atomically and records its kind and checksum.
  void emit(const std::filesystem::path& dir, const std::string& name,
            const std::string& kind, const std::string& content);
  void write(const std::filesystem::path& dir) const;

 private:
  struct Artifact {
    std::string name;
    std::string kind;
    std::uint64_t checksum;
  };
  std::string command_;
  std::string profile_;
  std::uint64_t config_hash_;
  std::vector<Artifact> artifacts_;
};

}  // namespace chainlab
