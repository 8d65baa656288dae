#pragma once

// Small text and file helpers shared by the CSV/JSON writers.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace blockwake {

// Shortest round-trip representation; "inf", "-inf" for infinities.
std::string format_double(double v);

// Empty string for an absent value.
std::string format_optional(const std::optional<double>& v);

// Natural log of a non-negative big integer; -inf for zero.
double log_of(const mpz_class& v);

std::vector<std::string> split(std::string_view text, char sep);

// Parses one CSV line with double-quote quoting.
std::vector<std::string> parse_csv_line(std::string_view line);

// Collects file contents in memory and publishes them together, so a failure
// before commit() leaves no partial files behind.
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path root) : root_(std::move(root)) {}

  void add(const std::string& relative, std::string contents);
  // Writes every file through a temporary sibling and renames it into place.
  void commit() const;

 private:
  std::filesystem::path root_;
  std::map<std::string, std::string> files_;
};

// Single-file variant of OutputSet.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace blockwake
