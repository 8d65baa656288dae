#include "blockwake/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

#include "blockwake/error.hpp"

namespace blockwake {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

double log_of(const mpz_class& v) {
  if (sgn(v) < 0) throw DomainError("log of a negative size");
  if (sgn(v) == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto end = text.find(sep, pos);
    if (end == std::string_view::npos) {
      out.emplace_back(text.substr(pos));
      return out;
    }
    out.emplace_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
}

std::vector<std::string> parse_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(std::move(field));
  return out;
}

void OutputSet::add(const std::string& relative, std::string contents) {
  files_[relative] = std::move(contents);
}

void OutputSet::commit() const {
  namespace fs = std::filesystem;
  fs::create_directories(root_);
  std::vector<std::pair<fs::path, fs::path>> staged;
  for (const auto& [name, body] : files_) {
    const fs::path target = root_ / name;
    const fs::path tmp = root_ / ("." + name + ".tmp");
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << body;
    out.close();
    if (!out) {
      for (const auto& [t, _] : staged) fs::remove(t);
      fs::remove(tmp);
      throw Error("cannot write " + target.string());
    }
    staged.emplace_back(tmp, target);
  }
  for (const auto& [tmp, target] : staged) fs::rename(tmp, target);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path parent = path.has_parent_path() ? path.parent_path() : fs::path(".");
  OutputSet set(parent);
  set.add(path.filename().string(), contents);
  set.commit();
}

}  // namespace blockwake
