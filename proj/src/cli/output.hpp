#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lgd::cli {

using Json = nlohmann::ordered_json;

/// 12 significant digits.
std::string format_number(double value);

/// Rounds to 12 significant digits so the JSON dump prints at most that many;
/// non-finite values become null.
Json json_number(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);

  CsvWriter& cell(std::string_view text);
  CsvWriter& cell(const char* text) { return cell(std::string_view(text)); }
  CsvWriter& cell(double value);
  CsvWriter& cell(std::uint64_t value);
  CsvWriter& cell(bool value);
  void end_row();

  const std::string& str() const { return text_; }

 private:
  std::size_t columns_;
  std::size_t pending_ = 0;
  std::string text_;
};

/// Writes `content` to `path` byte-for-byte, or to `fallback` when path is
/// empty or "-".
void emit(const std::string& path, std::string_view content, std::ostream& fallback);

}  // namespace lgd::cli
