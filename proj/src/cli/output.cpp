#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace lgd::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::stod(format_number(value));
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (const auto& h : header) cell(h);
  end_row();
}

CsvWriter& CsvWriter::cell(std::string_view text) {
  if (pending_++ > 0) text_ += ',';
  text_ += text;
  return *this;
}

CsvWriter& CsvWriter::cell(double value) { return cell(format_number(value)); }

CsvWriter& CsvWriter::cell(std::uint64_t value) { return cell(std::to_string(value)); }

CsvWriter& CsvWriter::cell(bool value) { return cell(std::string_view(value ? "true" : "false")); }

void CsvWriter::end_row() {
  if (pending_ != columns_) throw std::logic_error("CSV row has the wrong number of cells");
  text_ += '\n';
  pending_ = 0;
}

void emit(const std::string& path, std::string_view content, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace lgd::cli
