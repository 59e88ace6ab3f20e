#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mimicry::csv {

/// Splits one CSV line. Handles double-quoted fields with "" escapes; fields
/// may not span lines.
std::vector<std::string> split(std::string_view line);

/// Quotes a field only when it contains a comma, quote, or newline.
std::string escape(std::string_view field);

/// Reads lines, skipping blank ones and stripping a trailing '\r'. Tracks
/// the 1-based physical line number of the last returned line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::optional<std::string> next();
  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Maps header names to column positions; throws ParseError naming the
/// first missing column.
class Header {
 public:
  Header(const std::vector<std::string>& fields, std::string_view module,
         const std::vector<std::string_view>& required);

  std::size_t operator[](std::string_view name) const;
  std::size_t width() const noexcept { return width_; }

 private:
  std::vector<std::pair<std::string, std::size_t>> columns_;
  std::size_t width_;
};

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace mimicry::csv
