#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cricket::csv {

/// One parsed CSV file: mandatory header row plus data rows.
/// Lines beginning with '#' ahead of the header are kept as metadata
/// (pipeline outputs carry a "# config_hash=... seed=..." preamble).
struct Document {
  std::vector<std::string> meta;    // '#'-prefixed preamble lines, verbatim
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column_index(const std::string& name) const;  // npos if absent
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// RFC-4180 parse: quoted fields, "" escapes, commas/newlines inside
/// quotes, CRLF and LF line endings. Throws Error{MalformedRecord} with
/// a line number on unbalanced quotes or stray data after a closing quote.
Document read(std::istream& in);
Document read_file(const std::string& path);

/// Minimal quoting: a field is quoted only when it contains a comma,
/// quote, CR or LF. Writes LF line endings.
void write(std::ostream& out, const Document& doc);
void write_file(const std::string& path, const Document& doc);

std::string escape_field(const std::string& field);

/// Shortest decimal form of a double that parses back to the same value.
std::string format_double(double value);

/// Strict numeric field parse; throws Error{MalformedRecord} with context.
double parse_double(const std::string& field, const std::string& context);
long long parse_int(const std::string& field, const std::string& context);

}  // namespace cricket::csv
