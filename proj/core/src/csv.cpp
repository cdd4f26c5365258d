#include "cricket/csv.hpp"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cricket/error.hpp"

namespace cricket::csv {

std::size_t Document::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return npos;
}

namespace {

// Splits raw text into records honoring quoted fields. `line_no` tracks
// physical lines for error messages.
std::vector<std::vector<std::string>> parse_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_empty = true;
  std::size_t line_no = 1;

  auto end_field = [&] {
    fields.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(fields));
    fields.clear();
    record_empty = true;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_no;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw Error(ErrorCode::MalformedRecord,
                      "unexpected quote in unquoted field at line " +
                          std::to_string(line_no));
        }
        in_quotes = true;
        field_was_quoted = true;
        record_empty = false;
        break;
      case ',':
        end_field();
        record_empty = false;
        break;
      case '\r':
        break;
      case '\n':
        ++line_no;
        if (!record_empty || !field.empty() || !fields.empty()) end_record();
        break;
      default:
        field.push_back(c);
        record_empty = false;
        break;
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::MalformedRecord,
                "unterminated quoted field at line " + std::to_string(line_no));
  }
  if (!record_empty || !field.empty() || !fields.empty()) end_record();
  return records;
}

}  // namespace

Document read(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();

  Document doc;
  // Peel '#' preamble lines; they never contain quoted newlines.
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == '#') {
    std::size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos
                                            ? std::string::npos
                                            : eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    doc.meta.push_back(line);
    if (eol == std::string::npos) {
      pos = text.size();
    } else {
      pos = eol + 1;
    }
  }

  auto records = parse_records(text.substr(pos));
  if (records.empty()) {
    throw Error(ErrorCode::MalformedRecord, "missing header row");
  }
  doc.header = std::move(records.front());
  doc.rows.assign(std::make_move_iterator(records.begin() + 1),
                  std::make_move_iterator(records.end()));
  return doc;
}

Document read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::MissingInput, "cannot open " + path);
  }
  return read(in);
}

std::string escape_field(const std::string& field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write(std::ostream& out, const Document& doc) {
  for (const auto& line : doc.meta) out << line << '\n';
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << escape_field(row[i]);
    }
    out << '\n';
  };
  write_row(doc.header);
  for (const auto& row : doc.rows) write_row(row);
}

void write_file(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::MissingInput, "cannot write " + path);
  }
  write(out, doc);
}

std::string format_double(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& field, const std::string& context) {
  errno = 0;
  const char* begin = field.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw Error(ErrorCode::MalformedRecord,
                "expected a number for " + context + ", got \"" + field + "\"");
  }
  return value;
}

long long parse_int(const std::string& field, const std::string& context) {
  long long value = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw Error(ErrorCode::MalformedRecord, "expected an integer for " +
                                                context + ", got \"" + field +
                                                "\"");
  }
  return value;
}

}  // namespace cricket::csv
