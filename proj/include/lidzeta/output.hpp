#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lidzeta/pi_algebra.hpp"

namespace lidzeta {

enum class RecordKind { Zeta, Lambda, LidstonePoly, Verification, Decay, Identity };
enum class OutputFormat { Text, Csv, Json };

std::string to_string(RecordKind kind);
RecordKind parse_record_kind(std::string_view name);
OutputFormat parse_output_format(std::string_view name);

/// A table of string cells. Exact values are stored as "p/q" strings and
/// pi-expansions in the encoding of encode_pi_terms(); floats are decimal
/// strings in their own columns.
struct OutputRecord {
  using Row = std::vector<std::pair<std::string, std::string>>;

  RecordKind kind = RecordKind::Zeta;
  std::vector<Row> rows;

  /// Column names, taken from the first row.
  std::vector<std::string> columns() const;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// [{"exponent":e,"rational":"p/q"},...] with exponents descending.
std::string encode_pi_terms(const PiNumber& v);
PiNumber decode_pi_terms(std::string_view text);

/// {"kind": ..., "rows": [{field: string, ...}, ...]}
std::string to_json(const OutputRecord& record);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
OutputRecord from_json(std::string_view text);

/// Header row then data rows, RFC 4180 quoting, CRLF line ends.
std::string to_csv(const OutputRecord& record);

/// Aligned table; a single-row record prints as "key: value" lines.
std::string to_text(const OutputRecord& record);

void emit(std::ostream& os, const OutputRecord& record, OutputFormat format);

}  // namespace lidzeta
