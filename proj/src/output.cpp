#include "lidzeta/output.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lidzeta {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::pair<RecordKind, std::string_view> kKindNames[] = {
    {RecordKind::Zeta, "zeta"},
    {RecordKind::Lambda, "lambda"},
    {RecordKind::LidstonePoly, "lidstone_poly"},
    {RecordKind::Verification, "verification"},
    {RecordKind::Decay, "decay"},
    {RecordKind::Identity, "identity"},
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_string(RecordKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return std::string(name);
  }
  return "unknown";
}

RecordKind parse_record_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw std::invalid_argument("unknown record kind: '" + std::string(name) + "'");
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format: '" + std::string(name) + "'");
}

std::vector<std::string> OutputRecord::columns() const {
  std::vector<std::string> out;
  if (rows.empty()) return out;
  for (const auto& [key, value] : rows.front()) out.push_back(key);
  return out;
}

std::string encode_pi_terms(const PiNumber& v) {
  ordered_json arr = ordered_json::array();
  for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
    arr.push_back({{"exponent", it->first}, {"rational", it->second.str()}});
  }
  return arr.dump();
}

PiNumber decode_pi_terms(std::string_view text) {
  try {
    const auto arr = ordered_json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("pi terms must be a JSON array");
    PiNumber::Terms terms;
    for (const auto& t : arr) terms[t.at("exponent").get<int>()] += Rational::parse(t.at("rational").get<std::string>());
    return PiNumber(std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed pi terms: ") + e.what());
  }
}

std::string to_json(const OutputRecord& record) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : record.rows) {
    ordered_json obj = ordered_json::object();
    for (const auto& [key, value] : row) obj[key] = value;
    rows.push_back(std::move(obj));
  }
  ordered_json doc = {{"kind", to_string(record.kind)}, {"rows", std::move(rows)}};
  return doc.dump(2);
}

OutputRecord from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    OutputRecord record;
    record.kind = parse_record_kind(doc.at("kind").get<std::string>());
    for (const auto& row : doc.at("rows")) {
      if (!row.is_object()) throw std::invalid_argument("row is not an object");
      OutputRecord::Row r;
      for (const auto& [key, value] : row.items()) r.emplace_back(key, value.get<std::string>());
      record.rows.push_back(std::move(r));
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream os;
  const auto cols = record.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_field(cols[i]);
  if (!cols.empty()) os << "\r\n";
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].second);
    os << "\r\n";
  }
  return os.str();
}

std::string to_text(const OutputRecord& record) {
  std::ostringstream os;
  if (record.rows.size() == 1) {
    for (const auto& [key, value] : record.rows.front()) os << key << ": " << value << '\n';
    return os.str();
  }
  const auto cols = record.columns();
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].second.size());
  }
  const auto line = [&](const auto& cell_at) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string& cell = cell_at(i);
      os << cell;
      if (i + 1 < cols.size()) os << std::string(width[i] - cell.size() + 2, ' ');
    }
    os << '\n';
  };
  line([&](std::size_t i) -> const std::string& { return cols[i]; });
  for (const auto& row : record.rows) line([&](std::size_t i) -> const std::string& { return row[i].second; });
  return os.str();
}

void emit(std::ostream& os, const OutputRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: os << to_text(record); break;
    case OutputFormat::Csv: os << to_csv(record); break;
    case OutputFormat::Json: os << to_json(record) << '\n'; break;
  }
}

}  // namespace lidzeta
