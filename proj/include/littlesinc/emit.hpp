#pragma once

#include <string>
#include <variant>
#include <vector>

namespace lsf {

// Tabular output records. A record is an ordered list of named fields; all
// records in one table share the same field names (homogeneous). Doubles
// print with 17 significant digits ('%.17g', enough for exact binary
// round-trip); integral doubles keep a ".0" marker so they stay typed as
// doubles when parsed back; non-finite doubles print as the sentinels
// "-inf" / "inf" / "nan". Strings are always quoted in CSV, so CSV
// round-trips all three alternatives unambiguously. JSON keeps strings
// typed with one exception: a string exactly equal to a sentinel is
// indistinguishable from a serialized non-finite double and parses back as
// that double.
using Value = std::variant<long long, double, std::string>;

struct Field {
    std::string name;
    Value value;
};
using Record = std::vector<Field>;

struct Meta {
    std::string command;
    std::string flags;
    std::string version;
};

// Fixed version string stamped into JSON meta (determinism: no timestamps).
extern const char* const kEmitVersion;

// Format one value by the rules above (no quoting).
std::string format_value(const Value& v);

// CSV: header row from `header`, '.' decimal separator, LF line endings.
std::string emit_csv(const std::vector<std::string>& header, const std::vector<Record>& records);

// JSON: single object {"meta": {"command", "flags", "version"}, "data": [...]}
// with the same numeric formatting; non-finite doubles become JSON strings.
std::string emit_json(const Meta& meta, const std::vector<std::string>& header,
                      const std::vector<Record>& records);

struct ParsedTable {
    std::vector<std::string> header;
    std::vector<Record> records;
};

// Inverse of emit_csv: unquoted tokens parse as long long when they are
// pure integers, as double otherwise (including the non-finite sentinels);
// quoted tokens stay strings.
ParsedTable parse_csv(const std::string& text);

// Inverse of emit_json for tables produced by emit_json.
struct ParsedJson {
    Meta meta;
    ParsedTable table;
};
ParsedJson parse_json(const std::string& text);

} // namespace lsf
