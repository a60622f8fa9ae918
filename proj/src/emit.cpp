#include "littlesinc/emit.hpp"

#include "littlesinc/errors.hpp"

#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace lsf {

const char* const kEmitVersion = "1.0.0";

std::string format_value(const Value& v) {
    if (std::holds_alternative<long long>(v)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", std::get<long long>(v));
        return buf;
    }
    if (std::holds_alternative<double>(v)) {
        const double d = std::get<double>(v);
        if (std::isnan(d)) return "nan";
        if (std::isinf(d)) return d < 0 ? "-inf" : "inf";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", d);
        std::string s = buf;
        // integral doubles keep a ".0" marker so the emitted token parses
        // back as a double rather than an integer
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        return s;
    }
    return std::get<std::string>(v);
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

void check_homogeneous(const std::vector<std::string>& header, const Record& rec) {
    if (rec.size() != header.size())
        throw domain_error("emit: record width does not match header");
    for (std::size_t i = 0; i < rec.size(); ++i)
        if (rec[i].name != header[i])
            throw domain_error("emit: record field '" + rec[i].name + "' does not match header '" +
                               header[i] + "'");
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

std::string json_value(const Value& v) {
    if (std::holds_alternative<std::string>(v))
        return "\"" + json_escape(std::get<std::string>(v)) + "\"";
    if (std::holds_alternative<double>(v) && !std::isfinite(std::get<double>(v)))
        return "\"" + format_value(v) + "\""; // JSON has no literal for non-finite numbers
    return format_value(v);
}

// lexical typing for unquoted CSV tokens: integer, double (incl. the
// non-finite sentinels), else plain string
Value classify_token(const std::string& tok, bool was_quoted) {
    if (was_quoted) return tok;
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    if (tok == "inf") return std::numeric_limits<double>::infinity();
    if (tok == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (!tok.empty()) {
        bool integral = true;
        for (std::size_t i = 0; i < tok.size(); ++i) {
            const char c = tok[i];
            if (i == 0 && (c == '+' || c == '-') && tok.size() > 1) continue;
            if (c < '0' || c > '9') {
                integral = false;
                break;
            }
        }
        if (integral) {
            errno = 0;
            char* end = nullptr;
            const long long n = std::strtoll(tok.c_str(), &end, 10);
            if (errno == 0 && end == tok.c_str() + tok.size()) return n;
        }
        errno = 0;
        char* end = nullptr;
        const double d = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() + tok.size() && errno != ERANGE) return d;
    }
    return tok;
}

} // namespace

std::string emit_csv(const std::vector<std::string>& header, const std::vector<Record>& records) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const Record& rec : records) {
        check_homogeneous(header, rec);
        for (std::size_t i = 0; i < rec.size(); ++i) {
            if (i) out += ',';
            if (std::holds_alternative<std::string>(rec[i].value))
                out += csv_quote(std::get<std::string>(rec[i].value));
            else
                out += format_value(rec[i].value);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(const Meta& meta, const std::vector<std::string>& header,
                      const std::vector<Record>& records) {
    std::string out = "{\n  \"meta\": {\"command\": \"" + json_escape(meta.command) +
                      "\", \"flags\": \"" + json_escape(meta.flags) + "\", \"version\": \"" +
                      json_escape(meta.version) + "\"},\n  \"data\": [";
    for (std::size_t r = 0; r < records.size(); ++r) {
        check_homogeneous(header, records[r]);
        out += r ? ",\n    {" : "\n    {";
        for (std::size_t i = 0; i < records[r].size(); ++i) {
            if (i) out += ", ";
            out += "\"" + json_escape(records[r][i].name) + "\": " + json_value(records[r][i].value);
        }
        out += '}';
    }
    out += records.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

ParsedTable parse_csv(const std::string& text) {
    ParsedTable table;
    std::vector<std::vector<std::pair<std::string, bool>>> rows; // token, was_quoted
    std::vector<std::pair<std::string, bool>> row;
    std::string tok;
    bool quoted = false, in_quotes = false, line_has_data = false;
    auto push_tok = [&]() {
        row.emplace_back(tok, quoted);
        tok.clear();
        quoted = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    tok += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                tok += c;
            }
            continue;
        }
        if (c == '"' && tok.empty()) {
            in_quotes = true;
            quoted = true;
            line_has_data = true;
        } else if (c == ',') {
            push_tok();
            line_has_data = true;
        } else if (c == '\n') {
            if (line_has_data || !tok.empty()) {
                push_tok();
                rows.push_back(std::move(row));
                row.clear();
            }
            line_has_data = false;
        } else if (c != '\r') {
            tok += c;
            line_has_data = true;
        }
    }
    if (line_has_data || !tok.empty()) {
        push_tok();
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return table;
    for (const auto& p : rows.front()) table.header.push_back(p.first);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        Record rec;
        if (rows[r].size() != table.header.size())
            throw domain_error("parse_csv: row width does not match header");
        for (std::size_t i = 0; i < rows[r].size(); ++i)
            rec.push_back({table.header[i], classify_token(rows[r][i].first, rows[r][i].second)});
        table.records.push_back(std::move(rec));
    }
    return table;
}

ParsedJson parse_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw domain_error(std::string("parse_json: ") + e.what());
    }
    ParsedJson out;
    if (j.contains("meta")) {
        const auto& m = j["meta"];
        out.meta.command = m.value("command", "");
        out.meta.flags = m.value("flags", "");
        out.meta.version = m.value("version", "");
    }
    if (!j.contains("data") || !j["data"].is_array())
        throw domain_error("parse_json: missing data array");
    for (const auto& obj : j["data"]) {
        Record rec;
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            Value v;
            if (it->is_number_integer())
                v = static_cast<long long>(it->get<long long>());
            else if (it->is_number())
                v = it->get<double>();
            else if (it->is_string()) {
                // only the non-finite sentinels collapse back to doubles
                const std::string s = it->get<std::string>();
                if (s == "-inf") v = -std::numeric_limits<double>::infinity();
                else if (s == "inf") v = std::numeric_limits<double>::infinity();
                else if (s == "nan") v = std::numeric_limits<double>::quiet_NaN();
                else v = s;
            } else
                throw domain_error("parse_json: unsupported value type for field " + it.key());
            rec.push_back({it.key(), std::move(v)});
        }
        if (out.table.header.empty())
            for (const auto& f : rec) out.table.header.push_back(f.name);
        out.table.records.push_back(std::move(rec));
    }
    return out;
}

} // namespace lsf
