#ifndef UNRAM_CERTIFY_TOML_LITE_HPP
#define UNRAM_CERTIFY_TOML_LITE_HPP

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "unram/integers.hpp"
#include "unram/reals.hpp"

namespace unram::certify {

/// Minimal TOML-compatible reader covering exactly what certificates use:
/// comments, [table] and [[array-of-table]] headers, bare keys, quoted
/// strings, booleans, integers and decimal reals (kept as raw text until a
/// typed getter is called), and (nested, possibly multiline) arrays.
struct toml_value {
    enum class kind_t { string, raw, boolean, array } kind = kind_t::raw;
    std::string text;  // string contents or raw token
    bool boolean = false;
    std::vector<toml_value> array;

    bool is_array() const { return kind == kind_t::array; }

    Int as_int() const {
        if (kind != kind_t::raw) throw error("toml: expected an integer, got '" + text + "'");
        return Int(text);
    }
    Real as_real() const {
        if (kind != kind_t::raw) throw error("toml: expected a number, got '" + text + "'");
        return parse_real(text);
    }
    bool as_bool() const {
        if (kind != kind_t::boolean) throw error("toml: expected a boolean");
        return boolean;
    }
    const std::string& as_string() const {
        if (kind != kind_t::string) throw error("toml: expected a string, got '" + text + "'");
        return text;
    }
    std::vector<Int> as_int_array() const {
        if (kind != kind_t::array) throw error("toml: expected an array");
        std::vector<Int> out;
        out.reserve(array.size());
        for (const auto& v : array) out.push_back(v.as_int());
        return out;
    }
    std::vector<std::vector<Int>> as_int_matrix() const {
        if (kind != kind_t::array) throw error("toml: expected an array of arrays");
        std::vector<std::vector<Int>> out;
        for (const auto& v : array) out.push_back(v.as_int_array());
        return out;
    }
};

struct toml_table {
    std::map<std::string, toml_value> values;

    bool has(const std::string& k) const { return values.count(k) > 0; }
    const toml_value& at(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end()) throw error("toml: missing key '" + k + "'");
        return it->second;
    }
    std::string get_string(const std::string& k, const std::string& dflt = "") const {
        auto it = values.find(k);
        return it == values.end() ? dflt : it->second.as_string();
    }
};

struct toml_document {
    std::map<std::string, toml_table> tables;
    std::map<std::string, std::vector<toml_table>> table_arrays;

    const toml_table& table(const std::string& name) const {
        auto it = tables.find(name);
        if (it == tables.end()) throw error("toml: missing table [" + name + "]");
        return it->second;
    }
    const std::vector<toml_table>& array(const std::string& name) const {
        static const std::vector<toml_table> empty;
        auto it = table_arrays.find(name);
        return it == table_arrays.end() ? empty : it->second;
    }
};

namespace detail {

class toml_parser {
  public:
    explicit toml_parser(std::string text) : s_(std::move(text)) {}

    toml_document parse() {
        toml_document doc;
        toml_table* current = &doc.tables[""];
        skip_ws(true);
        while (!eof()) {
            if (peek() == '[') {
                ++pos_;
                bool is_array = !eof() && peek() == '[';
                if (is_array) ++pos_;
                std::string name = read_name();
                expect(']');
                if (is_array) expect(']');
                if (is_array) {
                    doc.table_arrays[name].emplace_back();
                    current = &doc.table_arrays[name].back();
                } else {
                    current = &doc.tables[name];
                }
            } else {
                std::string key = read_key();
                skip_ws(false);
                expect('=');
                skip_ws(false);
                toml_value v = read_value();
                if (current->values.count(key)) throw parse_error(line_, "duplicate key '" + key + "'");
                current->values.emplace(std::move(key), std::move(v));
            }
            skip_ws(true);
        }
        return doc;
    }

  private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void skip_ws(bool newlines) {
        while (!eof()) {
            char c = s_[pos_];
            if (c == '#') {
                while (!eof() && s_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                if (c == '\n') ++line_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (eof() || s_[pos_] != c)
            throw parse_error(line_, std::string("expected '") + c + "'");
        ++pos_;
    }

    static bool is_bare(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_' || c == '-' || c == '.';
    }

    std::string read_name() {
        skip_ws(false);
        std::string out;
        while (!eof() && is_bare(peek())) out.push_back(s_[pos_++]);
        skip_ws(false);
        if (out.empty()) throw parse_error(line_, "empty table name");
        return out;
    }

    std::string read_key() {
        std::string out;
        while (!eof() && is_bare(peek())) out.push_back(s_[pos_++]);
        if (out.empty()) throw parse_error(line_, "expected a key");
        return out;
    }

    std::string read_quoted() {
        expect('"');
        std::string out;
        while (!eof() && peek() != '"') {
            char c = s_[pos_++];
            if (c == '\\' && !eof()) {
                char e = s_[pos_++];
                switch (e) {
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    default: throw parse_error(line_, "unknown escape");
                }
            } else {
                if (c == '\n') ++line_;
                out.push_back(c);
            }
        }
        expect('"');
        return out;
    }

    toml_value read_value() {
        toml_value v;
        if (eof()) throw parse_error(line_, "expected a value");
        char c = peek();
        if (c == '"') {
            v.kind = toml_value::kind_t::string;
            v.text = read_quoted();
            return v;
        }
        if (c == '[') {
            ++pos_;
            v.kind = toml_value::kind_t::array;
            skip_ws(true);
            while (!eof() && peek() != ']') {
                v.array.push_back(read_value());
                skip_ws(true);
                if (!eof() && peek() == ',') {
                    ++pos_;
                    skip_ws(true);
                }
            }
            expect(']');
            return v;
        }
        std::string tok;
        while (!eof() && (is_bare(peek()) || peek() == '+' || peek() == '-')) tok.push_back(s_[pos_++]);
        if (tok.empty()) throw parse_error(line_, "expected a value");
        if (tok == "true" || tok == "false") {
            v.kind = toml_value::kind_t::boolean;
            v.boolean = tok == "true";
            return v;
        }
        v.kind = toml_value::kind_t::raw;
        v.text = std::move(tok);
        return v;
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

}  // namespace detail

inline toml_document parse_toml(const std::string& text) {
    return detail::toml_parser(text).parse();
}

inline toml_document load_toml(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_toml(buf.str());
}

}  // namespace unram::certify

#endif
