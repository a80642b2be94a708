#include "ozonelab/specfile.hpp"

#include "ozonelab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace ozonelab::spec {

using cyclo::CycNum;

namespace {

struct Value {
    enum class Kind { Integer, String, Table } kind = Kind::String;
    long integer = 0;
    std::string text;
    std::vector<std::pair<std::string, std::string>> table;
    std::size_t position = 0;  // offset of the first character of the value
};

class Reader {
public:
    explicit Reader(std::string_view text, bool autos_only = false) : text_(text), autos_only_(autos_only) {}

    SpecFile read() {
        std::string section;
        bool array_entry = false;
        std::vector<std::pair<std::string, std::map<std::string, Value>>> entries;
        std::map<std::string, std::map<std::string, Value>> tables;
        std::vector<std::pair<std::string, Value>> generators;
        std::vector<std::pair<std::string, Value>> params;

        while (pos_ < text_.size()) {
            skip_blank();
            if (pos_ >= text_.size()) break;
            char c = text_[pos_];
            if (c == '\n') {
                ++pos_;
                continue;
            }
            if (c == '#') {
                skip_comment();
                continue;
            }
            if (c == '[') {
                std::size_t at = pos_;
                array_entry = text_.compare(pos_, 2, "[[") == 0;
                pos_ += array_entry ? 2 : 1;
                skip_blank();
                section = identifier();
                skip_blank();
                if (!consume(array_entry ? "]]" : "]")) fail("expected closing bracket", pos_);
                static const std::vector<std::string> plain = {"field", "generators", "params", "meta"};
                static const std::vector<std::string> arrays = {"relations", "autos"};
                const auto& allowed = array_entry ? arrays : plain;
                if (std::find(allowed.begin(), allowed.end(), section) == allowed.end())
                    fail("unknown section '" + section + "'", at);
                if (array_entry) entries.push_back({section, {}});
                end_of_line();
                continue;
            }
            std::size_t key_at = pos_;
            std::string key = identifier();
            skip_blank();
            if (!consume("=")) fail("expected '='", pos_);
            skip_blank();
            Value v = value();
            end_of_line();
            if (section.empty()) fail("key outside any section", key_at);
            if (array_entry) {
                auto& e = entries.back().second;
                if (!e.emplace(key, v).second) fail("duplicate key '" + key + "'", key_at);
            } else if (section == "generators") {
                generators.emplace_back(key, v);
            } else if (section == "params") {
                params.emplace_back(key, v);
            } else if (!tables[section].emplace(key, v).second) {
                fail("duplicate key '" + key + "'", key_at);
            }
        }
        return build(entries, tables, generators, params);
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw SyntaxError(what, at); }

    void skip_blank() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    void skip_comment() {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    }
    bool consume(std::string_view s) {
        if (text_.compare(pos_, s.size(), s) != 0) return false;
        pos_ += s.size();
        return true;
    }
    void end_of_line() {
        skip_blank();
        if (pos_ < text_.size() && text_[pos_] == '#') skip_comment();
        if (pos_ < text_.size() && text_[pos_] != '\n') fail("unexpected trailing characters", pos_);
        if (pos_ < text_.size()) ++pos_;
    }
    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-'))
            ++pos_;
        if (start == pos_) fail("expected a name", start);
        return std::string(text_.substr(start, pos_ - start));
    }
    std::string string_literal() {
        std::size_t start = pos_;
        if (!consume("\"")) fail("expected a string", pos_);
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\n') fail("unterminated string", start);
            if (text_[pos_] == '\\') {
                ++pos_;
                if (pos_ >= text_.size()) break;
                char e = text_[pos_];
                if (e != '"' && e != '\\') fail("unsupported escape", pos_);
            }
            out += text_[pos_++];
        }
        if (!consume("\"")) fail("unterminated string", start);
        return out;
    }
    Value value() {
        Value v;
        v.position = pos_;
        if (pos_ >= text_.size()) fail("expected a value", pos_);
        char c = text_[pos_];
        if (c == '"') {
            v.kind = Value::Kind::String;
            v.text = string_literal();
            v.position += 1;
        } else if (c == '{') {
            v.kind = Value::Kind::Table;
            ++pos_;
            skip_blank();
            while (!consume("}")) {
                std::string key = identifier();
                skip_blank();
                if (!consume("=")) fail("expected '='", pos_);
                skip_blank();
                v.table.emplace_back(key, string_literal());
                skip_blank();
                if (consume(",")) skip_blank();
                else if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected ',' or '}'", pos_);
            }
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::size_t start = pos_;
            if (c == '-') ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string digits(text_.substr(start, pos_ - start));
            if (digits == "-" || digits.size() > 9) fail("bad integer", start);
            v.kind = Value::Kind::Integer;
            v.integer = std::stol(digits);
        } else {
            fail("expected a value", pos_);
        }
        return v;
    }

    const Value& require(const std::map<std::string, Value>& m, const std::string& key, Value::Kind kind,
                         const std::string& where) const {
        auto it = m.find(key);
        if (it == m.end()) throw InvalidPresentation(where + " is missing '" + key + "'");
        if (it->second.kind != kind) fail("wrong value type for '" + key + "'", it->second.position);
        return it->second;
    }

    template <class F>
    auto embedded(const Value& v, F&& f) const {
        try {
            return f(v.text);
        } catch (const SyntaxError& e) {
            throw SyntaxError(e.detail(), v.position + e.position());
        }
    }

    AutoSpec auto_spec(const std::map<std::string, Value>& m) const {
        AutoSpec a;
        for (const auto& [k, v] : m)
            if (k != "name" && k != "map") fail("unknown key '" + k + "'", v.position);
        a.name = require(m, "name", Value::Kind::String, "[[autos]]").text;
        a.images = require(m, "map", Value::Kind::Table, "[[autos]]").table;
        return a;
    }

    SpecFile build(const std::vector<std::pair<std::string, std::map<std::string, Value>>>& entries,
                   std::map<std::string, std::map<std::string, Value>>& tables,
                   const std::vector<std::pair<std::string, Value>>& generators,
                   const std::vector<std::pair<std::string, Value>>& params) const {
        SpecFile out;
        auto& pres = out.presentation;
        if (autos_only_) {
            if (!tables.empty() || !generators.empty() || !params.empty())
                throw InvalidPresentation("an automorphism file may only contain [[autos]] entries");
            for (const auto& [section, m] : entries) {
                if (section != "autos") throw InvalidPresentation("an automorphism file may only contain [[autos]] entries");
                out.autos.push_back(auto_spec(m));
            }
            return out;
        }
        if (auto it = tables.find("field"); it != tables.end()) {
            for (const auto& [k, v] : it->second)
                if (k != "conductor") fail("unknown key '" + k + "'", v.position);
            if (it->second.count("conductor")) {
                const Value& v = require(it->second, "conductor", Value::Kind::Integer, "[field]");
                if (v.integer < 1) fail("conductor must be positive", v.position);
                out.conductor = static_cast<int>(v.integer);
            }
        }
        for (const auto& [name, v] : generators) {
            if (v.kind != Value::Kind::Integer) fail("generator weight must be an integer", v.position);
            if (v.integer < 1) fail("generator weight must be positive", v.position);
            pres.generators.push_back({name, static_cast<int>(v.integer)});
        }
        if (pres.generators.empty()) throw InvalidPresentation("no generators declared");
        std::map<std::string, CycNum> scalars;
        for (const auto& [name, v] : params) {
            if (v.kind != Value::Kind::String) fail("parameter values must be strings", v.position);
            CycNum c = embedded(v, [](const std::string& s) { return cyclo::parse_scalar(s); });
            scalars[name] = c;
            pres.params.emplace_back(name, c);
            out.params.emplace_back(name, v.text);
        }
        for (const auto& [section, m] : entries) {
            if (section == "relations") {
                for (const auto& [k, v] : m)
                    if (k != "expr") fail("unknown key '" + k + "'", v.position);
                const Value& v = require(m, "expr", Value::Kind::String, "[[relations]]");
                pres.relations.push_back(embedded(v, [&](const std::string& s) {
                    return nc::parse_element(s, pres.generators, scalars);
                }));
                out.relation_texts.push_back(v.text);
            } else {
                out.autos.push_back(auto_spec(m));
            }
        }
        if (auto it = tables.find("meta"); it != tables.end()) {
            for (const auto& [k, v] : it->second) {
                if (v.kind != Value::Kind::String) fail("meta values must be strings", v.position);
                if (k == "hilbert") {
                    pres.declared_hilbert =
                        embedded(v, [](const std::string& s) { return hilbert::HilbertSeries::parse(s); });
                } else if (k == "label") {
                    pres.label = v.text;
                } else if (k == "order") {
                    std::stringstream ss(v.text);
                    std::string item;
                    while (std::getline(ss, item, ',')) {
                        auto b = item.find_first_not_of(' ');
                        auto e = item.find_last_not_of(' ');
                        if (b == std::string::npos) fail("empty name in order", v.position);
                        out.order.push_back(item.substr(b, e - b + 1));
                    }
                } else {
                    fail("unknown key '" + k + "'", v.position);
                }
            }
        }
        pres.validate();
        if (!out.order.empty()) nc::parse_precedence(pres, out.order);
        if (out.conductor && *out.conductor % pres.conductor() != 0)
            throw InvalidPresentation("relation scalars need conductor " + std::to_string(pres.conductor()) +
                                      ", which does not divide the declared " + std::to_string(*out.conductor));
        return out;
    }

    std::string_view text_;
    bool autos_only_ = false;
    std::size_t pos_ = 0;
};

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

SpecFile parse_spec(std::string_view text) { return Reader(text).read(); }

std::vector<AutoSpec> parse_autos(std::string_view text) { return Reader(text, true).read().autos; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidPresentation("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SpecFile load_spec(const std::string& path) { return parse_spec(read_file(path)); }

std::string emit_spec(const SpecFile& s) {
    const auto& pres = s.presentation;
    std::ostringstream out;
    out << "[field]\nconductor = " << (s.conductor ? *s.conductor : pres.conductor()) << "\n\n";
    out << "[generators]\n";
    for (const auto& g : pres.generators) out << g.name << " = " << g.weight << "\n";
    if (!s.params.empty()) {
        out << "\n[params]\n";
        for (const auto& [k, v] : s.params) out << k << " = " << quoted(v) << "\n";
    }
    for (const auto& r : pres.relations) out << "\n[[relations]]\nexpr = " << quoted(r.to_string(pres.generators)) << "\n";
    if (!pres.label.empty() || pres.declared_hilbert || !s.order.empty()) {
        out << "\n[meta]\n";
        if (!pres.label.empty()) out << "label = " << quoted(pres.label) << "\n";
        if (pres.declared_hilbert) out << "hilbert = " << quoted(pres.declared_hilbert->to_string()) << "\n";
        if (!s.order.empty()) {
            std::string joined;
            for (const auto& n : s.order) joined += (joined.empty() ? "" : ",") + n;
            out << "order = " << quoted(joined) << "\n";
        }
    }
    for (const auto& a : s.autos) {
        out << "\n[[autos]]\nname = " << quoted(a.name) << "\nmap = { ";
        for (std::size_t i = 0; i < a.images.size(); ++i)
            out << (i ? ", " : "") << a.images[i].first << " = " << quoted(a.images[i].second);
        out << " }\n";
    }
    return out.str();
}

}  // namespace ozonelab::spec
