#include "jetbrackets/fixture.hpp"

#include "jetbrackets/expression.hpp"

#include <fstream>
#include <sstream>

#include <boost/algorithm/string.hpp>

namespace jb {

const std::string& FixtureRecord::get(const std::string& key) const {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(where() + ": record [" + name + "] lacks field '" + key + "'");
    return it->second;
}

std::string FixtureRecord::get_or(const std::string& key, const std::string& fallback) const {
    auto it = fields.find(key);
    return it == fields.end() ? fallback : it->second;
}

int FixtureRecord::get_int(const std::string& key) const {
    const std::string& v = get(key);
    try {
        std::size_t used = 0;
        int n = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return n;
    } catch (const std::exception&) {
        throw ParseError(where() + ": field '" + key + "' is not an integer: " + v);
    }
}

std::vector<std::string> FixtureRecord::words(const std::string& key) const {
    std::vector<std::string> out;
    auto it = fields.find(key);
    if (it == fields.end()) return out;
    std::istringstream in(it->second);
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<FixtureInstance> instances_of(const FixtureRecord& record) {
    std::vector<std::string> letters = record.words("indices");
    if (letters.empty()) return {FixtureInstance{record.name, {}}};
    std::vector<std::string> inst = record.words("instances");
    if (inst.empty()) throw ParseError(record.where() + ": indexed record [" + record.name + "] lacks instances");
    std::vector<FixtureInstance> out;
    for (const std::string& digits : inst) {
        if (digits.size() != letters.size())
            throw ParseError(record.where() + ": instance '" + digits + "' does not match the index letters");
        std::map<char, int> assignment;
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (letters[k].size() != 1 || !std::isdigit(static_cast<unsigned char>(digits[k])))
                throw ParseError(record.where() + ": malformed index assignment '" + digits + "'");
            assignment[letters[k][0]] = digits[k] - '0';
        }
        out.push_back(FixtureInstance{instantiate_identifier(record.name, assignment), assignment});
    }
    return out;
}

std::vector<FixtureRecord> parse_fixture_text(const std::string& text, const std::string& file) {
    std::vector<FixtureRecord> out;
    std::istringstream in(text);
    std::string raw;
    std::string last_key;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string trimmed = boost::algorithm::trim_copy(raw);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.front() == '[' && !std::isspace(static_cast<unsigned char>(raw[0]))) {
            if (trimmed.back() != ']') throw ParseError(file + ":" + std::to_string(line_no) + ": unterminated record header");
            FixtureRecord r;
            r.name = trimmed.substr(1, trimmed.size() - 2);
            r.file = file;
            r.line = line_no;
            out.push_back(std::move(r));
            last_key.clear();
            continue;
        }
        if (out.empty()) throw ParseError(file + ":" + std::to_string(line_no) + ": field outside a record");
        FixtureRecord& r = out.back();
        if (std::isspace(static_cast<unsigned char>(raw[0]))) {
            if (last_key.empty()) throw ParseError(file + ":" + std::to_string(line_no) + ": continuation without a field");
            r.fields[last_key] += " " + trimmed;
            continue;
        }
        auto colon = trimmed.find(':');
        if (colon == std::string::npos) throw ParseError(file + ":" + std::to_string(line_no) + ": expected 'key: value'");
        last_key = boost::algorithm::trim_copy(trimmed.substr(0, colon));
        if (r.fields.count(last_key))
            throw ParseError(file + ":" + std::to_string(line_no) + ": duplicate field '" + last_key + "'");
        r.fields[last_key] = boost::algorithm::trim_copy(trimmed.substr(colon + 1));
    }
    return out;
}

std::vector<FixtureRecord> read_fixture_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read fixture file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_fixture_text(buffer.str(), path.filename().string());
}

#ifndef JB_FIXTURE_DIR
#define JB_FIXTURE_DIR "fixtures"
#endif

FixtureStore::FixtureStore() : dir_(JB_FIXTURE_DIR) {}

FixtureStore::FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::vector<FixtureRecord> FixtureStore::load(const std::string& file) const { return read_fixture_file(dir_ / file); }

FixtureRecord FixtureStore::find(const std::string& file, const std::string& name) const {
    for (auto& r : load(file))
        if (r.name == name) return r;
    throw ParseError("fixture " + file + " has no record [" + name + "]");
}

}  // namespace jb
