#pragma once

#include "jetbrackets/error.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace jb {

/// One bracketed entry of a fixture file: a name followed by `key: value` fields.
/// Indented lines continue the previous field; text after '#' at the start of a line is ignored.
struct FixtureRecord {
    std::string name;
    std::map<std::string, std::string> fields;
    std::string file;
    int line = 0;

    bool has(const std::string& key) const { return fields.count(key) != 0; }
    /// Field value; throws ParseError when absent.
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    int get_int(const std::string& key) const;
    /// Whitespace-separated words of a field, empty when absent.
    std::vector<std::string> words(const std::string& key) const;
    std::string where() const { return file + ":" + std::to_string(line); }
};

/// One index assignment of a record, with the instantiated name.
struct FixtureInstance {
    std::string name;
    std::map<char, int> indices;
};

/// Expands `indices: i j` and `instances: 11 12 22`; a record without indices has one instance.
std::vector<FixtureInstance> instances_of(const FixtureRecord& record);

std::vector<FixtureRecord> parse_fixture_text(const std::string& text, const std::string& file = "<text>");
std::vector<FixtureRecord> read_fixture_file(const std::filesystem::path& path);

/// A directory of fixture files, defaulting to the fixtures shipped with the sources.
class FixtureStore {
public:
    FixtureStore();
    explicit FixtureStore(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    /// Reads `<dir>/<file>`; throws ParseError when unreadable.
    std::vector<FixtureRecord> load(const std::string& file) const;
    /// The record with the given name in the file.
    FixtureRecord find(const std::string& file, const std::string& name) const;

private:
    std::filesystem::path dir_;
};

}  // namespace jb
