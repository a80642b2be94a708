#pragma once

// Command-line front end. Every command builds one Report value that is printed
// either as a table or as JSON.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ozonelab::cli {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string citation;
};

struct Report {
    std::string command;
    std::string input_digest;
    Json payload = Json::object();
    std::vector<Check> checks;

    Json to_json() const;
    static Report from_json(const Json& j);
    std::string to_table() const;
    bool all_passed() const;
};

/// Hex SHA-256 of the given bytes.
std::string sha256_hex(const std::string& bytes);

/// Runs the tool; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ozonelab::cli
