// Copyright 2026 The redit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef REDIT_TESTS_CLI_HARNESS_HPP
#define REDIT_TESTS_CLI_HARNESS_HPP

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace cli_harness {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Run the built CLI with the given arguments, capturing stdout.
inline RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string out_path = "/tmp/redit_cli_stdout_" + std::to_string(++counter) + ".txt";
    const std::string command =
        std::string(REDIT_CLI_PATH) + " " + args + " > " + out_path + " 2> /dev/null";
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    std::remove(out_path.c_str());
    return result;
}

/// Minimal structural validator for the subset of JSON Schema the shipped
/// schema uses: type, required, properties (recursively).
inline bool validates(const nlohmann::json& instance, const nlohmann::json& schema, std::string* why = nullptr) {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        const bool ok = (type == "object" && instance.is_object()) || (type == "array" && instance.is_array()) ||
                        (type == "string" && instance.is_string()) ||
                        (type == "integer" && instance.is_number_integer()) ||
                        (type == "number" && instance.is_number()) ||
                        (type == "boolean" && instance.is_boolean());
        if (!ok) {
            if (why) *why = "expected type " + type;
            return false;
        }
    }
    if (schema.contains("required")) {
        for (const auto& key : schema["required"]) {
            if (!instance.contains(key.get<std::string>())) {
                if (why) *why = "missing required key " + key.get<std::string>();
                return false;
            }
        }
    }
    if (schema.contains("properties") && instance.is_object()) {
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (instance.contains(key) && !validates(instance[key], sub, why)) return false;
        }
    }
    return true;
}

}  // namespace cli_harness

#endif  // REDIT_TESTS_CLI_HARNESS_HPP
