#pragma once

#include "kstab/jsonio.hpp"

namespace kstab::api {

// Status values mirrored by the C layer and by CLI exit codes.
enum Status : int {
    OK = 0,
    VERIFY_FAILED = 1,
    ERR_USAGE = 2,
    ERR_INTERNAL = 3,
};

// Evaluates one JSON request {"cmd": ..., ...} and returns
// {"status": int, "payload": ..., "message": string}. Never throws: malformed
// requests become ERR_USAGE, everything else ERR_INTERNAL.
json eval(const json& request);

// Convenience wrapper over serialized strings.
std::string eval_string(const std::string& request);

}  // namespace kstab::api
