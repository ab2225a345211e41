#pragma once

#include <string>

namespace voa {

struct RunResult {
    int code = 0;  // 0 ok/verified, 1 verification failure, 2 usage error
    std::string output;
};

// Executes one task described as JSON:
//   {"cmd": "...", "format": "text"|"json", "builtin": "...", "algebra": file,
//    ...command-specific keys}
// Never throws; errors are reported in the output with code 2 (usage/domain)
// and verification failures with code 1.
RunResult run_task(const std::string& task_json);

}  // namespace voa
