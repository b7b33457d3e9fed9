#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcs::cli {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kViolation = 1;   // property violation or unschedulable verdict
constexpr int kInputError = 2;
constexpr int kRefused = 3;     // unschedulable input without --force

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcs::cli
