#pragma once

#include <iosfwd>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace solenoid::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kCrossCheckFailure = 2 };

/// key=value lines with a fixed key order. Records print separated by a
/// blank line.
class OutputRecord {
public:
    OutputRecord& add(std::string key, std::string value);
    OutputRecord& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
    OutputRecord& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
    template <class Int>
        requires std::is_integral_v<Int>
    OutputRecord& add(std::string key, Int value) { return add(std::move(key), std::to_string(value)); }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

void print_records(std::ostream& out, const std::vector<OutputRecord>& records);

/// Runs one invocation; args excludes the program name. Results go to out,
/// the one-line error message (exit 1) or cross-check report (exit 2) to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace solenoid::cli
