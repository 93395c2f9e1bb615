#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace protex::cli {

enum exit_code: int {
    ok = 0,
    internal_error = 1,
    bad_input = 2,
    out_of_resources = 3,   // fuel exhausted or enumeration budget exceeded
};

inline constexpr unsigned long long default_seed = 20240611;

// The whole command line minus the program name. Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace protex::cli
