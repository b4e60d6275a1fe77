#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tvsum::cli {

// Bumped whenever a convention change alters any exact output.
inline constexpr const char* kConventionVersion = "tvsum-conv-1";

// args excludes the program name. Exit codes: 0 ok, 2 validation, 3 domain, 4 I/O.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvsum::cli
