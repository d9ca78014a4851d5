#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvc4 {

/// Entry point of the pvc4 tool. `args` excludes the program name.
/// Returns 0 for yes/ok, 1 for no/not-a-cover, 2 for usage or internal errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pvc4
