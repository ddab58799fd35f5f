#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3fib {

// Runs the command-line driver on already-split arguments (no program name).
// Exit status: 0 success, 1 domain error (JSON {code, message} on err),
// 2 usage error. All output is buffered and flushed once.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace k3fib
