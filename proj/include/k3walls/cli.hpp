#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3walls {

// Exit codes: 0 success or green, 1 red scenario, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3walls
