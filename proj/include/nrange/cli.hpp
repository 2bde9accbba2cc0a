#pragma once
#include <string>
#include <vector>
namespace nrange::cli {
int run_cli(const std::vector<std::string>& args);
}
