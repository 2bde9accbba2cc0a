#include <vector>
#include <string>

#include "nrange/cli.hpp"

int main(int argc, char** argv) {
  return nrange::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
