#include <iostream>
#include <string>
#include <vector>

#include "qed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  qed::cli::CommandResult res = qed::cli::run_command(args);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
