#include <iostream>

#include "qdl_cli/cli.hpp"

int main(int argc, char** argv) {
  qdl::cli::RunConfig config;
  const int parsed = qdl::cli::parse_command_line(argc, argv, config, std::cout, std::cerr);
  if (parsed >= 0) return parsed;
  return qdl::cli::run(config, std::cout, std::cerr);
}
