#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> threads;
  if (const char* env = std::getenv("SK1_THREADS")) threads = env;
  const auto result = sk1::cli::run_args({argv + 1, argv + argc}, threads);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
