#include <iostream>
#include <string>
#include <vector>

#include "halidon/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = halidon::cli::run(args);
  for (const auto& d : result.diagnostics) std::cerr << d << '\n';
  // --help leaves the payload empty and only writes usage text.
  if (!result.payload.empty() || result.envelope) std::cout << halidon::cli::render(result) << '\n';
  return result.exit_code;
}
