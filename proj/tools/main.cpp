#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  texcomp::cli::Context ctx{std::cout, std::cerr, std::nullopt};
  if (const char* env = std::getenv("TEXCOMP_PROFILE")) ctx.env_profile = env;
  return texcomp::cli::run({argv, argv + argc}, ctx);
}
