#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace texcomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;        // I/O, usage and manifest failures
inline constexpr int kExitAnalysis = 2;  // no analyzable text

struct Context {
  std::ostream& out;
  std::ostream& err;
  // Value of TEXCOMP_PROFILE, if set. The --profile flag takes precedence.
  std::optional<std::string> env_profile;
};

// args[0] is the program name.
int run(const std::vector<std::string>& args, Context& ctx);

}  // namespace texcomp::cli
