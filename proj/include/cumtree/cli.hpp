#pragma once

// Command-line front end: `cumtree <subcommand> [options]`.

#include <iosfwd>
#include <string>
#include <vector>

namespace cumtree::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cumtree::cli
