#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace predraw::cli {

// Exit codes: 0 success, 2 input/validation error, 10 from `eval` when
// the pure condition vanishes at the given normals.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitVanishes = 10;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace predraw::cli
