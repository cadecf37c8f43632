#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef GCFHS_GOLDEN_DIR
#error "GCFHS_GOLDEN_DIR must point at tests/golden"
#endif

namespace gcfhs::cli {

struct GoldenCase {
  std::string file;
  std::vector<std::string> args;
};

// The committed spot invocations. Regenerate with tools/regen_golden.sh only
// after checking the new output by hand.
inline std::vector<GoldenCase> golden_cases() {
  return {
      {"generate_p3_n2_seq0.csv", {"generate", "--p", "3", "--n", "2", "--seq", "0", "--format", "csv"}},
      {"generate_p3_n3.csv", {"generate", "--p", "3", "--n", "3"}},
      {"bounds_p3_n2.csv", {"bounds", "--p", "3", "--n", "2"}},
      {"bounds_p3_n2.json", {"bounds", "--p", "3", "--n", "2", "--format", "json"}},
  };
}

inline std::string read_golden(const std::string& file) {
  std::ifstream in(std::string(GCFHS_GOLDEN_DIR) + "/" + file, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace gcfhs::cli
