#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// Golden-file helper: compares `actual` against the named file under the
// golden directory.  Set TKIT_REGEN_GOLDEN=1 to rewrite the files instead.
namespace testutil {

inline std::string golden_path(const std::string& name) {
  return std::string(TKIT_GOLDEN_DIR) + "/" + name;
}

inline bool regen() { return std::getenv("TKIT_REGEN_GOLDEN") != nullptr; }

inline std::string read_golden(const std::string& name) {
  std::ifstream in(golden_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// returns true when the contents match (or were regenerated)
inline bool check_golden(const std::string& name, const std::string& actual) {
  if (regen()) {
    std::ofstream out(golden_path(name));
    out << actual;
    return true;
  }
  return read_golden(name) == actual;
}

}  // namespace testutil
