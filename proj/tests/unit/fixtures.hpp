#pragma once

#include <fstream>
#include <sstream>
#include <string>

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}
