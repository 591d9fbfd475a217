#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "heffter/document.hpp"

#ifndef HEFFTER_TEST_DATA_DIR
#error "HEFFTER_TEST_DATA_DIR must point at tests/data"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(HEFFTER_TEST_DATA_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline heffter::HeffterArray array(const std::string& name) {
  return heffter::parse_document(read(name)).array;
}

}  // namespace fixtures
