#pragma once

#include <string>
#include <vector>

namespace lst {

struct GoldenTable {
  std::string name;
  std::string csv;
};

std::vector<GoldenTable> golden_tables();

}  // namespace lst
