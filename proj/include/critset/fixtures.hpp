#pragma once

// Reference fixtures, shipped as text files in the data directory and
// addressable by name.

#include <string>
#include <vector>

#include "critset/matrix.hpp"

namespace critset {

struct Fixture {
  std::string name;
  PartialMatrix matrix;
  PartialMatrix marked;  // the figure's highlighted cells
};

const std::vector<std::string>& fixture_names();
bool is_fixture_name(const std::string& name);
Fixture load_fixture(const std::string& name);

// Resolution order: CRITSET_DATA_DIR environment variable, then the
// compiled-in source data directory.
std::string fixture_dir();

}  // namespace critset
