#include "critset/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef CRITSET_DATA_DIR_DEFAULT
#define CRITSET_DATA_DIR_DEFAULT "data"
#endif

namespace critset {

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "fig1", "ookii", "tryagain", "fig3", "fig4", "filly-left", "filly-right", "suprri"};
  return names;
}

bool is_fixture_name(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("CRITSET_DATA_DIR")) return std::string(env) + "/fixtures";
  return std::string(CRITSET_DATA_DIR_DEFAULT) + "/fixtures";
}

static std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fixture load_fixture(const std::string& name) {
  if (!is_fixture_name(name)) throw std::invalid_argument("unknown fixture '" + name + "'");
  std::string dir = fixture_dir();
  Fixture f;
  f.name = name;
  f.matrix = parse_text(read_file(dir + "/" + name + ".txt"));
  f.marked = parse_text(read_file(dir + "/" + name + "_cs.txt"));
  return f;
}

}  // namespace critset
