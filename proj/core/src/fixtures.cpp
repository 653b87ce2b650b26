#include "ibncut/fixtures.hpp"

#include <cstdlib>

#include "ibncut/io.hpp"

#ifndef IBNCUT_DATA_DIR
#define IBNCUT_DATA_DIR "data"
#endif

namespace ibncut {

std::vector<std::string> fixture_names() {
  return {"giles-trotter", "fish-in-net", "ziegler7"};
}

std::string default_data_dir() {
  if (const char* env = std::getenv("IBNCUT_DATA_DIR")) return env;
  return IBNCUT_DATA_DIR;
}

FacetCertificate load_fixture(const std::string& name, const std::string& data_dir) {
  std::string file;
  if (name == "giles-trotter") file = "giles_trotter.json";
  else if (name == "fish-in-net") file = "fish_in_net.json";
  else if (name == "ziegler7") file = "ziegler7.json";
  else throw Error(ErrorCode::bad_input, "unknown fixture: " + name);

  std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
  std::string path = dir + "/fixtures/" + file;
  Json j = Json::parse(read_file(path));
  return certificate_from_json(j);
}

}  // namespace ibncut
