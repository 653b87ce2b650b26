#ifndef IBNCUT_FIXTURES_HPP
#define IBNCUT_FIXTURES_HPP

#include <string>
#include <vector>

#include "ibncut/stableset.hpp"

namespace ibncut {

// Certificates printed in the literature, shipped as versioned JSON under
// data/fixtures. Names: giles-trotter, fish-in-net, ziegler7.
std::vector<std::string> fixture_names();
FacetCertificate load_fixture(const std::string& name,
                              const std::string& data_dir = "");

// IBNCUT_DATA_DIR env var, then the build-time default.
std::string default_data_dir();

}  // namespace ibncut

#endif
