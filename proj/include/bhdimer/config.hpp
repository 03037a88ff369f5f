#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>

#include "bhdimer/hamiltonian.hpp"

namespace bhdimer {

/// Contents of a flat `key = value` configuration file.
struct ConfigFile {
  HamiltonianParams params;
  // Set when any of r1, r2, r3 is present.
  std::optional<std::array<double, 3>> r;
  std::array<double, 3> theta{};
};

ConfigFile parse_config(std::istream& in);
ConfigFile load_config(const std::string& path);

}  // namespace bhdimer
