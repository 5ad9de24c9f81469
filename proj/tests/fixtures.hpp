#pragma once

#include "lierig/catalog.hpp"
#include "lierig/lie_core.hpp"

#include <string>
#include <vector>

namespace fixtures {

inline const lierig::StructureConstants& algebra(const std::string& name) {
  return *lierig::catalog::get(name).constants;
}

/// Names of every catalog entry with constants that pass Jacobi.
inline std::vector<std::string> lie_entries(std::size_t max_dim = 8) {
  std::vector<std::string> out;
  for (const auto& e : lierig::catalog::list())
    if (!e.is_external() && e.dim <= max_dim && lierig::is_lie_algebra(*e.constants)) out.push_back(e.name);
  return out;
}

}  // namespace fixtures
