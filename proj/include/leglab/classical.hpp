#pragma once

#include <cstdint>

namespace leglab {

/// Classical invariants of an oriented Legendrian knot.
struct Classical {
  std::int64_t maslov;  // m, twice the rotation number
  std::int64_t tb;      // beta, the Thurston-Bennequin number
  friend bool operator==(const Classical&, const Classical&) = default;
};

}  // namespace leglab
