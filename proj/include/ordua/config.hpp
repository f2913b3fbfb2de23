// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace ordua {

/// Search limits shared by every enumerating operation.
struct Bounds {
  std::size_t enumeration = 12;  // carrier size for filter and hom enumeration
  std::size_t oracle = 3;        // lattice size accepted by the closure-rule oracle
  std::size_t hom_target = 3;    // atoms of the largest powerset target in universal checks
};

}  // namespace ordua
