//
// commoncert - Copyright 2026 The commoncert Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef COMMONCERT_LIMITS_H_
#define COMMONCERT_LIMITS_H_

#include <cstdint>

namespace commoncert {

// Enumeration caps shared by the exact evaluators.
struct Limits {
  // Maximum m^v point assignments visited by hom_density_direct.
  std::uint64_t max_assignments = std::uint64_t{1} << 24;
  // Maximum GF(2) cycle-space dimension for even-subgraph enumeration.
  int max_cycle_space_dim = 30;
  // Maximum e(H) for the all-subsets expansion.
  int max_subset_edges = 20;
};

} // namespace commoncert

#endif // COMMONCERT_LIMITS_H_
