#pragma once

// Codes shared by several test files. The class pairs and permutations were
// found by the kernel-dimension search over length-8 class representatives.

#include "pcl/doubling.hpp"
#include "pcl/partition_atlas.hpp"

namespace fx {

inline const pcl::Classification& atlas8() {
  static const pcl::Classification a = pcl::atlas8();
  return a;
}

inline pcl::Code sp_code(int source, int target, const char* sigma) {
  const auto& a = atlas8();
  return pcl::normalize(pcl::doubling({pcl::ExtendedPartition(a.classes[static_cast<std::size_t>(source)].representative),
                                       pcl::ExtendedPartition(a.classes[static_cast<std::size_t>(target)].representative),
                                       pcl::parse_sigma(sigma)}))
      .first;
}

inline pcl::Code kappa_code(int kappa) {
  switch (kappa) {
    case 9: return sp_code(0, 0, "01234576");
    case 8: return sp_code(0, 0, "01234675");
    case 7: return sp_code(0, 1, "01234657");
    case 6: return sp_code(0, 3, "01234657");
    case 5: return sp_code(0, 7, "01234567");
    default: return sp_code(0, 0, "01234567");
  }
}

}  // namespace fx
