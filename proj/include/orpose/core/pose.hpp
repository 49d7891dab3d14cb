#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace orpose {

// K keypoints in image pixel coordinates. Joints with valid=false are
// excluded from every metric and loss.
struct Pose {
  std::vector<std::array<double, 2>> coords;  // (x, y)
  std::vector<uint8_t> valid;

  int joint_count() const { return static_cast<int>(coords.size()); }
  bool is_valid(int j) const { return valid[static_cast<std::size_t>(j)] != 0; }
  double x(int j) const { return coords[static_cast<std::size_t>(j)][0]; }
  double y(int j) const { return coords[static_cast<std::size_t>(j)][1]; }

  static Pose all_valid(std::vector<std::array<double, 2>> c) {
    Pose p;
    p.valid.assign(c.size(), 1);
    p.coords = std::move(c);
    return p;
  }
};

}  // namespace orpose
