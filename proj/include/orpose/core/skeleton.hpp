#pragma once

#include <string>
#include <utility>
#include <vector>

namespace orpose {

// Skeleton topology shared by every module. The bone list is a tree rooted at
// the pelvis; bones are ordered so each bone's parent joint is either the root
// or the child of an earlier bone, which lets tree walks run in list order.
struct SkeletonSpec {
  std::vector<std::string> joint_names;
  std::vector<std::pair<int, int>> bones;  // (parent_index, child_index)
  std::vector<std::pair<int, int>> symmetric_pairs;
  int root = 0;

  int joint_count() const { return static_cast<int>(joint_names.size()); }
  int bone_count() const { return static_cast<int>(bones.size()); }
  int index_of(const std::string& name) const;

  // Joints reported in result tables: everything except the root.
  std::vector<int> evaluated_joints() const;

  void validate() const;  // throws InvalidInput on any broken invariant

  // Fingerprint of the canonical serialization; stored in checkpoints and
  // dataset manifests to catch mismatched pairings.
  std::string canonical_hash() const;

  std::string to_json_string() const;
  static SkeletonSpec from_json_string(const std::string& text);
  static SkeletonSpec load(const std::string& path);
  void save(const std::string& path) const;

  // 13 joints: pelvis root plus L/R shoulder, elbow, wrist, hip, knee, ankle.
  static SkeletonSpec default_13();
};

}  // namespace orpose
