#include "orpose/core/skeleton.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orpose/util/error.hpp"
#include "orpose/util/hash.hpp"

namespace orpose {

using nlohmann::json;

int SkeletonSpec::index_of(const std::string& name) const {
  for (int i = 0; i < joint_count(); ++i)
    if (joint_names[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

std::vector<int> SkeletonSpec::evaluated_joints() const {
  std::vector<int> out;
  for (int j = 0; j < joint_count(); ++j)
    if (j != root) out.push_back(j);
  return out;
}

void SkeletonSpec::validate() const {
  const int k = joint_count();
  const int m = bone_count();
  if (k < 2) throw InvalidInput("skeleton: need at least 2 joints");
  if (m != k - 1) throw InvalidInput("skeleton: bone count must be joint count - 1");
  if (root < 0 || root >= k) throw InvalidInput("skeleton: root index out of range");

  std::set<int> reached = {root};
  std::set<int> child_seen;
  for (const auto& [parent, child] : bones) {
    if (parent < 0 || parent >= k || child < 0 || child >= k)
      throw InvalidInput("skeleton: bone index out of range");
    if (child == root) throw InvalidInput("skeleton: root cannot be a bone child");
    if (child_seen.count(child)) throw InvalidInput("skeleton: joint has two parents");
    if (!reached.count(parent))
      throw InvalidInput("skeleton: bones are not in tree order (parent not yet reached)");
    child_seen.insert(child);
    reached.insert(child);
  }
  if (static_cast<int>(reached.size()) != k)
    throw InvalidInput("skeleton: bone graph does not span all joints");
  for (const auto& [l, r] : symmetric_pairs)
    if (l < 0 || l >= k || r < 0 || r >= k || l == r)
      throw InvalidInput("skeleton: bad symmetric pair");
}

std::string SkeletonSpec::to_json_string() const {
  json j;
  j["version"] = 1;
  j["joints"] = joint_names;
  j["root"] = root;
  json b = json::array();
  for (const auto& [p, c] : bones) b.push_back({p, c});
  j["bones"] = b;
  json s = json::array();
  for (const auto& [l, r] : symmetric_pairs) s.push_back({l, r});
  j["symmetric_pairs"] = s;
  return j.dump(2);
}

SkeletonSpec SkeletonSpec::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("skeleton: invalid JSON: ") + e.what());
  }
  SkeletonSpec s;
  try {
    s.joint_names = j.at("joints").get<std::vector<std::string>>();
    s.root = j.at("root").get<int>();
    for (const auto& b : j.at("bones")) s.bones.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
    if (j.contains("symmetric_pairs"))
      for (const auto& p : j["symmetric_pairs"])
        s.symmetric_pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("skeleton: missing or malformed field: ") + e.what());
  }
  s.validate();
  return s;
}

SkeletonSpec SkeletonSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("skeleton: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

void SkeletonSpec::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("skeleton: cannot write " + path);
  out << to_json_string() << "\n";
}

std::string SkeletonSpec::canonical_hash() const { return hex_hash(to_json_string()); }

SkeletonSpec SkeletonSpec::default_13() {
  SkeletonSpec s;
  s.joint_names = {"pelvis",  "l_shoulder", "r_shoulder", "l_elbow", "r_elbow",
                   "l_wrist", "r_wrist",    "l_hip",      "r_hip",   "l_knee",
                   "r_knee",  "l_ankle",    "r_ankle"};
  s.root = 0;
  s.bones = {{0, 1}, {0, 2}, {1, 3}, {2, 4},  {3, 5},  {4, 6},
             {0, 7}, {0, 8}, {7, 9}, {8, 10}, {9, 11}, {10, 12}};
  s.symmetric_pairs = {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}};
  s.validate();
  return s;
}

}  // namespace orpose
