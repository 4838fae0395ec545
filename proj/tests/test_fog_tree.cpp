// Balanced tree construction, root paths, and upward aggregation.
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "hriot/fog_tree.hpp"

using namespace hriot;

namespace {

NodeState fog_at(NodeId id, double x, double y) {
  NodeState n;
  n.id = id;
  n.role = Role::Fog;
  n.position = {x, y};
  return n;
}

NodeState cloud_at(double x, double y) {
  NodeState n;
  n.id = 1000;
  n.role = Role::Cloud;
  n.position = {x, y};
  return n;
}

// Fog i placed at distance i+1 from the cloud, so sorted order == id order.
std::vector<NodeState> line_fogs(int count) {
  std::vector<NodeState> fogs;
  for (int i = 0; i < count; ++i) fogs.push_back(fog_at(NodeId(i), i + 1.0, 0.0));
  return fogs;
}

int expected_depth(int fog_count, int b) {
  if (fog_count == 0) return 0;
  if (b == 1) return fog_count;
  return int(std::ceil(std::log(double(fog_count) * (b - 1) + 1) / std::log(double(b)) -
                       1e-9));
}

}  // namespace

TEST_CASE("tree shapes") {
  const NodeState cloud = cloud_at(0, 0);

  SUBCASE("single fog hangs off the cloud") {
    const FogTree tree = build_balanced_tree(line_fogs(1), cloud, 2);
    CHECK(tree.parent.at(0) == cloud.id);
    CHECK(tree.depth.at(0) == 1);
    CHECK(tree.max_depth() == 1);
  }
  SUBCASE("seven fogs, b=2: complete binary levels 1/2/4") {
    const FogTree tree = build_balanced_tree(line_fogs(7), cloud, 2);
    std::map<int, int> per_level;
    for (const auto& [fog, d] : tree.depth) per_level[d]++;
    CHECK(per_level[1] == 1);
    CHECK(per_level[2] == 2);
    CHECK(per_level[3] == 4);
    CHECK(tree.max_depth() == 3);
  }
  SUBCASE("b=1 degenerates to a chain") {
    const FogTree tree = build_balanced_tree(line_fogs(5), cloud, 1);
    CHECK(tree.max_depth() == 5);
    CHECK(tree.parent.at(0) == cloud.id);
    CHECK(tree.parent.at(4) == 3);
  }
  SUBCASE("empty fog list gives an empty tree") {
    const FogTree tree = build_balanced_tree({}, cloud, 2);
    CHECK(tree.parent.empty());
    CHECK(tree.max_depth() == 0);
  }
  SUBCASE("closer fogs sit higher") {
    std::vector<NodeState> fogs = {fog_at(0, 50, 0), fog_at(1, 5, 0), fog_at(2, 20, 0)};
    const FogTree tree = build_balanced_tree(fogs, cloud, 2);
    CHECK(tree.depth.at(1) == 1);  // nearest fog is the root fog
    CHECK(tree.parent.at(2) == 1);
    CHECK(tree.parent.at(0) == 1);
  }
}

TEST_CASE("balance closed form over F in 1..64, b in 2..4") {
  const NodeState cloud = cloud_at(0, 0);
  for (int b = 2; b <= 4; ++b) {
    for (int f = 1; f <= 64; ++f) {
      const FogTree tree = build_balanced_tree(line_fogs(f), cloud, b);
      CHECK(tree.max_depth() == expected_depth(f, b));
      // every node keeps at most b fog children
      std::map<NodeId, int> children;
      for (const auto& [fog, parent] : tree.parent) children[parent]++;
      for (const auto& [node, n] : children) CHECK(n <= b);
    }
  }
}

TEST_CASE("path_to_root") {
  const NodeState cloud = cloud_at(0, 0);
  const FogTree tree = build_balanced_tree(line_fogs(7), cloud, 2);

  CHECK(path_to_root(tree, 0) == std::vector<NodeId>{0, cloud.id});
  // deepest fog in the 7-fog complete binary tree: 3 fog-level hops then cloud
  CHECK(path_to_root(tree, 6).size() == 4);
  for (NodeId f = 0; f < 7; ++f) {
    CHECK(int(path_to_root(tree, f).size()) - 1 == tree.depth.at(f));
  }
  CHECK_THROWS_AS(path_to_root(tree, 99), std::out_of_range);
}

TEST_CASE("aggregate_upward") {
  const NodeState cloud = cloud_at(0, 0);
  const FogTree tree = build_balanced_tree(line_fogs(7), cloud, 2);

  SUBCASE("count conservation at ratio 1") {
    std::map<NodeId, std::vector<FogPayload>> inbox;
    inbox[0] = {{1, 2000}, {2, 2000}, {3, 2000}};
    const auto schedule = aggregate_upward(tree, inbox, 1.0, 200.0);
    REQUIRE(schedule.size() == 1);
    CHECK(schedule[0].dst == cloud.id);
    CHECK(schedule[0].packet_ids.size() == 3);
    CHECK(schedule[0].bits == doctest::Approx(200.0 + 3 * 2000.0));
  }
  SUBCASE("compression ratio scales the payload term") {
    std::map<NodeId, std::vector<FogPayload>> inbox;
    inbox[0] = {{1, 1000}, {2, 3000}};
    const auto schedule = aggregate_upward(tree, inbox, 0.1, 200.0);
    CHECK(schedule[0].bits == doctest::Approx(200.0 + 0.1 * 4000.0));
  }
  SUBCASE("empty round sends nothing") {
    CHECK(aggregate_upward(tree, {}, 1.0, 200.0).empty());
  }
  SUBCASE("every payload reaches the cloud exactly once") {
    std::map<NodeId, std::vector<FogPayload>> inbox;
    std::uint64_t pid = 0;
    for (NodeId f = 0; f < 7; ++f) {
      for (int k = 0; k < 3; ++k) inbox[f].push_back({pid++, 500.0});
    }
    const auto schedule = aggregate_upward(tree, inbox, 1.0, 200.0);
    std::multiset<std::uint64_t> at_cloud;
    for (const auto& send : schedule) {
      if (send.dst == cloud.id) {
        at_cloud.insert(send.packet_ids.begin(), send.packet_ids.end());
      }
    }
    CHECK(at_cloud.size() == pid);
    for (std::uint64_t p = 0; p < pid; ++p) CHECK(at_cloud.count(p) == 1);
  }
  SUBCASE("deterministic schedule") {
    std::map<NodeId, std::vector<FogPayload>> inbox;
    for (NodeId f = 0; f < 7; ++f) inbox[f] = {{f, 100.0}};
    const auto a = aggregate_upward(tree, inbox, 1.0, 200.0);
    const auto b = aggregate_upward(tree, inbox, 1.0, 200.0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].src == b[i].src);
      CHECK(a[i].bits == b[i].bits);
      CHECK(a[i].packet_ids == b[i].packet_ids);
    }
  }
}
