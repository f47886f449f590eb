#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "upse/point_set.hpp"
#include "upse/rooted_tree.hpp"

namespace upse {

/// What the restricted DP needs to know about one subtree T_i of the root.
struct SlotSpec {
  int size = 0;
  int root_offset = 0;  ///< |lower(T_i)| - 1: offset of r(T_i) inside its run
  SubtreeKind kind = SubtreeKind::Lower;
  int id = 0;  ///< caller's handle, ties in the ordering are broken by it

  int lower() const { return root_offset + 1; }
  int upper() const { return size - root_offset; }
};

/// Sorts into the proper ordering: l-subtrees by |upper| ascending, then
/// h-subtrees by |lower| descending, ties by id.
void sort_proper(std::vector<SlotSpec>& slots);

/// Two ascending runs of global point ids, one per side.
struct Window {
  std::span<const PointId> left;
  std::span<const PointId> right;

  int size() const { return static_cast<int>(left.size() + right.size()); }
  std::span<const PointId> side(Side s) const { return s == Side::Left ? left : right; }
};

struct SlotPlacement {
  int id = 0;
  Side side = Side::Left;
  int begin = 0;  ///< index of the run's lowest point within window.side(side)
};

/// Restricted UPSE table over (i, j, f): i subtrees placed in order, j of their
/// points on the left, f = whether the root's point has been passed. The
/// occupied points are always the lowest ones of each side of the window.
class RestrictedDp {
 public:
  /// slots must already be in proper order. Root on window.side(side)[index].
  bool decide(std::span<const SlotSpec> slots, const Window& w, Side side, int index);

  /// Like decide(), but returns where each subtree's run starts.
  std::optional<std::vector<SlotPlacement>> solve(std::span<const SlotSpec> slots, const Window& w,
                                                  Side side, int index);

  /// All window points that can host the root, ascending.
  std::vector<PointId> reachable(std::span<const SlotSpec> slots, const Window& w);

 private:
  enum Move : std::uint8_t { None, Base, PlaceLeft, PlaceRight, SkipRoot };

  bool run(std::span<const SlotSpec> slots, const Window& w, Side side, int index);
  std::size_t cell(int i, int j, int f) const {
    return (static_cast<std::size_t>(i) * (cols_) + j) * 2 + f;
  }

  std::vector<std::uint8_t> moves_;
  std::vector<int> sigma_;
  int cols_ = 0;
};

}  // namespace upse
