#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "upse/digraph.hpp"

namespace upse {

/// Point ids are 0-based y-ranks: point 0 is b(S), point n-1 is t(S).
using PointId = int;

enum class Side : std::uint8_t { Left, Right };

constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
constexpr char side_char(Side s) { return s == Side::Left ? 'L' : 'R'; }

/// A convex point set in the purely combinatorial model: one side tag per
/// y-rank. Upwardness only depends on y-ranks and chord crossings only on the
/// cyclic hull order, so no coordinates are needed for any decision.
class ConvexPointSet {
 public:
  ConvexPointSet() = default;
  explicit ConvexPointSet(std::vector<Side> tags);
  /// Parses a string over {L,R}; throws InputError on any other character.
  static ConvexPointSet from_string(std::string_view tags);

  std::string to_string() const;
  const std::vector<Side>& tags() const { return tags_; }

  int size() const { return static_cast<int>(tags_.size()); }
  bool empty() const { return tags_.empty(); }
  int left_count() const { return static_cast<int>(left_.size()); }
  int right_count() const { return static_cast<int>(right_.size()); }
  int count(Side s) const { return s == Side::Left ? left_count() : right_count(); }

  Side side(PointId p) const { return tags_[p]; }
  /// 0-based index of p among the points of its side (ascending y).
  int side_index(PointId p) const { return side_index_[p]; }

  /// i-th lowest point (0-based) of the given side: p_{i+1}^L / p_{i+1}^R.
  PointId point(Side s, int i) const { return s == Side::Left ? left_[i] : right_[i]; }
  std::span<const PointId> points(Side s) const {
    return s == Side::Left ? std::span<const PointId>(left_) : std::span<const PointId>(right_);
  }

  PointId bottom() const { return 0; }
  PointId top() const { return size() - 1; }

  /// All points other than b(S) and t(S) lie on one side (or n <= 2).
  bool one_sided() const;

  /// Position of p in hull_cyclic_order().
  int cyclic_position(PointId p) const { return cyclic_pos_[p]; }

  /// L <-> R flip of every tag.
  ConvexPointSet mirrored() const;

  friend bool operator==(const ConvexPointSet& a, const ConvexPointSet& b) {
    return a.tags_ == b.tags_;
  }

 private:
  std::vector<Side> tags_;
  std::vector<PointId> left_;
  std::vector<PointId> right_;
  std::vector<int> side_index_;
  std::vector<int> cyclic_pos_;
};

/// S_{a..b,c..d}: half-open 0-based index intervals on each side.
struct PointRange {
  int left_begin = 0;
  int left_end = 0;
  int right_begin = 0;
  int right_end = 0;

  int left_size() const { return left_end - left_begin; }
  int right_size() const { return right_end - right_begin; }
  int size() const { return left_size() + right_size(); }
  static PointRange whole(const ConvexPointSet& s) {
    return {0, s.left_count(), 0, s.right_count()};
  }
};

/// A sub point set together with the ids of its points in the parent set.
struct PointSubset {
  ConvexPointSet set;
  std::vector<PointId> parent_ids;
};

/// Clockwise hull order: left side by ascending y, then right side by
/// descending y. Starts at p_1^L (or p_1^R when L is empty).
std::vector<PointId> hull_cyclic_order(const ConvexPointSet& s);

/// Selected points keep their relative y-order and side tags.
PointSubset point_subrange(const ConvexPointSet& s, const PointRange& range);

using Chord = std::pair<PointId, PointId>;

/// True iff the open segments cross. Chords sharing an endpoint never cross.
bool chords_cross(const ConvexPointSet& s, Chord a, Chord b);

/// Vertex -> point map. Point ids are 0-based y-ranks.
struct Embedding {
  std::vector<PointId> map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct ValidationReport {
  std::vector<Arc> upward_violations;
  std::vector<std::pair<Arc, Arc>> crossing_pairs;
  std::vector<std::string> bijection_errors;

  bool ok() const {
    return upward_violations.empty() && crossing_pairs.empty() && bijection_errors.empty();
  }
};

ValidationReport validate_upse(const Digraph& g, const ConvexPointSet& s, const Embedding& emb);

}  // namespace upse
