#include "upse/point_set.hpp"

#include <algorithm>

namespace upse {

ConvexPointSet::ConvexPointSet(std::vector<Side> tags) : tags_(std::move(tags)) {
  const int n = size();
  side_index_.resize(n);
  for (int p = 0; p < n; ++p) {
    auto& side = tags_[p] == Side::Left ? left_ : right_;
    side_index_[p] = static_cast<int>(side.size());
    side.push_back(p);
  }
  cyclic_pos_.resize(n);
  const auto order = hull_cyclic_order(*this);
  for (int i = 0; i < n; ++i) cyclic_pos_[order[i]] = i;
}

ConvexPointSet ConvexPointSet::from_string(std::string_view tags) {
  std::vector<Side> v;
  v.reserve(tags.size());
  for (char c : tags) {
    if (c == 'L') {
      v.push_back(Side::Left);
    } else if (c == 'R') {
      v.push_back(Side::Right);
    } else {
      throw InputError(std::string("invalid side tag '") + c + "', expected L or R");
    }
  }
  return ConvexPointSet(std::move(v));
}

std::string ConvexPointSet::to_string() const {
  std::string s;
  s.reserve(tags_.size());
  for (Side t : tags_) s.push_back(side_char(t));
  return s;
}

bool ConvexPointSet::one_sided() const {
  if (size() <= 2) return true;
  const Side first = tags_[1];
  for (int p = 2; p + 1 < size(); ++p)
    if (tags_[p] != first) return false;
  return true;
}

ConvexPointSet ConvexPointSet::mirrored() const {
  std::vector<Side> t(tags_.size());
  std::transform(tags_.begin(), tags_.end(), t.begin(), opposite);
  return ConvexPointSet(std::move(t));
}

std::vector<PointId> hull_cyclic_order(const ConvexPointSet& s) {
  std::vector<PointId> order;
  order.reserve(s.size());
  for (PointId p : s.points(Side::Left)) order.push_back(p);
  const auto right = s.points(Side::Right);
  for (auto it = right.rbegin(); it != right.rend(); ++it) order.push_back(*it);
  if (s.left_count() == 0 && !order.empty()) {
    // Start at p_1^R; clockwise continues along the closing edge to t(S).
    std::rotate(order.begin(), order.end() - 1, order.end());
  }
  return order;
}

PointSubset point_subrange(const ConvexPointSet& s, const PointRange& r) {
  if (r.left_begin < 0 || r.left_begin > r.left_end || r.left_end > s.left_count() ||
      r.right_begin < 0 || r.right_begin > r.right_end || r.right_end > s.right_count()) {
    throw InputError("point range out of bounds");
  }
  PointSubset out;
  out.parent_ids.reserve(r.size());
  auto left = s.points(Side::Left).subspan(r.left_begin, r.left_size());
  auto right = s.points(Side::Right).subspan(r.right_begin, r.right_size());
  std::merge(left.begin(), left.end(), right.begin(), right.end(),
             std::back_inserter(out.parent_ids));
  std::vector<Side> tags;
  tags.reserve(out.parent_ids.size());
  for (PointId p : out.parent_ids) tags.push_back(s.side(p));
  out.set = ConvexPointSet(std::move(tags));
  return out;
}

bool chords_cross(const ConvexPointSet& s, Chord a, Chord b) {
  for (PointId p : {a.first, a.second, b.first, b.second}) {
    if (p < 0 || p >= s.size()) {
      throw InputError("chord endpoint " + std::to_string(p) + " not in point set");
    }
  }
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second) {
    return false;
  }
  int a0 = s.cyclic_position(a.first);
  int a1 = s.cyclic_position(a.second);
  if (a0 > a1) std::swap(a0, a1);
  const int b0 = s.cyclic_position(b.first);
  const int b1 = s.cyclic_position(b.second);
  const bool in0 = a0 < b0 && b0 < a1;
  const bool in1 = a0 < b1 && b1 < a1;
  return in0 != in1;
}

ValidationReport validate_upse(const Digraph& g, const ConvexPointSet& s, const Embedding& emb) {
  ValidationReport rep;
  const int n = g.size();
  if (static_cast<int>(emb.map.size()) != n) {
    rep.bijection_errors.push_back("map has " + std::to_string(emb.map.size()) +
                                   " entries for " + std::to_string(n) + " vertices");
    return rep;
  }
  if (s.size() != n) {
    rep.bijection_errors.push_back("point set has " + std::to_string(s.size()) +
                                   " points for " + std::to_string(n) + " vertices");
    return rep;
  }
  std::vector<int> used(n, -1);
  for (int v = 0; v < n; ++v) {
    const PointId p = emb.map[v];
    if (p < 0 || p >= n) {
      rep.bijection_errors.push_back("vertex " + std::to_string(v) + " mapped to invalid point " +
                                     std::to_string(p));
    } else if (used[p] >= 0) {
      rep.bijection_errors.push_back("vertices " + std::to_string(used[p]) + " and " +
                                     std::to_string(v) + " share point " + std::to_string(p));
    } else {
      used[p] = v;
    }
  }
  if (!rep.bijection_errors.empty()) return rep;

  const auto& arcs = g.arcs();
  for (const Arc& a : arcs)
    if (emb.map[a.tail] > emb.map[a.head]) rep.upward_violations.push_back(a);
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Chord ci{emb.map[arcs[i].tail], emb.map[arcs[i].head]};
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const Chord cj{emb.map[arcs[j].tail], emb.map[arcs[j].head]};
      if (chords_cross(s, ci, cj)) rep.crossing_pairs.emplace_back(arcs[i], arcs[j]);
    }
  }
  return rep;
}

}  // namespace upse
