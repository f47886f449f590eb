#include "upse/restricted_dp.hpp"

#include <algorithm>
#include <tuple>

namespace upse {

void sort_proper(std::vector<SlotSpec>& slots) {
  std::sort(slots.begin(), slots.end(), [](const SlotSpec& a, const SlotSpec& b) {
    if (a.kind != b.kind) return a.kind == SubtreeKind::Lower;
    if (a.kind == SubtreeKind::Lower) return std::make_tuple(a.upper(), a.id) < std::make_tuple(b.upper(), b.id);
    return std::make_tuple(-a.lower(), a.id) < std::make_tuple(-b.lower(), b.id);
  });
}

bool RestrictedDp::run(std::span<const SlotSpec> slots, const Window& w, Side side, int index) {
  const int d = static_cast<int>(slots.size());
  const int nl = static_cast<int>(w.left.size());
  const int nr = static_cast<int>(w.right.size());
  int total = 1;
  for (const auto& s : slots) total += s.size;
  if (total != nl + nr) return false;
  if (index < 0 || index >= static_cast<int>(w.side(side).size())) return false;

  const PointId root_point = w.side(side)[index];
  const int on_left = side == Side::Left ? 1 : 0;
  const int on_right = 1 - on_left;
  sigma_.assign(d + 1, 0);
  for (int i = 0; i < d; ++i) sigma_[i + 1] = sigma_[i] + slots[i].size;
  cols_ = nl + 1;
  moves_.assign(static_cast<std::size_t>(d + 1) * cols_ * 2, None);
  moves_[cell(0, 0, 0)] = Base;

  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= std::min(nl, sigma_[i]); ++j) {
      for (int f = 0; f < 2; ++f) {
        if (moves_[cell(i, j, f)] == None) continue;
        const int lp = j + f * on_left;
        const int rp = sigma_[i] - j + f * on_right;
        if (rp > nr) continue;
        if (!f) {
          if ((on_left ? lp : rp) == index) moves_[cell(i, j, 1)] = SkipRoot;
        }
        if (i == d) continue;
        const SlotSpec& s = slots[i];
        auto upward = [&](PointId r) {
          return s.kind == SubtreeKind::Lower ? r < root_point : r > root_point;
        };
        if (lp + s.size <= nl && (f || !on_left || lp + s.size <= index) &&
            upward(w.left[lp + s.root_offset])) {
          auto& m = moves_[cell(i + 1, j + s.size, f)];
          if (m == None) m = PlaceLeft;
        }
        if (rp + s.size <= nr && (f || !on_right || rp + s.size <= index) &&
            upward(w.right[rp + s.root_offset])) {
          auto& m = moves_[cell(i + 1, j, f)];
          if (m == None) m = PlaceRight;
        }
      }
    }
  }
  return moves_[cell(d, nl - on_left, 1)] != None;
}

bool RestrictedDp::decide(std::span<const SlotSpec> slots, const Window& w, Side side, int index) {
  return run(slots, w, side, index);
}

std::optional<std::vector<SlotPlacement>> RestrictedDp::solve(std::span<const SlotSpec> slots,
                                                              const Window& w, Side side,
                                                              int index) {
  if (!run(slots, w, side, index)) return std::nullopt;
  const int on_left = side == Side::Left ? 1 : 0;
  const int on_right = 1 - on_left;
  std::vector<SlotPlacement> out;
  int i = static_cast<int>(slots.size());
  int j = static_cast<int>(w.left.size()) - on_left;
  int f = 1;
  while (true) {
    const auto m = moves_[cell(i, j, f)];
    if (m == Base) break;
    if (m == SkipRoot) {
      f = 0;
    } else if (m == PlaceLeft) {
      const auto& s = slots[i - 1];
      j -= s.size;
      --i;
      out.push_back({s.id, Side::Left, j + f * on_left});
    } else {
      const auto& s = slots[i - 1];
      --i;
      out.push_back({s.id, Side::Right, sigma_[i] - j + f * on_right});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<PointId> RestrictedDp::reachable(std::span<const SlotSpec> slots, const Window& w) {
  std::vector<PointId> out;
  int total = 1;
  for (const auto& s : slots) total += s.size;
  if (total != w.size()) return out;
  for (Side side : {Side::Left, Side::Right}) {
    const auto pts = w.side(side);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i)
      if (run(slots, w, side, i)) out.push_back(pts[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace upse
