#include "upse/exact_geometry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace upse {

Rational parse_decimal(std::string_view text) {
  size_t i = 0;
  auto fail = [&] { throw InputError("invalid decimal number '" + std::string(text) + "'"); };
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  BigInt digits = 0;
  int scale = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits = digits * 10 + (text[i++] - '0');
    any = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits = digits * 10 + (text[i++] - '0');
      --scale;
      any = true;
    }
  }
  if (!any) fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) eneg = text[i++] == '-';
    int e = 0;
    bool edig = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      edig = true;
      if (e > 10000) fail();
    }
    if (!edig) fail();
    scale += eneg ? -e : e;
  }
  if (i != text.size()) fail();
  Rational r(digits);
  const BigInt p = boost::multiprecision::pow(BigInt(10), std::abs(scale));
  r = scale >= 0 ? r * Rational(p) : r / Rational(p);
  return negative ? -r : r;
}

int orientation(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

namespace {

// p on the open segment ab, given that a, b, p are collinear.
bool strictly_between(const RationalPoint& a, const RationalPoint& b, const RationalPoint& p) {
  if (p == a || p == b) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_cross(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c,
                    const RationalPoint& d) {
  if (a == c || a == d || b == c || b == d) return false;
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && strictly_between(a, b, c)) return true;
  if (o2 == 0 && strictly_between(a, b, d)) return true;
  if (o3 == 0 && strictly_between(c, d, a)) return true;
  if (o4 == 0 && strictly_between(c, d, b)) return true;
  return false;
}

std::vector<RationalPoint> realize_coordinates(const ConvexPointSet& s) {
  const int n = s.size();
  std::vector<RationalPoint> pts;
  pts.reserve(n);
  const BigInt denom = n + 1;
  for (int i = 0; i < n; ++i) {
    const Rational u(BigInt(2 * (i + 1) - n - 1), denom);  // strictly inside (-1, 1)
    const Rational q = 1 + u * u;
    Rational x = (1 - u * u) / q;
    const Rational y = 2 * u / q;
    if (s.side(i) == Side::Left) x = -x;
    pts.push_back({x, y});
  }
  return pts;
}

std::vector<IntegerPoint> scale_to_integers(const std::vector<RationalPoint>& pts) {
  BigInt l = 1;
  for (const auto& p : pts) {
    for (const Rational* r : {&p.x, &p.y}) {
      const BigInt d = boost::multiprecision::denominator(*r);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
  }
  std::vector<IntegerPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const Rational x = p.x * Rational(l);
    const Rational y = p.y * Rational(l);
    out.push_back({boost::multiprecision::numerator(x), boost::multiprecision::numerator(y)});
  }
  return out;
}

std::vector<int> convex_hull_clockwise(const std::vector<RationalPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n <= 1) return n == 1 ? std::vector<int>{0} : std::vector<int>{};
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
  });
  // Andrew's monotone chain, counter-clockwise.
  std::vector<int> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  for (int i = n - 2, t = k + 1; i >= 0; --i) {
    while (k >= t && orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx[i]]) <= 0) --k;
    hull[k++] = idx[i];
  }
  hull.resize(k - 1);
  std::reverse(hull.begin(), hull.end());
  auto lowest = std::min_element(hull.begin(), hull.end(), [&](int a, int b) {
    return pts[a].y < pts[b].y || (pts[a].y == pts[b].y && pts[a].x < pts[b].x);
  });
  std::rotate(hull.begin(), lowest, hull.end());
  return hull;
}

ConcreteConversion from_coordinates(const std::vector<RationalPoint>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> by_y(n);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) { return pts[a].y < pts[b].y; });
  for (int i = 1; i < n; ++i) {
    if (pts[by_y[i - 1]].y == pts[by_y[i]].y) {
      throw InputError("points " + std::to_string(by_y[i - 1]) + " and " +
                       std::to_string(by_y[i]) + " share a y-coordinate");
    }
  }
  ConcreteConversion out;
  out.rank_of.resize(n);
  for (int r = 0; r < n; ++r) out.rank_of[by_y[r]] = r;
  std::vector<Side> tags(n, Side::Left);
  if (n >= 3) {
    const auto& b = pts[by_y.front()];
    const auto& t = pts[by_y.back()];
    std::vector<int> left{by_y.front()};
    std::vector<int> right{by_y.front()};
    for (int r = 1; r + 1 < n; ++r) {
      const int o = orientation(b, t, pts[by_y[r]]);
      if (o == 0) throw InputError("three collinear points (with b(S) and t(S))");
      tags[r] = o > 0 ? Side::Left : Side::Right;
      (o > 0 ? left : right).push_back(by_y[r]);
    }
    left.push_back(by_y.back());
    right.push_back(by_y.back());
    // Going up, the left chain turns clockwise and the right chain counter-clockwise.
    for (size_t i = 2; i < left.size(); ++i) {
      if (orientation(pts[left[i - 2]], pts[left[i - 1]], pts[left[i]]) >= 0) {
        throw InputError("points are not in convex position (left chain)");
      }
    }
    for (size_t i = 2; i < right.size(); ++i) {
      if (orientation(pts[right[i - 2]], pts[right[i - 1]], pts[right[i]]) <= 0) {
        throw InputError("points are not in convex position (right chain)");
      }
    }
  }
  out.set = ConvexPointSet(std::move(tags));
  return out;
}

}  // namespace upse
