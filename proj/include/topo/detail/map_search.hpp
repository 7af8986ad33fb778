#pragma once

#include <optional>
#include <vector>

namespace topo {

namespace detail {

// img[i] is compatible with the already assigned points 0..i-1 iff the
// assignment stays monotone for the specialization preorders.
inline bool compatible(const FinSpace& z, const FinSpace& x, const std::vector<Point>& img, Point i) {
  const PointSet zi = z.min_nbhd(i);
  const PointSet xi = x.min_nbhd(img[i]);
  for (Point j = 0; j < i; ++j) {
    if (zi.contains(j) && !xi.contains(img[j])) return false;
    if (z.min_nbhd(j).contains(i) && !x.min_nbhd(img[j]).contains(img[i])) return false;
  }
  return true;
}

template <typename Visitor>
bool search_maps(const FinSpace& z, const FinSpace& x, std::vector<Point>& img, Point i, Visitor& visit) {
  if (i == z.size()) return visit(static_cast<const std::vector<Point>&>(img));
  for (Point v = 0; v < x.size(); ++v) {
    img[i] = v;
    if (compatible(z, x, img, i) && !search_maps(z, x, img, i + 1, visit)) return false;
  }
  return true;
}

}  // namespace detail

template <typename Visitor>
bool for_each_continuous_map(const FinSpace& z, const FinSpace& x, Visitor&& visit,
                             std::optional<Point> first_point) {
  std::vector<Point> img(z.size(), 0);
  if (z.size() == 0) return visit(static_cast<const std::vector<Point>&>(img));
  if (!first_point) return detail::search_maps(z, x, img, 0, visit);
  if (*first_point >= x.size()) return true;
  img[0] = *first_point;
  return detail::search_maps(z, x, img, 1, visit);
}

}  // namespace topo
