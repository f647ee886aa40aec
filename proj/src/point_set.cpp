#include "scatter/point_set.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace scatter {

PointSet PointSet::of(std::vector<Rat> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  PointSet s;
  s.points_ = std::move(points);
  return s;
}

bool PointSet::contains(const Rat& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

const Rat& PointSet::min() const {
  if (points_.empty()) throw std::domain_error("empty point set has no min");
  return points_.front();
}

const Rat& PointSet::max() const {
  if (points_.empty()) throw std::domain_error("empty point set has no max");
  return points_.back();
}

Rat PointSet::diameter() const {
  return points_.size() < 2 ? Rat(0) : Rat(points_.back() - points_.front());
}

PointSet PointSet::translated(const Rat& offset) const {
  PointSet s;
  s.points_.reserve(points_.size());
  for (const Rat& x : points_) s.points_.push_back(x + offset);
  return s;
}

PointSet unite(const PointSet& a, const PointSet& b) {
  std::vector<Rat> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return PointSet::of(std::move(merged));
}

Rat set_distance(const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) throw std::domain_error("set distance needs nonempty sets");
  auto ia = a.begin();
  auto ib = b.begin();
  Rat best = rat_abs(*ia - *ib);
  while (ia != a.end() && ib != b.end()) {
    Rat gap = rat_abs(*ia - *ib);
    if (gap < best) best = gap;
    if (*ia < *ib)
      ++ia;
    else
      ++ib;
  }
  return best;
}

void write_pointset(std::ostream& os, const PointSet& s) {
  os << "# scattered-pointset v1\n";
  for (const Rat& x : s) os << fraction_string(x) << "\n";
}

PointSet read_pointset(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "# scattered-pointset v1")
    throw std::invalid_argument("missing pointset header");
  std::vector<Rat> points;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    Rat x = parse_rational(line);
    if (!points.empty() && x <= points.back())
      throw std::invalid_argument("pointset file not strictly ascending");
    points.push_back(std::move(x));
  }
  return PointSet::of(std::move(points));
}

}  // namespace scatter
