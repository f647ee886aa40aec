#pragma once

#include <iosfwd>
#include <vector>

#include "scatter/rational.hpp"

namespace scatter {

// A finite set of exact rationals, kept sorted ascending without duplicates.
class PointSet {
 public:
  PointSet() = default;
  static PointSet of(std::vector<Rat> points);  // sorts and dedups

  const std::vector<Rat>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  bool contains(const Rat& x) const;
  const Rat& min() const;
  const Rat& max() const;
  Rat diameter() const;  // 0 for empty/singleton

  PointSet translated(const Rat& offset) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Rat> points_;
};

PointSet unite(const PointSet& a, const PointSet& b);

// min |a_i - b_j| over all pairs; throws std::domain_error when either set is
// empty.  Zero when the sets intersect.
Rat set_distance(const PointSet& a, const PointSet& b);

// Interchange format:
//   # scattered-pointset v1
//   0/1
//   1/64
//   ...
// one rational per line in lowest terms, ascending.
void write_pointset(std::ostream& os, const PointSet& s);
PointSet read_pointset(std::istream& is);  // validates header and order

}  // namespace scatter
