#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cobpm {

// One (region, axis) midpoint cut.  Indices are 0-based in code; the text
// serialization uses 1-based indices.
struct Action {
  int target = 0;
  int axis = 0;
  friend bool operator==(const Action&, const Action&) = default;
};

// Axis-aligned dyadic hyperrectangle of [0,1]^d.  Along axis j the interval
// is [num_j / 2^{e_j}, (num_j + 1) / 2^{e_j}); cells touching the top face of
// the cube include it.  Stored as integers so midpoint splits and volumes are
// exact at any depth up to the exponent cap.
class Region {
 public:
  static constexpr int kMaxExponent = 63;

  explicit Region(int dim);

  int dim() const { return static_cast<int>(exp_.size()); }
  std::uint64_t numerator(int axis) const { return num_[axis]; }
  int exponent(int axis) const { return exp_[axis]; }

  double lower(int axis) const;
  double upper(int axis) const;
  double side(int axis) const { return std::exp2(-double(exp_[axis])); }
  double midpoint(int axis) const;

  // Sum of per-axis exponents; volume is exactly 2^{-total_exponent()}.
  int total_exponent() const { return sum_exp_; }
  double volume() const { return std::exp2(-double(sum_exp_)); }
  double log_volume() const;

  Region lower_half(int axis) const;  // throws DepthLimitError past the cap
  Region upper_half(int axis) const;
  Region merged_parent(int axis) const;
  bool is_upper_half(int axis) const { return (num_[axis] & 1u) != 0; }

  // True iff the point falls in this cell under the half-open convention
  // (top faces of the unit cube inclusive).  Coordinates must be in [0,1].
  bool contains(const Eigen::RowVectorXd& x) const;

  // True iff x_axis falls in the lower half of this cell along `axis`.
  bool point_below_midpoint(double coord, int axis) const;

  // Exact dyadic test: every point of `other` lies in `*this`.
  bool contains_region(const Region& other) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  Eigen::Array<std::uint64_t, Eigen::Dynamic, 1> num_;
  Eigen::Array<std::int32_t, Eigen::Dynamic, 1> exp_;
  int sum_exp_ = 0;
};

// A binary partition of [0,1]^d: the decision sequence and the region list it
// determines.  After a split the lower half keeps the parent's slot and the
// upper half is appended, so indices recorded in earlier actions stay valid.
class Partition {
 public:
  explicit Partition(int dim);

  int dim() const { return dim_; }
  int depth() const { return static_cast<int>(regions_.size()); }
  const std::vector<Region>& regions() const { return regions_; }
  const Region& region(int i) const { return regions_[i]; }
  const std::vector<Action>& actions() const { return actions_; }

 private:
  int dim_;
  std::vector<Region> regions_;
  std::vector<Action> actions_;

  friend Partition extend(const Partition&, Action);
  friend std::pair<Partition, Action> shrink(const Partition&);
};

Partition root(int dim);
Partition extend(const Partition& p, Action a);
std::pair<Partition, Action> shrink(const Partition& p);
Partition replay(int dim, const std::vector<Action>& actions);

// Index of the unique region containing x.  O(depth) per point: replays the
// decision sequence tracking only the cell that holds x.
int locate(const Partition& p, const Eigen::RowVectorXd& x);

// A partition refining both p and q (Property-1 witness; not minimal).
Partition common_refinement(const Partition& p, const Partition& q);

// True iff every region of `coarse` is a union of regions of `fine`.
bool refines(const Partition& fine, const Partition& coarse);

// Text form "d;(target,axis);..." with 1-based indices; round-trippable.
std::string to_string(const Partition& p);
Partition partition_from_string(const std::string& text);

}  // namespace cobpm
