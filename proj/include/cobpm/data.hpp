#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobpm/partition.hpp"

namespace cobpm {

// Per-axis affine map applied at load time to put arbitrary data into the
// unit cube.  Reported in output so results remain interpretable.
struct RescaleInfo {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  double eps = 1e-9;
};

// Immutable point set in [0,1]^d, one row per point.
class Sample {
 public:
  Sample() = default;
  Sample(Eigen::MatrixXd points, std::string label);

  static Sample empty(int dim, std::string label);

  std::int64_t size() const { return points_.rows(); }
  int dim() const { return static_cast<int>(points_.cols()); }
  const Eigen::MatrixXd& points() const { return points_; }
  double coord(std::int64_t i, int axis) const { return points_(i, axis); }
  Eigen::RowVectorXd point(std::int64_t i) const { return points_.row(i); }
  const std::string& label() const { return label_; }

  const std::optional<RescaleInfo>& rescale_info() const { return rescale_; }
  void set_rescale_info(RescaleInfo info) { rescale_ = std::move(info); }

 private:
  Eigen::MatrixXd points_;  // n x d; column-major so axis scans are contiguous
  std::string label_;
  std::optional<RescaleInfo> rescale_;
};

// CSV loader: one point per row, d numeric columns, optional header
// (auto-detected when the first row does not parse as numbers).  With
// `rescale` each axis is affinely mapped from its observed [min,max] onto
// [eps, 1-eps]; otherwise values must already be in [0,1].
Sample load_sample(const std::string& path, bool rescale, std::string label = "X");
Sample sample_from_rows(const std::vector<std::vector<double>>& rows, bool rescale,
                        std::string label);

// Per-region point counts for both samples, aligned to a partition's region
// list, plus the point-index lists that make incremental recounts cheap.
struct CountPair {
  Eigen::VectorXi n1;
  Eigen::VectorXi n2;
  std::vector<std::vector<std::int32_t>> idx1;
  std::vector<std::vector<std::int32_t>> idx2;

  int depth() const { return static_cast<int>(n1.size()); }
  std::int64_t total1() const { return n1.cast<std::int64_t>().sum(); }
  std::int64_t total2() const { return n2.cast<std::int64_t>().sum(); }
};

CountPair count(const Sample& x, const Sample& y, const Partition& p);

// Counts for extend(p, a), touching only points of the split region.
CountPair recount_extend(const CountPair& c, const Sample& x, const Sample& y,
                         const Partition& p, Action a);

// Counts for shrink(p).first: merges the two halves created by the last cut.
CountPair recount_shrink(const CountPair& c, const Partition& p);

}  // namespace cobpm
