#include "cobpm/partition.hpp"

#include <cmath>
#include <sstream>

#include "cobpm/errors.hpp"

namespace cobpm {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

// Compare a/2^ea against b/2^eb exactly.  Shifted values stay below 2^63
// because a <= 2^ea and b <= 2^eb.
int dyadic_cmp(std::uint64_t a, int ea, std::uint64_t b, int eb) {
  const int m = ea > eb ? ea : eb;
  const std::uint64_t la = a << (m - ea);
  const std::uint64_t lb = b << (m - eb);
  return la < lb ? -1 : (la > lb ? 1 : 0);
}

}  // namespace

Region::Region(int dim) {
  if (dim < 1) throw DimensionError("region dimension must be >= 1");
  num_ = Eigen::Array<std::uint64_t, Eigen::Dynamic, 1>::Zero(dim);
  exp_ = Eigen::Array<std::int32_t, Eigen::Dynamic, 1>::Zero(dim);
}

double Region::lower(int axis) const {
  return std::ldexp(static_cast<double>(num_[axis]), -exp_[axis]);
}

double Region::upper(int axis) const {
  return std::ldexp(static_cast<double>(num_[axis] + 1), -exp_[axis]);
}

double Region::midpoint(int axis) const {
  return std::ldexp(static_cast<double>(2 * num_[axis] + 1), -(exp_[axis] + 1));
}

double Region::log_volume() const { return -double(sum_exp_) * kLn2; }

Region Region::lower_half(int axis) const {
  if (exp_[axis] >= kMaxExponent) {
    throw DepthLimitError("split would exceed the dyadic exponent cap");
  }
  Region r = *this;
  r.num_[axis] *= 2;
  r.exp_[axis] += 1;
  r.sum_exp_ += 1;
  return r;
}

Region Region::upper_half(int axis) const {
  if (exp_[axis] >= kMaxExponent) {
    throw DepthLimitError("split would exceed the dyadic exponent cap");
  }
  Region r = *this;
  r.num_[axis] = 2 * r.num_[axis] + 1;
  r.exp_[axis] += 1;
  r.sum_exp_ += 1;
  return r;
}

Region Region::merged_parent(int axis) const {
  if (exp_[axis] == 0) throw ActionError("region has no parent along this axis");
  Region r = *this;
  r.num_[axis] /= 2;
  r.exp_[axis] -= 1;
  r.sum_exp_ -= 1;
  return r;
}

bool Region::point_below_midpoint(double coord, int axis) const {
  // Exact: scaling a double by a power of two is lossless, and the scaled
  // midpoint 2*num+1 is an exact integer below 2^64.
  const long double scaled = std::ldexp(static_cast<long double>(coord), exp_[axis] + 1);
  return scaled < static_cast<long double>(2 * num_[axis] + 1);
}

bool Region::contains(const Eigen::RowVectorXd& x) const {
  for (int j = 0; j < dim(); ++j) {
    const long double scaled = std::ldexp(static_cast<long double>(x[j]), exp_[j]);
    const long double lo = static_cast<long double>(num_[j]);
    const long double hi = static_cast<long double>(num_[j] + 1);
    if (scaled < lo) return false;
    if (scaled >= hi) {
      // Top face of the unit cube is inclusive.
      if (!(x[j] == 1.0 && num_[j] + 1 == (std::uint64_t{1} << exp_[j]))) return false;
    }
  }
  return true;
}

bool Region::contains_region(const Region& other) const {
  if (other.dim() != dim()) throw DimensionError("region dimension mismatch");
  for (int j = 0; j < dim(); ++j) {
    if (other.exp_[j] < exp_[j]) return false;
    if (dyadic_cmp(other.num_[j], other.exp_[j], num_[j], exp_[j]) < 0) return false;
    if (dyadic_cmp(other.num_[j] + 1, other.exp_[j], num_[j] + 1, exp_[j]) > 0) return false;
  }
  return true;
}

Partition::Partition(int dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("partition dimension must be >= 1");
  regions_.emplace_back(dim);
}

Partition root(int dim) { return Partition(dim); }

Partition extend(const Partition& p, Action a) {
  if (a.target < 0 || a.target >= p.depth()) {
    throw ActionError("action targets region " + std::to_string(a.target + 1) +
                      " of a depth-" + std::to_string(p.depth()) + " partition");
  }
  if (a.axis < 0 || a.axis >= p.dim()) {
    throw ActionError("action axis " + std::to_string(a.axis + 1) +
                      " out of range for dimension " + std::to_string(p.dim()));
  }
  Partition out = p;
  const Region& parent = out.regions_[a.target];
  Region up = parent.upper_half(a.axis);
  out.regions_[a.target] = parent.lower_half(a.axis);
  out.regions_.push_back(std::move(up));
  out.actions_.push_back(a);
  return out;
}

std::pair<Partition, Action> shrink(const Partition& p) {
  if (p.depth() < 2) throw ShrinkError("cannot shrink the root partition");
  Partition out = p;
  const Action a = out.actions_.back();
  out.actions_.pop_back();
  out.regions_[a.target] = out.regions_[a.target].merged_parent(a.axis);
  out.regions_.pop_back();
  return {std::move(out), a};
}

Partition replay(int dim, const std::vector<Action>& actions) {
  Partition p = root(dim);
  for (const Action& a : actions) p = extend(p, a);
  return p;
}

int locate(const Partition& p, const Eigen::RowVectorXd& x) {
  if (x.size() != p.dim()) throw DimensionError("point dimension mismatch");
  for (int j = 0; j < p.dim(); ++j) {
    if (!(x[j] >= 0.0 && x[j] <= 1.0)) {
      throw DomainError("coordinate " + std::to_string(x[j]) + " outside [0,1]");
    }
  }
  Region cell(p.dim());
  int index = 0;
  int count = 1;
  for (const Action& a : p.actions()) {
    if (a.target == index) {
      if (cell.point_below_midpoint(x[a.axis], a.axis)) {
        cell = cell.lower_half(a.axis);
      } else {
        cell = cell.upper_half(a.axis);
        index = count;
      }
    }
    ++count;
  }
  return index;
}

Partition common_refinement(const Partition& p, const Partition& q) {
  if (p.dim() != q.dim()) throw DimensionError("partition dimension mismatch");
  Partition out = p;
  // Split any cell straddling a q-boundary until each cell sits inside a
  // single q-region.  Midpoint splits eventually realize every dyadic plane.
  int i = 0;
  while (i < out.depth()) {
    const Region& cell = out.region(i);
    int straddle_axis = -1;
    for (const Region& qr : q.regions()) {
      bool corner_inside = true;
      for (int j = 0; j < p.dim(); ++j) {
        // q-region containing cell's lower corner: lo_q <= lo_cell < hi_q.
        if (dyadic_cmp(cell.numerator(j), cell.exponent(j), qr.numerator(j),
                       qr.exponent(j)) < 0 ||
            dyadic_cmp(cell.numerator(j), cell.exponent(j), qr.numerator(j) + 1,
                       qr.exponent(j)) >= 0) {
          corner_inside = false;
          break;
        }
      }
      if (!corner_inside) continue;
      for (int j = 0; j < p.dim(); ++j) {
        if (dyadic_cmp(cell.numerator(j) + 1, cell.exponent(j), qr.numerator(j) + 1,
                       qr.exponent(j)) > 0) {
          straddle_axis = j;
          break;
        }
      }
      break;
    }
    if (straddle_axis < 0) {
      ++i;
    } else {
      out = extend(out, Action{i, straddle_axis});
    }
  }
  return out;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.dim() != coarse.dim()) throw DimensionError("partition dimension mismatch");
  for (const Region& cell : fine.regions()) {
    bool inside = false;
    for (const Region& cr : coarse.regions()) {
      if (cr.contains_region(cell)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << p.dim();
  for (const Action& a : p.actions()) {
    os << ";(" << (a.target + 1) << ',' << (a.axis + 1) << ')';
  }
  return os.str();
}

Partition partition_from_string(const std::string& text) {
  std::istringstream is(text);
  std::string token;
  if (!std::getline(is, token, ';')) throw ParseError("empty partition string");
  int dim = 0;
  try {
    dim = std::stoi(token);
  } catch (const std::exception&) {
    throw ParseError("bad dimension in partition string: '" + token + "'");
  }
  std::vector<Action> actions;
  while (std::getline(is, token, ';')) {
    if (token.empty()) continue;
    int t = 0, ax = 0;
    if (std::sscanf(token.c_str(), "(%d,%d)", &t, &ax) != 2) {
      throw ParseError("bad action token in partition string: '" + token + "'");
    }
    actions.push_back(Action{t - 1, ax - 1});
  }
  return replay(dim, actions);
}

}  // namespace cobpm
