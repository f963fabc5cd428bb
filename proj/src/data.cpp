#include "cobpm/data.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cobpm/errors.hpp"

namespace cobpm {

Sample::Sample(Eigen::MatrixXd points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  for (Eigen::Index i = 0; i < points_.rows(); ++i) {
    for (Eigen::Index j = 0; j < points_.cols(); ++j) {
      const double v = points_(i, j);
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError("sample " + label_ + " has coordinate " + std::to_string(v) +
                          " outside [0,1] at row " + std::to_string(i + 1));
      }
    }
  }
}

Sample Sample::empty(int dim, std::string label) {
  Sample s;
  s.points_ = Eigen::MatrixXd(0, dim);
  s.label_ = std::move(label);
  return s;
}

namespace {

bool parse_double(const std::string& tok, double& out) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (*(e - 1) == ' ' || *(e - 1) == '\t' || *(e - 1) == '\r')) --e;
  if (b == e) return false;
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && ptr == e;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream is(line);
  if (line.find(',') != std::string::npos) {
    while (std::getline(is, tok, ',')) out.push_back(tok);
  } else {
    while (is >> tok) out.push_back(tok);
  }
  return out;
}

}  // namespace

Sample sample_from_rows(const std::vector<std::vector<double>>& rows, bool rescale,
                        std::string label) {
  if (rows.empty()) return Sample::empty(0, std::move(label));
  const int d = static_cast<int>(rows.front().size());
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < d; ++j) pts(static_cast<Eigen::Index>(i), j) = rows[i][j];
  }
  if (!rescale) return Sample(std::move(pts), std::move(label));

  RescaleInfo info;
  info.lo = pts.colwise().minCoeff();
  info.hi = pts.colwise().maxCoeff();
  const double eps = info.eps;
  for (int j = 0; j < d; ++j) {
    const double span = info.hi[j] - info.lo[j];
    if (span > 0.0) {
      pts.col(j) = ((pts.col(j).array() - info.lo[j]) / span) * (1.0 - 2.0 * eps) + eps;
    } else {
      pts.col(j).setConstant(0.5);
    }
  }
  Sample s(std::move(pts), std::move(label));
  s.set_rescale_info(std::move(info));
  return s;
}

Sample load_sample(const std::string& path, bool rescale, std::string label) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sample file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  int d = -1;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split_fields(line);
    std::vector<double> row(fields.size());
    bool ok = true;
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (!parse_double(fields[j], row[j])) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      if (first_data_row) continue;  // header row
      throw ParseError(path + ":" + std::to_string(lineno) + ": non-numeric field");
    }
    if (d < 0) d = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != d) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " +
                       std::to_string(d) + " columns, got " + std::to_string(row.size()));
    }
    first_data_row = false;
    rows.push_back(std::move(row));
  }
  try {
    return sample_from_rows(rows, rescale, std::move(label));
  } catch (const DomainError& err) {
    throw DomainError(std::string(err.what()) + " (pass rescale to map data into [0,1])");
  }
}

CountPair count(const Sample& x, const Sample& y, const Partition& p) {
  if (x.dim() != p.dim() && x.size() > 0) throw DimensionError("sample X dimension mismatch");
  if (y.dim() != p.dim() && y.size() > 0) throw DimensionError("sample Y dimension mismatch");
  CountPair c;
  c.idx1.resize(1);
  c.idx2.resize(1);
  c.idx1[0].resize(x.size());
  c.idx2[0].resize(y.size());
  for (std::int32_t i = 0; i < x.size(); ++i) c.idx1[0][i] = i;
  for (std::int32_t i = 0; i < y.size(); ++i) c.idx2[0][i] = i;
  c.n1 = Eigen::VectorXi::Constant(1, static_cast<int>(x.size()));
  c.n2 = Eigen::VectorXi::Constant(1, static_cast<int>(y.size()));

  // Fold the decision sequence; each action touches only the split region.
  Partition cur = root(p.dim());
  for (const Action& a : p.actions()) {
    c = recount_extend(c, x, y, cur, a);
    cur = extend(cur, a);
  }
  return c;
}

namespace {

void split_indices(const std::vector<std::int32_t>& parent, const Sample& s,
                   const Region& parent_region, int axis,
                   std::vector<std::int32_t>& lower, std::vector<std::int32_t>& upper) {
  lower.clear();
  upper.clear();
  for (std::int32_t idx : parent) {
    if (parent_region.point_below_midpoint(s.coord(idx, axis), axis)) {
      lower.push_back(idx);
    } else {
      upper.push_back(idx);
    }
  }
}

}  // namespace

CountPair recount_extend(const CountPair& c, const Sample& x, const Sample& y,
                         const Partition& p, Action a) {
  if (c.depth() != p.depth()) {
    throw ConsistencyError("count cache depth " + std::to_string(c.depth()) +
                           " does not match partition depth " + std::to_string(p.depth()));
  }
  if (a.target < 0 || a.target >= p.depth() || a.axis < 0 || a.axis >= p.dim()) {
    throw ActionError("recount_extend: invalid action");
  }
  const Region& parent = p.region(a.target);
  CountPair out = c;
  out.idx1.emplace_back();
  out.idx2.emplace_back();
  std::vector<std::int32_t> lower;
  split_indices(c.idx1[a.target], x, parent, a.axis, lower, out.idx1.back());
  out.idx1[a.target] = std::move(lower);
  split_indices(c.idx2[a.target], y, parent, a.axis, lower, out.idx2.back());
  out.idx2[a.target] = std::move(lower);

  out.n1.conservativeResize(c.depth() + 1);
  out.n2.conservativeResize(c.depth() + 1);
  out.n1[a.target] = static_cast<int>(out.idx1[a.target].size());
  out.n1[c.depth()] = static_cast<int>(out.idx1.back().size());
  out.n2[a.target] = static_cast<int>(out.idx2[a.target].size());
  out.n2[c.depth()] = static_cast<int>(out.idx2.back().size());
  return out;
}

CountPair recount_shrink(const CountPair& c, const Partition& p) {
  if (c.depth() != p.depth()) {
    throw ConsistencyError("count cache depth does not match partition depth");
  }
  if (p.depth() < 2) throw ShrinkError("cannot recount a shrink of the root");
  const Action a = p.actions().back();
  const int last = p.depth() - 1;
  CountPair out = c;
  out.idx1[a.target].insert(out.idx1[a.target].end(), c.idx1[last].begin(), c.idx1[last].end());
  out.idx2[a.target].insert(out.idx2[a.target].end(), c.idx2[last].begin(), c.idx2[last].end());
  out.idx1.pop_back();
  out.idx2.pop_back();
  out.n1[a.target] += out.n1[last];
  out.n2[a.target] += out.n2[last];
  out.n1.conservativeResize(last);
  out.n2.conservativeResize(last);
  return out;
}

}  // namespace cobpm
