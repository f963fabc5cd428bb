#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace cobpm {

using Rng = std::mt19937_64;

// splitmix64 step; used to derive well-separated stream seeds from a master
// seed.  Chain i of a replicated run uses derive_seed(master, i).
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

double uniform01(Rng& rng);
double gamma_draw(Rng& rng, double shape);
double beta_draw(Rng& rng, double a, double b);

// Dirichlet(alpha) via normalized gamma variates.
Eigen::VectorXd dirichlet_draw(Rng& rng, const Eigen::VectorXd& alpha);

// Standard normal CDF and its inverse (inverse accurate to ~1e-15 after a
// Halley refinement of the rational approximation).
double normal_cdf(double z);
double normal_quantile(double p);

// Index draw from unnormalized non-negative weights by inverse CDF.
int categorical_draw(Rng& rng, const Eigen::VectorXd& weights);

}  // namespace cobpm
