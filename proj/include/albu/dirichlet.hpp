#pragma once

#include <span>
#include <vector>

namespace albu {

// Parameter vectors are kept strictly positive. Message cancelling can land
// exactly on the prior; the floor absorbs float drift below it.
inline constexpr double kPositivityFloor = 1e-10;

// Divisor floor for KL divergence: q entries are clamped to this before the
// log ratio is taken.
inline constexpr double kKldFloor = 1e-12;

// Normalizes a Dirichlet parameter vector to its mean categorical
// distribution.
std::vector<double> mean(std::span<const double> params);

// Forward KL divergence sum(p_i * ln(p_i / q_i)) with 0 * ln(0/q) = 0 and q
// floored at kKldFloor. Throws std::invalid_argument on dimension mismatch.
double kld(std::span<const double> p, std::span<const double> q);

// Elementwise sum of a parameter vector and a fractional-count increment.
std::vector<double> add_counts(std::span<const double> params,
                               std::span<const double> increment);

// In-place variants used by the inference loops.
void normalize_in_place(std::span<double> v);

}  // namespace albu
