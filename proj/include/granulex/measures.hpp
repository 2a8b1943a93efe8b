#pragma once

#include "granulex/classes.hpp"
#include "granulex/space.hpp"

namespace granulex {

// All measures are in bits (base-2 logarithms) and 0*log(0) is exactly 0.

/// Block-size entropy of a partition: -sum (n_i/n) log2(n_i/n).
double classical_entropy(const Partition& partition);
/// Block-size co-entropy: sum (n_i/n) log2(n_i). Complements classical_entropy
/// to log2(n).
double classical_coentropy(const Partition& partition);

/// Entropy of the distribution of rough approximations: -sum (r_i/2^n)
/// log2(r_i/2^n). Uses the closed-form class profile when it is small enough
/// to materialize, the per-block decomposition otherwise.
double rough_entropy(const ApproximationSpace& space);
/// Co-entropy of the same distribution: sum (r_i/2^n) log2(r_i). Complements
/// rough_entropy to n.
double rough_coentropy(const ApproximationSpace& space);

/// Same measures evaluated on an explicit class profile.
double rough_entropy(const ClassProfile& profile);
double rough_coentropy(const ClassProfile& profile);

/// Per-block routes: each block contributes independently, so the measures
/// split into sums over block sizes. These never materialize classes and are
/// validated against the profile routes by the verification harness.
double rough_entropy_per_block(const Partition& partition);
double rough_coentropy_per_block(const Partition& partition);

struct ExtremeValues {
  double h_min;  // rough entropy of the trivial partition
  double h_max;  // rough entropy of the discrete partition (= n)
  double g_min;  // rough co-entropy of the discrete partition (= 0)
  double g_max;  // rough co-entropy of the trivial partition
};

/// Attainable range of the rough measures on an n-element universe:
/// h_max = n, h_min = n - ((2^n-2)/2^n) log2(2^n-2), g complementary.
ExtremeValues extreme_values(std::size_t n);

struct MeasureReport {
  std::size_t n = 0;
  BigInt m;  // number of distinct rough approximations
  double h_classical = 0;
  double g_classical = 0;
  double h_new = 0;
  double g_new = 0;
};

/// All four measures of one space, plus n and the class count.
MeasureReport measure_report(const ApproximationSpace& space);

}  // namespace granulex
