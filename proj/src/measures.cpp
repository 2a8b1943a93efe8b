#include "granulex/measures.hpp"

#include <cmath>
#include <numbers>

namespace granulex {

namespace {

// Profiles beyond this many classes are not worth materializing just to sum
// their terms; the per-block decomposition gives the same values directly.
constexpr std::size_t kProfileRouteLimit = std::size_t{1} << 16;

bool profile_route_feasible(const Partition& partition) {
  return closed_form_class_count(partition) <= kProfileRouteLimit;
}

ClassProfile measure_profile(const ApproximationSpace& space) {
  ClassifyOptions options;
  options.max_classes = kProfileRouteLimit;
  return classify_closed_form(space, options);
}

// Entropy of one block's state distribution: states (empty, full, partial)
// with probabilities (1/2^s, 1/2^s, (2^s-2)/2^s). Equals s - G_b.
double block_entropy(std::size_t size) {
  const double s = static_cast<double>(size);
  const double p_edge = std::exp2(-s);
  double h = 2.0 * s * p_edge;
  if (size >= 2) {
    const double q = -std::expm1(std::numbers::ln2 * (1.0 - s));  // 1 - 2^(1-s)
    h -= q * (std::log1p(-std::exp2(1.0 - s)) / std::numbers::ln2);
  }
  return h;
}

// Co-entropy contribution of one block: ((2^s-2)/2^s) log2(2^s-2).
double block_coentropy(std::size_t size) {
  if (size < 2) return 0.0;
  const double s = static_cast<double>(size);
  const double q = -std::expm1(std::numbers::ln2 * (1.0 - s));
  return q * log2_pow2_minus_2(size);
}

}  // namespace

double classical_entropy(const Partition& partition) {
  const double n = static_cast<double>(partition.universe_size());
  double h = 0;
  for (std::size_t size : partition.block_sizes()) {
    const double p = static_cast<double>(size) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double classical_coentropy(const Partition& partition) {
  const double n = static_cast<double>(partition.universe_size());
  double g = 0;
  for (std::size_t size : partition.block_sizes()) {
    g += (static_cast<double>(size) / n) * std::log2(static_cast<double>(size));
  }
  return g;
}

double rough_entropy(const ClassProfile& profile) {
  const double n = static_cast<double>(profile.n);
  double h = 0;
  for (const ApproximationClass& cls : profile.classes) {
    const double log2_r = log2_big(cls.count);
    const double p = std::exp2(log2_r - n);
    h -= p * (log2_r - n);
  }
  return h;
}

double rough_coentropy(const ClassProfile& profile) {
  const double n = static_cast<double>(profile.n);
  double g = 0;
  for (const ApproximationClass& cls : profile.classes) {
    const double log2_r = log2_big(cls.count);
    g += std::exp2(log2_r - n) * log2_r;
  }
  return g;
}

double rough_entropy_per_block(const Partition& partition) {
  double h = 0;
  for (std::size_t size : partition.block_sizes()) h += block_entropy(size);
  return h;
}

double rough_coentropy_per_block(const Partition& partition) {
  double g = 0;
  for (std::size_t size : partition.block_sizes()) g += block_coentropy(size);
  return g;
}

double rough_entropy(const ApproximationSpace& space) {
  if (profile_route_feasible(space.partition)) {
    return rough_entropy(measure_profile(space));
  }
  return rough_entropy_per_block(space.partition);
}

double rough_coentropy(const ApproximationSpace& space) {
  if (profile_route_feasible(space.partition)) {
    return rough_coentropy(measure_profile(space));
  }
  return rough_coentropy_per_block(space.partition);
}

ExtremeValues extreme_values(std::size_t n) {
  if (n == 0) throw domain_error("universe must be nonempty");
  const double nd = static_cast<double>(n);
  const double g_max = block_coentropy(n);  // trivial partition = one block
  return ExtremeValues{nd - g_max, nd, 0.0, g_max};
}

MeasureReport measure_report(const ApproximationSpace& space) {
  MeasureReport report;
  report.n = space.size();
  report.m = closed_form_class_count(space.partition);
  report.h_classical = classical_entropy(space.partition);
  report.g_classical = classical_coentropy(space.partition);
  report.h_new = rough_entropy(space);
  report.g_new = rough_coentropy(space);
  return report;
}

}  // namespace granulex
