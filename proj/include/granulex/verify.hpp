#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "granulex/measures.hpp"
#include "granulex/space.hpp"
#include "granulex/tolerances.hpp"

namespace granulex {

/// Streams every set partition of {0..n-1} exactly once, in restricted
/// growth string order. The total number yielded is the Bell number B(n).
class PartitionEnumerator {
 public:
  /// Valid for 1 <= n <= 12 (B(12) is ~4.2M); domain_error otherwise.
  explicit PartitionEnumerator(std::size_t n);

  std::size_t universe_size() const { return n_; }
  /// Next partition, or nullopt once the stream is exhausted.
  std::optional<Partition> next();

 private:
  std::size_t n_;
  std::vector<std::uint32_t> rgs_;
  std::vector<std::uint32_t> prefix_max_;
  bool first_ = true;
  bool exhausted_ = false;
};

/// All partitions of {0..n-1}, materialized in enumeration order.
std::vector<Partition> all_partitions(std::size_t n);

/// Bell number B(n) via the Bell triangle; exact for n <= 25.
std::uint64_t bell_number(std::size_t n);

/// Random partition drawn by growing a restricted growth string one digit at
/// a time (each digit uniform over its admissible range). Deterministic for a
/// given generator state, independent of the standard library's distribution
/// implementations.
Partition random_partition(std::mt19937_64& rng, std::size_t n);

/// Deliberate-fault modes for sensitivity checks: NaturalLog rescales every
/// measure from base-2 to natural logarithms, which breaks the additive
/// identities while preserving all order relations.
enum class FaultMode { None, NaturalLog };

/// The measure implementations the harness quantifies over. Swappable so a
/// deliberately broken variant can demonstrate that the checks can fail.
struct MeasureFns {
  std::function<double(const ApproximationSpace&)> rough_h;
  std::function<double(const ApproximationSpace&)> rough_g;
  std::function<double(const Partition&)> classical_h;
  std::function<double(const Partition&)> classical_g;

  static MeasureFns standard();
  static MeasureFns with_fault(FaultMode mode);
};

struct VerifyConfig {
  /// Largest universe size for the exhaustive sweeps (1..12). Pair sweeps are
  /// internally capped at n <= 8, injection sweeps at |U| <= 5, |V| <= 6.
  std::size_t n_max = 7;
  /// Margin demanded of strict inequalities and allowed for equalities.
  double margin = tol::strict_margin;
  FaultMode fault = FaultMode::None;
  /// Randomized identity checks: how many partitions, up to what size.
  std::size_t random_checks = 1000;
  std::size_t random_n_max = 64;
  std::uint64_t random_seed = 0x6772616e756c6578ULL;
};

/// Outcome of checking one quantified claim over its whole domain.
struct TheoremReport {
  std::string id;     // stable slug naming the claim
  std::string claim;  // human-readable statement that was checked
  std::uint64_t instances = 0;
  std::vector<std::string> violations;
  /// Smallest gap observed across strict-inequality instances (infinity when
  /// the report has none); gauges how much headroom the margin has.
  double min_gap = std::numeric_limits<double>::infinity();
  /// Largest |deviation| observed across equality instances.
  double max_equal_deviation = 0.0;
  /// False when an internal resource cap truncated the requested domain.
  bool complete = true;
  double elapsed_seconds = 0.0;

  bool passed() const { return violations.empty(); }
};

/// Check every quantified claim: the four refinement monotonicities, the
/// extreme-value characterizations, the two additive identities (exhaustive
/// plus randomized), the same-size morphism comparisons, extension
/// invariance, and the cross-universe embedding comparison. One report per
/// claim, in a fixed order; deterministic output for a fixed config.
std::vector<TheoremReport> verify_all(const VerifyConfig& config);
std::vector<TheoremReport> verify_all(std::size_t n_max,
                                      double margin = tol::strict_margin);

/// True when every report passed.
bool all_passed(const std::vector<TheoremReport>& reports);

}  // namespace granulex
