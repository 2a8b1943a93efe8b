#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "granulex/errors.hpp"

namespace granulex {

/// Subset of a fixed finite universe, stored as a bit vector. Elements are
/// indices 0..n-1; a single 64-bit word covers the common case, larger
/// universes use additional words. All binary operations require both
/// operands to range over the same universe size.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size);

  static ElementSet from_mask(std::size_t universe_size, std::uint64_t mask);
  static ElementSet from_indices(std::size_t universe_size,
                                 std::span<const std::size_t> indices);
  static ElementSet full(std::size_t universe_size);

  std::size_t universe_size() const { return n_; }
  bool contains(std::size_t i) const;
  void set(std::size_t i);
  void reset(std::size_t i);

  std::size_t count() const;
  bool empty() const;
  bool is_full() const;

  bool subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet union_with(const ElementSet& other) const;
  ElementSet intersect_with(const ElementSet& other) const;
  ElementSet difference(const ElementSet& other) const;
  ElementSet complement() const;

  std::vector<std::size_t> indices() const;
  /// Low 64 bits as an integer mask; requires universe_size() <= 64.
  std::uint64_t to_mask() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Numeric order of the bitmask (element 0 is the least significant bit).
  static std::strong_ordering compare(const ElementSet& a, const ElementSet& b);
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    return compare(a, b) == std::strong_ordering::less;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;

  void check_same_universe(const ElementSet& other) const;
};

/// Ground set: ordered, pairwise distinct element labels. The declaration
/// order fixes the index of each element; all set and partition data is
/// index-based and labels reappear only at the I/O boundary.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);
  /// Universe with labels "1".."n".
  static Universe of_size(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Index of a label that must exist; domain_error otherwise.
  std::size_t require_index(const std::string& label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Partition of {0..n-1} into disjoint nonempty blocks covering the whole
/// range. Blocks are kept in canonical order (sorted by minimum element) and
/// an element->block map backs O(1) lookups.
class Partition {
 public:
  Partition(std::size_t universe_size,
            const std::vector<std::vector<std::size_t>>& blocks);
  /// Build from a per-element block id (e.g. a restricted growth string).
  /// Ids may be arbitrary values; blocks are renumbered canonically.
  static Partition from_assignment(std::span<const std::uint32_t> block_ids);
  static Partition trivial(std::size_t n);   // single block {U}
  static Partition discrete(std::size_t n);  // all singletons

  std::size_t universe_size() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const ElementSet& block(std::size_t b) const { return blocks_.at(b); }
  const std::vector<std::size_t>& block_sizes() const { return sizes_; }
  std::size_t block_size(std::size_t b) const { return sizes_.at(b); }
  std::uint32_t block_of(std::size_t element) const;
  std::span<const std::uint32_t> block_assignment() const { return block_of_; }
  /// Block sizes in descending order; two spaces are isomorphic exactly when
  /// these multisets coincide.
  std::vector<std::size_t> size_multiset() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.block_of_ == b.block_of_;
  }

 private:
  Partition() = default;
  std::size_t n_ = 0;
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint32_t> block_of_;
};

/// A universe together with a partition of it.
struct ApproximationSpace {
  Universe universe;
  Partition partition;

  ApproximationSpace(Universe u, Partition p);
  std::size_t size() const { return universe.size(); }

  friend bool operator==(const ApproximationSpace& a,
                         const ApproximationSpace& b) {
    return a.universe == b.universe && a.partition == b.partition;
  }
};

/// Lower/upper approximation pair of some subset.
struct RoughPair {
  ElementSet lower;
  ElementSet upper;

  friend bool operator==(const RoughPair&, const RoughPair&) = default;
  /// Lexicographic by (lower mask, upper mask); the canonical class order.
  static std::strong_ordering compare(const RoughPair& a, const RoughPair& b);
  friend bool operator<(const RoughPair& a, const RoughPair& b) {
    return compare(a, b) == std::strong_ordering::less;
  }
};

/// Union of all blocks contained in x (the greatest definable set inside x).
ElementSet lower_approx(const ApproximationSpace& space, const ElementSet& x);
/// Union of all blocks meeting x (the least definable set containing x).
ElementSet upper_approx(const ApproximationSpace& space, const ElementSet& x);
RoughPair rough_pair(const ApproximationSpace& space, const ElementSet& x);

/// Outcome of comparing two partitions in the refinement order.
enum class Refinement { StrictlyFiner, Equal, StrictlyCoarser, Incomparable };

/// True when every block of sigma lies inside some block of pi.
bool finer_or_equal(const Partition& sigma, const Partition& pi);
/// Four-way comparison of sigma against pi; StrictlyFiner means sigma < pi.
Refinement refines(const Partition& sigma, const Partition& pi);

/// The trivial partition {U} and the discrete partition of all singletons.
std::pair<Partition, Partition> canonical_partitions(const Universe& universe);

std::string to_string(Refinement r);
/// Render as "{{1,2},{3}}" using the universe labels.
std::string to_string(const Partition& p, const Universe& u);
/// Render with default labels "1".."n".
std::string to_string(const Partition& p);
std::string to_string(const ElementSet& s, const Universe& u);

}  // namespace granulex
