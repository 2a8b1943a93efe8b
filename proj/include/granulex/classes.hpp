#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "granulex/space.hpp"

namespace granulex {

using BigInt = boost::multiprecision::cpp_int;

/// How a subset relates to one block: disjoint from it, containing it, or
/// properly intersecting it. Partial is only possible for blocks of size >= 2.
enum class BlockState : std::uint8_t { Empty, Full, Partial };

/// One distinct rough approximation together with the number of subsets that
/// produce it. Member lists are only materialized for small universes on
/// request.
struct ApproximationClass {
  RoughPair pair;
  BigInt count;
  std::optional<std::vector<ElementSet>> members;
};

/// All distinct rough approximations of a space, in canonical order
/// (lexicographic by lower mask, then upper mask). The counts always sum to
/// 2^n.
struct ClassProfile {
  std::size_t n = 0;
  std::vector<ApproximationClass> classes;

  std::size_t class_count() const { return classes.size(); }
  BigInt total_subsets() const { return BigInt(1) << n; }
};

/// The induced probabilities count/2^n, aligned with ClassProfile::classes.
struct Distribution {
  std::vector<double> probabilities;
};

struct ClassifyOptions {
  /// Largest universe the brute-force enumeration will accept.
  std::size_t brute_cutoff = 24;
  /// Attach explicit member lists (honored only for n <= 16).
  bool materialize_members = false;
  /// Largest class list the closed form will materialize.
  std::size_t max_classes = std::size_t{1} << 22;
};

/// Enumerate all 2^n subsets and group them by rough approximation. This is
/// the defining computation and serves as the oracle for the closed form.
ClassProfile classify_bruteforce(const ApproximationSpace& space,
                                 const ClassifyOptions& options = {});

/// Closed-form profile: each class corresponds to one assignment of a
/// BlockState per block; its pair is (union of Full blocks, union of
/// Full+Partial blocks) and its count is the product of 2^size - 2 over the
/// Partial blocks. Exact big-integer counts; no subset enumeration.
ClassProfile classify_closed_form(const ApproximationSpace& space,
                                  const ClassifyOptions& options = {});

/// Number of closed-form classes: product over blocks of 3 (size >= 2) or 2
/// (singletons). Cheap for any universe size.
BigInt closed_form_class_count(const Partition& partition);

Distribution distribution(const ClassProfile& profile);

/// log2 of a positive big integer, accurate to ~1 ulp regardless of size.
double log2_big(const BigInt& value);
/// log2(2^size - 2) for size >= 2, computed as size + log2(1 - 2^(1-size))
/// so it never overflows; returns 0 contribution semantics for size < 2.
double log2_pow2_minus_2(std::size_t size);

}  // namespace granulex
