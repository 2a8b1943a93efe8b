#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "granulex/space.hpp"

namespace granulex {

/// Total map between two approximation spaces, stored as a source-index to
/// target-index assignment.
struct SpaceMap {
  ApproximationSpace source;
  ApproximationSpace target;
  std::vector<std::uint32_t> assignment;

  SpaceMap(ApproximationSpace src, ApproximationSpace tgt,
           std::vector<std::uint32_t> assign);

  std::size_t image_of(std::size_t source_element) const {
    return assignment.at(source_element);
  }
};

/// Most specific kind a map attains. Every kind from Monomorphism up implies
/// the ones below it; Isomorphism additionally requires the inverse to be a
/// homomorphism.
enum class MorphismKind : int {
  NotHomomorphism = 0,
  Homomorphism = 1,
  Monomorphism = 2,
  StrictMonomorphism = 3,
  Isomorphism = 4,
};

inline bool is_monomorphism(MorphismKind kind) {
  return static_cast<int>(kind) >= static_cast<int>(MorphismKind::Monomorphism);
}

std::string to_string(MorphismKind kind);

/// Classify an assignment without constructing a SpaceMap.
MorphismKind classify_assignment(const Partition& source, const Partition& target,
                                 std::span<const std::uint32_t> assignment);
MorphismKind classify_map(const SpaceMap& map);

/// Adjoin a fresh element as its own singleton block.
ApproximationSpace one_point_extension(const ApproximationSpace& space,
                                       const std::string& label);
/// Iterated one-point extension over a list of fresh, distinct labels.
ApproximationSpace multi_one_point_extension(const ApproximationSpace& space,
                                             const std::vector<std::string>& labels);

/// True when the target partition is exactly the image of the source blocks
/// plus singleton blocks on the uncovered target elements. This is the
/// structural condition under which both spaces share one rough co-entropy.
bool extension_equivalent(const Partition& source, const Partition& target,
                          std::span<const std::uint32_t> assignment);

enum class CoentropyOrder { Equal, StrictlyLess };

struct ComparisonVerdict {
  CoentropyOrder relation;
  std::string witness;   // the deciding structural condition
  double g_source = 0;
  double g_target = 0;
};

std::string to_string(CoentropyOrder order);

/// Decide whether the source and target co-entropies coincide or the source
/// is strictly smaller. The verdict is structural; with validate_numeric the
/// measured values are required to confirm it (precondition_error otherwise).
/// The map must be at least a monomorphism.
ComparisonVerdict compare_coentropy(const SpaceMap& map,
                                    bool validate_numeric = true);

/// Search for a monomorphism from source into target by backtracking over
/// block-to-block placements in canonical order. Returns the first witness
/// found, or nullopt when no monomorphism exists.
std::optional<SpaceMap> embeddable(const ApproximationSpace& source,
                                   const ApproximationSpace& target);

/// Visit every monomorphism assignment in lexicographic order.
void for_each_monomorphism(
    const Partition& source, const Partition& target,
    const std::function<void(std::span<const std::uint32_t>)>& visit);

std::vector<SpaceMap> all_monomorphisms(const ApproximationSpace& source,
                                        const ApproximationSpace& target);

}  // namespace granulex
