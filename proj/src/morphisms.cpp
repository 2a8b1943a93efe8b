#include "granulex/morphisms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "granulex/measures.hpp"
#include "granulex/tolerances.hpp"

namespace granulex {

SpaceMap::SpaceMap(ApproximationSpace src, ApproximationSpace tgt,
                   std::vector<std::uint32_t> assign)
    : source(std::move(src)), target(std::move(tgt)), assignment(std::move(assign)) {
  if (assignment.size() != source.size()) {
    throw domain_error("assignment must be total on the source universe");
  }
  for (std::uint32_t t : assignment) {
    if (t >= target.size()) throw domain_error("assignment leaves the target universe");
  }
}

std::string to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::NotHomomorphism: return "NotHomomorphism";
    case MorphismKind::Homomorphism: return "Homomorphism";
    case MorphismKind::Monomorphism: return "Monomorphism";
    case MorphismKind::StrictMonomorphism: return "StrictMonomorphism";
    case MorphismKind::Isomorphism: return "Isomorphism";
  }
  return "?";
}

MorphismKind classify_assignment(const Partition& source, const Partition& target,
                                 std::span<const std::uint32_t> assignment) {
  const std::size_t nu = source.universe_size();
  const std::size_t nv = target.universe_size();
  if (assignment.size() != nu) {
    throw domain_error("assignment must be total on the source universe");
  }

  // Homomorphism: all elements of one source block land in one target block.
  std::vector<std::uint32_t> host(source.block_count(), UINT32_MAX);
  for (std::size_t e = 0; e < nu; ++e) {
    if (assignment[e] >= nv) throw domain_error("assignment leaves the target universe");
    const std::uint32_t sb = source.block_of(e);
    const std::uint32_t tb = target.block_of(assignment[e]);
    if (host[sb] == UINT32_MAX) {
      host[sb] = tb;
    } else if (host[sb] != tb) {
      return MorphismKind::NotHomomorphism;
    }
  }

  std::vector<bool> hit(nv, false);
  for (std::uint32_t t : assignment) {
    if (hit[t]) return MorphismKind::Homomorphism;  // not injective
    hit[t] = true;
  }

  if (nu == nv) {
    // Bijective; an isomorphism iff the inverse also maps blocks into blocks,
    // which for a bijection means every image is exactly its host block.
    bool proper = false;
    for (std::size_t b = 0; b < source.block_count(); ++b) {
      if (source.block_size(b) != target.block_size(host[b])) proper = true;
    }
    return proper ? MorphismKind::StrictMonomorphism : MorphismKind::Isomorphism;
  }
  // |V| > |U| already makes the monomorphism strict.
  return MorphismKind::StrictMonomorphism;
}

MorphismKind classify_map(const SpaceMap& map) {
  return classify_assignment(map.source.partition, map.target.partition,
                             map.assignment);
}

ApproximationSpace one_point_extension(const ApproximationSpace& space,
                                       const std::string& label) {
  if (space.universe.index_of(label)) {
    throw domain_error("extension label already in the universe: " + label);
  }
  std::vector<std::string> labels = space.universe.labels();
  labels.push_back(label);

  const std::size_t n = space.size();
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(space.partition.block_count() + 1);
  for (const ElementSet& b : space.partition.blocks()) blocks.push_back(b.indices());
  blocks.push_back({n});
  return ApproximationSpace(Universe(std::move(labels)), Partition(n + 1, blocks));
}

ApproximationSpace multi_one_point_extension(const ApproximationSpace& space,
                                             const std::vector<std::string>& labels) {
  ApproximationSpace result = space;
  for (const std::string& label : labels) {
    result = one_point_extension(result, label);
  }
  return result;
}

bool extension_equivalent(const Partition& source, const Partition& target,
                          std::span<const std::uint32_t> assignment) {
  // Target blocks fully covered by the image of one source block...
  std::vector<std::size_t> covered(target.block_count(), 0);
  std::vector<std::uint32_t> owner(target.block_count(), UINT32_MAX);
  for (std::size_t e = 0; e < source.universe_size(); ++e) {
    const std::uint32_t sb = source.block_of(e);
    const std::uint32_t tb = target.block_of(assignment[e]);
    ++covered[tb];
    if (owner[tb] == UINT32_MAX) {
      owner[tb] = sb;
    } else if (owner[tb] != sb) {
      return false;  // two source blocks share a target block
    }
  }
  for (std::size_t tb = 0; tb < target.block_count(); ++tb) {
    if (owner[tb] == UINT32_MAX) {
      // ...and singletons everywhere outside the image.
      if (target.block_size(tb) != 1) return false;
    } else {
      if (covered[tb] != target.block_size(tb)) return false;  // proper subset
      if (source.block_size(owner[tb]) != covered[tb]) return false;
    }
  }
  return true;
}

std::string to_string(CoentropyOrder order) {
  return order == CoentropyOrder::Equal ? "Equal" : "StrictlyLess";
}

ComparisonVerdict compare_coentropy(const SpaceMap& map, bool validate_numeric) {
  const MorphismKind kind = classify_map(map);
  if (!is_monomorphism(kind)) {
    throw precondition_error("compare_coentropy requires a monomorphism, got " +
                             to_string(kind));
  }

  ComparisonVerdict verdict;
  const bool equal = extension_equivalent(map.source.partition,
                                          map.target.partition, map.assignment);
  verdict.relation = equal ? CoentropyOrder::Equal : CoentropyOrder::StrictlyLess;
  verdict.witness =
      equal ? "target is the image partition plus fresh singletons (a "
              "one-point extension up to relabeling)"
            : "target partition is strictly coarser than the image partition "
              "plus fresh singletons";
  verdict.g_source = rough_coentropy(map.source);
  verdict.g_target = rough_coentropy(map.target);

  if (validate_numeric) {
    const double diff = verdict.g_target - verdict.g_source;
    const bool ok = equal ? std::abs(diff) <= tol::equality
                          : diff > tol::strict_margin;
    if (!ok) {
      std::ostringstream msg;
      msg << "structural verdict " << to_string(verdict.relation)
          << " contradicts measured co-entropies " << verdict.g_source << " vs "
          << verdict.g_target;
      throw precondition_error(msg.str());
    }
  }
  return verdict;
}

namespace {

// Backtracking placement of source blocks into target blocks with enough
// free capacity. Blocks are tried in canonical order, so the first witness
// is deterministic.
bool place_blocks(const Partition& source, const Partition& target,
                  std::size_t next_block, std::vector<std::size_t>& free_capacity,
                  std::vector<std::uint32_t>& placement) {
  if (next_block == source.block_count()) return true;
  const std::size_t need = source.block_size(next_block);
  for (std::uint32_t tb = 0; tb < target.block_count(); ++tb) {
    if (free_capacity[tb] < need) continue;
    free_capacity[tb] -= need;
    placement[next_block] = tb;
    if (place_blocks(source, target, next_block + 1, free_capacity, placement)) {
      return true;
    }
    free_capacity[tb] += need;
  }
  return false;
}

}  // namespace

std::optional<SpaceMap> embeddable(const ApproximationSpace& source,
                                   const ApproximationSpace& target) {
  const Partition& sp = source.partition;
  const Partition& tp = target.partition;
  if (source.size() > target.size()) return std::nullopt;

  std::vector<std::size_t> free_capacity(tp.block_sizes().begin(),
                                         tp.block_sizes().end());
  std::vector<std::uint32_t> placement(sp.block_count());
  if (!place_blocks(sp, tp, 0, free_capacity, placement)) return std::nullopt;

  // Fill elements of each source block into the lowest unused elements of its
  // placed target block.
  std::vector<std::uint32_t> assignment(source.size());
  std::vector<std::vector<std::size_t>> pool(tp.block_count());
  for (std::size_t tb = 0; tb < tp.block_count(); ++tb) {
    pool[tb] = tp.block(tb).indices();
  }
  std::vector<std::size_t> used(tp.block_count(), 0);
  for (std::size_t sb = 0; sb < sp.block_count(); ++sb) {
    const std::uint32_t tb = placement[sb];
    for (std::size_t e : sp.block(sb).indices()) {
      assignment[e] = static_cast<std::uint32_t>(pool[tb][used[tb]++]);
    }
  }
  return SpaceMap(source, target, std::move(assignment));
}

namespace {

void extend_monomorphism(const Partition& source, const Partition& target,
                         std::size_t element, std::vector<std::uint32_t>& assignment,
                         std::vector<bool>& used, std::vector<std::uint32_t>& host,
                         const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (element == source.universe_size()) {
    visit(assignment);
    return;
  }
  const std::uint32_t sb = source.block_of(element);
  for (std::uint32_t t = 0; t < target.universe_size(); ++t) {
    if (used[t]) continue;
    const std::uint32_t tb = target.block_of(t);
    const bool fresh_host = host[sb] == UINT32_MAX;
    if (!fresh_host && host[sb] != tb) continue;
    used[t] = true;
    if (fresh_host) host[sb] = tb;
    assignment[element] = t;
    extend_monomorphism(source, target, element + 1, assignment, used, host, visit);
    if (fresh_host) host[sb] = UINT32_MAX;
    used[t] = false;
  }
}

}  // namespace

void for_each_monomorphism(
    const Partition& source, const Partition& target,
    const std::function<void(std::span<const std::uint32_t>)>& visit) {
  if (source.universe_size() > target.universe_size()) return;
  std::vector<std::uint32_t> assignment(source.universe_size());
  std::vector<bool> used(target.universe_size(), false);
  std::vector<std::uint32_t> host(source.block_count(), UINT32_MAX);
  extend_monomorphism(source, target, 0, assignment, used, host, visit);
}

std::vector<SpaceMap> all_monomorphisms(const ApproximationSpace& source,
                                        const ApproximationSpace& target) {
  std::vector<SpaceMap> maps;
  for_each_monomorphism(source.partition, target.partition,
                        [&](std::span<const std::uint32_t> assignment) {
                          maps.emplace_back(source, target,
                                            std::vector<std::uint32_t>(
                                                assignment.begin(), assignment.end()));
                        });
  return maps;
}

}  // namespace granulex
