#include "granulex/classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

namespace granulex {

namespace {

struct MaskPair {
  std::uint64_t lower;
  std::uint64_t upper;
  bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
  std::size_t operator()(const MaskPair& p) const {
    std::uint64_t h = p.lower * 0x9e3779b97f4a7c15ull;
    h ^= p.upper + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

void sort_canonical(ClassProfile& profile) {
  std::sort(profile.classes.begin(), profile.classes.end(),
            [](const ApproximationClass& a, const ApproximationClass& b) {
              return a.pair < b.pair;
            });
}

}  // namespace

ClassProfile classify_bruteforce(const ApproximationSpace& space,
                                 const ClassifyOptions& options) {
  const std::size_t n = space.size();
  const std::size_t cutoff = std::min<std::size_t>(options.brute_cutoff, 62);
  if (n > cutoff) {
    throw capacity_error(
        "brute-force enumeration of 2^" + std::to_string(n) +
        " subsets exceeds the cutoff (" + std::to_string(cutoff) +
        "); use the closed form instead");
  }

  const auto& partition = space.partition;
  std::vector<std::uint64_t> block_masks;
  block_masks.reserve(partition.block_count());
  for (const ElementSet& b : partition.blocks()) block_masks.push_back(b.to_mask());

  const bool keep_members = options.materialize_members && n <= 16;
  std::unordered_map<MaskPair, std::uint64_t, MaskPairHash> counts;
  std::unordered_map<MaskPair, std::vector<std::uint64_t>, MaskPairHash> members;

  const std::uint64_t limit = n == 0 ? 1 : (1ull << n);
  for (std::uint64_t subset = 0; subset < limit; ++subset) {
    std::uint64_t lower = 0, upper = 0;
    for (std::uint64_t bm : block_masks) {
      const std::uint64_t common = subset & bm;
      if (common == bm) lower |= bm;
      if (common != 0) upper |= bm;
    }
    MaskPair key{lower, upper};
    ++counts[key];
    if (keep_members) members[key].push_back(subset);
  }

  ClassProfile profile;
  profile.n = n;
  profile.classes.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    ApproximationClass cls;
    cls.pair = RoughPair{ElementSet::from_mask(n, key.lower),
                         ElementSet::from_mask(n, key.upper)};
    cls.count = count;
    if (keep_members) {
      auto& subsets = members[key];
      std::sort(subsets.begin(), subsets.end());
      std::vector<ElementSet> sets;
      sets.reserve(subsets.size());
      for (std::uint64_t m : subsets) sets.push_back(ElementSet::from_mask(n, m));
      cls.members = std::move(sets);
    }
    profile.classes.push_back(std::move(cls));
  }
  sort_canonical(profile);
  return profile;
}

BigInt closed_form_class_count(const Partition& partition) {
  BigInt m = 1;
  for (std::size_t size : partition.block_sizes()) m *= (size >= 2 ? 3 : 2);
  return m;
}

ClassProfile classify_closed_form(const ApproximationSpace& space,
                                  const ClassifyOptions& options) {
  const auto& partition = space.partition;
  const std::size_t n = space.size();
  const std::size_t k = partition.block_count();

  BigInt m = closed_form_class_count(partition);
  if (m > options.max_classes) {
    throw capacity_error(
        "closed form would materialize " + m.str() +
        " classes (limit " + std::to_string(options.max_classes) +
        "); the entropy measures handle such spaces without a class list");
  }

  // Per-block count of proper nonempty subsets, 2^size - 2.
  std::vector<BigInt> partial_count(k);
  for (std::size_t b = 0; b < k; ++b) {
    partial_count[b] = (BigInt(1) << partition.block_size(b)) - 2;
  }

  ClassProfile profile;
  profile.n = n;
  profile.classes.reserve(static_cast<std::size_t>(m));

  // Odometer over per-block states: Empty -> Full -> Partial (if allowed).
  std::vector<BlockState> state(k, BlockState::Empty);
  while (true) {
    ElementSet lower(n), upper(n);
    BigInt count = 1;
    for (std::size_t b = 0; b < k; ++b) {
      switch (state[b]) {
        case BlockState::Empty:
          break;
        case BlockState::Full:
          lower = lower.union_with(partition.block(b));
          upper = upper.union_with(partition.block(b));
          break;
        case BlockState::Partial:
          upper = upper.union_with(partition.block(b));
          count *= partial_count[b];
          break;
      }
    }
    profile.classes.push_back(
        ApproximationClass{RoughPair{std::move(lower), std::move(upper)},
                           std::move(count), std::nullopt});

    std::size_t b = 0;
    for (; b < k; ++b) {
      if (state[b] == BlockState::Empty) {
        state[b] = BlockState::Full;
        break;
      }
      if (state[b] == BlockState::Full && partition.block_size(b) >= 2) {
        state[b] = BlockState::Partial;
        break;
      }
      state[b] = BlockState::Empty;
    }
    if (b == k) break;
  }

  sort_canonical(profile);
  return profile;
}

double log2_big(const BigInt& value) {
  if (value <= 0) throw domain_error("log2 of a non-positive count");
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 53) {
    return std::log2(value.convert_to<double>());
  }
  // Keep the top 53 bits and account for the shift.
  const std::size_t shift = bits - 53;
  BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double log2_pow2_minus_2(std::size_t size) {
  if (size < 2) return 0.0;
  if (size <= 53) {
    return std::log2(std::exp2(static_cast<double>(size)) - 2.0);
  }
  const double s = static_cast<double>(size);
  return s + std::log1p(-std::exp2(1.0 - s)) / std::numbers::ln2;
}

Distribution distribution(const ClassProfile& profile) {
  Distribution dist;
  dist.probabilities.reserve(profile.class_count());
  const double n = static_cast<double>(profile.n);
  for (const ApproximationClass& cls : profile.classes) {
    dist.probabilities.push_back(std::exp2(log2_big(cls.count) - n));
  }
  return dist;
}

}  // namespace granulex
