#include "granulex/space.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace granulex {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }
}  // namespace

ElementSet::ElementSet(std::size_t universe_size)
    : n_(universe_size), words_(word_count(universe_size), 0) {}

ElementSet ElementSet::from_mask(std::size_t universe_size, std::uint64_t mask) {
  if (universe_size > kWordBits) {
    throw domain_error("from_mask supports universes of at most 64 elements");
  }
  if (universe_size < kWordBits && (mask >> universe_size) != 0) {
    throw domain_error("mask has bits outside the universe");
  }
  ElementSet s(universe_size);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

ElementSet ElementSet::from_indices(std::size_t universe_size,
                                    std::span<const std::size_t> indices) {
  ElementSet s(universe_size);
  for (std::size_t i : indices) s.set(i);
  return s;
}

ElementSet ElementSet::full(std::size_t universe_size) {
  ElementSet s(universe_size);
  for (std::size_t i = 0; i + 1 < s.words_.size(); ++i) s.words_[i] = ~0ull;
  if (!s.words_.empty()) {
    std::size_t rem = universe_size % kWordBits;
    s.words_.back() = rem == 0 ? ~0ull : (~0ull >> (kWordBits - rem));
  }
  return s;
}

bool ElementSet::contains(std::size_t i) const {
  if (i >= n_) throw domain_error("element index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void ElementSet::set(std::size_t i) {
  if (i >= n_) throw domain_error("element index out of range");
  words_[i / kWordBits] |= 1ull << (i % kWordBits);
}

void ElementSet::reset(std::size_t i) {
  if (i >= n_) throw domain_error("element index out of range");
  words_[i / kWordBits] &= ~(1ull << (i % kWordBits));
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_full() const { return count() == n_; }

void ElementSet::check_same_universe(const ElementSet& other) const {
  if (n_ != other.n_) throw domain_error("element sets range over different universes");
}

bool ElementSet::subset_of(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

ElementSet ElementSet::union_with(const ElementSet& other) const {
  check_same_universe(other);
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

ElementSet ElementSet::intersect_with(const ElementSet& other) const {
  check_same_universe(other);
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

ElementSet ElementSet::difference(const ElementSet& other) const {
  check_same_universe(other);
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~other.words_[i];
  return r;
}

ElementSet ElementSet::complement() const {
  return full(n_).difference(*this);
}

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::uint64_t ElementSet::to_mask() const {
  if (n_ > kWordBits) throw domain_error("universe too large for a 64-bit mask");
  return words_.empty() ? 0 : words_[0];
}

std::strong_ordering ElementSet::compare(const ElementSet& a, const ElementSet& b) {
  a.check_same_universe(b);
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) {
      return a.words_[i] < b.words_[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw domain_error("universe must be nonempty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted) throw domain_error("duplicate universe label: " + labels_[i]);
  }
}

Universe Universe::of_size(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Universe(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::require_index(const std::string& label) const {
  auto idx = index_of(label);
  if (!idx) throw domain_error("element not in universe: " + label);
  return *idx;
}

Partition::Partition(std::size_t universe_size,
                     const std::vector<std::vector<std::size_t>>& blocks)
    : n_(universe_size) {
  if (n_ == 0) throw domain_error("partition requires a nonempty universe");
  block_of_.assign(n_, UINT32_MAX);
  std::vector<std::size_t> order(blocks.size());
  std::vector<std::size_t> mins(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw domain_error("partition block must be nonempty");
    mins[b] = *std::min_element(blocks[b].begin(), blocks[b].end());
    order[b] = b;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mins[a] < mins[b]; });
  blocks_.reserve(blocks.size());
  sizes_.reserve(blocks.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& raw = blocks[order[rank]];
    ElementSet block(n_);
    for (std::size_t e : raw) {
      if (e >= n_) throw domain_error("block element outside the universe");
      if (block_of_[e] != UINT32_MAX) {
        throw domain_error("partition blocks overlap");
      }
      block_of_[e] = static_cast<std::uint32_t>(rank);
      block.set(e);
    }
    sizes_.push_back(block.count());
    blocks_.push_back(std::move(block));
  }
  for (std::size_t e = 0; e < n_; ++e) {
    if (block_of_[e] == UINT32_MAX) {
      throw domain_error("partition does not cover the universe");
    }
  }
}

Partition Partition::from_assignment(std::span<const std::uint32_t> block_ids) {
  std::unordered_map<std::uint32_t, std::size_t> renumber;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t e = 0; e < block_ids.size(); ++e) {
    auto [it, inserted] = renumber.emplace(block_ids[e], blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(e);
  }
  return Partition(block_ids.size(), blocks);
}

Partition Partition::trivial(std::size_t n) {
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return Partition(n, {all});
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) blocks.push_back({i});
  return Partition(n, blocks);
}

std::uint32_t Partition::block_of(std::size_t element) const {
  if (element >= n_) throw domain_error("element index out of range");
  return block_of_[element];
}

std::vector<std::size_t> Partition::size_multiset() const {
  std::vector<std::size_t> sizes = sizes_;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

ApproximationSpace::ApproximationSpace(Universe u, Partition p)
    : universe(std::move(u)), partition(std::move(p)) {
  if (universe.size() != partition.universe_size()) {
    throw domain_error("partition does not match the universe size");
  }
}

std::strong_ordering RoughPair::compare(const RoughPair& a, const RoughPair& b) {
  auto c = ElementSet::compare(a.lower, b.lower);
  if (c != std::strong_ordering::equal) return c;
  return ElementSet::compare(a.upper, b.upper);
}

namespace {
void check_subset_arg(const ApproximationSpace& space, const ElementSet& x) {
  if (x.universe_size() != space.size()) {
    throw domain_error("subset ranges over a different universe");
  }
}
}  // namespace

ElementSet lower_approx(const ApproximationSpace& space, const ElementSet& x) {
  check_subset_arg(space, x);
  ElementSet result(space.size());
  for (const ElementSet& block : space.partition.blocks()) {
    if (block.subset_of(x)) result = result.union_with(block);
  }
  return result;
}

ElementSet upper_approx(const ApproximationSpace& space, const ElementSet& x) {
  check_subset_arg(space, x);
  ElementSet result(space.size());
  for (const ElementSet& block : space.partition.blocks()) {
    if (block.intersects(x)) result = result.union_with(block);
  }
  return result;
}

RoughPair rough_pair(const ApproximationSpace& space, const ElementSet& x) {
  return RoughPair{lower_approx(space, x), upper_approx(space, x)};
}

bool finer_or_equal(const Partition& sigma, const Partition& pi) {
  if (sigma.universe_size() != pi.universe_size()) {
    throw domain_error("partitions range over different universes");
  }
  // sigma <= pi iff elements sharing a sigma block share a pi block.
  for (const ElementSet& block : sigma.blocks()) {
    auto elems = block.indices();
    std::uint32_t host = pi.block_of(elems.front());
    for (std::size_t e : elems) {
      if (pi.block_of(e) != host) return false;
    }
  }
  return true;
}

Refinement refines(const Partition& sigma, const Partition& pi) {
  bool fine = finer_or_equal(sigma, pi);
  bool coarse = finer_or_equal(pi, sigma);
  if (fine && coarse) return Refinement::Equal;
  if (fine) return Refinement::StrictlyFiner;
  if (coarse) return Refinement::StrictlyCoarser;
  return Refinement::Incomparable;
}

std::pair<Partition, Partition> canonical_partitions(const Universe& universe) {
  return {Partition::trivial(universe.size()), Partition::discrete(universe.size())};
}

std::string to_string(Refinement r) {
  switch (r) {
    case Refinement::StrictlyFiner: return "strictly-finer";
    case Refinement::Equal: return "equal";
    case Refinement::StrictlyCoarser: return "strictly-coarser";
    case Refinement::Incomparable: return "incomparable";
  }
  return "?";
}

std::string to_string(const ElementSet& s, const Universe& u) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (std::size_t i : s.indices()) {
    if (!first) out << ',';
    out << u.label(i);
    first = false;
  }
  out << '}';
  return out.str();
}

std::string to_string(const Partition& p, const Universe& u) {
  std::ostringstream out;
  out << '{';
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    if (b > 0) out << ',';
    out << to_string(p.block(b), u);
  }
  out << '}';
  return out.str();
}

std::string to_string(const Partition& p) {
  return to_string(p, Universe::of_size(p.universe_size()));
}

}  // namespace granulex
