#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "granulex/space.hpp"
#include "granulex/verify.hpp"

using namespace granulex;

namespace {

// Oracle implementations on std::set, written directly from the definitions
// and sharing no code with the bit-vector implementation.
std::set<std::size_t> to_set(const ElementSet& s) {
  const auto idx = s.indices();
  return {idx.begin(), idx.end()};
}

std::set<std::size_t> oracle_lower(const Partition& p,
                                   const std::set<std::size_t>& x) {
  std::set<std::size_t> result;
  for (const ElementSet& block : p.blocks()) {
    const auto members = block.indices();
    const bool inside = std::all_of(members.begin(), members.end(),
                                    [&](std::size_t e) { return x.count(e); });
    if (inside) result.insert(members.begin(), members.end());
  }
  return result;
}

std::set<std::size_t> oracle_upper(const Partition& p,
                                   const std::set<std::size_t>& x) {
  std::set<std::size_t> result;
  for (const ElementSet& block : p.blocks()) {
    const auto members = block.indices();
    const bool meets = std::any_of(members.begin(), members.end(),
                                   [&](std::size_t e) { return x.count(e); });
    if (meets) result.insert(members.begin(), members.end());
  }
  return result;
}

std::set<std::size_t> mask_to_set(std::uint64_t mask) {
  std::set<std::size_t> result;
  for (std::size_t i = 0; i < 64; ++i) {
    if (mask >> i & 1) result.insert(i);
  }
  return result;
}

ApproximationSpace make_space(std::size_t n,
                              std::vector<std::vector<std::size_t>> blocks) {
  return ApproximationSpace(Universe::of_size(n), Partition(n, blocks));
}

}  // namespace

TEST_CASE("element sets over one and several words") {
  ElementSet s(130);
  CHECK(s.universe_size() == 130);
  CHECK(s.empty());
  s.set(0);
  s.set(64);
  s.set(129);
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.indices() == std::vector<std::size_t>{0, 64, 129});
  s.reset(64);
  CHECK(s.count() == 2);

  const ElementSet full = ElementSet::full(130);
  CHECK(full.count() == 130);
  CHECK(full.is_full());
  CHECK(s.subset_of(full));
  CHECK(full.complement().empty());
  CHECK(s.complement().count() == 128);
  CHECK(s.union_with(s.complement()).is_full());
  CHECK(s.intersect_with(s.complement()).empty());

  const ElementSet a = ElementSet::from_mask(6, 0b001011);
  const ElementSet b = ElementSet::from_mask(6, 0b001110);
  CHECK(a.union_with(b) == ElementSet::from_mask(6, 0b001111));
  CHECK(a.intersect_with(b) == ElementSet::from_mask(6, 0b001010));
  CHECK(a.difference(b) == ElementSet::from_mask(6, 0b000001));
  CHECK(a.intersects(b));
  CHECK_FALSE(a.subset_of(b));
  CHECK(ElementSet::from_mask(6, 0b001010).subset_of(b));
  CHECK(a.to_mask() == 0b001011);

  const std::vector<std::size_t> picks{5, 1};
  CHECK(ElementSet::from_indices(6, picks) == ElementSet::from_mask(6, 0b100010));
}

TEST_CASE("element set order is the numeric order of masks") {
  // Element 0 is the least significant bit, so {2} > {1} > {0} numerically.
  const auto of = [](std::uint64_t mask) {
    ElementSet s(70);
    for (std::size_t i = 0; i < 64; ++i) {
      if (mask >> i & 1) s.set(i);
    }
    return s;
  };
  CHECK(of(0) < of(1));
  CHECK(of(1) < of(2));
  CHECK(of(3) < of(4));
  CHECK_FALSE(of(4) < of(3));
  ElementSet high(70);
  high.set(69);
  ElementSet low = ElementSet::full(70);
  low.reset(69);
  CHECK(low < high);  // the top bit dominates all lower words
}

TEST_CASE("universe validation and lookup") {
  const Universe u({"a", "b", "c"});
  CHECK(u.size() == 3);
  CHECK(u.label(1) == "b");
  CHECK(u.index_of("c") == 2);
  CHECK_FALSE(u.index_of("d").has_value());
  CHECK(u.require_index("a") == 0);
  CHECK_THROWS_AS(u.require_index("z"), domain_error);
  CHECK_THROWS_AS(Universe({}), domain_error);
  CHECK_THROWS_AS(Universe({"x", "x"}), domain_error);
  CHECK(Universe::of_size(3).labels() == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("partition validation and canonical order") {
  const Partition p(4, {{2, 3}, {0, 1}});
  CHECK(p.block_count() == 2);
  // Blocks are reordered by minimum element.
  CHECK(p.block(0) == ElementSet::from_mask(4, 0b0011));
  CHECK(p.block(1) == ElementSet::from_mask(4, 0b1100));
  CHECK(p.block_sizes() == std::vector<std::size_t>{2, 2});
  CHECK(p.block_of(0) == 0);
  CHECK(p.block_of(3) == 1);

  CHECK_THROWS_AS(Partition(3, {{0, 1}}), domain_error);          // gap
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), domain_error);  // overlap
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), domain_error);   // empty block
  CHECK_THROWS_AS(Partition(3, {{0, 1, 3}}), domain_error);       // out of range

  CHECK(Partition::trivial(3).block_count() == 1);
  CHECK(Partition::discrete(3).block_count() == 3);
  CHECK(Partition::trivial(1) == Partition::discrete(1));

  const std::vector<std::uint32_t> rgs{7, 3, 7, 9};
  const Partition q = Partition::from_assignment(rgs);
  CHECK(q == Partition(4, {{0, 2}, {1}, {3}}));

  const Partition r(5, {{1, 4, 2}, {0}, {3}});
  CHECK(r.size_multiset() == std::vector<std::size_t>{3, 1, 1});
}

TEST_CASE("approximation space glue") {
  CHECK_THROWS_AS(
      ApproximationSpace(Universe::of_size(3), Partition::trivial(4)),
      domain_error);
  const auto space = make_space(2, {{0}, {1}});
  CHECK(space.size() == 2);
  CHECK(space == make_space(2, {{1}, {0}}));
}

TEST_CASE("worked four-element example: every subset's rough pair") {
  const auto space = make_space(4, {{0, 1}, {2, 3}});
  const auto pair_of = [&](std::uint64_t mask) {
    return rough_pair(space, ElementSet::from_mask(4, mask));
  };
  const auto expect = [&](std::uint64_t x, std::uint64_t lo, std::uint64_t up) {
    const RoughPair p = pair_of(x);
    CHECK(p.lower == ElementSet::from_mask(4, lo));
    CHECK(p.upper == ElementSet::from_mask(4, up));
  };
  // Elements 1,2,3,4 are bits 0..3; blocks {1,2} = 0b0011, {3,4} = 0b1100.
  expect(0b0000, 0b0000, 0b0000);  // {} -> ({},{})
  expect(0b0001, 0b0000, 0b0011);  // {1} -> ({},{1,2})
  expect(0b0010, 0b0000, 0b0011);  // {2}
  expect(0b0100, 0b0000, 0b1100);  // {3} -> ({},{3,4})
  expect(0b1000, 0b0000, 0b1100);  // {4}
  expect(0b0011, 0b0011, 0b0011);  // {1,2} definable
  expect(0b1100, 0b1100, 0b1100);  // {3,4} definable
  expect(0b0101, 0b0000, 0b1111);  // {1,3} -> ({},U)
  expect(0b1001, 0b0000, 0b1111);  // {1,4}
  expect(0b0110, 0b0000, 0b1111);  // {2,3}
  expect(0b1010, 0b0000, 0b1111);  // {2,4}
  expect(0b0111, 0b0011, 0b1111);  // {1,2,3} -> ({1,2},U)
  expect(0b1011, 0b0011, 0b1111);  // {1,2,4}
  expect(0b1101, 0b1100, 0b1111);  // {1,3,4} -> ({3,4},U)
  expect(0b1110, 0b1100, 0b1111);  // {2,3,4}
  expect(0b1111, 0b1111, 0b1111);  // U -> (U,U)
}

TEST_CASE("five-element spot check") {
  const auto space = make_space(5, {{0, 1}, {2}, {3, 4}});
  const ElementSet x = ElementSet::from_mask(5, 0b01110);  // {2,3,4}
  CHECK(lower_approx(space, x) == ElementSet::from_mask(5, 0b00100));  // {3}
  CHECK(upper_approx(space, x) == ElementSet::full(5));
}

TEST_CASE("approximations match the set oracle exhaustively") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const Universe universe = Universe::of_size(n);
    for (const Partition& p : all_partitions(n)) {
      const ApproximationSpace space(universe, p);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const ElementSet x = ElementSet::from_mask(n, mask);
        const auto xs = mask_to_set(mask);
        const RoughPair got = rough_pair(space, x);
        REQUIRE(to_set(got.lower) == oracle_lower(p, xs));
        REQUIRE(to_set(got.upper) == oracle_upper(p, xs));
        // Sandwich property and definability of both approximations.
        REQUIRE(got.lower.subset_of(x));
        REQUIRE(x.subset_of(got.upper));
        REQUIRE(lower_approx(space, got.lower) == got.lower);
        REQUIRE(upper_approx(space, got.upper) == got.upper);
      }
    }
  }
}

TEST_CASE("duality between the approximation operators") {
  for (std::size_t n = 1; n <= 8; ++n) {
    PartitionEnumerator stream(n);
    const Universe universe = Universe::of_size(n);
    while (auto p = stream.next()) {
      const ApproximationSpace space(universe, *p);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const ElementSet x = ElementSet::from_mask(n, mask);
        REQUIRE(lower_approx(space, x) ==
                upper_approx(space, x.complement()).complement());
      }
    }
  }
}

TEST_CASE("refinement comparisons") {
  const Partition fine(2, {{0}, {1}});
  const Partition coarse(2, {{0, 1}});
  CHECK(refines(fine, coarse) == Refinement::StrictlyFiner);
  CHECK(refines(coarse, fine) == Refinement::StrictlyCoarser);
  CHECK(refines(fine, fine) == Refinement::Equal);
  CHECK(finer_or_equal(fine, coarse));
  CHECK_FALSE(finer_or_equal(coarse, fine));

  const Partition a(3, {{0, 1}, {2}});
  const Partition b(3, {{0, 2}, {1}});
  CHECK(refines(a, b) == Refinement::Incomparable);

  CHECK_THROWS_AS(refines(fine, Partition::trivial(3)), domain_error);
}

TEST_CASE("refinement is a partial order bounded by the canonical partitions") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto parts = all_partitions(n);
    const Partition trivial = Partition::trivial(n);
    const Partition discrete = Partition::discrete(n);
    for (const Partition& p : parts) {
      REQUIRE(finer_or_equal(discrete, p));
      REQUIRE(finer_or_equal(p, trivial));
      REQUIRE(refines(p, p) == Refinement::Equal);
    }
    for (const Partition& p : parts) {
      for (const Partition& q : parts) {
        const bool pq = finer_or_equal(p, q);
        const bool qp = finer_or_equal(q, p);
        if (pq && qp) REQUIRE(p == q);  // antisymmetry
        if (&p != &q) {
          const Refinement r = refines(p, q);
          REQUIRE((r == Refinement::StrictlyFiner) == (pq && !(p == q)));
          REQUIRE((r == Refinement::StrictlyCoarser) == (qp && !(p == q)));
          REQUIRE((r == Refinement::Incomparable) == (!pq && !qp));
        }
      }
    }
    // Transitivity over all triples.
    if (n <= 4) {
      for (const Partition& p : parts) {
        for (const Partition& q : parts) {
          if (!finer_or_equal(p, q)) continue;
          for (const Partition& r : parts) {
            if (finer_or_equal(q, r)) REQUIRE(finer_or_equal(p, r));
          }
        }
      }
    }
  }
}

TEST_CASE("canonical partitions of a universe") {
  const auto [trivial, discrete] = canonical_partitions(Universe::of_size(2));
  CHECK(trivial == Partition(2, {{0, 1}}));
  CHECK(discrete == Partition(2, {{0}, {1}}));
  const auto [t1, d1] = canonical_partitions(Universe({"a"}));
  CHECK(t1 == d1);
}

TEST_CASE("rough pair ordering is lexicographic") {
  const auto of = [](std::uint64_t lo, std::uint64_t up) {
    return RoughPair{ElementSet::from_mask(4, lo), ElementSet::from_mask(4, up)};
  };
  CHECK(of(0, 0) < of(0, 1));
  CHECK(of(0, 15) < of(1, 1));
  CHECK_FALSE(of(1, 1) < of(1, 1));
  CHECK(RoughPair::compare(of(2, 3), of(2, 3)) == std::strong_ordering::equal);
}

TEST_CASE("rendering") {
  const Partition p(3, {{2}, {0, 1}});
  CHECK(to_string(p) == "{{1,2},{3}}");
  CHECK(to_string(p, Universe({"x", "y", "z"})) == "{{x,y},{z}}");
  CHECK(to_string(ElementSet::from_mask(3, 0b101), Universe({"x", "y", "z"})) ==
        "{x,z}");
  CHECK(to_string(Refinement::Incomparable) == "incomparable");
  CHECK(to_string(Refinement::StrictlyFiner) == "strictly-finer");
}
