#include "granulex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "granulex/classes.hpp"
#include "granulex/format.hpp"
#include "granulex/morphisms.hpp"

namespace granulex {

namespace {

constexpr std::size_t kEnumerationCap = 12;  // Bell(12) ~ 4.2M
constexpr std::size_t kPairSweepCap = 8;     // ordered-pair refinement sweeps
constexpr std::size_t kExtremeCap = 10;      // extreme-value sweeps
constexpr std::size_t kExhaustiveCap = 8;    // per-partition sweeps
constexpr std::size_t kInjSourceCap = 5;     // |U| in injection sweeps
constexpr std::size_t kInjTargetCap = 6;     // |V| in injection sweeps
constexpr std::size_t kMaxWitnesses = 25;

}  // namespace

PartitionEnumerator::PartitionEnumerator(std::size_t n) : n_(n) {
  if (n < 1 || n > kEnumerationCap) {
    throw domain_error("partition enumeration supports 1 <= n <= 12");
  }
  rgs_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

std::optional<Partition> PartitionEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (first_) {
    first_ = false;
    return Partition::from_assignment(rgs_);
  }
  for (std::size_t i = n_; i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i - 1]) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < n_; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = prefix_max_[j - 1];
      }
      return Partition::from_assignment(rgs_);
    }
  }
  exhausted_ = true;
  return std::nullopt;
}

std::vector<Partition> all_partitions(std::size_t n) {
  PartitionEnumerator stream(n);
  std::vector<Partition> result;
  while (auto p = stream.next()) result.push_back(std::move(*p));
  return result;
}

std::uint64_t bell_number(std::size_t n) {
  if (n < 1 || n > 25) {
    throw domain_error("bell_number supports 1 <= n <= 25");
  }
  std::vector<std::uint64_t> row{1};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::uint64_t> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (std::uint64_t value : row) next.push_back(next.back() + value);
    row = std::move(next);
  }
  // Each triangle row ends with the next Bell number; after n-1 rows the
  // final entry is B(n).
  return row.back();
}

Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  if (n < 1) throw domain_error("random_partition needs n >= 1");
  std::vector<std::uint32_t> rgs(n, 0);
  std::uint32_t max_digit = 0;
  for (std::size_t i = 1; i < n; ++i) {
    // Digits 0..max_digit+1 are admissible; plain modulo keeps the draw
    // identical across standard libraries.
    const std::uint32_t digit =
        static_cast<std::uint32_t>(rng() % (max_digit + 2));
    rgs[i] = digit;
    max_digit = std::max(max_digit, digit);
  }
  return Partition::from_assignment(rgs);
}

MeasureFns MeasureFns::standard() {
  MeasureFns fns;
  fns.rough_h = [](const ApproximationSpace& s) { return rough_entropy(s); };
  fns.rough_g = [](const ApproximationSpace& s) { return rough_coentropy(s); };
  fns.classical_h = [](const Partition& p) { return classical_entropy(p); };
  fns.classical_g = [](const Partition& p) { return classical_coentropy(p); };
  return fns;
}

MeasureFns MeasureFns::with_fault(FaultMode mode) {
  MeasureFns fns = standard();
  if (mode == FaultMode::NaturalLog) {
    // Every logarithm taken base e instead of base 2: all values scale by
    // ln 2, so order relations survive but the additive identities break.
    constexpr double scale = std::numbers::ln2;
    fns.rough_h = [](const ApproximationSpace& s) { return scale * rough_entropy(s); };
    fns.rough_g = [](const ApproximationSpace& s) { return scale * rough_coentropy(s); };
    fns.classical_h = [](const Partition& p) { return scale * classical_entropy(p); };
    fns.classical_g = [](const Partition& p) { return scale * classical_coentropy(p); };
  }
  return fns;
}

bool all_passed(const std::vector<TheoremReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const TheoremReport& r) { return r.passed(); });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Shared enumeration and measure caches for one verify_all run. Measures are
/// evaluated through the injected MeasureFns so fault modes propagate
/// everywhere.
struct Ctx {
  VerifyConfig cfg;
  MeasureFns fns;

  std::vector<std::vector<Partition>> parts;
  std::vector<std::vector<double>> hc, gc, hr, gr;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> strict_pairs;
  std::vector<bool> cached;
  std::vector<bool> pairs_cached;

  explicit Ctx(const VerifyConfig& config)
      : cfg(config),
        fns(MeasureFns::with_fault(config.fault)),
        parts(kEnumerationCap + 1),
        hc(kEnumerationCap + 1),
        gc(kEnumerationCap + 1),
        hr(kEnumerationCap + 1),
        gr(kEnumerationCap + 1),
        strict_pairs(kEnumerationCap + 1),
        cached(kEnumerationCap + 1, false),
        pairs_cached(kEnumerationCap + 1, false) {}

  void ensure(std::size_t n) {
    if (cached.at(n)) return;
    parts[n] = all_partitions(n);
    const Universe universe = Universe::of_size(n);
    const std::size_t count = parts[n].size();
    hc[n].reserve(count);
    gc[n].reserve(count);
    hr[n].reserve(count);
    gr[n].reserve(count);
    for (const Partition& p : parts[n]) {
      hc[n].push_back(fns.classical_h(p));
      gc[n].push_back(fns.classical_g(p));
      const ApproximationSpace space(universe, p);
      hr[n].push_back(fns.rough_h(space));
      gr[n].push_back(fns.rough_g(space));
    }
    cached[n] = true;
  }

  /// Ordered index pairs (i, j) with parts[n][i] strictly finer than
  /// parts[n][j]; computed once and shared by all four refinement sweeps.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& strict(
      std::size_t n) {
    if (!pairs_cached.at(n)) {
      ensure(n);
      const auto& list = parts[n];
      for (std::uint32_t i = 0; i < list.size(); ++i) {
        for (std::uint32_t j = 0; j < list.size(); ++j) {
          if (i != j && finer_or_equal(list[i], list[j])) {
            strict_pairs[n].emplace_back(i, j);
          }
        }
      }
      pairs_cached[n] = true;
    }
    return strict_pairs[n];
  }
};

struct Recorder {
  TheoremReport& report;
  std::uint64_t suppressed = 0;

  void violation(std::string text) {
    if (report.violations.size() < kMaxWitnesses) {
      report.violations.push_back(std::move(text));
    } else {
      ++suppressed;
    }
  }
  void strict_gap(double gap) {
    report.min_gap = std::min(report.min_gap, gap);
  }
  void equal_deviation(double deviation) {
    report.max_equal_deviation =
        std::max(report.max_equal_deviation, std::abs(deviation));
  }
  /// Policy gate for sweeps over strict inequalities: passing is only
  /// trustworthy when the smallest observed gap keeps clear headroom above
  /// the margin, so a too-close gap is itself reported as a violation.
  void enforce_headroom(double margin) {
    if (std::isfinite(report.min_gap) &&
        report.min_gap < tol::margin_headroom * margin) {
      report.violations.push_back(
          "margin headroom: smallest strict gap " + sig12_string(report.min_gap) +
          " is within " + sig12_string(tol::margin_headroom) +
          "x of the margin " + sig12_string(margin));
    }
  }

  void finish(Clock::time_point start) {
    if (suppressed > 0) {
      report.violations.push_back("(" + std::to_string(suppressed) +
                                  " further violations suppressed)");
    }
    report.elapsed_seconds = seconds_since(start);
  }
};

std::string fmt(double value) { return sig12_string(value); }

// ---------------------------------------------------------------------------
// Refinement monotonicity: four strict claims over all ordered pairs
// sigma strictly finer than pi, per universe size.

TheoremReport refinement_sweep(Ctx& ctx, std::string id, std::string claim,
                               const char* symbol,
                               const std::vector<std::vector<double>>& values,
                               bool finer_is_greater) {
  const auto start = Clock::now();
  TheoremReport report{.id = std::move(id), .claim = std::move(claim)};
  Recorder rec{report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kPairSweepCap);
  report.complete = ctx.cfg.n_max <= kPairSweepCap;
  for (std::size_t n = 1; n <= cap; ++n) {
    for (const auto& [i, j] : ctx.strict(n)) {
      ++report.instances;
      const double finer = values[n][i];
      const double coarser = values[n][j];
      const double gap = finer_is_greater ? finer - coarser : coarser - finer;
      if (gap <= ctx.cfg.margin) {
        std::ostringstream w;
        w << "n=" << n << " sigma=" << to_string(ctx.parts[n][i])
          << " pi=" << to_string(ctx.parts[n][j]) << " " << symbol
          << "(sigma)=" << fmt(finer) << " " << symbol << "(pi)=" << fmt(coarser)
          << " gap=" << fmt(gap);
        rec.violation(w.str());
      } else {
        rec.strict_gap(gap);
      }
    }
  }
  rec.enforce_headroom(ctx.cfg.margin);
  rec.finish(start);
  return report;
}

// ---------------------------------------------------------------------------
// Extreme values: the discrete partition is the unique maximizer of h_new and
// the unique minimizer of g_new; the trivial partition is the opposite
// extreme, with the stated closed formulas.

TheoremReport extremes_sweep(Ctx& ctx, bool entropy_side) {
  const auto start = Clock::now();
  TheoremReport report;
  if (entropy_side) {
    report.id = "entropy-extremes";
    report.claim =
        "h_new attains its maximum n exactly at the discrete partition and its "
        "minimum n - ((2^n-2)/2^n)*log2(2^n-2) exactly at the trivial "
        "partition";
  } else {
    report.id = "coentropy-extremes";
    report.claim =
        "g_new attains its minimum 0 exactly at the discrete partition and its "
        "maximum ((2^n-2)/2^n)*log2(2^n-2) exactly at the trivial partition";
  }
  Recorder rec{report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kExtremeCap);
  report.complete = ctx.cfg.n_max <= kExtremeCap;
  const char* symbol = entropy_side ? "h_new" : "g_new";
  for (std::size_t n = 1; n <= cap; ++n) {
    const ExtremeValues extremes = extreme_values(n);
    const double at_discrete = entropy_side ? extremes.h_max : extremes.g_min;
    const double at_trivial = entropy_side ? extremes.h_min : extremes.g_max;
    const Universe universe = Universe::of_size(n);
    const Partition discrete = Partition::discrete(n);
    const Partition trivial = Partition::trivial(n);
    PartitionEnumerator stream(n);
    while (auto p = stream.next()) {
      ++report.instances;
      const ApproximationSpace space(universe, *p);
      const double value = entropy_side ? ctx.fns.rough_h(space) : ctx.fns.rough_g(space);
      const auto check_bound = [&](const Partition& attainer, double bound,
                                   bool is_upper) {
        if (*p == attainer) {
          const double deviation = value - bound;
          if (std::abs(deviation) > ctx.cfg.margin) {
            std::ostringstream w;
            w << "n=" << n << " pi=" << to_string(*p) << " " << symbol << "="
              << fmt(value) << " expected " << fmt(bound);
            rec.violation(w.str());
          } else {
            rec.equal_deviation(deviation);
          }
        } else {
          const double gap = is_upper ? bound - value : value - bound;
          if (gap <= ctx.cfg.margin) {
            std::ostringstream w;
            w << "n=" << n << " pi=" << to_string(*p) << " " << symbol << "="
              << fmt(value) << " not strictly " << (is_upper ? "below" : "above")
              << " " << fmt(bound);
            rec.violation(w.str());
          } else {
            rec.strict_gap(gap);
          }
        }
      };
      if (entropy_side) {
        check_bound(discrete, at_discrete, /*is_upper=*/true);
        check_bound(trivial, at_trivial, /*is_upper=*/false);
      } else {
        check_bound(discrete, at_discrete, /*is_upper=*/false);
        check_bound(trivial, at_trivial, /*is_upper=*/true);
      }
    }
  }
  rec.enforce_headroom(ctx.cfg.margin);
  rec.finish(start);
  return report;
}

// ---------------------------------------------------------------------------
// Class profiles partition the power set.

TheoremReport profile_sweep(Ctx& ctx) {
  const auto start = Clock::now();
  TheoremReport report{
      .id = "class-profile-partition",
      .claim =
          "the distinct approximation pairs split the power set: counts are "
          "positive and sum to 2^n, pairs are strictly increasing in canonical "
          "order, and every lower set is contained in its upper set"};
  Recorder rec{report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kExhaustiveCap);
  report.complete = ctx.cfg.n_max <= kExhaustiveCap;
  for (std::size_t n = 1; n <= cap; ++n) {
    const Universe universe = Universe::of_size(n);
    PartitionEnumerator stream(n);
    while (auto p = stream.next()) {
      ++report.instances;
      const ApproximationSpace space(universe, *p);
      const ClassProfile profile = classify_closed_form(space);
      BigInt total = 0;
      bool ok = !profile.classes.empty();
      for (std::size_t i = 0; i < profile.classes.size(); ++i) {
        const ApproximationClass& cls = profile.classes[i];
        total += cls.count;
        if (cls.count < 1) ok = false;
        if (!cls.pair.lower.subset_of(cls.pair.upper)) ok = false;
        if (i > 0 && !(profile.classes[i - 1].pair < cls.pair)) ok = false;
      }
      if (total != profile.total_subsets()) ok = false;
      if (!ok) {
        std::ostringstream w;
        w << "n=" << n << " pi=" << to_string(*p)
          << " malformed class profile (m=" << profile.class_count()
          << " total=" << total.str() << ")";
        rec.violation(w.str());
      }
    }
  }
  rec.finish(start);
  return report;
}

// ---------------------------------------------------------------------------
// Additive identities, exhaustive over small n plus randomized large n.

TheoremReport identity_sweep(Ctx& ctx, bool rough_side) {
  const auto start = Clock::now();
  TheoremReport report;
  if (rough_side) {
    report.id = "rough-identity";
    report.claim = "h_new(pi) + g_new(pi) = n for every partition";
  } else {
    report.id = "classical-identity";
    report.claim =
        "h_classical(pi) + g_classical(pi) = log2(n) for every partition";
  }
  Recorder rec{report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kExhaustiveCap);
  report.complete = ctx.cfg.n_max <= kExhaustiveCap;

  // The classical identity is a short exact sum, so it is held to the fixed
  // tight tolerance rather than the configurable sweep margin.
  const double tolerance = rough_side ? ctx.cfg.margin : tol::identity;
  const auto check = [&](std::size_t n, const Partition& p) {
    ++report.instances;
    double sum, expected;
    if (rough_side) {
      const ApproximationSpace space(Universe::of_size(n), p);
      sum = ctx.fns.rough_h(space) + ctx.fns.rough_g(space);
      expected = static_cast<double>(n);
    } else {
      sum = ctx.fns.classical_h(p) + ctx.fns.classical_g(p);
      expected = std::log2(static_cast<double>(n));
    }
    const double deviation = sum - expected;
    if (std::abs(deviation) > tolerance) {
      std::ostringstream w;
      w << "n=" << n << " pi=" << to_string(p) << " sum=" << fmt(sum)
        << " expected " << fmt(expected) << " deviation=" << fmt(deviation);
      rec.violation(w.str());
    } else {
      rec.equal_deviation(deviation);
    }
  };

  for (std::size_t n = 1; n <= cap; ++n) {
    PartitionEnumerator stream(n);
    while (auto p = stream.next()) check(n, *p);
  }
  std::mt19937_64 rng(ctx.cfg.random_seed);
  for (std::size_t i = 0; i < ctx.cfg.random_checks; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(
                                  rng() % ctx.cfg.random_n_max);
    check(n, random_partition(rng, n));
  }
  rec.finish(start);
  return report;
}

// ---------------------------------------------------------------------------
// Same-size morphism comparisons: one pass over all partition pairs and
// bijections fills both the entropy and the co-entropy report.

std::string map_string(std::span<const std::uint32_t> assignment) {
  std::ostringstream out;
  out << "[";
  for (std::size_t e = 0; e < assignment.size(); ++e) {
    if (e) out << ",";
    out << (e + 1) << ":" << (assignment[e] + 1);
  }
  out << "]";
  return out.str();
}

std::pair<TheoremReport, TheoremReport> same_size_morphism_sweep(Ctx& ctx) {
  const auto start = Clock::now();
  TheoremReport h_report{
      .id = "same-size-morphism-entropy",
      .claim =
          "for a monomorphism f between equal-size spaces h_new(source) >= "
          "h_new(target), strictly so when f is a strict monomorphism, with "
          "equality when f is an isomorphism"};
  TheoremReport g_report{
      .id = "same-size-morphism-coentropy",
      .claim =
          "for a monomorphism f between equal-size spaces g_new(source) <= "
          "g_new(target), strictly so when f is a strict monomorphism, with "
          "equality when f is an isomorphism"};
  Recorder h_rec{h_report};
  Recorder g_rec{g_report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kInjSourceCap);

  for (std::size_t n = 1; n <= cap; ++n) {
    ctx.ensure(n);
    const auto& list = ctx.parts[n];
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = 0; j < list.size(); ++j) {
        for (std::size_t e = 0; e < n; ++e) perm[e] = static_cast<std::uint32_t>(e);
        do {
          const MorphismKind kind = classify_assignment(list[i], list[j], perm);
          if (!is_monomorphism(kind)) continue;
          ++h_report.instances;
          ++g_report.instances;
          const double dh = ctx.hr[n][i] - ctx.hr[n][j];  // source - target
          const double dg = ctx.gr[n][j] - ctx.gr[n][i];  // target - source
          const auto judge = [&](Recorder& rec, double diff, const char* symbol) {
            bool bad = false;
            if (kind == MorphismKind::Isomorphism) {
              if (std::abs(diff) > ctx.cfg.margin) bad = true;
              else rec.equal_deviation(diff);
            } else {
              if (diff <= ctx.cfg.margin) bad = true;
              else rec.strict_gap(diff);
            }
            if (bad) {
              std::ostringstream w;
              w << "n=" << n << " source=" << to_string(list[i])
                << " target=" << to_string(list[j]) << " map=" << map_string(perm)
                << " kind=" << to_string(kind) << " " << symbol
                << " diff=" << fmt(diff);
              rec.violation(w.str());
            }
          };
          judge(h_rec, dh, "h_new(source)-h_new(target)");
          judge(g_rec, dg, "g_new(target)-g_new(source)");
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  h_rec.enforce_headroom(ctx.cfg.margin);
  g_rec.enforce_headroom(ctx.cfg.margin);
  h_rec.finish(start);
  g_rec.finish(start);
  return {std::move(h_report), std::move(g_report)};
}

// ---------------------------------------------------------------------------
// Extension invariance.

ElementSet widen(const ElementSet& s, std::size_t new_n) {
  ElementSet out(new_n);
  for (std::size_t i : s.indices()) out.set(i);
  return out;
}

bool extension_profile_matches(const ClassProfile& base,
                               const ClassProfile& extended) {
  if (extended.class_count() != 2 * base.class_count()) return false;
  const std::size_t n = extended.n;
  std::vector<ApproximationClass> expected;
  expected.reserve(2 * base.class_count());
  for (const ApproximationClass& cls : base.classes) {
    ElementSet lower = widen(cls.pair.lower, n);
    ElementSet upper = widen(cls.pair.upper, n);
    expected.push_back({RoughPair{lower, upper}, cls.count, std::nullopt});
    lower.set(n - 1);
    upper.set(n - 1);
    expected.push_back({RoughPair{lower, upper}, cls.count, std::nullopt});
  }
  std::sort(expected.begin(), expected.end(),
            [](const ApproximationClass& a, const ApproximationClass& b) {
              return a.pair < b.pair;
            });
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(expected[i].pair == extended.classes[i].pair)) return false;
    if (expected[i].count != extended.classes[i].count) return false;
  }
  return true;
}

TheoremReport one_point_extension_sweep(Ctx& ctx) {
  const auto start = Clock::now();
  TheoremReport report{
      .id = "one-point-extension",
      .claim =
          "adjoining one fresh singleton point leaves g_new unchanged and "
          "doubles every approximation class (the new point joins both "
          "approximations or neither)"};
  Recorder rec{report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kExhaustiveCap);
  report.complete = ctx.cfg.n_max <= kExhaustiveCap;
  for (std::size_t n = 1; n <= cap; ++n) {
    const Universe universe = Universe::of_size(n);
    PartitionEnumerator stream(n);
    while (auto p = stream.next()) {
      ++report.instances;
      const ApproximationSpace space(universe, *p);
      const ApproximationSpace extended = one_point_extension(space, "x1");
      const double g = ctx.fns.rough_g(space);
      const double g_ext = ctx.fns.rough_g(extended);
      const double deviation = g_ext - g;
      if (std::abs(deviation) > ctx.cfg.margin) {
        std::ostringstream w;
        w << "n=" << n << " pi=" << to_string(*p) << " g_new=" << fmt(g)
          << " extended=" << fmt(g_ext) << " deviation=" << fmt(deviation);
        rec.violation(w.str());
      } else {
        rec.equal_deviation(deviation);
      }
      if (!extension_profile_matches(classify_closed_form(space),
                                     classify_closed_form(extended))) {
        std::ostringstream w;
        w << "n=" << n << " pi=" << to_string(*p)
          << " extension class profile mismatch";
        rec.violation(w.str());
      }
    }
  }
  rec.finish(start);
  return report;
}

TheoremReport multi_extension_sweep(Ctx& ctx) {
  const auto start = Clock::now();
  TheoremReport report{
      .id = "multi-point-extension",
      .claim =
          "adjoining up to three fresh singleton points leaves g_new unchanged"};
  Recorder rec{report};
  const std::size_t cap = std::min(ctx.cfg.n_max, kExhaustiveCap);
  report.complete = ctx.cfg.n_max <= kExhaustiveCap;
  const std::vector<std::string> labels{"x1", "x2", "x3"};
  for (std::size_t n = 1; n <= cap; ++n) {
    const Universe universe = Universe::of_size(n);
    PartitionEnumerator stream(n);
    while (auto p = stream.next()) {
      const ApproximationSpace space(universe, *p);
      const double g = ctx.fns.rough_g(space);
      ApproximationSpace current = space;
      for (std::size_t l = 0; l < labels.size(); ++l) {
        current = one_point_extension(current, labels[l]);
        ++report.instances;
        const double deviation = ctx.fns.rough_g(current) - g;
        if (std::abs(deviation) > ctx.cfg.margin) {
          std::ostringstream w;
          w << "n=" << n << " pi=" << to_string(*p) << " points=" << (l + 1)
            << " g_new=" << fmt(g) << " extended=" << fmt(deviation + g)
            << " deviation=" << fmt(deviation);
          rec.violation(w.str());
        } else {
          rec.equal_deviation(deviation);
        }
      }
    }
  }
  rec.finish(start);
  return report;
}

// ---------------------------------------------------------------------------
// Cross-universe comparison over every monomorphism, found by filtering all
// injections.

TheoremReport embedding_sweep(Ctx& ctx) {
  const auto start = Clock::now();
  TheoremReport report{
      .id = "cross-universe-comparison",
      .claim =
          "for every monomorphism f from <U,pi> to <V,sigma>: g_new(pi) = "
          "g_new(sigma) exactly when sigma is, up to relabeling, the image of "
          "pi plus fresh singletons; otherwise g_new(pi) < g_new(sigma)"};
  Recorder rec{report};
  const std::size_t u_cap = std::min(ctx.cfg.n_max, kInjSourceCap);
  const std::size_t v_cap = std::min(ctx.cfg.n_max + 1, kInjTargetCap);

  for (std::size_t u = 1; u <= u_cap; ++u) {
    ctx.ensure(u);
    for (std::size_t v = u; v <= v_cap; ++v) {
      ctx.ensure(v);
      std::vector<std::uint32_t> assignment(u, 0);
      std::vector<bool> used(v, false);
      for (std::size_t i = 0; i < ctx.parts[u].size(); ++i) {
        const Partition& pi = ctx.parts[u][i];
        for (std::size_t j = 0; j < ctx.parts[v].size(); ++j) {
          const Partition& sigma = ctx.parts[v][j];
          // Enumerate injections f: [u] -> [v] in lexicographic order.
          const auto recurse = [&](auto&& self, std::size_t e) -> void {
            if (e == u) {
              const MorphismKind kind = classify_assignment(pi, sigma, assignment);
              if (!is_monomorphism(kind)) return;
              ++report.instances;
              const bool equal = extension_equivalent(pi, sigma, assignment);
              const double diff = ctx.gr[v][j] - ctx.gr[u][i];
              bool bad;
              if (equal) {
                bad = std::abs(diff) > ctx.cfg.margin;
                if (!bad) rec.equal_deviation(diff);
              } else {
                bad = diff <= ctx.cfg.margin;
                if (!bad) rec.strict_gap(diff);
              }
              if (bad) {
                std::ostringstream w;
                w << "u=" << u << " v=" << v << " pi=" << to_string(pi)
                  << " sigma=" << to_string(sigma)
                  << " map=" << map_string(assignment)
                  << " structural=" << (equal ? "Equal" : "StrictlyLess")
                  << " g_new(pi)=" << fmt(ctx.gr[u][i])
                  << " g_new(sigma)=" << fmt(ctx.gr[v][j]);
                rec.violation(w.str());
              }
              return;
            }
            for (std::uint32_t t = 0; t < v; ++t) {
              if (used[t]) continue;
              used[t] = true;
              assignment[e] = t;
              self(self, e + 1);
              used[t] = false;
            }
          };
          recurse(recurse, 0);
        }
      }
    }
  }
  rec.enforce_headroom(ctx.cfg.margin);
  rec.finish(start);
  return report;
}

}  // namespace

std::vector<TheoremReport> verify_all(const VerifyConfig& config) {
  if (config.n_max < 1 || config.n_max > kEnumerationCap) {
    throw domain_error("verify_all needs 1 <= n_max <= 12");
  }
  if (!(config.margin > 0)) {
    throw domain_error("verify_all needs a positive margin");
  }
  if (config.random_checks > 0 && config.random_n_max < 1) {
    throw domain_error("verify_all needs random_n_max >= 1");
  }
  Ctx ctx(config);

  std::vector<TheoremReport> reports;
  reports.push_back(refinement_sweep(
      ctx, "classical-entropy-refinement",
      "if sigma is strictly finer than pi on the same universe then "
      "h_classical(sigma) > h_classical(pi)",
      "h_classical", ctx.hc, /*finer_is_greater=*/true));
  reports.push_back(refinement_sweep(
      ctx, "classical-coentropy-refinement",
      "if sigma is strictly finer than pi on the same universe then "
      "g_classical(sigma) < g_classical(pi)",
      "g_classical", ctx.gc, /*finer_is_greater=*/false));
  reports.push_back(refinement_sweep(
      ctx, "rough-entropy-refinement",
      "if sigma is strictly finer than pi on the same universe then "
      "h_new(sigma) > h_new(pi)",
      "h_new", ctx.hr, /*finer_is_greater=*/true));
  reports.push_back(refinement_sweep(
      ctx, "rough-coentropy-refinement",
      "if sigma is strictly finer than pi on the same universe then "
      "g_new(sigma) < g_new(pi)",
      "g_new", ctx.gr, /*finer_is_greater=*/false));
  reports.push_back(extremes_sweep(ctx, /*entropy_side=*/true));
  reports.push_back(extremes_sweep(ctx, /*entropy_side=*/false));
  reports.push_back(profile_sweep(ctx));
  reports.push_back(identity_sweep(ctx, /*rough_side=*/true));
  reports.push_back(identity_sweep(ctx, /*rough_side=*/false));
  {
    auto [h_report, g_report] = same_size_morphism_sweep(ctx);
    reports.push_back(std::move(h_report));
    reports.push_back(std::move(g_report));
  }
  reports.push_back(one_point_extension_sweep(ctx));
  reports.push_back(multi_extension_sweep(ctx));
  reports.push_back(embedding_sweep(ctx));
  return reports;
}

std::vector<TheoremReport> verify_all(std::size_t n_max, double margin) {
  VerifyConfig config;
  config.n_max = n_max;
  config.margin = margin;
  return verify_all(config);
}

}  // namespace granulex
