#include "ukp/approx_dp.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "ukp/generator.hpp"
#include "ukp/oracle.hpp"
#include "ukp/solver.hpp"

using namespace ukp;
using ukp::testing::example_instance;
using ukp::testing::run_pipeline;

namespace {

struct Sandbox {
  std::vector<TupleEntry> arena;
  std::vector<TupleLevel::Bucket> buckets;

  void add(const Rational& profit, const Rational& size) {
    TupleEntry entry;
    entry.profit = profit;
    entry.size = size;
    buckets.push_back({static_cast<std::int64_t>(buckets.size()),
                       static_cast<std::uint32_t>(arena.size())});
    arena.push_back(std::move(entry));
  }
};

}  // namespace

TEST_CASE("remove_dominated drops an equal-size lower profit") {
  Sandbox s;
  s.add(Rational(1, 2), Rational(2, 5));
  s.add(Rational(3, 5), Rational(2, 5));
  CHECK(remove_dominated(s.buckets, s.arena) == 1);
  REQUIRE(s.buckets.size() == 1);
  CHECK(s.arena[s.buckets[0].entry].profit == Rational(3, 5));
}

TEST_CASE("remove_dominated keeps a genuine trade-off") {
  Sandbox s;
  s.add(Rational(1, 2), Rational(3, 10));
  s.add(Rational(3, 5), Rational(2, 5));
  CHECK(remove_dominated(s.buckets, s.arena) == 0);
  CHECK(s.buckets.size() == 2);
}

TEST_CASE("remove_dominated sweeps right to left") {
  Sandbox s;
  s.add(Rational(1, 4), Rational(1, 2));
  s.add(Rational(1, 2), Rational(1, 2));
  s.add(Rational(3, 4), Rational(1, 4));
  CHECK(remove_dominated(s.buckets, s.arena) == 2);
  REQUIRE(s.buckets.size() == 1);
  CHECK(s.arena[s.buckets[0].entry].profit == Rational(3, 4));
}

TEST_CASE("the example instance yields the traced final level") {
  const auto pipe = run_pipeline(example_instance(), Rational(1, 4));
  const DpResult dp = run_dp(pipe.glued, pipe.params);

  const std::vector<std::pair<Rational, Rational>> expected{
      {Rational(3, 10), Rational(1, 4)},  {Rational(1, 2), Rational(2, 5)},
      {Rational(3, 5), Rational(3, 5)},   {Rational(4, 5), Rational(13, 20)},
      {Rational(1), Rational(4, 5)},      {Rational(11, 10), Rational(1)},
  };
  const auto& final_level = dp.final_level();
  REQUIRE(final_level.buckets.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const TupleEntry& entry = dp.arena[final_level.buckets[i].entry];
    CHECK(entry.profit == expected[i].first);
    CHECK(entry.size == expected[i].second);
  }
}

TEST_CASE("without items only the origin survives") {
  const EpsParams params = normalize_epsilon(Rational(1, 4), Rational(1));
  const GluedLevels empty(params.kappa);
  const DpResult dp = run_dp(empty, params);
  CHECK(dp.final_level().buckets.empty());
  CHECK(dp.tuples_created == 0);
}

TEST_CASE("a single top-level item gives one singleton tuple") {
  const EpsParams params = normalize_epsilon(Rational(1, 4), Rational(1));
  GluedLevels glued(params.kappa);
  GluedItem item{Rational(1), Rational(4, 5), params.kappa,
                 LeafSource{Item{Rational(1), Rational(4, 5), 0}}};
  glued.place(params.kappa, 0, glued.add_item(std::move(item)));
  const DpResult dp = run_dp(glued, params);
  REQUIRE(dp.final_level().buckets.size() == 1);
  const TupleEntry& entry = dp.arena[dp.final_level().buckets[0].entry];
  CHECK(entry.profit == Rational(1));
  CHECK(entry.size == Rational(4, 5));
  CHECK(entry.back == TupleEntry::Back::kSingle);
}

TEST_CASE("an equal-size bucket challenger loses to the first writer") {
  // Two level-3 parents extended by two level-2 items produce two tuples
  // in the same profit bucket with identical sizes; the one written first
  // (item order is gamma-ascending, parents bucket-ascending) must stay.
  const EpsParams params = normalize_epsilon(Rational(1, 4), Rational(1));
  GluedLevels glued(params.kappa);
  const auto add = [&](const Rational& p, const Rational& s, int level, std::int64_t gamma) {
    glued.place(level, gamma,
                glued.add_item(GluedItem{p, s, level, LeafSource{Item{p, s, 0}}}));
  };
  add(Rational(1), Rational(1, 4), 3, 0);                             // A
  add(Rational(1) + Rational(1, 64), Rational(1, 2), 3, 1);           // B
  add(Rational(1, 2), Rational(5, 16), 2, 0);                         // C1
  add(Rational(1, 2) + Rational(9, 512), Rational(9, 16), 2, 2);      // C2
  // B+C1 and A+C2 share bucket 324 at size 13/16; B+C1 is created first.
  const DpResult dp = run_dp(glued, params);
  const Rational kept_profit = Rational(1) + Rational(1, 64) + Rational(1, 2);
  bool found = false;
  for (const auto& bucket : dp.level(2).buckets) {
    if (bucket.xi == 324) {
      CHECK(dp.arena[bucket.entry].profit == kept_profit);
      CHECK(dp.arena[bucket.entry].size == Rational(13, 16));
      found = true;
    }
  }
  REQUIRE(found);
}

TEST_CASE("bucket indices match the stored profits and stay within bounds") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Instance instance = generate_instance(14, 32, seed, GenProfile::kSmallHeavy);
    const auto pipe = run_pipeline(instance, Rational(1, 8));
    const DpResult dp = run_dp(pipe.glued, pipe.params);
    for (int k = 0; k <= pipe.params.kappa + 1; ++k) {
      const TupleLevel& level = dp.level(k);
      REQUIRE(level.occupied() <= static_cast<std::size_t>(pipe.params.xi0) + 2);
      for (const auto& bucket : level.buckets) {
        REQUIRE(xi_index(dp.arena[bucket.entry].profit, pipe.params) == bucket.xi);
      }
      // Walking the buckets by descending profit, sizes strictly shrink;
      // equivalently both coordinates ascend together.
      for (std::size_t i = 1; i < level.buckets.size(); ++i) {
        REQUIRE(dp.arena[level.buckets[i].entry].profit >
                dp.arena[level.buckets[i - 1].entry].profit);
        REQUIRE(dp.arena[level.buckets[i].entry].size >
                dp.arena[level.buckets[i - 1].entry].size);
      }
    }
  }
}

TEST_CASE("tuple-creation counter and entry profits respect their bounds") {
  for (std::uint64_t seed = 600; seed < 612; ++seed) {
    const Instance instance = generate_instance(18, 64, seed, GenProfile::kCorrelated);
    const auto pipe = run_pipeline(instance, Rational(1, 8));
    const DpResult dp = run_dp(pipe.glued, pipe.params);

    std::size_t max_width = pipe.glued.aeffc() != nullptr ? 1 : 0;
    for (int k = 0; k <= pipe.params.kappa; ++k) {
      max_width = std::max(max_width, pipe.glued.level(k).size());
    }
    const auto cap = static_cast<std::uint64_t>(pipe.params.kappa + 2) *
                     static_cast<std::uint64_t>(pipe.params.xi0 + 2) *
                     static_cast<std::uint64_t>(max_width + 1);
    REQUIRE(dp.tuples_created <= cap);

    for (const TupleEntry& entry : dp.arena) {
      REQUIRE(entry.profit.is_zero() == (entry.back == TupleEntry::Back::kOrigin));
      if (!entry.profit.is_zero()) {
        REQUIRE(entry.profit >= pipe.params.xi_base);
      }
    }
  }
}

TEST_CASE("singleton tuples never arise below level kappa-2") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance instance = generate_instance(16, 64, seed, GenProfile::kUniform);
    const auto pipe = run_pipeline(instance, Rational(1, 8));
    const DpResult dp = run_dp(pipe.glued, pipe.params);
    for (const TupleEntry& entry : dp.arena) {
      if (entry.back == TupleEntry::Back::kSingle) {
        REQUIRE(entry.level >= pipe.params.kappa - 2);
      }
    }
  }
}

TEST_CASE("every kept tuple matches an exact structured tuple set") {
  // Micro-instances: compare against brute-force structured tuples level
  // by level (the approximation bound per level).
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40 && checked < 8; ++seed) {
    const Instance instance = generate_instance(5, 16, seed, GenProfile::kUniform);
    const auto pipe = run_pipeline(instance, Rational(1, 4));
    if (pipe.reduced.size() == 0) continue;
    ++checked;
    const DpResult dp = run_dp(pipe.glued, pipe.params);
    for (int k = 0; k <= pipe.params.kappa + 1; ++k) {
      const auto exact = ukp::testing::pareto_filter(
          ukp::testing::exact_structured_tuples(pipe.glued, pipe.params, k));
      Rational factor(1);
      for (int i = 0; i < pipe.params.kappa - k + 1; ++i) factor *= pipe.params.loss_factor();
      for (const auto& want : exact) {
        bool matched = false;
        if (want.profit.is_zero()) continue;  // the origin is always present
        for (const auto& bucket : dp.level(k).buckets) {
          const TupleEntry& entry = dp.arena[bucket.entry];
          if (entry.size <= want.size && entry.profit >= factor * want.profit) {
            matched = true;
            break;
          }
        }
        REQUIRE(matched);
      }
    }
  }
  REQUIRE(checked == 8);
}

TEST_CASE("final tuples cover the structured optimum on a volume grid") {
  int checked = 0;
  for (std::uint64_t seed = 200; seed < 240 && checked < 8; ++seed) {
    const Instance instance = generate_instance(5, 16, seed, GenProfile::kSmallHeavy);
    const auto pipe = run_pipeline(instance, Rational(1, 4));
    if (pipe.reduced.size() == 0 && pipe.glued.aeffc() == nullptr) continue;
    ++checked;
    const DpResult dp = run_dp(pipe.glued, pipe.params);
    Rational factor(1);
    for (int i = 0; i < pipe.params.kappa + 1; ++i) factor *= pipe.params.loss_factor();
    for (long num = 1; num <= 8; ++num) {
      const Rational v(num, 8);
      const Rational structured = structured_enum(
          pipe.glued,
          pipe.glued.aeffc() ? std::optional<GluedItem>(*pipe.glued.aeffc()) : std::nullopt, v,
          pipe.params);
      Rational best(0);
      for (const auto& bucket : dp.final_level().buckets) {
        const TupleEntry& entry = dp.arena[bucket.entry];
        if (entry.size <= v && entry.profit > best) best = entry.profit;
      }
      REQUIRE(best >= factor * structured);
    }
  }
  REQUIRE(checked == 8);
}

TEST_CASE("backtracking chains are structured and exact") {
  for (std::uint64_t seed = 300; seed < 312; ++seed) {
    const Instance instance = generate_instance(10, 32, seed, GenProfile::kCorrelated);
    const auto pipe = run_pipeline(instance, Rational(1, 8));
    const DpResult dp = run_dp(pipe.glued, pipe.params);
    for (const auto& bucket : dp.final_level().buckets) {
      // One glued item per level at most, the bundle at most once, and at
      // least one pick from the top four levels.
      std::vector<int> seen_levels;
      bool high = false;
      std::uint32_t cur = bucket.entry;
      while (dp.arena[cur].back != TupleEntry::Back::kOrigin) {
        const TupleEntry& entry = dp.arena[cur];
        const GluedItem& item = pipe.glued.item(entry.item);
        seen_levels.push_back(item.level);
        high = high || item.level >= pipe.params.kappa - 2;
        if (entry.back == TupleEntry::Back::kSingle) break;
        cur = entry.parent;
      }
      for (std::size_t i = 1; i < seen_levels.size(); ++i) {
        REQUIRE(seen_levels[i] > seen_levels[i - 1]);
      }
      REQUIRE(high);

      const SolutionMultiset ms = backtrack_solution(bucket.entry, dp, pipe.glued);
      REQUIRE(ms.total_profit() == dp.arena[bucket.entry].profit);
      REQUIRE(ms.total_size() == dp.arena[bucket.entry].size);
      REQUIRE(ms.consistent_with(instance));
    }
  }
}
