#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "tsclust/evaluation.hpp"
#include "tsclust/rng.hpp"

using namespace tsclust;

TEST_CASE("cross_entropy analytic cases") {
  SUBCASE("identical partitions have zero entropy") {
    const Memberships m{{0, 1, 0, 1, 2}};
    const ClusterComparison c = cross_entropy(m, m);
    CHECK(c.entropy == 0.0);
  }

  SUBCASE("the 2x2 crossed partition costs exactly one bit") {
    const Memberships clusters{{0, 0, 1, 1}};  // {a,b}, {c,d}
    const Memberships labels{{0, 1, 0, 1}};    // {a,c}, {b,d}
    const ClusterComparison c = cross_entropy(clusters, labels);
    CHECK(c.entropy == 1.0);
  }

  SUBCASE("one cluster against singletons costs log2(n) bits") {
    const Memberships clusters{{0, 0, 0, 0}};
    const Memberships labels{{0, 1, 2, 3}};
    const ClusterComparison c = cross_entropy(clusters, labels);
    CHECK(c.entropy == 2.0);  // -4 * (1/4) * log2(1/4)
  }

  SUBCASE("per-cluster records carry sizes and the direction") {
    const Memberships clusters{{0, 0, 1}};
    const Memberships labels{{0, 1, 1}};
    const ClusterComparison c = cross_entropy(clusters, labels, "C1", "C2");
    CHECK(c.direction == "C1 w.r.t. C2");
    REQUIRE(c.per_cluster.size() == 2);
    CHECK(c.per_cluster[0].size == 2);
    CHECK(c.per_cluster[0].entropy == 1.0);
    CHECK(c.per_cluster[1].size == 1);
    CHECK(c.per_cluster[1].entropy == 0.0);
  }

  SUBCASE("different object counts are rejected") {
    CHECK_THROWS_AS(cross_entropy(Memberships{{0, 1}}, Memberships{{0}}),
                    SizeMismatchError);
  }
}

TEST_CASE("cross_entropy properties") {
  SplitMix64 rng(9001);

  SUBCASE("self-comparison is always zero") {
    for (int rep = 0; rep < 20; ++rep) {
      Memberships m;
      m.assignment.resize(5 + rng.next_below(50));
      for (auto& a : m.assignment) a = rng.next_below(5);
      CHECK(cross_entropy(m, m).entropy == 0.0);
    }
  }

  SUBCASE("entropy is invariant under relabeling of either argument") {
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t n = 10 + rng.next_below(40);
      const std::size_t ka = 2 + rng.next_below(4);
      const std::size_t kb = 2 + rng.next_below(4);
      Memberships clusters, labels;
      clusters.assignment.resize(n);
      labels.assignment.resize(n);
      for (auto& a : clusters.assignment) a = rng.next_below(ka);
      for (auto& a : labels.assignment) a = rng.next_below(kb);
      const double base = cross_entropy(clusters, labels).entropy;

      std::vector<std::size_t> perm_a(ka), perm_b(kb);
      for (std::size_t i = 0; i < ka; ++i) perm_a[i] = i;
      for (std::size_t i = 0; i < kb; ++i) perm_b[i] = i;
      for (std::size_t i = ka; i > 1; --i) {
        std::swap(perm_a[i - 1], perm_a[rng.next_below(i)]);
      }
      for (std::size_t i = kb; i > 1; --i) {
        std::swap(perm_b[i - 1], perm_b[rng.next_below(i)]);
      }
      Memberships pc = clusters, pl = labels;
      for (auto& a : pc.assignment) a = perm_a[a];
      for (auto& a : pl.assignment) a = perm_b[a];

      CHECK(cross_entropy(pc, labels).entropy == doctest::Approx(base));
      CHECK(cross_entropy(clusters, pl).entropy == doctest::Approx(base));
      CHECK(cross_entropy(pc, pl).entropy == doctest::Approx(base));
    }
  }

  SUBCASE("entropy is bounded by log2 of the label count") {
    for (int rep = 0; rep < 50; ++rep) {
      const std::size_t n = 5 + rng.next_below(50);
      const std::size_t kb = 1 + rng.next_below(6);
      Memberships clusters, labels;
      clusters.assignment.resize(n);
      labels.assignment.resize(n);
      for (auto& a : clusters.assignment) a = rng.next_below(4);
      for (auto& a : labels.assignment) a = rng.next_below(kb);
      const double e = cross_entropy(clusters, labels).entropy;
      CHECK(e >= 0.0);
      CHECK(e <= std::log2(static_cast<double>(std::max<std::size_t>(kb, 1))) +
                     1e-12);
    }
  }

  SUBCASE("a refinement of the labels has zero entropy") {
    for (int rep = 0; rep < 30; ++rep) {
      const std::size_t n = 10 + rng.next_below(30);
      Memberships clusters;
      clusters.assignment.resize(n);
      for (auto& a : clusters.assignment) a = rng.next_below(6);
      // Merge cluster pairs into coarser label classes: every cluster lies
      // inside exactly one label class.
      Memberships labels = clusters;
      for (auto& a : labels.assignment) a = a / 2;
      CHECK(cross_entropy(clusters, labels).entropy == 0.0);
    }
  }
}

TEST_CASE("prototype_norms") {
  Prototypes p(3, 4);
  // row 0 stays zero
  p.row(1)[0] = -0.5;
  p.row(1)[1] = -0.5;
  p.row(1)[2] = 0.5;
  p.row(1)[3] = 0.5;
  p.row(2)[0] = 3.0;
  p.row(2)[1] = 4.0;
  const std::vector<double> norms = prototype_norms(p);
  REQUIRE(norms.size() == 3);
  CHECK(norms[0] == 0.0);
  CHECK(norms[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norms[2] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("summarize_runs") {
  SUBCASE("constant list") {
    const std::vector<double> v{0.0, 0.0, 0.0};
    const RunSummary s = summarize_runs(v);
    CHECK(s.min == 0.0);
    CHECK(s.max == 0.0);
    CHECK(s.mean == 0.0);
  }

  SUBCASE("two values") {
    const std::vector<double> v{0.32, 0.36};
    const RunSummary s = summarize_runs(v);
    CHECK(s.min == 0.32);
    CHECK(s.max == 0.36);
    CHECK(s.mean == doctest::Approx(0.34));
  }

  SUBCASE("single value") {
    const std::vector<double> v{1.0};
    const RunSummary s = summarize_runs(v);
    CHECK(s.min == 1.0);
    CHECK(s.max == 1.0);
    CHECK(s.mean == 1.0);
  }

  SUBCASE("empty list is an error") {
    CHECK_THROWS_AS(summarize_runs(std::vector<double>{}), EmptyListError);
  }
}
