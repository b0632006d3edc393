#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "opdiv/diversity.hpp"
#include "opdiv/error.hpp"
#include "oracles.hpp"

using namespace opdiv;

namespace {

BinHistogram histogram(std::vector<int> counts) {
  int total = std::accumulate(counts.begin(), counts.end(), 0);
  return {static_cast<int>(counts.size()), std::move(counts), total};
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected opdiv::Error");
  return ErrorCode::InvalidArgument;
}

// Every composition of `total` into `parts` non-negative counts.
void for_each_histogram(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> counts(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      counts[idx] = left;
      visit(counts);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[idx] = c;
      rec(idx + 1, left - c);
    }
  };
  rec(0, total);
}

} // namespace

TEST_CASE("binning on the lemma instances") {
  CHECK(bin_opinions(std::vector<double>{0.25, 0.5, 0.75}, 3).counts == std::vector<int>{1, 1, 1});
  // Lemma-2 layout: i/n_f values land one bin up, 1.0 closes the top bin.
  CHECK(bin_opinions(std::vector<double>{0.25, 0.5, 0.75, 1.0}, 4).counts ==
        std::vector<int>{0, 1, 1, 2});
  CHECK(bin_opinions(std::vector<double>(6, 1.0), 5).counts == std::vector<int>{0, 0, 0, 0, 6});
}

TEST_CASE("boundary semantics and snapping") {
  for (int R = 2; R <= 12; ++R) {
    for (int i = 0; i < R; ++i) {
      double boundary = static_cast<double>(i) / R;
      auto h = bin_opinions(std::vector<double>{boundary}, R);
      CHECK(h.counts[i] == 1);
      // Rounding noise from a solve must not move the value down a bin.
      auto below = bin_opinions(std::vector<double>{boundary - 1e-12}, R);
      CHECK(below.counts[i] == 1);
      auto above = bin_opinions(std::vector<double>{boundary + 1e-12}, R);
      CHECK(above.counts[i] == 1);
    }
    CHECK(bin_opinions(std::vector<double>{1.0}, R).counts[R - 1] == 1);
    CHECK(bin_opinions(std::vector<double>{1.0 - 1e-12}, R).counts[R - 1] == 1);
  }
  // A snap tolerance of zero exposes the raw half-open rule.
  CHECK(bin_opinions(std::vector<double>{0.5 - 1e-12}, 2, 0.0).counts == std::vector<int>{1, 0});
  CHECK(bin_opinions(std::vector<double>{0.5 - 1e-12}, 2).counts == std::vector<int>{0, 1});
  // Values clearly inside a bin are not snapped.
  CHECK(bin_opinions(std::vector<double>{0.4999}, 2).counts == std::vector<int>{1, 0});
}

TEST_CASE("binning agrees with exact rational placement") {
  for (int q = 1; q <= 25; ++q) {
    for (int p = 0; p <= q; ++p) {
      for (int R = 2; R <= 25; ++R) {
        double x = static_cast<double>(p) / q;
        auto h = bin_opinions(std::vector<double>{x}, R);
        CHECK(h.counts[oracle::exact_bin(p, q, R)] == 1);
      }
    }
  }
}

TEST_CASE("binning errors and conservation") {
  CHECK(error_of([] { bin_opinions(std::vector<double>{1.2}, 3); }) == ErrorCode::OpinionOutOfRange);
  CHECK(error_of([] { bin_opinions(std::vector<double>{-0.1}, 3); }) == ErrorCode::OpinionOutOfRange);
  CHECK(error_of([] { bin_opinions(std::vector<double>{0.1}, 1); }) == ErrorCode::UnsupportedBinCount);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> xs(1 + trial % 40);
    for (auto& x : xs) x = u(rng);
    int R = 2 + trial % 17;
    BinHistogram h = bin_opinions(xs, R);
    CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0) == static_cast<int>(xs.size()));
    CHECK(h.n_f == static_cast<int>(xs.size()));
  }
}

TEST_CASE("Simpson index values") {
  CHECK(simpson_index(histogram({1, 1, 1, 1, 1})) == 1.0);
  CHECK(simpson_index(histogram({0, 7, 0})) == 0.0);
  CHECK(simpson_index(histogram({0, 0, 5, 0, 3, 0, 1, 0, 0})) == doctest::Approx(0.6388888888888888));
  CHECK(simpson_index(histogram({0, 0, 6, 0, 1, 0, 1, 0, 1})) == doctest::Approx(0.5833333333333333));
  CHECK(error_of([] { simpson_index(histogram({1, 0})); }) == ErrorCode::TooFewFollowers);
}

TEST_CASE("Shannon index values") {
  CHECK(shannon_index(histogram({1, 1, 1, 1, 1, 1, 1, 1, 1})) == doctest::Approx(std::log(9.0)));
  CHECK(shannon_index(histogram({0, 4, 0})) == 0.0);
  CHECK(shannon_index(histogram({0, 0, 6, 0, 1, 0, 1, 0, 1})) == doctest::Approx(1.0027182645175161));
  CHECK(shannon_index(histogram({0, 0, 5, 0, 3, 0, 1, 0, 0})) == doctest::Approx(0.936888307539016));
  CHECK(shannon_index(histogram({1, 0})) == 0.0);
}

TEST_CASE("index ranges, permutation invariance, and the R = n_f optimum, n_f <= 8") {
  for (int n_f = 2; n_f <= 8; ++n_f) {
    for (int R = 2; R <= n_f; ++R) {
      for_each_histogram(n_f, R, [&](const std::vector<int>& counts) {
        BinHistogram h = histogram(counts);
        double s = simpson_index(h), e = shannon_index(h);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        CHECK(e >= -1e-15);
        CHECK(e <= std::log(static_cast<double>(R)) + 1e-12);

        std::vector<int> reversed(counts.rbegin(), counts.rend());
        std::vector<int> rotated = counts;
        std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
        for (const auto* perm : {&reversed, &rotated}) {
          CHECK(simpson_index(histogram(*perm)) == doctest::Approx(s));
          CHECK(shannon_index(histogram(*perm)) == doctest::Approx(e));
        }

        if (R == n_f) {
          bool spread = std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 1; });
          bool at_max = std::abs(s - max_diversity(n_f, n_f, Measure::Simpson)) < 1e-12;
          CHECK(spread == at_max);
        }
      });
    }
  }
}

TEST_CASE("closed-form maxima") {
  CHECK(max_diversity(9, 9, Measure::Shannon) == doctest::Approx(2.1972245773362196));
  CHECK(max_diversity(9, 9, Measure::Simpson) == 1.0);
  // (2,2) split: 1 - (2 + 2) / 12
  CHECK(max_diversity(4, 2, Measure::Simpson) == doctest::Approx(2.0 / 3.0));
  // (2,3) split: -(0.4 ln 0.4 + 0.6 ln 0.6)
  CHECK(max_diversity(5, 2, Measure::Shannon) == doctest::Approx(0.6730116670092565));
  CHECK(max_diversity(2, 2, Measure::Simpson) == 1.0);
  CHECK(error_of([] { max_diversity(9, 3, Measure::Simpson); }) == ErrorCode::UnsupportedBinCount);
  CHECK(error_of([] { max_diversity(1, 2, Measure::Simpson); }) == ErrorCode::TooFewFollowers);
}

TEST_CASE("the floor/ceil split is the best 2-bin split (exhaustive)") {
  for (int n_f = 2; n_f <= 60; ++n_f) {
    double best_sim = -1.0, best_shan = -1.0;
    for (int c1 = 0; c1 <= n_f; ++c1) {
      BinHistogram h = histogram({c1, n_f - c1});
      best_sim = std::max(best_sim, simpson_index(h));
      best_shan = std::max(best_shan, shannon_index(h));
    }
    CHECK(max_diversity(n_f, 2, Measure::Simpson) == doctest::Approx(best_sim).epsilon(1e-14));
    CHECK(max_diversity(n_f, 2, Measure::Shannon) == doctest::Approx(best_shan).epsilon(1e-14));
  }
}

TEST_CASE("histogram JSON") {
  CHECK(to_json(histogram({0, 1, 1, 2})) == R"({"R":4,"n_f":4,"counts":[0,1,1,2]})");
}
