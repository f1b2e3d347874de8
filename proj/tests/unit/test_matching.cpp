#include "doctest.h"

#include <random>

#include "../support/brute.hpp"
#include "happy/errors.hpp"
#include "happy/matching.hpp"

using namespace happy;

TEST_CASE("small matchings") {
	auto r = max_weight_matching(WeightMatrix::from_rows({{3, 1}, {2, 4}}), true);
	CHECK(r.weight == 7);
	CHECK(r.assignment == std::vector<int>{0, 1});

	r = max_weight_matching(WeightMatrix::from_rows({{5}}), true);
	CHECK(r.weight == 5);
	CHECK(r.assignment == std::vector<int>{0});

	r = max_weight_matching(WeightMatrix::from_rows({{1, 2, 3}, {3, 2, 1}}), true);
	CHECK(r.weight == 6);
	CHECK(r.assignment == std::vector<int>{2, 0});
}

TEST_CASE("saturation and unmatched rows") {
	auto tall = WeightMatrix::from_rows({{1}, {2}});
	CHECK_THROWS_AS(max_weight_matching(tall, true), SaturationImpossible);
	auto r = max_weight_matching(tall, false);
	CHECK(r.weight == 2);
	CHECK(r.assignment == std::vector<int>{-1, 0});

	CHECK_THROWS_AS(max_weight_matching(WeightMatrix::from_rows({{-1}}), false), InputError);

	auto empty = max_weight_matching(WeightMatrix(0, 3), true);
	CHECK(empty.weight == 0);
	CHECK(empty.assignment.empty());
}

TEST_CASE("ties go to the lexicographically smallest assignment") {
	auto r = max_weight_matching(WeightMatrix::from_rows({{1, 1}, {1, 1}}), true);
	CHECK(r.assignment == std::vector<int>{0, 1});
	r = max_weight_matching(WeightMatrix::from_rows({{0, 0, 0}}), true);
	CHECK(r.assignment == std::vector<int>{0});
}

TEST_CASE("matching agrees with enumeration of injections") {
	std::mt19937_64 rng(3);
	for (int t = 0; t < 200; ++t) {
		const int rows = static_cast<int>(rng() % 6);
		const int cols = rows + static_cast<int>(rng() % 3);
		std::vector<std::vector<std::int64_t>> w(rows, std::vector<std::int64_t>(cols));
		for (auto &row : w)
			for (auto &x : row)
				x = static_cast<std::int64_t>(rng() % 10);
		const bool saturate = t % 2 == 0;
		auto r = max_weight_matching(WeightMatrix::from_rows(w), saturate);
		CHECK(r.weight == (rows == 0 ? 0 : brute::best_matching(w, saturate)));
		std::int64_t sum = 0;
		std::vector<bool> used(cols, false);
		for (int i = 0; i < rows; ++i) {
			if (r.assignment[i] < 0) {
				CHECK_FALSE(saturate);
				continue;
			}
			CHECK_FALSE(used[r.assignment[i]]);
			used[r.assignment[i]] = true;
			sum += w[i][r.assignment[i]];
		}
		CHECK(sum == r.weight);
	}
}
