#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "aucc/rng.hpp"

using namespace aucc;

TEST_CASE("same seed, same sequence; different seed, different sequence") {
    Rng a(42), b(42), c(43);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        if (va != b.next_u64()) all_equal = false;
        if (va != c.next_u64()) any_diff = true;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("bounded draws stay in range and reach every value") {
    Rng rng(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = rng.below(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
    CHECK_THROWS(rng.below(0));
}

TEST_CASE("unit doubles live in [0, 1)") {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double v = rng.unit();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("normals have roughly standard moments") {
    Rng rng(5);
    const int n = 20000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = rng.normal();
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    CHECK(std::fabs(mean) < 0.03);
    CHECK(std::fabs(var - 1.0) < 0.05);
    CHECK(rng.normal(10.0, 2.0) != rng.normal(10.0, 2.0));
}

TEST_CASE("shuffle is a permutation and is seed-deterministic") {
    std::vector<int> v(50);
    std::iota(v.begin(), v.end(), 0);
    std::vector<int> w = v;
    Rng a(123), b(123);
    a.shuffle(v);
    b.shuffle(w);
    CHECK(v == w);
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 50; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
    Rng c(124);
    std::vector<int> u(50);
    std::iota(u.begin(), u.end(), 0);
    c.shuffle(u);
    CHECK(u != v);
}

TEST_CASE("mix_seed separates streams") {
    CHECK(mix_seed(1, 0, 0) != mix_seed(1, 0, 1));
    CHECK(mix_seed(1, 0, 0) != mix_seed(1, 1, 0));
    CHECK(mix_seed(1, 2, 3) != mix_seed(2, 2, 3));
    CHECK(mix_seed(9, 4, 5) == mix_seed(9, 4, 5));
}
