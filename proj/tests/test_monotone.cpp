#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "untangle/monotone.hpp"
#include "untangle/rng.hpp"

using namespace untangle;
using namespace untangle::monotone;

namespace {

// Exhaustive oracle: all subsequences; longest, then lexicographically
// smallest position list. Independent of the patience-style code.
std::vector<std::size_t> brute_lis(const std::vector<long long>& seq) {
    std::size_t n = seq.size();
    std::vector<std::size_t> best;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) pos.push_back(i);
        bool ok = true;
        for (std::size_t k = 1; k < pos.size(); ++k)
            ok &= seq[pos[k - 1]] < seq[pos[k]];
        if (!ok) continue;
        if (pos.size() > best.size() || (pos.size() == best.size() && pos < best))
            best = pos;
    }
    return best;
}

}  // namespace

TEST_CASE("lis spec cases") {
    CHECK(lis({1, 2, 3}) == std::vector<std::size_t>{0, 1, 2});
    CHECK(lis({3, 1, 2, 4}) == std::vector<std::size_t>{1, 2, 3});
    CHECK(lis({5, 4, 3, 2, 1}) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(lis({1, 1}), Error);
}

TEST_CASE("lds spec cases") {
    CHECK(lds({3, 2, 1}) == std::vector<std::size_t>{0, 1, 2});
    CHECK(lds({1, 3, 2, 0}) == std::vector<std::size_t>{1, 2, 3});
    CHECK(lds({1, 2}) == std::vector<std::size_t>{0});
}

TEST_CASE("lis equals brute force on all permutations up to length 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<long long> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            CHECK(lis(perm) == brute_lis(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("lis equals brute force on random sequences") {
    DetRng rng(1234);
    for (int trial = 0; trial < 2000; ++trial) {
        std::size_t n = std::size_t(rng.range(1, 10));
        std::vector<long long> seq;
        while (seq.size() < n) {
            long long v = rng.range(-1000000, 1000000);
            if (std::find(seq.begin(), seq.end(), v) == seq.end()) seq.push_back(v);
        }
        CHECK(lis(seq) == brute_lis(seq));
    }
}

TEST_CASE("lds relates to lis by reverse-negate") {
    DetRng rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t n = std::size_t(rng.range(1, 40));
        std::vector<long long> seq;
        while (seq.size() < n) {
            long long v = rng.range(-100000, 100000);
            if (std::find(seq.begin(), seq.end(), v) == seq.end()) seq.push_back(v);
        }
        std::vector<long long> rev_neg(seq.rbegin(), seq.rend());
        for (auto& v : rev_neg) v = -v;
        CHECK(lis(rev_neg).size() == lds(seq).size());
    }
}

TEST_CASE("es_select spec cases") {
    auto sel = es_select({2, 1, 4, 3}, 2);
    CHECK(sel.direction == Direction::Increasing);
    CHECK(sel.picked == std::vector<std::size_t>{0, 2});

    std::vector<long long> ascending(9);
    std::iota(ascending.begin(), ascending.end(), 1);
    auto sel2 = es_select(ascending, 3);
    CHECK(sel2.direction == Direction::Increasing);
    CHECK(sel2.picked == std::vector<std::size_t>{0, 1, 2});

    auto sel3 = es_select({4, 3, 2, 1}, 2);
    CHECK(sel3.direction == Direction::Decreasing);
    CHECK(sel3.picked == std::vector<std::size_t>{0, 1});
}

TEST_CASE("Erdos-Szekeres guarantee exhaustive at s=2") {
    std::vector<long long> perm{1, 2, 3, 4};
    do {
        auto sel = es_select(perm, 2);
        CHECK(sel.picked.size() == 2);
        CHECK(sel.picked[0] < sel.picked[1]);
        if (sel.direction == Direction::Increasing)
            CHECK(perm[sel.picked[0]] < perm[sel.picked[1]]);
        else
            CHECK(perm[sel.picked[0]] > perm[sel.picked[1]]);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("Erdos-Szekeres guarantee randomized at s=3") {
    DetRng rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<long long> perm(9);
        std::iota(perm.begin(), perm.end(), 1);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[std::size_t(rng.below(i))]);
        auto sel = es_select(perm, 3);
        CHECK(sel.picked.size() == 3);
        for (std::size_t k = 1; k < 3; ++k) {
            CHECK(sel.picked[k - 1] < sel.picked[k]);
            if (sel.direction == Direction::Increasing)
                CHECK(perm[sel.picked[k - 1]] < perm[sel.picked[k]]);
            else
                CHECK(perm[sel.picked[k - 1]] > perm[sel.picked[k]]);
        }
    }
}

TEST_CASE("es_select error when too short") {
    CHECK_THROWS_AS(es_select({2, 1}, 3), Error);
}
