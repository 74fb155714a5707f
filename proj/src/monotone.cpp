#include "untangle/monotone.hpp"

#include <algorithm>
#include <limits>

namespace untangle::monotone {

namespace {

void check_distinct(const std::vector<long long>& seq) {
    std::vector<long long> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("monotone: duplicate elements");
}

// Fenwick tree over value ranks, max-query on prefixes.
struct MaxBit {
    std::vector<std::size_t> best;
    explicit MaxBit(std::size_t n) : best(n + 1, 0) {}
    void update(std::size_t pos, std::size_t val) {
        for (std::size_t i = pos + 1; i < best.size(); i += i & (~i + 1))
            best[i] = std::max(best[i], val);
    }
    std::size_t query(std::size_t count) const {  // max over first `count` ranks
        std::size_t r = 0;
        for (std::size_t i = count; i > 0; i -= i & (~i + 1)) r = std::max(r, best[i]);
        return r;
    }
};

}  // namespace

std::vector<std::size_t> lis(const std::vector<long long>& seq) {
    check_distinct(seq);
    std::size_t n = seq.size();
    if (n == 0) return {};

    std::vector<std::size_t> rank(n);
    {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
        for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;
    }

    // start_len[i] = length of the longest increasing run starting at i;
    // scan right to left, querying over strictly larger values.
    std::vector<std::size_t> start_len(n);
    MaxBit bit(n);
    for (std::size_t ii = n; ii-- > 0;) {
        std::size_t larger = n - 1 - rank[ii];  // count of values > seq[ii]
        start_len[ii] = 1 + bit.query(larger);
        bit.update(n - 1 - rank[ii], start_len[ii]);
    }
    std::size_t len = *std::max_element(start_len.begin(), start_len.end());

    // Greedy left-to-right pick: the smallest feasible index per class is
    // automatically value-compatible, giving the lexicographically
    // smallest position list.
    std::vector<std::vector<std::size_t>> by_class(len + 1);
    for (std::size_t i = 0; i < n; ++i)
        if (start_len[i] <= len) by_class[start_len[i]].push_back(i);

    std::vector<std::size_t> picked;
    picked.reserve(len);
    long long prev_val = std::numeric_limits<long long>::min();
    std::size_t prev_idx = 0;
    bool first = true;
    for (std::size_t k = 0; k < len; ++k) {
        const auto& cls = by_class[len - k];
        auto it = first ? cls.begin()
                        : std::upper_bound(cls.begin(), cls.end(), prev_idx);
        if (it == cls.end() || seq[*it] <= prev_val)
            throw InternalError("lis: greedy reconstruction failed");
        picked.push_back(*it);
        prev_idx = *it;
        prev_val = seq[*it];
        first = false;
    }
    return picked;
}

std::vector<std::size_t> lds(const std::vector<long long>& seq) {
    std::vector<long long> neg(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) neg[i] = -seq[i];
    return lis(neg);
}

MonotoneSelection es_select(const std::vector<long long>& seq, std::size_t s) {
    if (s == 0) throw Error("es_select: s must be positive");
    std::vector<std::size_t> inc = lis(seq);
    if (inc.size() >= s) {
        inc.resize(s);
        return {Direction::Increasing, std::move(inc)};
    }
    std::vector<std::size_t> dec = lds(seq);
    if (dec.size() >= s) {
        dec.resize(s);
        return {Direction::Decreasing, std::move(dec)};
    }
    throw Error("ES precondition violated");
}

}  // namespace untangle::monotone
