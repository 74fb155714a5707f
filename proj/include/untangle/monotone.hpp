#pragma once

#include <cstdint>
#include <vector>

#include "untangle/rational.hpp"

namespace untangle::monotone {

enum class Direction : std::uint8_t { Increasing, Decreasing };

struct MonotoneSelection {
    Direction direction = Direction::Increasing;
    std::vector<std::size_t> picked;  // positions into the input, strictly increasing
};

/// Positions of one longest strictly increasing subsequence.
/// Elements must be pairwise distinct. Among equally long answers returns
/// the lexicographically smallest position list (deterministic pipelines
/// need a fixed pick). O(k log k).
std::vector<std::size_t> lis(const std::vector<long long>& seq);

/// Decreasing counterpart; implemented as lis of negated values.
std::vector<std::size_t> lds(const std::vector<long long>& seq);

/// Picks exactly s positions forming a monotone subsequence, increasing
/// preferred. With |seq| >= (s-1)^2 + 1 one direction always works.
MonotoneSelection es_select(const std::vector<long long>& seq, std::size_t s);

}  // namespace untangle::monotone
