#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "untangle/geometry.hpp"
#include "untangle/monotone.hpp"

namespace untangle::cycle {

/// Straight-line placement of C_n: position of v_{i+1} at delta[i].
struct CycleInstance {
    std::size_t n = 0;
    std::vector<geom::Point> delta;
};

struct Params {
    long long m = 0;
    long long l = 0;
    long long s = 0;
};

/// Derives the largest m = 16 l^3 <= n-4. Requires n >= 20 (below that the
/// pipeline runs in a fallback regime fixing two vertices).
Params compute_params(std::size_t n);

struct Layer {
    std::size_t ordinal = 0;  // creation index, 1-based
    monotone::Direction direction = monotone::Direction::Increasing;
    std::size_t same_type_rank = 0;  // 1-based among layers of this direction
    std::vector<std::size_t> members;   // vertex ids (0-based), by descending frame-y
    std::vector<std::size_t> selected;  // vertex ids in left-to-right frame order
    Ratio min_y;  // over members
    Ratio max_y;
};

struct LayerBuild {
    std::vector<Layer> layers;          // exactly 2l
    std::set<std::size_t> freed;        // freed during construction (0-based ids)
    std::size_t consumed = 0;           // layer members + below-layer freeing
};

LayerBuild build_layers(const CycleInstance& inst, const Params& p, const geom::Frame& frame);

struct MajorityPick {
    monotone::Direction direction = monotone::Direction::Increasing;
    std::vector<std::size_t> chosen;  // indices into LayerBuild::layers, creation order
    bool relabel = false;             // true when the cycle indexing was reversed
};

MajorityPick pick_majority(const LayerBuild& build, const Params& p);

struct PathPlan {
    std::size_t from_fixed = 0;  // vertex id (0-based, output indexing)
    std::size_t to_fixed = 0;
    long long d = 0;  // majority layers strictly between the endpoints' layers
    std::vector<geom::Point> bends;
    std::vector<std::size_t> free_assigned;  // vertex ids in cycle order
    bool closing = false;
};

struct UntangleResult {
    Params params;
    std::vector<std::size_t> fixed;       // 0-based, sorted
    std::vector<geom::Point> positions;   // size n
    std::vector<PathPlan> paths;
    geom::Frame frame;
    bool relabel = false;
};

/// Theorem-1 pipeline: frame, params, layers, majority, routing. Fixes
/// exactly 2 l^2 vertices for n >= 20 and two vertices below that.
/// The returned drawing is plane; callers audit it independently.
UntangleResult untangle(const CycleInstance& inst);

/// Routing stage split out for tests; expects the relabeled instance when
/// pick.relabel is set (untangle() handles the mapping).
UntangleResult route(const CycleInstance& inst, const Params& p, const geom::Frame& frame,
                     const LayerBuild& build, const MajorityPick& pick);

}  // namespace untangle::cycle
