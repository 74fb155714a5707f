#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "untangle/rational.hpp"

namespace untangle::geom {

struct Point {
    Ratio x;
    Ratio y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

enum class SegColor : std::uint8_t { Unset, Black, Red };
enum class SegKind : std::uint8_t { Unset, Long, Short };

struct SegmentTag {
    int edge_id = -1;
    SegColor color = SegColor::Unset;
    SegKind kind = SegKind::Unset;
};

/// Nondegenerate closed segment. Construction rejects a == b.
struct Segment {
    Point a;
    Point b;
    SegmentTag tag;

    Segment(Point a_, Point b_, SegmentTag tag_ = {});
};

/// Exact classification of how two segments meet.
enum class CrossKind : std::uint8_t {
    Disjoint,
    ProperCrossing,   // interiors meet in one point that is no endpoint
    SharedEndpoint,   // meet exactly in a common endpoint
    EndpointTouch,    // an endpoint of one lies in the other's interior
    CollinearOverlap, // intersection is a segment of positive length
};

const char* to_string(CrossKind k);

/// Sign of the cross product (q-p) x (r-p): +1 left turn, 0 collinear, -1 right.
int orient(const Point& p, const Point& q, const Point& r);

CrossKind classify(const Segment& s1, const Segment& s2);

/// Working axes for the untangler: x along dir=(a,b), y along perp=(-b,a).
/// Chosen so all vertex projections are distinct on both axes.
struct Frame {
    long long a = 1;
    long long b = 0;

    Ratio fx(const Point& p) const { return p.x * a + p.y * b; }
    Ratio fy(const Point& p) const { return p.x * -b + p.y * a; }
    /// Maps frame coordinates back to a plane point (exact).
    Point to_plane(const Ratio& fx, const Ratio& fy) const;
};

/// Deterministically tries dir = (1,0), (1,1), (1,2), ... and returns the
/// first direction under which both projections are pairwise distinct.
Frame choose_frame(const std::vector<Point>& points);

struct PairFinding {
    std::size_t i;
    std::size_t j;
    CrossKind kind;
};

struct CrossingReport {
    /// proper crossings (all pairs) + collinear overlaps of adjacent pairs
    std::int64_t count = 0;
    std::vector<PairFinding> crossings;
    /// non-adjacent pairs that touch without properly crossing
    /// (collinear overlap, endpoint touch, coincident endpoints); any entry
    /// here also breaks plane-ness
    std::vector<PairFinding> violations;

    bool plane() const { return count == 0 && violations.empty(); }
};

using AdjacencyFn = std::function<bool(std::size_t, std::size_t)>;

/// Brute-force O(k^2) crossing audit, independent of any construction code.
/// `adjacent(i,j)` tells whether segments i and j share a graph vertex;
/// such pairs may meet at a shared endpoint only.
CrossingReport count_crossings(const std::vector<Segment>& segments,
                               const AdjacencyFn& adjacent);

/// Cycle-drawing convenience: segment i is the edge (v_i, v_{i+1 mod n}).
CrossingReport count_cycle_crossings(const std::vector<Point>& positions);

/// True if every point is a vertex of the convex hull and no three are
/// collinear (strict convex position).
bool in_convex_position(const std::vector<Point>& points);

/// Indices of `points` in counterclockwise convex-hull order.
/// Requires strict convex position.
std::vector<std::size_t> convex_hull_order(const std::vector<Point>& points);

/// Squared Euclidean distance from p to segment [a,b].
Ratio point_segment_dist2(const Point& p, const Point& a, const Point& b);

Ratio dist2(const Point& p, const Point& q);

}  // namespace untangle::geom
