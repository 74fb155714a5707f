#include "untangle/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace untangle {

Ratio ratio_from_string(const std::string& text) {
    if (text.empty()) throw Error("ratio: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        return ratio_from_pair(text.substr(0, slash), text.substr(slash + 1));
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        BigInt n;
        if (n.set_str(text, 10) != 0) throw Error("ratio: bad integer '" + text + "'");
        return Ratio(n);
    }
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) throw Error("ratio: bad decimal '" + text + "'");
    BigInt mantissa;
    if (mantissa.set_str(digits, 10) != 0) throw Error("ratio: bad decimal '" + text + "'");
    BigInt den = 1;
    for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
    return make_ratio(mantissa, den);
}

std::string ratio_to_string(const Ratio& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::pair<std::string, std::string> ratio_to_pair(const Ratio& q) {
    return {q.get_num().get_str(), q.get_den().get_str()};
}

Ratio ratio_from_pair(const std::string& num, const std::string& den) {
    BigInt n, d;
    if (n.set_str(num, 10) != 0) throw Error("ratio: bad numerator '" + num + "'");
    if (d.set_str(den, 10) != 0) throw Error("ratio: bad denominator '" + den + "'");
    return make_ratio(n, d);
}

}  // namespace untangle

namespace untangle::geom {

Segment::Segment(Point a_, Point b_, SegmentTag tag_)
    : a(std::move(a_)), b(std::move(b_)), tag(tag_) {
    if (a == b) throw Error("degenerate segment");
}

const char* to_string(CrossKind k) {
    switch (k) {
        case CrossKind::Disjoint: return "disjoint";
        case CrossKind::ProperCrossing: return "proper_crossing";
        case CrossKind::SharedEndpoint: return "shared_endpoint";
        case CrossKind::EndpointTouch: return "endpoint_touch";
        case CrossKind::CollinearOverlap: return "collinear_overlap";
    }
    return "?";
}

int orient(const Point& p, const Point& q, const Point& r) {
    Ratio cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(cross);
}

namespace {

// p collinear with [a,b]; true if p lies on the closed segment.
bool on_segment_collinear(const Point& p, const Point& a, const Point& b) {
    if (a.x != b.x) {
        const Ratio& lo = a.x < b.x ? a.x : b.x;
        const Ratio& hi = a.x < b.x ? b.x : a.x;
        return lo <= p.x && p.x <= hi;
    }
    const Ratio& lo = a.y < b.y ? a.y : b.y;
    const Ratio& hi = a.y < b.y ? b.y : a.y;
    return lo <= p.y && p.y <= hi;
}

}  // namespace

CrossKind classify(const Segment& s1, const Segment& s2) {
    const Point& a = s1.a;
    const Point& b = s1.b;
    const Point& c = s2.a;
    const Point& d = s2.b;

    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);

    if (o1 == 0 && o2 == 0) {
        // All four points on one line; compare 1-D intervals.
        bool horizontal_tie = (a.x == b.x);
        auto key = [&](const Point& p) { return horizontal_tie ? p.y : p.x; };
        Ratio lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        Ratio lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        Ratio lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return CrossKind::Disjoint;
        if (lo < hi) return CrossKind::CollinearOverlap;
        // Collinear intervals meeting in one point meet endpoint-to-endpoint.
        return CrossKind::SharedEndpoint;
    }

    if (a == c || a == d || b == c || b == d) return CrossKind::SharedEndpoint;

    if (o1 == 0 && on_segment_collinear(c, a, b)) return CrossKind::EndpointTouch;
    if (o2 == 0 && on_segment_collinear(d, a, b)) return CrossKind::EndpointTouch;
    if (o3 == 0 && on_segment_collinear(a, c, d)) return CrossKind::EndpointTouch;
    if (o4 == 0 && on_segment_collinear(b, c, d)) return CrossKind::EndpointTouch;

    if (o1 * o2 < 0 && o3 * o4 < 0) return CrossKind::ProperCrossing;
    return CrossKind::Disjoint;
}

Point Frame::to_plane(const Ratio& fx, const Ratio& fy) const {
    Ratio n2 = Ratio(a) * a + Ratio(b) * b;
    return Point{(fx * a - fy * b) / n2, (fx * b + fy * a) / n2};
}

Frame choose_frame(const std::vector<Point>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw Error("coincident vertices");

    auto distinct = [](std::vector<Ratio> vals) {
        std::sort(vals.begin(), vals.end());
        return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
    };

    for (long long k = 0;; ++k) {
        Frame f{1, k};
        std::vector<Ratio> xs, ys;
        xs.reserve(points.size());
        ys.reserve(points.size());
        for (const auto& p : points) {
            xs.push_back(f.fx(p));
            ys.push_back(f.fy(p));
        }
        if (distinct(std::move(xs)) && distinct(std::move(ys))) return f;
    }
}

namespace {

// Scaled integer view of the segment set: one lcm denominator per axis.
// Integer cross products and box tests are much cheaper than mpq arithmetic
// in the O(k^2) pair scan.
struct ScaledSegs {
    std::vector<BigInt> ax, ay, bx, by;
    std::vector<const BigInt*> lox, hix, loy, hiy;

    explicit ScaledSegs(const std::vector<Segment>& segs) {
        BigInt lcm_x = 1, lcm_y = 1;
        for (const auto& s : segs) {
            mpz_lcm(lcm_x.get_mpz_t(), lcm_x.get_mpz_t(), s.a.x.get_den().get_mpz_t());
            mpz_lcm(lcm_x.get_mpz_t(), lcm_x.get_mpz_t(), s.b.x.get_den().get_mpz_t());
            mpz_lcm(lcm_y.get_mpz_t(), lcm_y.get_mpz_t(), s.a.y.get_den().get_mpz_t());
            mpz_lcm(lcm_y.get_mpz_t(), lcm_y.get_mpz_t(), s.b.y.get_den().get_mpz_t());
        }
        auto scale = [](const Ratio& q, const BigInt& lcm) {
            return BigInt(q.get_num() * (lcm / q.get_den()));
        };
        std::size_t k = segs.size();
        ax.reserve(k); ay.reserve(k); bx.reserve(k); by.reserve(k);
        for (const auto& s : segs) {
            ax.push_back(scale(s.a.x, lcm_x));
            ay.push_back(scale(s.a.y, lcm_y));
            bx.push_back(scale(s.b.x, lcm_x));
            by.push_back(scale(s.b.y, lcm_y));
        }
        lox.resize(k); hix.resize(k); loy.resize(k); hiy.resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            bool xle = ax[i] <= bx[i];
            lox[i] = xle ? &ax[i] : &bx[i];
            hix[i] = xle ? &bx[i] : &ax[i];
            bool yle = ay[i] <= by[i];
            loy[i] = yle ? &ay[i] : &by[i];
            hiy[i] = yle ? &by[i] : &ay[i];
        }
    }

    bool boxes_touch(std::size_t i, std::size_t j) const {
        return !(*hix[i] < *lox[j] || *hix[j] < *lox[i] ||
                 *hiy[i] < *loy[j] || *hiy[j] < *loy[i]);
    }
};

}  // namespace

CrossingReport count_crossings(const std::vector<Segment>& segments,
                               const AdjacencyFn& adjacent) {
    CrossingReport report;
    std::size_t k = segments.size();
    if (k < 2) return report;
    ScaledSegs sc(segments);

    for (std::size_t i = 0; i + 1 < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (!sc.boxes_touch(i, j)) continue;
            CrossKind kind = classify(segments[i], segments[j]);
            if (kind == CrossKind::Disjoint) continue;
            bool adj = adjacent && adjacent(i, j);
            switch (kind) {
                case CrossKind::ProperCrossing:
                    ++report.count;
                    report.crossings.push_back({i, j, kind});
                    break;
                case CrossKind::CollinearOverlap:
                    if (adj) {
                        ++report.count;
                        report.crossings.push_back({i, j, kind});
                    } else {
                        report.violations.push_back({i, j, kind});
                    }
                    break;
                case CrossKind::SharedEndpoint:
                case CrossKind::EndpointTouch:
                    if (!adj) report.violations.push_back({i, j, kind});
                    break;
                case CrossKind::Disjoint:
                    break;
            }
        }
    }
    return report;
}

CrossingReport count_cycle_crossings(const std::vector<Point>& positions) {
    std::size_t n = positions.size();
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<Segment> segs;
    segs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        segs.emplace_back(positions[i], positions[(i + 1) % n]);
    auto adjacent = [n](std::size_t i, std::size_t j) {
        std::size_t d = j - i;  // i < j by the scan order
        return d == 1 || d == n - 1;
    };
    return count_crossings(segs, adjacent);
}

std::vector<std::size_t> convex_hull_order(const std::vector<Point>& points) {
    std::size_t n = points.size();
    if (n < 3) throw Error("convex position needs at least 3 points");
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    // Andrew monotone chain over all points; strict turns only.
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        return points[i].y < points[j].y;
    });
    auto build = [&](bool upper) {
        std::vector<std::size_t> chain;
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t i = idx[upper ? n - 1 - t : t];
            while (chain.size() >= 2) {
                int o = orient(points[chain[chain.size() - 2]], points[chain.back()], points[i]);
                if (o > 0) break;
                chain.pop_back();
            }
            chain.push_back(i);
        }
        return chain;
    };
    std::vector<std::size_t> lower = build(false), upper = build(true);
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    return lower;
}

bool in_convex_position(const std::vector<Point>& points) {
    if (points.size() < 3) return false;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) return false;
    std::vector<std::size_t> hull = convex_hull_order(points);
    if (hull.size() != points.size()) return false;
    std::size_t h = hull.size();
    for (std::size_t i = 0; i < h; ++i) {
        if (orient(points[hull[i]], points[hull[(i + 1) % h]], points[hull[(i + 2) % h]]) <= 0)
            return false;
    }
    return true;
}

Ratio dist2(const Point& p, const Point& q) {
    Ratio dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

Ratio point_segment_dist2(const Point& p, const Point& a, const Point& b) {
    Ratio abx = b.x - a.x, aby = b.y - a.y;
    Ratio apx = p.x - a.x, apy = p.y - a.y;
    Ratio len2 = abx * abx + aby * aby;
    if (len2 == 0) return apx * apx + apy * apy;
    Ratio t = (apx * abx + apy * aby) / len2;
    if (t <= 0) return dist2(p, a);
    if (t >= 1) return dist2(p, b);
    Point foot{a.x + t * abx, a.y + t * aby};
    return dist2(p, foot);
}

}  // namespace untangle::geom
