#include "tetherplan/oracle.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

#include "tetherplan/errors.hpp"
#include "tetherplan/predicates.hpp"

namespace tetherplan {

namespace {

// Shared merged-breakpoint walk: for every breakpoint of either polyline,
// checks lo(t) <= path(t) <= hi(t), where lo/hi are linear between the
// reference vertices. Both inputs share the span.
bool path_within_band(const std::vector<PathPoint>& pts,
                      const std::vector<Rat>& ref_t,
                      const std::vector<Rat>& ref_lo,
                      const std::vector<Rat>& ref_hi) {
    std::size_t pi = 0;  // current path segment [pi, pi+1]
    std::size_t ri = 0;  // current reference strip [ri, ri+1]

    auto path_y = [&](const Rat& t) {
        Rat dt = pts[pi + 1].t - pts[pi].t;
        return pts[pi].y + (pts[pi + 1].y - pts[pi].y) * (t - pts[pi].t) / dt;
    };
    auto band_ok = [&](const Rat& t, const Rat& y) {
        Rat dt = ref_t[ri + 1] - ref_t[ri];
        Rat off = t - ref_t[ri];
        Rat lo = ref_lo[ri] * dt + (ref_lo[ri + 1] - ref_lo[ri]) * off;
        Rat hi = ref_hi[ri] * dt + (ref_hi[ri + 1] - ref_hi[ri]) * off;
        Rat yd = y * dt;
        return yd >= lo && yd <= hi;
    };

    Rat t = pts.front().t;
    while (true) {
        while (pi + 2 < pts.size() && pts[pi + 1].t <= t) ++pi;
        while (ri + 2 < ref_t.size() && ref_t[ri + 1] <= t) ++ri;
        if (!band_ok(t, path_y(t))) return false;
        if (t == pts.back().t) break;
        Rat next = pts[pi + 1].t;
        if (ref_t[ri + 1] < next) next = ref_t[ri + 1];
        t = next;
    }
    return true;
}

}  // namespace

bool check_feasible(const Corridor& c, const BetaPath& path) {
    if (path.start.t != c.t0() || path.end.t != c.tn())
        throw SpanMismatch("path span differs from the corridor span");
    return path_within_band(path.points(), c.times, c.lower_y, c.upper_y);
}

bool check_distance(const Instance& inst, const BetaPath& path) {
    if (inst.turns.empty()) throw SpanMismatch("empty instance");
    if (path.start.t != inst.turns.front().t ||
        path.end.t != inst.turns.back().t)
        throw SpanMismatch("path span differs from the instance span");
    std::vector<Rat> t, lo, hi;
    t.reserve(inst.turns.size());
    lo.reserve(inst.turns.size());
    hi.reserve(inst.turns.size());
    for (const TurnPoint& tp : inst.turns) {
        t.push_back(tp.t);
        lo.push_back(tp.h - inst.vertical_budget);
        hi.push_back(tp.h + inst.vertical_budget);
    }
    return path_within_band(path.points(), t, lo, hi);
}

Rat min_slope_oracle(const Corridor& c) {
    std::vector<Rat> cands;
    cands.push_back(Rat(0));
    for (const ReflexPoint& l : c.lower_reflex) {
        for (const ReflexPoint& u : c.upper_reflex) {
            if (u.y < l.y) cands.push_back(pair_slope(l, u));
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // Feasibility is monotone in the slope, so the least feasible candidate
    // is found by binary search.
    if (!feasible_slope(c, cands.back()))
        throw std::logic_error("largest candidate slope must be feasible");
    std::size_t lo = 0, hi = cands.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible_slope(c, cands[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cands[lo];
}

namespace {

using Interval = std::pair<Rat, Rat>;
using IntervalList = std::vector<Interval>;

void normalize(ReachState& state) {
    IntervalList& list = state.intervals;
    std::sort(list.begin(), list.end(),
              [](const Interval& a, const Interval& b) {
                  return a.first < b.first;
              });
    IntervalList out;
    for (const Interval& iv : list) {
        if (iv.first > iv.second) continue;
        if (!out.empty() && iv.first <= out.back().second) {
            if (iv.second > out.back().second) out.back().second = iv.second;
        } else {
            out.push_back(iv);
        }
    }
    list = std::move(out);
}

void assert_within(const ReachState& state, const Rat& lo, const Rat& hi) {
    const IntervalList& list = state.intervals;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].first < lo || list[i].second > hi)
            throw std::logic_error("reach interval escaped the corridor band");
        if (i > 0 && list[i - 1].second >= list[i].first)
            throw std::logic_error("reach intervals not disjoint");
    }
}

// Image of one interval under "advance with one interior turn" across a
// strip with linear walls. The feasible (y0, delta) region is a polygon cut
// by eight lines; the end height is linear over it, so its extrema sit on
// pairwise line intersections.
struct OneTurnClosure {
    // strip data
    Rat dt, f0, f1, c0, c1;
    Rat m;  // entering slope (signed)

    struct Line {
        Rat p, q, r;  // p*y0 + q*delta = r
    };

    std::optional<Interval> apply(const Interval& src) const {
        const Rat& a = src.first;
        const Rat& b = src.second;
        Rat gamma = (c1 - c0) / dt;  // both walls share this slope
        Line lines[8] = {
            {Rat(1), Rat(0), a},                      // y0 >= a
            {Rat(1), Rat(0), b},                      // y0 <= b
            {Rat(0), Rat(1), Rat(0)},                 // delta >= 0
            {Rat(0), Rat(1), dt},                     // delta <= dt
            {Rat(1), m - gamma, c0},                  // turn below ceiling
            {Rat(1), m - gamma, f0},                  // turn above floor
            {Rat(1), m + m, f1 + m * dt},             // end above floor
            {Rat(1), m + m, c1 + m * dt},             // end below ceiling
        };
        auto feasible = [&](const Rat& y0, const Rat& d) {
            if (y0 < a || y0 > b) return false;
            if (d.sign() < 0 || d > dt) return false;
            Rat z = y0 + m * d;
            if (z > c0 + gamma * d) return false;
            if (z < f0 + gamma * d) return false;
            Rat y1 = y0 + m * (d + d - dt);
            if (y1 < f1 || y1 > c1) return false;
            return true;
        };

        bool found = false;
        Rat lo, hi;
        auto consider = [&](const Rat& y0, const Rat& d) {
            if (!feasible(y0, d)) return;
            Rat y1 = y0 + m * (d + d - dt);
            if (!found) {
                lo = hi = y1;
                found = true;
            } else {
                if (y1 < lo) lo = y1;
                if (y1 > hi) hi = y1;
            }
        };

        for (int i = 0; i < 8; ++i) {
            for (int j = i + 1; j < 8; ++j) {
                Rat det = lines[i].p * lines[j].q - lines[j].p * lines[i].q;
                if (det.is_zero()) continue;
                Rat y0 =
                    (lines[i].r * lines[j].q - lines[j].r * lines[i].q) / det;
                Rat d =
                    (lines[i].p * lines[j].r - lines[j].p * lines[i].r) / det;
                consider(y0, d);
            }
        }
        if (!found) return std::nullopt;
        return Interval{lo, hi};
    }
};

}  // namespace

std::size_t min_link_oracle(const Corridor& c, const Rat& beta) {
    if (!feasible_slope(c, beta))
        throw InfeasibleSlope("slope cannot traverse the corridor");
    if (beta.is_zero()) return 1;

    std::size_t n = c.size();
    std::size_t hard_cap = 2 * n + 2;

    for (std::size_t cap = 4;; cap = std::min(cap * 2, hard_cap)) {
        auto fresh_layers = [&](const Rat& t) {
            std::vector<std::array<ReachState, 2>> ls(cap + 1);
            for (std::size_t k = 0; k <= cap; ++k) {
                for (int s = 0; s < 2; ++s) {
                    ls[k][s].link_budget = k;
                    ls[k][s].sign = s == 0 ? +1 : -1;
                    ls[k][s].t = t;
                }
            }
            return ls;
        };
        auto layers = fresh_layers(c.times[0]);
        layers[1][0].intervals.push_back({c.lower_y[0], c.upper_y[0]});
        layers[1][1].intervals.push_back({c.lower_y[0], c.upper_y[0]});

        for (std::size_t j = 0; j + 1 < n; ++j) {
            // close under turns at this breakpoint (zero-length segments
            // never change the minimum but keep the transition complete)
            for (std::size_t k = cap; k-- > 1;) {
                for (int s = 0; s < 2; ++s) {
                    const auto& src = layers[k][s].intervals;
                    if (src.empty()) continue;
                    auto& dst = layers[k + 1][1 - s];
                    dst.intervals.insert(dst.intervals.end(), src.begin(),
                                         src.end());
                    normalize(dst);
                }
            }

            Rat dt = c.times[j + 1] - c.times[j];
            Rat f0 = c.lower_y[j], f1 = c.lower_y[j + 1];
            Rat c0 = c.upper_y[j], c1 = c.upper_y[j + 1];

            auto next = fresh_layers(c.times[j + 1]);
            for (std::size_t k = 1; k <= cap; ++k) {
                for (int s = 0; s < 2; ++s) {
                    if (layers[k][s].intervals.empty()) continue;
                    Rat m = s == 0 ? beta : -beta;
                    // straight advance
                    for (const Interval& iv : layers[k][s].intervals) {
                        Interval moved{max(iv.first + m * dt, f1),
                                       min(iv.second + m * dt, c1)};
                        if (moved.first <= moved.second)
                            next[k][s].intervals.push_back(moved);
                    }
                    // one interior turn
                    if (k + 1 <= cap) {
                        OneTurnClosure ot{dt, f0, f1, c0, c1, m};
                        for (const Interval& iv : layers[k][s].intervals) {
                            if (auto img = ot.apply(iv))
                                next[k + 1][1 - s].intervals.push_back(*img);
                        }
                    }
                }
            }
            for (std::size_t k = 1; k <= cap; ++k) {
                for (int s = 0; s < 2; ++s) {
                    normalize(next[k][s]);
                    assert_within(next[k][s], c.lower_y[j + 1],
                                  c.upper_y[j + 1]);
                }
            }
            layers = std::move(next);
        }

        for (std::size_t k = 1; k <= cap; ++k) {
            if (!layers[k][0].intervals.empty() ||
                !layers[k][1].intervals.empty())
                return k;
        }
        if (cap >= hard_cap)
            throw CapExceeded("no reachable state within 2n+2 links");
    }
}

}  // namespace tetherplan
