#include "tetherplan/predicates.hpp"

#include <algorithm>

#include "tetherplan/errors.hpp"

namespace tetherplan {

bool pair_overlaps(const ReflexPoint& l, const ReflexPoint& u) {
    if (l.chain != ChainSide::lower)
        throw ChainMismatch("first argument must be a lower reflex point");
    if (u.chain != ChainSide::upper)
        throw ChainMismatch("second argument must be an upper reflex point");
    return u.y < l.y;
}

Rat pair_slope(const ReflexPoint& l, const ReflexPoint& u) {
    if (l.t == u.t) throw VerticalPair("reflex pair shares a time coordinate");
    return (l.y - u.y).abs() / (l.t - u.t).abs();
}

namespace {

using i128 = __int128;

// Scaled-integer visibility: all quantities fit int128 by the corridor's
// scaled-coordinate bound.
bool visible_scaled(const Corridor& c, std::size_t ia, std::int64_t ay,
                    std::size_t ib, std::int64_t by) {
    std::int64_t at = c.st[ia], bt = c.st[ib];
    i128 dt = bt - at;
    i128 dy = static_cast<i128>(by) - ay;
    for (std::size_t k = ia; k <= ib; ++k) {
        i128 seg = static_cast<i128>(ay) * dt + dy * (c.st[k] - at);
        if (seg < static_cast<i128>(c.sly[k]) * dt) return false;
        if (seg > static_cast<i128>(c.suy[k]) * dt) return false;
    }
    return true;
}

}  // namespace

bool pair_visible(const Corridor& c, const ReflexPoint& l,
                  const ReflexPoint& u) {
    const ReflexPoint& a = l.t <= u.t ? l : u;
    const ReflexPoint& b = l.t <= u.t ? u : l;
    if (a.t == b.t) {
        // degenerate vertical segment; inside iff both heights are in band
        std::size_t k = a.vertex_index;
        auto in = [&](const Rat& y) {
            return y >= c.lower_y[k] && y <= c.upper_y[k];
        };
        return in(a.y) && in(b.y);
    }
    if (c.has_scaled) {
        std::int64_t ay = a.chain == ChainSide::lower ? c.sly[a.vertex_index]
                                                      : c.suy[a.vertex_index];
        std::int64_t by = b.chain == ChainSide::lower ? c.sly[b.vertex_index]
                                                      : c.suy[b.vertex_index];
        return visible_scaled(c, a.vertex_index, ay, b.vertex_index, by);
    }
    Rat dt = b.t - a.t;
    Rat dy = b.y - a.y;
    for (std::size_t k = a.vertex_index; k <= b.vertex_index; ++k) {
        Rat seg = a.y * dt + dy * (c.times[k] - a.t);
        if (seg < c.lower_y[k] * dt) return false;
        if (seg > c.upper_y[k] * dt) return false;
    }
    return true;
}

bool feasible_slope(const Corridor& c, const Rat& beta) {
    if (beta.sign() < 0 || beta > c.alpha)
        throw SlopeOutOfRange("slope " + beta.to_string() +
                              " outside [0, alpha]");

    if (c.has_scaled && beta.is_small()) {
        // slope P/Q in scaled coordinates; heights carried as y' * Q
        constexpr i128 lim = i128(1) << 62;
        i128 p = static_cast<i128>(beta.small_num()) * c.y_scale;
        i128 q = static_cast<i128>(beta.small_den()) * c.t_scale;
        if (p < lim && q < lim) {
            i128 lo = c.sly[0] * q, hi = c.suy[0] * q;
            for (std::size_t k = 0; k + 1 < c.size(); ++k) {
                i128 step = p * (c.st[k + 1] - c.st[k]);
                lo -= step;
                hi += step;
                i128 wl = c.sly[k + 1] * q, wu = c.suy[k + 1] * q;
                if (lo < wl) lo = wl;
                if (hi > wu) hi = wu;
                if (lo > hi) return false;
            }
            return true;
        }
    }

    Rat lo = c.lower_y.front();
    Rat hi = c.upper_y.front();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        Rat dt = c.times[k + 1] - c.times[k];
        lo -= beta * dt;
        hi += beta * dt;
        lo = max(lo, c.lower_y[k + 1]);
        hi = min(hi, c.upper_y[k + 1]);
        if (lo > hi) return false;
    }
    return true;
}

}  // namespace tetherplan
