#include "tetherplan/corridor.hpp"

#include <algorithm>
#include <numeric>

#include "tetherplan/errors.hpp"

namespace tetherplan {

namespace {

constexpr std::int64_t kScaledMax = std::numeric_limits<std::int32_t>::max();

// Least common multiple of the denominators, or 0 when it cannot be kept
// within the scaled-integer budget.
std::int64_t den_lcm(std::int64_t acc, const Rat& r) {
    if (acc == 0 || !r.is_small()) return 0;
    std::int64_t d = r.small_den();
    std::int64_t g = std::gcd(acc, d);
    __int128 l = static_cast<__int128>(acc / g) * d;
    if (l > kScaledMax) return 0;
    return static_cast<std::int64_t>(l);
}

bool scale_into(const std::vector<Rat>& vals, std::int64_t scale,
                std::vector<std::int64_t>& out) {
    out.clear();
    out.reserve(vals.size());
    for (const Rat& v : vals) {
        if (!v.is_small()) return false;
        __int128 s = static_cast<__int128>(v.small_num()) *
                     (scale / v.small_den());
        if (s > kScaledMax || s < -kScaledMax) return false;
        out.push_back(static_cast<std::int64_t>(s));
    }
    return true;
}

}  // namespace

std::size_t Corridor::strip_of(const Rat& t) const {
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - times.begin());
    if (idx == 0) return 0;
    if (idx >= times.size()) return times.size() - 2;
    return idx - 1;
}

Rat Corridor::lower_at(const Rat& t) const {
    std::size_t i = strip_of(t);
    Rat dt = times[i + 1] - times[i];
    return lower_y[i] + (lower_y[i + 1] - lower_y[i]) * (t - times[i]) / dt;
}

Rat Corridor::upper_at(const Rat& t) const {
    return lower_at(t) + budget + budget;
}

std::pair<std::vector<ReflexPoint>, std::vector<ReflexPoint>> reflex_points(
    const Corridor& c) {
    std::vector<ReflexPoint> lower, upper;
    std::size_t n = c.size();
    auto seg_up = [&](std::size_t i) {  // segment i ascends
        return c.lower_y[i + 1] > c.lower_y[i];
    };
    for (std::size_t i = 0; i < n; ++i) {
        bool peak, valley;
        if (i == 0) {
            peak = !seg_up(0);  // one-sided maximum toward the interior
            valley = seg_up(0);
        } else if (i == n - 1) {
            peak = seg_up(i - 1);
            valley = !seg_up(i - 1);
        } else {
            peak = seg_up(i - 1) && !seg_up(i);
            valley = !seg_up(i - 1) && seg_up(i);
        }
        if (peak)
            lower.push_back({ChainSide::lower, i, c.times[i], c.lower_y[i]});
        if (valley)
            upper.push_back({ChainSide::upper, i, c.times[i], c.upper_y[i]});
    }
    return {std::move(lower), std::move(upper)};
}

Corridor build_corridor(const Instance& instance) {
    instance.validate();

    Corridor c;
    c.alpha = instance.alpha;
    c.budget = instance.vertical_budget;
    c.times.reserve(instance.turns.size());
    c.lower_y.reserve(instance.turns.size());
    c.upper_y.reserve(instance.turns.size());
    for (const TurnPoint& tp : instance.turns) {
        c.times.push_back(tp.t);
        c.lower_y.push_back(tp.h - instance.vertical_budget);
        c.upper_y.push_back(tp.h + instance.vertical_budget);
    }

    auto [lo, up] = reflex_points(c);
    c.lower_reflex = std::move(lo);
    c.upper_reflex = std::move(up);

    std::int64_t ts = 1, ys = 1;
    for (const Rat& t : c.times) ts = den_lcm(ts, t);
    for (const Rat& y : c.lower_y) ys = den_lcm(ys, y);
    for (const Rat& y : c.upper_y) ys = den_lcm(ys, y);
    if (ts != 0 && ys != 0 && scale_into(c.times, ts, c.st) &&
        scale_into(c.lower_y, ys, c.sly) && scale_into(c.upper_y, ys, c.suy)) {
        c.has_scaled = true;
        c.t_scale = ts;
        c.y_scale = ys;
    } else {
        c.st.clear();
        c.sly.clear();
        c.suy.clear();
    }
    return c;
}

}  // namespace tetherplan
