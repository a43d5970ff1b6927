#include "tetherplan/minslope.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetherplan/errors.hpp"

namespace tetherplan {

namespace {

using i128 = __int128;

int sgn128(i128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Exact-rational kernel, valid for any corridor.
struct RatK {
    struct Point {
        Rat t, y;
    };
    // > 0 iff c lies strictly above the directed line a->b (a.t < b.t).
    static int orient(const Point& a, const Point& b, const Point& c) {
        return ((b.t - a.t) * (c.y - a.y) - (b.y - a.y) * (c.t - a.t)).sign();
    }
    // sign of slope(p->a) - slope(p->b); requires a.t > p.t and b.t > p.t.
    static int slope_cmp(const Point& p, const Point& a, const Point& b) {
        return ((a.y - p.y) * (b.t - p.t) - (b.y - p.y) * (a.t - p.t)).sign();
    }
    // sign of pairslope(h1->v) - pairslope(h2->v); h1.t, h2.t < v.t.
    static int tangent_cmp(const Point& v, const Point& h1, const Point& h2) {
        return ((h1.y - v.y) * (v.t - h2.t) - (h2.y - v.y) * (v.t - h1.t)).sign();
    }
    static bool less_t(const Point& a, const Point& b) { return a.t < b.t; }
};

// Scaled-integer kernel; coordinate magnitudes are bounded by the corridor
// build so every product below fits int128.
struct IntK {
    struct Point {
        std::int64_t t, y;
    };
    static int orient(const Point& a, const Point& b, const Point& c) {
        return sgn128(static_cast<i128>(b.t - a.t) * (c.y - a.y) -
                      static_cast<i128>(b.y - a.y) * (c.t - a.t));
    }
    static int slope_cmp(const Point& p, const Point& a, const Point& b) {
        return sgn128(static_cast<i128>(a.y - p.y) * (b.t - p.t) -
                      static_cast<i128>(b.y - p.y) * (a.t - p.t));
    }
    static int tangent_cmp(const Point& v, const Point& h1, const Point& h2) {
        return sgn128(static_cast<i128>(h1.y - v.y) * (v.t - h2.t) -
                      static_cast<i128>(h2.y - v.y) * (v.t - h1.t));
    }
    static bool less_t(const Point& a, const Point& b) { return a.t < b.t; }
};

struct RawMcc {
    std::vector<std::size_t> vertex_idx;  // growth order, lower-reflex indices
    std::vector<std::pair<std::size_t, std::size_t>> u_entries;
};

struct PassResult {
    std::vector<RawMcc> mccs;
    std::vector<std::pair<std::size_t, std::size_t>> tangents;  // (lidx, uidx)
};

template <class K>
struct Sweep {
    struct Item {
        typename K::Point pt;
        std::size_t idx;
    };
    std::vector<Item> peaks;
    std::vector<Item> valleys;

    struct Entry {
        typename K::Point pt;
        std::size_t idx;
        typename K::Point cand{};
        std::size_t cand_idx = 0;
        bool has_cand = false;
    };

    PassResult run(bool collect_tangents, bool tie_right) const {
        PassResult res;
        std::vector<Entry> stack;
        std::vector<std::pair<std::size_t, std::size_t>> popped_entries;
        bool open = false;

        auto finalize = [&]() {
            if (!open) return;
            RawMcc out;
            out.vertex_idx.reserve(stack.size());
            for (const Entry& e : stack) out.vertex_idx.push_back(e.idx);
            out.u_entries = std::move(popped_entries);
            for (const Entry& e : stack)
                if (e.has_cand) out.u_entries.emplace_back(e.idx, e.cand_idx);
            res.mccs.push_back(std::move(out));
            popped_entries.clear();
            stack.clear();
            open = false;
        };

        auto fold_cand = [&](Entry& into, const typename K::Point& pt,
                             std::size_t idx) {
            if (!into.has_cand) {
                into.cand = pt;
                into.cand_idx = idx;
                into.has_cand = true;
                return;
            }
            int c = K::slope_cmp(into.pt, pt, into.cand);
            if (c < 0 || (c == 0 && K::less_t(pt, into.cand))) {
                into.cand = pt;
                into.cand_idx = idx;
            }
        };

        std::size_t pi = 0, vi = 0;
        while (pi < peaks.size() || vi < valleys.size()) {
            bool take_peak =
                vi == valleys.size() ||
                (pi < peaks.size() && K::less_t(peaks[pi].pt, valleys[vi].pt));
            if (!take_peak) {
                const Item& v = valleys[vi++];
                if (stack.empty()) continue;
                if (collect_tangents) {
                    // binary search on the unimodal slope-to-v function;
                    // ties span at most two adjacent vertices (no three
                    // stack points are collinear), picked by sweep
                    // orientation so the lexicographic witness survives
                    std::size_t lo = 0, hi = stack.size() - 1;
                    while (lo < hi) {
                        std::size_t mid = (lo + hi) / 2;
                        if (K::tangent_cmp(v.pt, stack[mid].pt,
                                           stack[mid + 1].pt) < 0)
                            lo = mid + 1;
                        else
                            hi = mid;
                    }
                    if (tie_right && lo + 1 < stack.size() &&
                        K::tangent_cmp(v.pt, stack[lo].pt,
                                       stack[lo + 1].pt) == 0)
                        ++lo;
                    if (stack[lo].pt.y > v.pt.y)
                        res.tangents.emplace_back(stack[lo].idx, v.idx);
                }
                fold_cand(stack.back(), v.pt, v.idx);
                continue;
            }

            const Item& x = peaks[pi++];
            if (!open) {
                open = true;
                stack.push_back({x.pt, x.idx});
                continue;
            }

            // Tentative convexity pops; committed only if the new hull edge
            // clears every recorded upper point in its span.
            std::size_t s = stack.size();
            while (s >= 2 &&
                   K::orient(stack[s - 2].pt, x.pt, stack[s - 1].pt) <= 0)
                --s;

            const Entry& top = stack[s - 1];
            bool blocked = false;
            for (std::size_t k = s - 1; k < stack.size(); ++k) {
                if (stack[k].has_cand &&
                    K::orient(top.pt, x.pt, stack[k].cand) < 0) {
                    blocked = true;
                    break;
                }
            }

            if (blocked) {
                finalize();
                open = true;
                stack.push_back({x.pt, x.idx});
                continue;
            }

            while (stack.size() > s) {
                Entry popped = std::move(stack.back());
                stack.pop_back();
                if (popped.has_cand) {
                    popped_entries.emplace_back(popped.idx, popped.cand_idx);
                    fold_cand(stack.back(), popped.cand, popped.cand_idx);
                }
            }
            stack.push_back({x.pt, x.idx});
        }
        finalize();
        return res;
    }
};

template <class K, class TOf, class YOf>
PassResult run_kernel_pass(const Corridor& c, SweepDirection dir, TOf t_of,
                           YOf y_of, bool collect_tangents) {
    Sweep<K> sw;
    auto fill = [&](const std::vector<ReflexPoint>& list, bool lower_side,
                    std::vector<typename Sweep<K>::Item>& out) {
        out.reserve(list.size());
        if (dir == SweepDirection::forward) {
            for (std::size_t i = 0; i < list.size(); ++i)
                out.push_back(
                    {{t_of(list[i], false), y_of(list[i], lower_side)}, i});
        } else {
            for (std::size_t i = list.size(); i-- > 0;)
                out.push_back(
                    {{t_of(list[i], true), y_of(list[i], lower_side)}, i});
        }
    };
    fill(c.lower_reflex, true, sw.peaks);
    fill(c.upper_reflex, false, sw.valleys);
    return sw.run(collect_tangents, dir == SweepDirection::backward);
}

PassResult run_pass(const Corridor& c, SweepDirection dir,
                    bool collect_tangents) {
    if (c.has_scaled) {
        auto t_of = [&](const ReflexPoint& r, bool mirrored) {
            std::int64_t v = c.st[r.vertex_index];
            return mirrored ? -v : v;
        };
        auto y_of = [&](const ReflexPoint& r, bool lower_side) {
            return lower_side ? c.sly[r.vertex_index] : c.suy[r.vertex_index];
        };
        return run_kernel_pass<IntK>(c, dir, t_of, y_of, collect_tangents);
    }
    auto t_of = [&](const ReflexPoint& r, bool mirrored) {
        return mirrored ? -r.t : r.t;
    };
    auto y_of = [&](const ReflexPoint& r, bool) { return r.y; };
    return run_kernel_pass<RatK>(c, dir, t_of, y_of, collect_tangents);
}

Mcc make_mcc(const Corridor& c, const RawMcc& raw, SweepDirection dir) {
    Mcc m;
    m.direction = dir;
    m.anchor_index = raw.vertex_idx.front();
    m.end_index = raw.vertex_idx.back();
    m.vertices.reserve(raw.vertex_idx.size());
    for (std::size_t li : raw.vertex_idx)
        m.vertices.push_back(c.lower_reflex[li]);
    for (const auto& [li, ui] : raw.u_entries)
        m.u_table.emplace(li, c.upper_reflex[ui]);
    return m;
}

// sign of pairslope(l1,u1) - pairslope(l2,u2), overlap assumed
int cmp_pair_slopes(const ReflexPoint& l1, const ReflexPoint& u1,
                    const ReflexPoint& l2, const ReflexPoint& u2) {
    Rat dy1 = l1.y - u1.y, dt1 = (l1.t - u1.t).abs();
    Rat dy2 = l2.y - u2.y, dt2 = (l2.t - u2.t).abs();
    return (dy1 * dt2 - dy2 * dt1).sign();
}

// same comparison through the scaled mirror when available
int cmp_pairs(const Corridor& c, const ReflexPoint& l1, const ReflexPoint& u1,
              const ReflexPoint& l2, const ReflexPoint& u2) {
    if (!c.has_scaled) return cmp_pair_slopes(l1, u1, l2, u2);
    auto sy = [&](const ReflexPoint& r) {
        return r.chain == ChainSide::lower ? c.sly[r.vertex_index]
                                           : c.suy[r.vertex_index];
    };
    auto adt = [&](const ReflexPoint& a, const ReflexPoint& b) {
        std::int64_t d = c.st[a.vertex_index] - c.st[b.vertex_index];
        return static_cast<i128>(d < 0 ? -d : d);
    };
    i128 dy1 = static_cast<i128>(sy(l1)) - sy(u1);
    i128 dy2 = static_cast<i128>(sy(l2)) - sy(u2);
    return sgn128(dy1 * adt(l2, u2) - dy2 * adt(l1, u1));
}

// Position of the reflex point with the given corridor vertex index inside
// an (index-sorted) reflex list.
std::size_t reflex_pos(const std::vector<ReflexPoint>& list,
                       std::size_t vertex_index) {
    auto it = std::lower_bound(list.begin(), list.end(), vertex_index,
                               [](const ReflexPoint& r, std::size_t vi) {
                                   return r.vertex_index < vi;
                               });
    return static_cast<std::size_t>(it - list.begin());
}

// Coordinate views over reflex points: exact rationals, or the corridor's
// scaled int64 mirror when present.
struct RatView {
    const Corridor& c;
    Rat t(const ReflexPoint& r) const { return r.t; }
    Rat y(const ReflexPoint& r) const { return r.y; }
    Rat vertex_t(std::size_t vi) const { return c.times[vi]; }
    // sign of pairslope(l,u1) - pairslope(l,u2)
    int cmp_from(const ReflexPoint& l, const ReflexPoint& u1,
                 const ReflexPoint& u2) const {
        return cmp_pair_slopes(l, u1, l, u2);
    }
};

struct IntView {
    const Corridor& c;
    std::int64_t t(const ReflexPoint& r) const { return c.st[r.vertex_index]; }
    std::int64_t vertex_t(std::size_t vi) const { return c.st[vi]; }
    std::int64_t y(const ReflexPoint& r) const {
        return r.chain == ChainSide::lower ? c.sly[r.vertex_index]
                                           : c.suy[r.vertex_index];
    }
    int cmp_from(const ReflexPoint& l, const ReflexPoint& u1,
                 const ReflexPoint& u2) const {
        i128 dy1 = static_cast<i128>(y(l)) - y(u1);
        i128 dy2 = static_cast<i128>(y(l)) - y(u2);
        std::int64_t lt = t(l);
        i128 dt1 = lt >= t(u1) ? static_cast<i128>(lt) - t(u1)
                               : static_cast<i128>(t(u1)) - lt;
        i128 dt2 = lt >= t(u2) ? static_cast<i128>(lt) - t(u2)
                               : static_cast<i128>(t(u2)) - lt;
        return sgn128(dy1 * dt2 - dy2 * dt1);
    }
};

// Per-chain sweep shared by mcc_min_slope and min_slope_linear: first chain
// vertex (growth order) whose steepest overlapping partner in the covered
// span is visible.
template <class View>
std::optional<std::pair<std::size_t, std::size_t>> chain_best_pair_impl(
    const Corridor& c, const View& view,
    const std::vector<std::size_t>& vertex_idx, SweepDirection dir) {
    if (vertex_idx.empty()) return std::nullopt;
    bool fwd = dir == SweepDirection::forward;
    const auto& U = c.upper_reflex;
    if (U.empty()) return std::nullopt;

    std::size_t end_vi = c.lower_reflex[vertex_idx.back()].vertex_index;
    std::size_t span_vi;
    if (fwd)
        span_vi = std::min(end_vi + 1, c.size() - 1);
    else
        span_vi = end_vi == 0 ? 0 : end_vi - 1;
    auto span_end_t = view.vertex_t(span_vi);

    auto less_by_t = [&](const ReflexPoint& r, const decltype(span_end_t)& t) {
        return view.t(r) < t;
    };
    // window of upper reflex indices inside [lo_t, hi_t]
    auto window = [&](const decltype(span_end_t)& lo_t,
                      const decltype(span_end_t)& hi_t) {
        std::size_t b = static_cast<std::size_t>(
            std::lower_bound(U.begin(), U.end(), lo_t, less_by_t) - U.begin());
        std::size_t e = static_cast<std::size_t>(
            std::upper_bound(U.begin(), U.end(), hi_t,
                             [&](const decltype(span_end_t)& t,
                                 const ReflexPoint& r) { return t < view.t(r); }) -
            U.begin());
        return std::pair{b, e};
    };

    for (std::size_t li : vertex_idx) {
        const ReflexPoint& p = c.lower_reflex[li];
        auto [b, e] =
            fwd ? window(view.t(p), span_end_t) : window(span_end_t, view.t(p));
        const ReflexPoint* best = nullptr;
        std::size_t best_ui = 0;
        for (std::size_t j = b; j < e; ++j) {
            const ReflexPoint& u = U[j];
            if (view.t(u) == view.t(p)) continue;
            if (view.y(u) >= view.y(p)) continue;
            if (best == nullptr || view.cmp_from(p, u, *best) > 0) {
                best = &u;
                best_ui = j;
            }
        }
        if (best != nullptr && pair_visible(c, p, *best))
            return std::pair{li, best_ui};
    }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> chain_best_pair(
    const Corridor& c, const std::vector<std::size_t>& vertex_idx,
    SweepDirection dir) {
    if (c.has_scaled)
        return chain_best_pair_impl(c, IntView{c}, vertex_idx, dir);
    return chain_best_pair_impl(c, RatView{c}, vertex_idx, dir);
}

}  // namespace

SlopeSolution min_slope_bruteforce(const Corridor& c) {
    SlopeSolution sol;
    sol.method = SlopeSolution::Method::bruteforce;

    // the straightforward quadratic reference: walk every pair, compute the
    // slope of the overlapping ones, keep the largest; first hit in scan
    // order wins ties, which is exactly (lower.t, upper.t) lexicographic
    bool found = false;
    std::size_t bl = 0, bu = 0;
    Rat best;
    const auto& L = c.lower_reflex;
    const auto& U = c.upper_reflex;
    for (std::size_t i = 0; i < L.size(); ++i) {
        for (std::size_t j = 0; j < U.size(); ++j) {
            if (!pair_overlaps(L[i], U[j])) continue;
            Rat s = pair_slope(L[i], U[j]);
            if (!found || s > best) {
                found = true;
                best = s;
                bl = i;
                bu = j;
            }
        }
    }

    if (!found) {
        sol.beta_star = Rat(0);
        return sol;
    }
    sol.beta_star = best;
    sol.witness = PairSlope{L[bl], U[bu], best};
    if (!(sol.beta_star < c.alpha))
        throw std::logic_error("slope bound violated: beta* >= alpha");
    return sol;
}

std::vector<Mcc> build_mccs(const Corridor& c, SweepDirection dir) {
    PassResult res = run_pass(c, dir, false);
    std::vector<Mcc> out;
    out.reserve(res.mccs.size());
    for (const RawMcc& raw : res.mccs) out.push_back(make_mcc(c, raw, dir));
    return out;
}

std::optional<PairSlope> mcc_min_slope(const Corridor& c, const Mcc& mcc) {
    std::vector<std::size_t> idx;
    idx.reserve(mcc.vertices.size());
    for (const ReflexPoint& v : mcc.vertices)
        idx.push_back(reflex_pos(c.lower_reflex, v.vertex_index));
    auto r = chain_best_pair(c, idx, mcc.direction);
    if (!r) return std::nullopt;
    const ReflexPoint& l = c.lower_reflex[r->first];
    const ReflexPoint& u = c.upper_reflex[r->second];
    return PairSlope{l, u, pair_slope(l, u)};
}

SlopeSolution min_slope_linear(const Corridor& c) {
    SlopeSolution sol;
    sol.method = SlopeSolution::Method::linear;

    bool found = false;
    std::size_t bl = 0, bu = 0;
    auto consider = [&](std::size_t li, std::size_t ui) {
        const ReflexPoint& l = c.lower_reflex[li];
        const ReflexPoint& u = c.upper_reflex[ui];
        if (u.y >= l.y) return;
        if (!found) {
            found = true;
            bl = li;
            bu = ui;
            return;
        }
        int cmp = cmp_pairs(c, l, u, c.lower_reflex[bl], c.upper_reflex[bu]);
        if (cmp > 0 ||
            (cmp == 0 && (l.t < c.lower_reflex[bl].t ||
                          (l.t == c.lower_reflex[bl].t &&
                           u.t < c.upper_reflex[bu].t)))) {
            bl = li;
            bu = ui;
        }
    };

    for (SweepDirection dir :
         {SweepDirection::forward, SweepDirection::backward}) {
        PassResult res = run_pass(c, dir, true);
        for (const auto& [li, ui] : res.tangents) consider(li, ui);
        for (const RawMcc& raw : res.mccs) {
            if (auto r = chain_best_pair(c, raw.vertex_idx, dir))
                consider(r->first, r->second);
        }
    }

    if (!found) {
        sol.beta_star = Rat(0);
        return sol;
    }
    sol.beta_star = pair_slope(c.lower_reflex[bl], c.upper_reflex[bu]);
    sol.witness =
        PairSlope{c.lower_reflex[bl], c.upper_reflex[bu], sol.beta_star};
    if (!(sol.beta_star < c.alpha))
        throw std::logic_error("slope bound violated: beta* >= alpha");
    return sol;
}

}  // namespace tetherplan
