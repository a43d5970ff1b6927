#include "tetherplan/minlink.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetherplan/errors.hpp"

namespace tetherplan {

std::vector<PathPoint> BetaPath::points() const {
    std::vector<PathPoint> pts;
    pts.reserve(turns.size() + 2);
    pts.push_back(start);
    pts.insert(pts.end(), turns.begin(), turns.end());
    pts.push_back(end);
    return pts;
}

std::vector<int> BetaPath::sign_sequence() const {
    std::vector<int> signs;
    if (beta.is_zero()) return signs;
    auto pts = points();
    signs.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        signs.push_back((pts[i + 1].y - pts[i].y).sign());
    return signs;
}

Rat BetaPath::y_at(const Rat& t) const {
    auto pts = points();
    if (t < pts.front().t || t > pts.back().t)
        throw SpanMismatch("time outside the path span");
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (t > pts[i + 1].t) continue;
        Rat dt = pts[i + 1].t - pts[i].t;
        return pts[i].y + (pts[i + 1].y - pts[i].y) * (t - pts[i].t) / dt;
    }
    return pts.back().y;
}

namespace {

// Corridor walls plus the backward-feasibility envelopes at a fixed slope,
// optionally time-mirrored so one rightward extension routine serves both
// directions. bh[i] / bl[i] bound the heights at times[i] from which the
// rest of the band can still be traversed.
struct Band {
    std::vector<Rat> t, wl, wh;
    std::vector<Rat> bl, bh;
    Rat beta;

    static Band make(const Corridor& c, const Rat& beta, bool mirrored) {
        Band b;
        b.beta = beta;
        std::size_t n = c.size();
        b.t.resize(n);
        b.wl.resize(n);
        b.wh.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t src = mirrored ? n - 1 - i : i;
            b.t[i] = mirrored ? -c.times[src] : c.times[src];
            b.wl[i] = c.lower_y[src];
            b.wh[i] = c.upper_y[src];
        }
        b.bl.resize(n);
        b.bh.resize(n);
        b.bl[n - 1] = b.wl[n - 1];
        b.bh[n - 1] = b.wh[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            Rat dt = b.t[i + 1] - b.t[i];
            b.bh[i] = min(b.wh[i], b.bh[i + 1] + beta * dt);
            b.bl[i] = max(b.wl[i], b.bl[i + 1] - beta * dt);
        }
        return b;
    }

    std::size_t strip_of(const Rat& tt) const {
        auto it = std::upper_bound(t.begin(), t.end(), tt);
        std::size_t idx = static_cast<std::size_t>(it - t.begin());
        if (idx == 0) return 0;
        if (idx >= t.size()) return t.size() - 2;
        return idx - 1;
    }
};

struct Extension {
    std::vector<PathPoint> turns;
    PathPoint end;
    int first_sign = 0;  // sign actually used for the first segment
};

// Advance from `cur` with slope sign*beta as far as the opposing
// backward-feasibility wall allows, turning exactly where continuing would
// strictly violate it. Terminates at the band's right boundary.
Extension extend(const Band& B, PathPoint cur, int sign) {
    Extension res;
    res.first_sign = sign;
    if (cur.t == B.t.back()) {
        res.end = cur;
        return res;
    }
    bool start_flip_done = false;

    while (true) {
        Rat m = sign > 0 ? B.beta : -B.beta;
        bool found = false;
        Rat hit_t, hit_y;

        for (std::size_t j = B.strip_of(cur.t); j + 1 < B.t.size(); ++j) {
            Rat a = max(B.t[j], cur.t);
            Rat b = B.t[j + 1];
            if (a >= b) continue;
            Rat ray_a = cur.y + m * (a - cur.t);
            Rat ray_b = cur.y + m * (b - cur.t);

            // Wall on this strip = min (sign>0) / max (sign<0) of the chain
            // edge and the envelope ray propagated back from the strip end.
            Rat dt = b - B.t[j];
            auto chain_at = [&](const Rat& tt, const std::vector<Rat>& w) {
                return w[j] + (w[j + 1] - w[j]) * (tt - B.t[j]) / dt;
            };
            Rat la0, la1, lb0, lb1;
            if (sign > 0) {
                la0 = chain_at(a, B.wh);
                lb0 = B.wh[j + 1];
                lb1 = B.bh[j + 1];
                la1 = lb1 + B.beta * (b - a);
            } else {
                la0 = chain_at(a, B.wl);
                lb0 = B.wl[j + 1];
                lb1 = B.bl[j + 1];
                la1 = lb1 - B.beta * (b - a);
            }

            auto check = [&](const Rat& la, const Rat& lb) {
                // d = violation amount; first root of d == 0 in [a, b]
                Rat da = sign > 0 ? ray_a - la : la - ray_a;
                Rat db = sign > 0 ? ray_b - lb : lb - ray_b;
                if (db.sign() <= 0) return;
                Rat tx;
                if (da.sign() >= 0) {
                    tx = a;  // violated (or tangent and worsening) at entry
                } else {
                    tx = a + (b - a) * (-da) / (db - da);
                }
                if (!found || tx < hit_t) {
                    found = true;
                    hit_t = tx;
                }
            };
            check(la0, lb0);
            check(la1, lb1);
            if (found) {
                hit_y = cur.y + m * (hit_t - cur.t);
                break;
            }
        }

        if (!found) {
            res.end = {B.t.back(), cur.y + m * (B.t.back() - cur.t)};
            return res;
        }
        if (hit_t == cur.t) {
            // The chosen sign cannot advance at all; legal only once, at the
            // anchor, where the pair line meets the envelope head-on.
            if (!res.turns.empty() || start_flip_done)
                throw std::logic_error("greedy construction stalled");
            start_flip_done = true;
            sign = -sign;
            res.first_sign = sign;
            continue;
        }
        cur = {hit_t, hit_y};
        res.turns.push_back(cur);
        sign = -sign;
    }
}

using i128 = __int128;

int sgn128(i128 v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Integer twin of Band/extend for corridors with a scaled mirror. Heights
// are carried as y' * Q so the slope advances them by exactly P per scaled
// time unit; every ray the construction walks lies on a line with an
// integer constant (the pair line through grid points, then the envelope
// ray it turns onto), so the whole walk stays in int128 and turn points
// come out as exact small rationals.
struct ScaledBand {
    std::vector<std::int64_t> t;
    std::vector<i128> bl, bh;  // backward-feasibility envelopes * Q
    i128 P = 0, Q = 1;
    bool mirrored = false;

    static ScaledBand make(const Corridor& c, i128 p, i128 q, bool mirrored) {
        ScaledBand b;
        b.P = p;
        b.Q = q;
        b.mirrored = mirrored;
        std::size_t n = c.size();
        b.t.resize(n);
        b.bl.resize(n);
        b.bh.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t src = mirrored ? n - 1 - i : i;
            b.t[i] = mirrored ? -c.st[src] : c.st[src];
        }
        auto wl = [&](std::size_t i) {
            std::size_t src = mirrored ? n - 1 - i : i;
            return static_cast<i128>(c.sly[src]) * q;
        };
        auto wh = [&](std::size_t i) {
            std::size_t src = mirrored ? n - 1 - i : i;
            return static_cast<i128>(c.suy[src]) * q;
        };
        b.bl[n - 1] = wl(n - 1);
        b.bh[n - 1] = wh(n - 1);
        for (std::size_t i = n - 1; i-- > 0;) {
            i128 step = p * (b.t[i + 1] - b.t[i]);
            b.bh[i] = std::min(wh(i), b.bh[i + 1] + step);
            b.bl[i] = std::max(wl(i), b.bl[i + 1] - step);
        }
        return b;
    }

    std::size_t strip_of(std::int64_t tt) const {
        auto it = std::upper_bound(t.begin(), t.end(), tt);
        std::size_t idx = static_cast<std::size_t>(it - t.begin());
        if (idx == 0) return 0;
        if (idx >= t.size()) return t.size() - 2;
        return idx - 1;
    }
};

struct ScaledTurn {
    i128 tn, td;  // scaled time, exact fraction td > 0
    i128 vn;      // height * Q * td (so y' = vn / (td * Q))
};

struct ScaledExtension {
    std::vector<ScaledTurn> turns;
    i128 end_vq = 0;  // height * Q at the band's right boundary
    int first_sign = 0;
};

// Rightward walk with slope sign*P/Q from a grid vertex, turning exactly
// where continuing would strictly violate the opposing envelope. All
// crossings happen on envelope rays of the opposite slope, so each turn
// solves K + sPt == C - sPt in integers.
ScaledExtension extend_scaled(const ScaledBand& B, std::int64_t t0, i128 v0q,
                              int sign) {
    ScaledExtension res;
    res.first_sign = sign;
    if (t0 == B.t.back()) {
        res.end_vq = v0q;
        return res;
    }

    i128 sp = sign > 0 ? B.P : -B.P;
    i128 K = v0q - sp * t0;  // ray: V(t) = K + sp * t
    bool start_flip_done = false;
    // exact current position (turn points are rational)
    i128 cur_tn = t0, cur_td = 1;

    std::size_t j = B.strip_of(t0);
    while (true) {
        i128 ray_end = K + sp * B.t[j + 1];
        bool viol = sign > 0 ? ray_end > B.bh[j + 1] : ray_end < B.bl[j + 1];
        if (!viol) {
            if (j + 2 == B.t.size()) {
                res.end_vq = ray_end;
                return res;
            }
            ++j;
            continue;
        }

        // The envelope ray minorizes the chain wall on every strip (rays can
        // never catch a chain edge from inside), so the crossing is always
        // onto the envelope ray through the strip-end value.
        i128 env = sign > 0 ? B.bh[j + 1] : B.bl[j + 1];
        i128 C = env + sp * B.t[j + 1];  // opposing ray: V(t) = C - sp * t
        // K + sp t == C - sp t  =>  t = (C - K) / (2 sp)
        i128 tn = C - K, td = 2 * sp;
        if (td < 0) {
            tn = -tn;
            td = -td;
        }
        // compare with the current position: equal only for the start flip
        if (tn * cur_td == cur_tn * td) {
            if (!res.turns.empty() || start_flip_done)
                throw std::logic_error("greedy construction stalled");
            start_flip_done = true;
            sign = -sign;
            sp = -sp;
            K = v0q - sp * t0;
            res.first_sign = sign;
            continue;
        }
        if (tn * cur_td < cur_tn * td)
            throw std::logic_error("greedy construction moved backward");

        ScaledTurn turn;
        turn.tn = tn;
        turn.td = td;
        turn.vn = K * td + sp * tn;  // V(t) * td
        res.turns.push_back(turn);

        cur_tn = tn;
        cur_td = td;
        sign = -sign;
        sp = -sp;
        K = C;  // the new ray is exactly the envelope ray
        // stay in the same strip; the new ray re-checks its end
    }
}

BetaPath assemble(const Rat& beta, std::vector<PathPoint> pts) {
    // drop exact duplicates, then merge collinear joints
    std::vector<PathPoint> clean;
    for (const PathPoint& p : pts) {
        if (!clean.empty() && clean.back() == p) continue;
        clean.push_back(p);
    }
    std::vector<PathPoint> merged;
    for (const PathPoint& p : clean) {
        while (merged.size() >= 2) {
            const PathPoint& a = merged[merged.size() - 2];
            const PathPoint& b = merged.back();
            Rat cross = (b.t - a.t) * (p.y - a.y) - (b.y - a.y) * (p.t - a.t);
            if (cross.is_zero())
                merged.pop_back();
            else
                break;
        }
        merged.push_back(p);
    }
    BetaPath path;
    path.beta = beta;
    path.start = merged.front();
    path.end = merged.back();
    path.turns.assign(merged.begin() + 1, merged.end() - 1);

    // every segment must run at exactly +-beta and alternate strictly
    int prev = 0;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        Rat dy = merged[i + 1].y - merged[i].y;
        Rat dt = merged[i + 1].t - merged[i].t;
        if (dy.abs() != beta * dt)
            throw std::logic_error("constructed segment off the slope grid");
        int s = dy.sign();
        if (beta.sign() > 0 && (s == 0 || s == prev))
            throw std::logic_error("constructed segments do not alternate");
        prev = s;
    }
    return path;
}

}  // namespace

BetaPath build_min_link_path(const Corridor& c, const SlopeSolution& sol) {
    if (sol.beta_star.sign() < 0)
        throw InfeasibleSlope("negative slope");

    if (sol.beta_star.is_zero()) {
        Rat lo = c.lower_y.front(), hi = c.upper_y.front();
        bool first = true;
        for (const ReflexPoint& r : c.lower_reflex) {
            if (first || r.y > lo) lo = r.y;
            first = false;
        }
        if (c.lower_reflex.empty()) lo = max(c.lower_y.front(), c.lower_y.back());
        first = true;
        for (const ReflexPoint& r : c.upper_reflex) {
            if (first || r.y < hi) hi = r.y;
            first = false;
        }
        if (c.upper_reflex.empty()) hi = min(c.upper_y.front(), c.upper_y.back());
        if (lo > hi)
            throw InfeasibleSlope("horizontal band is empty at slope zero");
        Rat y = (lo + hi) / Rat(2);
        BetaPath path;
        path.beta = Rat(0);
        path.start = {c.t0(), y};
        path.end = {c.tn(), y};
        return path;
    }

    if (!sol.witness)
        throw InfeasibleSlope("positive slope without a witness pair");
    if (!feasible_slope(c, sol.beta_star))
        throw InfeasibleSlope("slope is not feasible for this corridor");

    const ReflexPoint& wl = sol.witness->lower;
    const ReflexPoint& wu = sol.witness->upper;
    const ReflexPoint& ew = wl.t <= wu.t ? wl : wu;
    PathPoint earlier{wl.t, wl.y}, later{wu.t, wu.y};
    if (later.t < earlier.t) std::swap(earlier, later);
    int pair_sign = (later.y - earlier.y).sign();

    if (c.has_scaled && sol.beta_star.is_small()) {
        constexpr i128 glim = i128(1) << 31;
        i128 p = static_cast<i128>(sol.beta_star.small_num()) * c.y_scale;
        i128 q = static_cast<i128>(sol.beta_star.small_den()) * c.t_scale;
        if (p < glim && q < glim) {
            std::int64_t te = c.st[ew.vertex_index];
            i128 veq = static_cast<i128>(ew.chain == ChainSide::lower
                                             ? c.sly[ew.vertex_index]
                                             : c.suy[ew.vertex_index]) *
                       q;
            ScaledBand fb = ScaledBand::make(c, p, q, false);
            ScaledExtension fe = extend_scaled(fb, te, veq, pair_sign);
            ScaledBand bb = ScaledBand::make(c, p, q, true);
            ScaledExtension be = extend_scaled(bb, -te, veq, -pair_sign);

            i128 yden = q * c.y_scale;
            auto turn_point = [&](const ScaledTurn& s, bool mirrored) {
                return PathPoint{
                    Rat::from_i128(mirrored ? -s.tn : s.tn, s.td * c.t_scale),
                    Rat::from_i128(s.vn, s.td * yden)};
            };
            std::vector<PathPoint> pts;
            pts.push_back({c.t0(), Rat::from_i128(be.end_vq, yden)});
            for (std::size_t i = be.turns.size(); i-- > 0;)
                pts.push_back(turn_point(be.turns[i], true));
            pts.push_back(earlier);
            for (const ScaledTurn& s : fe.turns)
                pts.push_back(turn_point(s, false));
            pts.push_back({c.tn(), Rat::from_i128(fe.end_vq, yden)});
            return assemble(sol.beta_star, std::move(pts));
        }
    }

    Band fwd = Band::make(c, sol.beta_star, false);
    Extension fe = extend(fwd, earlier, pair_sign);

    Band bwd = Band::make(c, sol.beta_star, true);
    Extension be = extend(bwd, {-earlier.t, earlier.y}, -pair_sign);

    std::vector<PathPoint> pts;
    pts.push_back({-be.end.t, be.end.y});
    for (std::size_t i = be.turns.size(); i-- > 0;)
        pts.push_back({-be.turns[i].t, be.turns[i].y});
    pts.push_back(earlier);
    pts.insert(pts.end(), fe.turns.begin(), fe.turns.end());
    pts.push_back(fe.end);

    return assemble(sol.beta_star, std::move(pts));
}

bool segment_inside(const Corridor& c, const PathPoint& a, const PathPoint& b) {
    const PathPoint& p = a.t <= b.t ? a : b;
    const PathPoint& q = a.t <= b.t ? b : a;
    if (p.y < c.lower_at(p.t) || p.y > c.upper_at(p.t)) return false;
    if (q.y < c.lower_at(q.t) || q.y > c.upper_at(q.t)) return false;
    if (p.t == q.t) return true;
    Rat dt = q.t - p.t, dy = q.y - p.y;
    std::size_t k = c.strip_of(p.t) + 1;
    for (; k < c.size() && c.times[k] < q.t; ++k) {
        Rat seg = p.y * dt + dy * (c.times[k] - p.t);
        if (seg < c.lower_y[k] * dt) return false;
        if (seg > c.upper_y[k] * dt) return false;
    }
    return true;
}

BetaPath steepen_path(const Corridor& c, const BetaPath& path, const Rat& beta) {
    if (beta < path.beta || beta > c.alpha)
        throw SlopeOutOfRange("target slope outside [path slope, alpha]");
    if (beta == path.beta) return path;

    auto pts = path.points();
    std::vector<PathPoint> out;
    out.push_back(path.start);

    Rat two(2);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const PathPoint& d = pts[i];
        const PathPoint& e = pts[i + 1];
        Rat seg_dt = e.t - d.t, seg_dy = e.y - d.y;

        // visit the vertical projections of every reflex vertex strictly
        // inside this segment's span
        std::vector<PathPoint> visit;
        visit.push_back(d);
        std::size_t li = 0, ui = 0;
        const auto& L = c.lower_reflex;
        const auto& U = c.upper_reflex;
        auto seg_at = [&](const Rat& t) {
            return d.y + seg_dy * (t - d.t) / seg_dt;
        };
        while (li < L.size() || ui < U.size()) {
            const ReflexPoint* next = nullptr;
            if (li < L.size() &&
                (ui >= U.size() || L[li].t < U[ui].t))
                next = &L[li++];
            else if (ui < U.size())
                next = &U[ui++];
            if (next->t <= d.t) continue;
            if (next->t >= e.t) break;
            visit.push_back({next->t, seg_at(next->t)});
        }
        visit.push_back(e);

        for (std::size_t k = 0; k + 1 < visit.size(); ++k) {
            const PathPoint& a = visit[k];
            const PathPoint& b = visit[k + 1];
            Rat dt = b.t - a.t, dy = b.y - a.y;
            if (dy == beta * dt || dy == -beta * dt) {
                out.push_back(b);
                continue;
            }
            // single interior turn: peak (up-down) or trough (down-up)
            Rat tm_peak = (a.t + b.t) / two + dy / (two * beta);
            PathPoint apex{tm_peak, a.y + beta * (tm_peak - a.t)};
            if (segment_inside(c, a, apex) && segment_inside(c, apex, b)) {
                out.push_back(apex);
                out.push_back(b);
                continue;
            }
            Rat tm_dip = (a.t + b.t) / two - dy / (two * beta);
            PathPoint dip{tm_dip, a.y - beta * (tm_dip - a.t)};
            if (segment_inside(c, a, dip) && segment_inside(c, dip, b)) {
                out.push_back(dip);
                out.push_back(b);
                continue;
            }
            throw std::logic_error("steepening failed to stay inside the band");
        }
    }

    return assemble(beta, std::move(out));
}

PathMetrics path_metrics(const BetaPath& path) {
    PathMetrics m;
    m.links = path.links();
    m.turns = path.turns.size();
    Rat span = path.end.t - path.start.t;
    m.length_squared = span * span * (Rat(1) + path.beta * path.beta);
    m.length_decimal = sqrt_decimal(m.length_squared, 12);
    return m;
}

namespace {

bool segment_touches(const std::vector<ReflexPoint>& list, const PathPoint& a,
                     const PathPoint& b) {
    Rat dt = b.t - a.t, dy = b.y - a.y;
    for (const ReflexPoint& r : list) {
        if (r.t < a.t || r.t > b.t) continue;
        if ((r.y - a.y) * dt == dy * (r.t - a.t)) return true;
    }
    return false;
}

}  // namespace

bool path_supports_ok(const Corridor& c, const BetaPath& path,
                      const std::optional<PairSlope>& witness) {
    if (path.beta.is_zero()) return true;
    if (!witness) return false;  // a positive slope always has a witness
    Rat anchor_t = min(witness->lower.t, witness->upper.t);

    auto pts = path.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const PathPoint& a = pts[i];
        const PathPoint& b = pts[i + 1];
        if (b.t <= anchor_t || a.t >= anchor_t) {
            bool up = (b.y - a.y).sign() > 0;
            bool mirrored = b.t <= anchor_t;
            bool want_lower = up != mirrored;
            if (!segment_touches(want_lower ? c.lower_reflex : c.upper_reflex,
                                 a, b))
                return false;
        } else {
            // the anchor-carrying segment must run through both pair points
            Rat dt = b.t - a.t, dy = b.y - a.y;
            for (const ReflexPoint* w : {&witness->lower, &witness->upper}) {
                if (w->t < a.t || w->t > b.t) return false;
                if ((w->y - a.y) * dt != dy * (w->t - a.t)) return false;
            }
        }
    }
    return true;
}

bool path_through_point(const BetaPath& path, const Rat& t, const Rat& y) {
    if (t < path.start.t || t > path.end.t) return false;
    return path.y_at(t) == y;
}

std::string sqrt_decimal(const Rat& squared, int digits) {
    if (squared.sign() < 0)
        throw std::logic_error("sqrt of negative length");
    mpq_class q = squared.to_mpq();
    mpz_class n = q.get_num(), d = q.get_den();
    // sqrt(n/d) = sqrt(n*d)/d; scale so the integer sqrt carries the digits
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * digits);
    mpz_class x = n * d * scale;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    // nearest integer square root, not the floor
    if ((s + 1) * (s + 1) - x <= x - s * s) s += 1;
    // rounded division by d
    mpz_class quo;
    mpz_fdiv_q(quo.get_mpz_t(), mpz_class(2 * s + d).get_mpz_t(),
               mpz_class(2 * d).get_mpz_t());
    std::string ds = quo.get_str();
    if (ds.size() <= static_cast<std::size_t>(digits))
        ds.insert(0, digits + 1 - ds.size(), '0');
    ds.insert(ds.size() - digits, ".");
    return ds;
}

}  // namespace tetherplan
