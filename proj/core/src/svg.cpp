#include "tetherplan/svg.hpp"

#include <sstream>

#include "tetherplan/minslope.hpp"

namespace tetherplan {

namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 480;
constexpr int kMargin = 48;

struct Mapper {
    Rat t0, t_span, y0, y_span;

    std::string x(const Rat& t) const {
        Rat u = (t - t0) / t_span;
        return (Rat(kMargin) + u * Rat(kWidth - 2 * kMargin)).to_decimal(3);
    }
    std::string y(const Rat& yy) const {
        Rat u = (yy - y0) / y_span;
        // flip: larger heights drawn higher
        return (Rat(kHeight - kMargin) - u * Rat(kHeight - 2 * kMargin))
            .to_decimal(3);
    }
};

void polyline(std::ostringstream& os, const Mapper& m,
              const std::vector<std::pair<Rat, Rat>>& pts,
              const std::string& cls, const std::string& style) {
    os << "<polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << m.x(pts[i].first) << ',' << m.y(pts[i].second);
    }
    os << "\" style=\"" << style << "\"/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst,
                       const std::optional<BetaPath>& path) {
    Corridor c = build_corridor(inst);

    Rat ymin = c.lower_y.front(), ymax = c.upper_y.front();
    for (const Rat& v : c.lower_y)
        if (v < ymin) ymin = v;
    for (const Rat& v : c.upper_y)
        if (v > ymax) ymax = v;
    Rat yspan = ymax - ymin;
    if (yspan.is_zero()) yspan = Rat(1);
    Mapper m{c.t0(), c.tn() - c.t0(), ymin, yspan};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
       << kHeight << "\">\n";
    os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" fill=\"white\"/>\n";

    // corridor band
    os << "<polygon class=\"corridor\" points=\"";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? " " : "") << m.x(c.times[i]) << ',' << m.y(c.upper_y[i]);
    for (std::size_t i = c.size(); i-- > 0;)
        os << ' ' << m.x(c.times[i]) << ',' << m.y(c.lower_y[i]);
    os << "\" style=\"fill:#dbe9f6;stroke:none\"/>\n";

    std::vector<std::pair<Rat, Rat>> chain;
    chain.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        chain.emplace_back(c.times[i], c.lower_y[i]);
    polyline(os, m, chain, "chain-lower", "fill:none;stroke:#1f4e79;stroke-width:1.5");
    chain.clear();
    for (std::size_t i = 0; i < c.size(); ++i)
        chain.emplace_back(c.times[i], c.upper_y[i]);
    polyline(os, m, chain, "chain-upper", "fill:none;stroke:#1f4e79;stroke-width:1.5");

    for (SweepDirection dir :
         {SweepDirection::forward, SweepDirection::backward}) {
        bool fwd = dir == SweepDirection::forward;
        for (const Mcc& mcc : build_mccs(c, dir)) {
            if (mcc.vertices.size() < 2) continue;
            std::vector<std::pair<Rat, Rat>> pts;
            for (const ReflexPoint& v : mcc.vertices) pts.emplace_back(v.t, v.y);
            polyline(os, m, pts, fwd ? "mcc mcc-forward" : "mcc mcc-backward",
                     fwd ? "fill:none;stroke:#c00000;stroke-width:1.2"
                         : "fill:none;stroke:#c00000;stroke-width:1.2;"
                           "stroke-dasharray:6 3");
        }
    }

    for (const ReflexPoint& r : c.lower_reflex)
        os << "<circle class=\"reflex-lower\" cx=\"" << m.x(r.t) << "\" cy=\""
           << m.y(r.y) << "\" r=\"4\" style=\"fill:#1f4e79\"/>\n";
    for (const ReflexPoint& r : c.upper_reflex)
        os << "<circle class=\"reflex-upper\" cx=\"" << m.x(r.t) << "\" cy=\""
           << m.y(r.y) << "\" r=\"4\" style=\"fill:#e07b00\"/>\n";

    if (path) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (const PathPoint& p : path->points()) pts.emplace_back(p.t, p.y);
        polyline(os, m, pts, "solution-path",
                 "fill:none;stroke:#107c10;stroke-width:2.5");
    }

    os << "</svg>\n";
    return os.str();
}

}  // namespace tetherplan
