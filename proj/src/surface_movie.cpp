#include "tpoly/surface_movie.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tpoly {

MoveSchedule schedule_FU(const PretzelParams& p) {
    p.validate();
    MoveSchedule s;
    s.surface = "F_U";
    s.deaths = 1;  // the visible disc
    s.punctures = p.q1 + p.q2;
    s.chi = s.euler_characteristic();
    return s;
}

MoveSchedule schedule_FK(const PretzelParams& p) {
    p.validate();
    const int qS = p.qS(), rS = p.rS(), rB = p.rB();
    // Effective winding count: the full qS when the small spiral can absorb it,
    // otherwise it is capped at 2rS + 1 and the remaining twists puncture F_U's disc.
    const int q_eff = (2 * rS >= qS - 1) ? qS : 2 * rS + 1;

    MoveSchedule s;
    s.surface = "F_K";
    s.braid_power = 2 * q_eff;
    s.s1 = q_eff;
    s.s2 = 2 * (q_eff - 1);
    s.deaths = q_eff + 1;
    s.punctures = p.q1 + p.q2 - 2 * q_eff;
    s.s3 = std::max(2 * p.r1 + 2 * p.r2 - 2 * qS + 2, 2 * rB - 2 * rS);
    s.chi = s.euler_characteristic();
    return s;
}

namespace {

struct Frame {
    std::string kind;   // "start", "S1", "S2", "S3", "death", "end"
    int arcs = 0;
    int circles = 0;
};

std::vector<Frame> frames_of(const MoveSchedule& s) {
    std::vector<Frame> frames;
    int arcs = 3;
    int circles = 0;
    frames.push_back({"start", arcs, circles});
    auto push = [&](const std::string& kind, int n, int darcs, int dcircles) {
        for (int i = 0; i < n; ++i) {
            arcs = std::max(0, arcs + darcs);
            circles = std::max(0, circles + dcircles);
            frames.push_back({kind, arcs, circles});
        }
    };
    push("S1", s.s1, 0, 0);
    push("S2", s.s2, 0, 1);
    push("S3", s.s3, 0, 1);
    push("death", s.deaths, 0, -1);
    frames.push_back({"end", arcs, 0});
    return frames;
}

}  // namespace

std::string render_schedule(const MoveSchedule& s) {
    const auto frames = frames_of(s);
    const int w = 90, h = 110, pad = 10;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << frames.size() * w + 2 * pad << "\" height=\""
       << h + 2 * pad + 20 << "\">\n";
    os << "<text x=\"" << pad << "\" y=\"14\" font-size=\"12\" font-family=\"monospace\">" << s.surface
       << " chi=" << s.chi << " saddles=" << s.saddles() << " deaths=" << s.deaths << " punctures=" << s.punctures
       << "</text>\n";
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const auto& f = frames[i];
        const int x0 = pad + static_cast<int>(i) * w;
        const int y0 = pad + 20;
        os << "<g class=\"frame\" data-kind=\"" << f.kind << "\">\n";
        os << "<rect x=\"" << x0 + 2 << "\" y=\"" << y0 << "\" width=\"" << w - 4 << "\" height=\"" << h
           << "\" fill=\"none\" stroke=\"#888\"/>\n";
        for (int a = 0; a < f.arcs; ++a) {
            const int ax = x0 + 12 + a * 22;
            os << "<path d=\"M" << ax << ' ' << y0 + 10 << " Q" << ax + 8 << ' ' << y0 + 40 << ' ' << ax + 16 << ' '
               << y0 + 10 << "\" fill=\"none\" stroke=\"black\"/>\n";
        }
        for (int c = 0; c < f.circles && c < 12; ++c) {
            const int cx = x0 + 14 + (c % 4) * 20;
            const int cy = y0 + 58 + (c / 4) * 16;
            os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"6\" fill=\"none\" stroke=\"#1f5fbf\"/>\n";
        }
        os << "<text x=\"" << x0 + 6 << "\" y=\"" << y0 + h - 6
           << "\" font-size=\"11\" font-family=\"monospace\">" << f.kind << "</text>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

nlohmann::json to_json(const MoveSchedule& s) {
    return {{"surface", s.surface}, {"braid_power", s.braid_power}, {"s1", s.s1},           {"s2", s.s2},
            {"s3", s.s3},           {"deaths", s.deaths},           {"punctures", s.punctures}, {"chi", s.chi},
            {"saddles", s.saddles()}, {"frames", s.frame_count()}};
}

}  // namespace tpoly
