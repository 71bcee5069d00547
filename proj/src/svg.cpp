#include "storyarc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace storyarc {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // +0.0 folds -0 into 0
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string render_arc_svg(const CharacterArc& arc, const std::string& character_name,
                           const SvgStyle& style) {
    const auto& a = arc.actor_series;
    const auto& e = arc.experiencer_series;
    if (a.empty() && e.empty())
        throw SvgError("character '" + character_name + "' has no events in either role");

    double ymin = 1e300, ymax = -1e300;
    std::size_t xmax = 1;
    for (const auto* s : {&a, &e}) {
        for (const ArcPoint& p : *s) {
            ymin = std::min(ymin, p.smoothed);
            ymax = std::max(ymax, p.smoothed);
        }
        if (s->size() > xmax) xmax = s->size();
    }
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    }

    const double ml = 56, mr = 16, mt = 34, mb = 44;
    const double pw = style.width - ml - mr;
    const double ph = style.height - mt - mb;
    auto sx = [&](double ordinal) {
        return ml + (xmax > 1 ? ordinal / static_cast<double>(xmax - 1) * pw : pw / 2);
    };
    auto sy = [&](double v) { return mt + (ymax - v) / (ymax - ymin) * ph; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) +
           "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " +
           std::to_string(style.width) + " " + std::to_string(style.height) + "\">\n";
    out += "<rect fill=\"white\" height=\"" + std::to_string(style.height) +
           "\" width=\"" + std::to_string(style.width) + "\" x=\"0\" y=\"0\"/>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"14\" x=\"" + fmt(ml) +
           "\" y=\"20\">" + escape_xml(character_name) + "</text>\n";

    // axes
    out += "<line stroke=\"black\" x1=\"" + fmt(ml) + "\" x2=\"" + fmt(ml) + "\" y1=\"" +
           fmt(mt) + "\" y2=\"" + fmt(mt + ph) + "\"/>\n";
    out += "<line stroke=\"black\" x1=\"" + fmt(ml) + "\" x2=\"" + fmt(ml + pw) + "\" y1=\"" +
           fmt(mt + ph) + "\" y2=\"" + fmt(mt + ph) + "\"/>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" x=\"" +
           fmt(ml - 4) + "\" y=\"" + fmt(sy(ymax) + 4) + "\">" + fmt(ymax) + "</text>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\" x=\"" +
           fmt(ml - 4) + "\" y=\"" + fmt(sy(ymin) + 4) + "\">" + fmt(ymin) + "</text>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"11\" x=\"" + fmt(ml + pw / 2 - 30) +
           "\" y=\"" + fmt(style.height - 10.0) + "\">event ordinal</text>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"11\" transform=\"rotate(-90 14 " +
           fmt(mt + ph / 2) + ")\" x=\"14\" y=\"" + fmt(mt + ph / 2) +
           "\">circumstance</text>\n";

    auto polyline = [&](const std::vector<ArcPoint>& s, const std::string& color) {
        if (s.empty()) return;
        std::string pts;
        for (const ArcPoint& p : s) {
            if (!pts.empty()) pts += ' ';
            pts += fmt(sx(p.ordinal)) + "," + fmt(sy(p.smoothed));
        }
        out += "<polyline fill=\"none\" points=\"" + pts + "\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
    };
    polyline(a, style.actor_color);
    polyline(e, style.experiencer_color);

    // legend
    double lx = ml + pw - 150;
    out += "<line stroke=\"" + style.actor_color + "\" x1=\"" + fmt(lx) + "\" x2=\"" +
           fmt(lx + 24) + "\" y1=\"" + fmt(mt + 6) + "\" y2=\"" + fmt(mt + 6) + "\"/>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"11\" x=\"" + fmt(lx + 30) + "\" y=\"" +
           fmt(mt + 10) + "\">actor" + (a.empty() ? " (no events)" : "") + "</text>\n";
    out += "<line stroke=\"" + style.experiencer_color + "\" x1=\"" + fmt(lx) + "\" x2=\"" +
           fmt(lx + 24) + "\" y1=\"" + fmt(mt + 22) + "\" y2=\"" + fmt(mt + 22) + "\"/>\n";
    out += "<text font-family=\"sans-serif\" font-size=\"11\" x=\"" + fmt(lx + 30) + "\" y=\"" +
           fmt(mt + 26) + "\">experiencer" + (e.empty() ? " (no events)" : "") + "</text>\n";

    if (style.mark_extrema && style.min_prominence > 0.0) {
        char letter = 'A';
        for (const auto* s : {&a, &e}) {
            for (const Extremum& ex : find_extrema(*s, style.min_prominence)) {
                if (letter > 'Z') break;
                const ArcPoint& p = (*s)[static_cast<size_t>(ex.index)];
                double cx = sx(p.ordinal), cy = sy(p.smoothed);
                out += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                       "\" fill=\"black\" r=\"2.5\"/>\n";
                out += "<text font-family=\"sans-serif\" font-size=\"11\" font-weight=\"bold\" x=\"" +
                       fmt(cx + 4) + "\" y=\"" + fmt(cy + (ex.is_peak ? -5.0 : 13.0)) + "\">" +
                       std::string(1, letter) + "</text>\n";
                ++letter;
            }
        }
    }

    out += "</svg>\n";
    return out;
}

}  // namespace storyarc
