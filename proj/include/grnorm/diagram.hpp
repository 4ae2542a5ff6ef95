#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "ade.hpp"

namespace grnorm {

namespace detail {

inline std::string pad_left(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
}

// Symbol for one grid point: G at gamma, T at tau, # for members, . else.
inline std::string cell_symbol(const ValueSemigroup& sg, const Point& p) {
    if (p == sg.gamma()) return "G";
    Point tau = sg.tau();
    bool tau_ok = true;
    for (Exp t : tau)
        if (t < 0) tau_ok = false;
    if (tau_ok && p == tau) return "T";
    return sg.contains(p) ? "#" : ".";
}

} // namespace detail

// Text staircase of a value semigroup over [0, gamma+1]^s. One line for
// s = 1; a grid with the second coordinate rising upwards for s = 2; and
// for s = 3 one 2D slice per value of the first coordinate. Larger s falls
// back to the window listing. The output is stable; golden tests freeze it.
inline std::string render_staircase(const ValueSemigroup& sg) {
    std::ostringstream out;
    long s = sg.branch_count();
    const Point& g = sg.gamma();
    if (s == 1) {
        std::size_t w = std::to_string(g[0] + 1).size();
        std::string cells, labels;
        for (Exp e = 0; e <= g[0] + 1; ++e) {
            if (e) cells += " ", labels += " ";
            cells += detail::pad_left(detail::cell_symbol(sg, {e}), w);
            labels += detail::pad_left(std::to_string(e), w);
        }
        out << " " << cells << "\n " << labels << "\n";
        return out.str();
    }
    if (s == 2 || s == 3) {
        long xi = s - 2, yi = s - 1; // grid axes; axis 0 is sliced when s = 3
        std::size_t wx = std::to_string(g[xi] + 1).size();
        std::size_t wy = std::to_string(g[yi] + 1).size();
        for (Exp a = 0; a <= (s == 3 ? g[0] + 1 : 0); ++a) {
            if (s == 3) out << " [t1=" << a << "]\n";
            std::string indent = s == 3 ? " " : "";
            for (Exp y = g[yi] + 1; y >= 0; --y) {
                out << indent << " " << detail::pad_left(std::to_string(y), wy) << " |";
                for (Exp x = 0; x <= g[xi] + 1; ++x) {
                    Point p = s == 3 ? Point{a, x, y} : Point{x, y};
                    out << " " << detail::pad_left(detail::cell_symbol(sg, p), wx);
                }
                out << "\n";
            }
            out << indent << " " << std::string(wy, ' ') << " +";
            out << std::string((g[xi] + 2) * (wx + 1), '-') << "\n";
            out << indent << " " << std::string(wy, ' ') << "  ";
            for (Exp x = 0; x <= g[xi] + 1; ++x) out << " " << detail::pad_left(std::to_string(x), wx);
            out << "\n";
        }
        return out.str();
    }
    out << " window:";
    for (const auto& p : sg.window()) out << " " << detail::point_str(p);
    out << "\n";
    return out.str();
}

// Full chain diagram: one staircase panel per step (or a chosen one), with
// header lines carrying the recognized class and the step invariants.
inline std::string render_chain_diagram(const std::string& name, const ChainReport& chain,
                                        const std::vector<SingularityType>& types,
                                        std::optional<long> only_step = std::nullopt) {
    std::ostringstream out;
    out << "curve " << name << "  n=" << chain.n() << "\n";
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        if (only_step && static_cast<long>(i) != *only_step) continue;
        const ChainStep& st = chain.steps[i];
        out << "-- step " << st.index << "  type=" << types.at(i).label()
            << "  s=" << st.ring.branch_count() << "  gamma=" << detail::point_str(st.ring.gamma())
            << "  tau=" << detail::point_str(st.ring.semigroup.tau()) << "  delta=" << st.delta
            << "  gorenstein=" << (st.gorenstein ? "yes" : "no") << "\n";
        out << render_staircase(st.ring.semigroup);
    }
    return out.str();
}

// Minimal SVG rendering of the same staircases (presentation only, not
// golden-tested).
inline std::string render_chain_svg(const std::string& name, const ChainReport& chain,
                                    const std::vector<SingularityType>& types) {
    const long cell = 16, pad = 24, gap = 40;
    std::ostringstream body;
    long ypos = pad;
    long width = 320;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const ValueSemigroup& sg = chain.steps[i].ring.semigroup;
        const Point& g = sg.gamma();
        long s = sg.branch_count();
        body << "<text x=\"" << pad << "\" y=\"" << ypos << "\" font-family=\"monospace\" font-size=\"13\">step "
             << i << ": " << types.at(i).label() << "</text>\n";
        ypos += 8;
        long slices = s >= 3 ? g[0] + 2 : 1;
        long xi = s - 2 >= 0 ? s - 2 : 0, yi = s - 1;
        long gx = s == 1 ? g[0] : g[xi];
        long gy = s == 1 ? 0 : g[yi];
        long xpos = pad;
        for (long a = 0; a < slices; ++a) {
            for (Exp x = 0; x <= gx + 1; ++x)
                for (Exp y = 0; y <= gy + 1; ++y) {
                    Point p;
                    if (s == 1)
                        p = {x};
                    else if (s == 2)
                        p = {x, y};
                    else
                        p = {a, x, y};
                    std::string sym = detail::cell_symbol(sg, p);
                    std::string fill = sym == "." ? "#eeeeee" : sym == "G" ? "#d33" : sym == "T" ? "#36c" : "#444";
                    body << "<rect x=\"" << xpos + x * cell << "\" y=\"" << ypos + (gy + 1 - y) * cell
                         << "\" width=\"" << cell - 2 << "\" height=\"" << cell - 2 << "\" fill=\"" << fill
                         << "\"/>\n";
                }
            xpos += (gx + 2) * cell + gap;
        }
        width = std::max(width, xpos + pad);
        ypos += (gy + 2) * cell + gap;
    }
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << ypos
        << "\">\n<title>" << name << "</title>\n"
        << body.str() << "</svg>\n";
    return out.str();
}

} // namespace grnorm
