#include "improper/render.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "improper/errors.hpp"

namespace improper {

namespace {

constexpr std::int64_t kScale = 20;
constexpr std::int64_t kMargin = 40;
constexpr std::int64_t kRowHeight = 24;

enum class Role { basepoint, designated, relocating, side, plain };

Role role_of(const RenderStyle& s, Vertex v) {
    auto in = [v](const std::vector<Vertex>& vs) { return std::find(vs.begin(), vs.end(), v) != vs.end(); };
    if (s.basepoint == v) return Role::basepoint;
    if (s.designated == v) return Role::designated;
    if (in(s.relocating)) return Role::relocating;
    if (in(s.side)) return Role::side;
    return Role::plain;
}

const char* svg_color(Role r) {
    switch (r) {
        case Role::basepoint: return "#000000";
        case Role::designated: return "#555555";
        case Role::relocating: return "#bbbbbb";
        case Role::side: return "#c0504d";
        case Role::plain: return "#4472c4";
    }
    return "#4472c4";
}

const char* tikz_color(Role r) {
    switch (r) {
        case Role::basepoint: return "black";
        case Role::designated: return "black!67";
        case Role::relocating: return "black!27";
        case Role::side: return "red!70!black";
        case Role::plain: return "blue!70!black";
    }
    return "blue!70!black";
}

std::string label_of(const RenderStyle& s, Vertex v) {
    return static_cast<std::size_t>(v) < s.labels.size() ? s.labels[v] : std::to_string(v);
}

std::string xml_escape(const std::string& in) {
    std::string out;
    for (char c : in) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string tex_escape(const std::string& in) {
    std::string out;
    for (char c : in) {
        switch (c) {
            case '#': case '$': case '%': case '&': case '_': case '{': case '}':
                out += '\\';
                out += c;
                break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::vector<int> assign_rows(const IntervalRepresentation& r) {
    std::vector<std::size_t> order(r.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(r.intervals[a].left, a) < std::pair(r.intervals[b].left, b);
    });
    std::vector<int> rows(r.size(), 0);
    std::vector<std::int64_t> row_end;
    for (std::size_t v : order) {
        const Interval& iv = r.intervals[v];
        std::size_t row = 0;
        while (row < row_end.size() && row_end[row] >= iv.left) ++row;
        if (row == row_end.size()) row_end.push_back(iv.right);
        row_end[row] = iv.right;
        rows[v] = static_cast<int>(row);
    }
    return rows;
}

std::string render_svg(const IntervalRepresentation& r, const RenderStyle& style) {
    validate_representation(r);
    const auto rows = assign_rows(r);
    const int row_count = rows.empty() ? 0 : *std::max_element(rows.begin(), rows.end()) + 1;
    std::int64_t lo = 0, hi = 0;
    for (const auto& iv : r.intervals) {
        lo = std::min(lo, iv.left);
        hi = std::max(hi, iv.right);
    }
    const std::int64_t width = 2 * kMargin + (hi - lo) * kScale;
    const std::int64_t height = 2 * kMargin + std::max(0, row_count - 1) * kRowHeight;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    for (std::size_t v = 0; v < r.size(); ++v) {
        const Interval& iv = r.intervals[v];
        const Role role = role_of(style, static_cast<Vertex>(v));
        const std::int64_t x1 = kMargin + (iv.left - lo) * kScale;
        const std::int64_t x2 = kMargin + (iv.right - lo) * kScale;
        const std::int64_t y = kMargin + rows[v] * kRowHeight;
        const char* color = svg_color(role);
        out << "<g>\n";
        out << "  <line data-vertex=\"" << v << "\" x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
            << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
        out << "  <circle cx=\"" << x1 << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
        out << "  <circle cx=\"" << x2 << "\" cy=\"" << y << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
        out << "  <text x=\"" << x1 << "\" y=\"" << (y - 6) << "\" font-family=\"sans-serif\" font-size=\"10\">"
            << xml_escape(label_of(style, static_cast<Vertex>(v))) << "</text>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_tikz(const IntervalRepresentation& r, const RenderStyle& style) {
    validate_representation(r);
    const auto rows = assign_rows(r);
    std::ostringstream out;
    out << "\\documentclass[tikz,border=4pt]{standalone}\n";
    out << "\\begin{document}\n";
    out << "\\begin{tikzpicture}[x=0.4cm,y=-0.6cm]\n";
    for (std::size_t v = 0; v < r.size(); ++v) {
        const Interval& iv = r.intervals[v];
        const char* color = tikz_color(role_of(style, static_cast<Vertex>(v)));
        out << "\\draw[line width=1.2pt,color=" << color << "] (" << iv.left << "," << rows[v] << ") -- (" << iv.right
            << "," << rows[v] << "); % v=" << v << "\n";
        out << "\\fill[color=" << color << "] (" << iv.left << "," << rows[v] << ") circle (1.6pt) (" << iv.right << ","
            << rows[v] << ") circle (1.6pt);\n";
        out << "\\node[above right,font=\\tiny] at (" << iv.left << "," << rows[v] << ") {"
            << tex_escape(label_of(style, static_cast<Vertex>(v))) << "};\n";
    }
    out << "\\end{tikzpicture}\n";
    out << "\\end{document}\n";
    return out.str();
}

IntervalRepresentation parse_rendered(const std::string& document) {
    static const std::regex svg_line(R"re(<line data-vertex="(\d+)" x1="(-?\d+)" y1="-?\d+" x2="(-?\d+)")re");
    static const std::regex tikz_line(R"re(\\draw\[[^\]]*\] \((-?\d+),-?\d+\) -- \((-?\d+),-?\d+\); % v=(\d+))re");

    std::map<std::size_t, Interval> found;
    auto add = [&](std::size_t v, std::int64_t l, std::int64_t r) {
        if (!found.emplace(v, Interval{l, r}).second) {
            throw InvalidRepresentation("vertex " + std::to_string(v) + " drawn twice");
        }
    };
    if (document.find("<svg") != std::string::npos) {
        for (auto it = std::sregex_iterator(document.begin(), document.end(), svg_line); it != std::sregex_iterator(); ++it) {
            add(std::stoul((*it)[1]), std::stoll((*it)[2]), std::stoll((*it)[3]));
        }
    } else if (document.find("tikzpicture") != std::string::npos) {
        for (auto it = std::sregex_iterator(document.begin(), document.end(), tikz_line); it != std::sregex_iterator(); ++it) {
            add(std::stoul((*it)[3]), std::stoll((*it)[1]), std::stoll((*it)[2]));
        }
    } else {
        throw InvalidRepresentation("neither an SVG nor a TikZ document");
    }
    IntervalRepresentation r;
    for (const auto& [v, iv] : found) {
        if (v != r.size()) throw InvalidRepresentation("vertex " + std::to_string(r.size()) + " missing");
        r.intervals.push_back(iv);
    }
    validate_representation(r);
    return r;
}

}  // namespace improper
