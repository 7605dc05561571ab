#pragma once

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ferrers/errors.hpp"
#include "ferrers/geometry.hpp"
#include "ferrers/partition.hpp"

namespace ferrers {

struct RenderSpec {
    int cell_px = 10;
    bool draw_diagonals = false;
    bool label_shapes = false;
};

class InvalidPackingError : public DomainError {
public:
    explicit InvalidPackingError(ValidationReport report)
        : DomainError("refusing to render an invalid packing:\n" + report.describe()),
          report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// One line per part, '#' per box.
inline std::string render_shape_ascii(const Partition& p) {
    std::string out;
    for (int x : p.parts()) {
        out.append(static_cast<std::size_t>(x), '#');
        out += '\n';
    }
    return out;
}

namespace detail {

inline constexpr int kSvgMargin = 1;

inline void check_spec(const RenderSpec& spec) {
    if (spec.cell_px < 1)
        throw std::invalid_argument("cell_px must be >= 1");
}

inline void svg_open(std::ostringstream& os, Coord width_px, Coord height_px) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_px << "\" height=\""
       << height_px << "\" viewBox=\"0 0 " << width_px << " " << height_px << "\">\n";
}

/// Boundary of a shape whose rows are contiguous with one interval each,
/// clockwise on screen from the right end of the first row, in cell units.
inline std::vector<std::array<Coord, 2>> staircase_outline(const std::vector<RowInterval>& rows) {
    std::vector<std::array<Coord, 2>> pts;
    for (const auto& iv : rows) {
        pts.push_back({iv.end, iv.row});
        pts.push_back({iv.end, iv.row + 1});
    }
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        pts.push_back({it->begin, it->row + 1});
        pts.push_back({it->begin, it->row});
    }
    // drop repeats and points in the middle of straight runs
    bool changed = true;
    while (changed && pts.size() > 4) {
        changed = false;
        std::vector<std::array<Coord, 2>> kept;
        const std::size_t m = pts.size();
        for (std::size_t i = 0; i < m; ++i) {
            const auto& a = pts[(i + m - 1) % m];
            const auto& p = pts[i];
            const auto& b = pts[(i + 1) % m];
            const bool repeat = p == b;
            const bool straight = (a[0] == p[0] && p[0] == b[0]) || (a[1] == p[1] && p[1] == b[1]);
            if (repeat || straight) {
                changed = true;
                // drop only one point per pass around a corner to keep the cycle intact
                for (std::size_t j = i + 1; j < m; ++j)
                    kept.push_back(pts[j]);
                break;
            }
            kept.push_back(p);
        }
        pts = std::move(kept);
    }
    return pts;
}

inline constexpr std::array<const char*, 8> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072",
                                                        "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

} // namespace detail

/// Left-justified boxes, top row first.
inline std::string render_shape_svg(const Partition& p, const RenderSpec& spec = {}) {
    detail::check_spec(spec);
    const Coord px = spec.cell_px;
    const Coord m = detail::kSvgMargin;
    std::ostringstream os;
    detail::svg_open(os, p.largest() * px + 2 * m, p.length() * px + 2 * m);
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            os << "<rect x=\"" << m + j * px << "\" y=\"" << m + i * px << "\" width=\"" << px
               << "\" height=\"" << px << "\" fill=\"#d9d9d9\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    os << "</svg>\n";
    return os.str();
}

/// Rectangle border plus one staircase polygon per placement. Optional
/// dashed 45 degree guides run through every distinct apex diagonal.
inline std::string render_packing_svg(const Packing& pk, const RenderSpec& spec = {}) {
    detail::check_spec(spec);
    auto report = validate_packing(pk);
    if (!report.ok())
        throw InvalidPackingError(std::move(report));

    const Coord px = spec.cell_px;
    const Coord m = detail::kSvgMargin;
    const Coord w = pk.rect.width, h = pk.rect.height;
    std::ostringstream os;
    detail::svg_open(os, w * px + 2 * m, h * px + 2 * m);
    os << "<rect x=\"" << m << "\" y=\"" << m << "\" width=\"" << w * px << "\" height=\"" << h * px
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

    for (std::size_t i = 0; i < pk.placements.size(); ++i) {
        const auto outline = detail::staircase_outline(occupied_row_intervals(pk.placements[i]));
        os << "<polygon points=\"";
        for (std::size_t k = 0; k < outline.size(); ++k) {
            if (k)
                os << ' ';
            os << m + outline[k][0] * px << ',' << m + outline[k][1] * px;
        }
        os << "\" fill=\"" << detail::kPalette[i % detail::kPalette.size()]
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }

    if (spec.draw_diagonals) {
        std::set<Coord> diagonals;
        for (const auto& pl : pk.placements)
            diagonals.insert(pl.col - pl.row);
        for (Coord k : diagonals) {
            // x - y = k in cell units, clipped to the rectangle
            Coord y0 = std::max<Coord>(0, -k), y1 = std::min<Coord>(h, w - k);
            if (y0 >= y1)
                continue;
            os << "<line x1=\"" << m + (y0 + k) * px << "\" y1=\"" << m + y0 * px << "\" x2=\""
               << m + (y1 + k) * px << "\" y2=\"" << m + y1 * px
               << "\" stroke=\"#808080\" stroke-width=\"1\" stroke-dasharray=\"4,4\"/>\n";
        }
    }

    if (spec.label_shapes) {
        for (std::size_t i = 0; i < pk.placements.size(); ++i) {
            const auto& pl = pk.placements[i];
            os << "<text x=\"" << m + pl.col * px + px / 2 << "\" y=\"" << m + pl.row * px + px / 2
               << "\" font-size=\"" << px << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << i
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ferrers
