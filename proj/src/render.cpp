#include "qbank/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <variant>

#include "qbank/format.hpp"

namespace qbank {

namespace {

// All geometry is laid out in double precision, then snapped to hundredths of
// a pixel for emission.
std::string px(double v) {
    return format_trimmed_hundredths(round_to_hundredths(v));
}

std::string svg_open(int width, int height) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
}

std::string svg_line(double x1, double y1, double x2, double y2, const std::string& stroke,
                     const std::string& stroke_width) {
    return "<line x1=\"" + px(x1) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x2) + "\" y2=\"" +
           px(y2) + "\" stroke=\"" + stroke + "\" stroke-width=\"" + stroke_width + "\"/>\n";
}

std::string svg_circle(double cx, double cy, const std::string& r, const std::string& fill) {
    return "<circle cx=\"" + px(cx) + "\" cy=\"" + px(cy) + "\" r=\"" + r + "\" fill=\"" + fill +
           "\"/>\n";
}

// Text with a forced advance so layout never depends on host font metrics.
std::string svg_text(double x, double y, double length, const std::string& body,
                     const std::string& extra = "") {
    return "<text x=\"" + px(x) + "\" y=\"" + px(y) + "\" textLength=\"" + px(length) +
           "\" lengthAdjust=\"spacingAndGlyphs\" font-family=\"DejaVu Sans, sans-serif\"" + extra +
           ">" + body + "</text>\n";
}

} // namespace

ImageAsset render_scatterplot(const SampleXY& data, const std::string& filename, int width_px) {
    if (data.size() < 2 || data.y.size() != data.x.size())
        throw std::invalid_argument("render_scatterplot: need at least two points");
    if (width_px < 100) throw std::invalid_argument("render_scatterplot: width too small");

    double vmax = 0.0;
    for (double v : data.x) vmax = std::max(vmax, v);
    for (double v : data.y) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;

    const double margin = 46.0;
    const double pad = 12.0;
    const double side = static_cast<double>(width_px);
    const double span = side - margin - pad;
    const auto map_x = [&](double v) { return margin + v / vmax * span; };
    const auto map_y = [&](double v) { return side - margin - v / vmax * span; };

    std::string svg = svg_open(width_px, width_px);
    svg += svg_line(margin, side - margin, side - pad, side - margin, "#333", "1.5"); // x axis
    svg += svg_line(margin, side - margin, margin, pad, "#333", "1.5");               // y axis
    const double label_len = 90.0;
    svg += svg_text(margin + span / 2 - label_len / 2, side - margin / 4, label_len, "Variable 1",
                    " font-size=\"16\"");
    svg += svg_text(-(side - margin - span / 2) - label_len / 2, margin / 3, label_len,
                    "Variable 2", " font-size=\"16\" transform=\"rotate(-90)\"");
    for (std::size_t i = 0; i < data.size(); ++i)
        svg += svg_circle(map_x(data.x[i]), map_y(data.y[i]), "3", "#1f4e9c");
    svg += "</svg>\n";
    return {filename, std::move(svg), width_px};
}

ImageAsset render_lattice_figure(const LatticeTrapezoid& t, std::int64_t grid_extent,
                                 const std::string& filename) {
    if (grid_extent < 1) throw std::invalid_argument("render_lattice_figure: bad extent");
    for (const Point& p : t.vertices)
        if (p.x < 0 || p.x > grid_extent || p.y < 0 || p.y > grid_extent)
            throw std::invalid_argument("render_lattice_figure: vertex outside grid");

    const double cell = 40.0;
    const double margin = 24.0;
    const int side = static_cast<int>(2 * margin + cell * static_cast<double>(grid_extent));
    const auto map_x = [&](std::int64_t gx) { return margin + cell * static_cast<double>(gx); };
    const auto map_y = [&](std::int64_t gy) {
        return margin + cell * static_cast<double>(grid_extent - gy);
    };

    std::string svg = svg_open(side, side);
    for (std::int64_t gy = 0; gy <= grid_extent; ++gy)
        for (std::int64_t gx = 0; gx <= grid_extent; ++gx)
            svg += svg_circle(map_x(gx), map_y(gy), "2", "#999");
    for (std::size_t i = 0; i < 4; ++i) {
        const Point& p = t.vertices[i];
        const Point& q = t.vertices[(i + 1) % 4];
        svg += svg_line(map_x(p.x), map_y(p.y), map_x(q.x), map_y(q.y), "#1f4e9c", "2.5");
    }
    svg += "</svg>\n";
    return {filename, std::move(svg), side};
}

ImageAsset render_typeset_radical(const RadicalSum& value, const std::string& filename) {
    // Fixed 16 px glyph advance; the radical sign is drawn as a stroked path
    // with a vinculum over the radicand, so no symbol font is needed.
    const double advance = 16.0;
    const double baseline = 30.0;
    const double top = 8.0;
    const int height = 42;

    std::string body;
    double x = 10.0;
    const auto put_text = [&](const std::string& s) {
        if (s.empty()) return;
        const double w = advance * static_cast<double>(s.size());
        body += svg_text(x, baseline, w, s, " font-size=\"24\"");
        x += w;
    };

    const Rational& q0 = value.rational_part();
    if (!q0.is_zero() || value.terms().empty()) put_text(rational_to_string(q0));
    for (const auto& term : value.terms()) {
        const Rational mag =
            term.coefficient.is_negative() ? -term.coefficient : term.coefficient;
        if (x > 10.0)
            put_text(term.coefficient.is_negative() ? " - " : " + ");
        else if (term.coefficient.is_negative())
            put_text("-");
        if (!(mag == Rational(1))) put_text(rational_to_string(mag));

        const std::string digits = std::to_string(term.radicand);
        const double digits_w = advance * static_cast<double>(digits.size());
        // Hook, down-stroke, up-stroke, then the vinculum across the radicand.
        body += "<path d=\"M " + px(x) + " " + px(baseline - 12) + " L " + px(x + 4) + " " +
                px(baseline - 14) + " L " + px(x + 9) + " " + px(baseline) + " L " + px(x + 14) +
                " " + px(top) + " L " + px(x + 16 + digits_w) + " " + px(top) +
                "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.6\"/>\n";
        x += 16.0;
        put_text(digits);
        x += 2.0;
    }

    const int width = static_cast<int>(std::ceil(x + 10.0));
    std::string svg = svg_open(width, height);
    svg += body;
    svg += "</svg>\n";
    return {filename, std::move(svg), width};
}

ImageAsset render_histogram(const std::vector<double>& values, int bin_count,
                            const std::string& filename, int width_px) {
    if (values.empty()) throw std::invalid_argument("render_histogram: no values");
    if (bin_count < 1) throw std::invalid_argument("render_histogram: bad bin count");
    if (width_px < 100) throw std::invalid_argument("render_histogram: width too small");

    const double lo = *std::min_element(values.begin(), values.end());
    double hi = *std::max_element(values.begin(), values.end());
    if (hi <= lo) hi = lo + 1.0; // constant data: one unit-wide bin span
    const double bin_width = (hi - lo) / static_cast<double>(bin_count);

    std::vector<int> counts(static_cast<std::size_t>(bin_count), 0);
    for (double v : values) {
        auto bin = static_cast<std::int64_t>((v - lo) / bin_width);
        if (bin >= bin_count) bin = bin_count - 1; // v == hi lands in the last bin
        if (bin < 0) bin = 0;
        ++counts[static_cast<std::size_t>(bin)];
    }
    const int peak = *std::max_element(counts.begin(), counts.end());

    const double margin = 40.0;
    const double pad = 12.0;
    const int height_px = width_px * 3 / 5;
    const double plot_w = static_cast<double>(width_px) - margin - pad;
    const double plot_h = static_cast<double>(height_px) - margin - pad;
    const double bar_w = plot_w / static_cast<double>(bin_count);

    std::string svg = svg_open(width_px, height_px);
    svg += svg_line(margin, static_cast<double>(height_px) - margin,
                    static_cast<double>(width_px) - pad, static_cast<double>(height_px) - margin,
                    "#333", "1.5");
    svg += svg_line(margin, static_cast<double>(height_px) - margin, margin, pad, "#333", "1.5");
    for (int i = 0; i < bin_count; ++i) {
        const int count = counts[static_cast<std::size_t>(i)];
        if (count == 0) continue;
        const double h = plot_h * static_cast<double>(count) / static_cast<double>(peak);
        const double bx = margin + bar_w * static_cast<double>(i);
        const double by = static_cast<double>(height_px) - margin - h;
        svg += "<rect x=\"" + px(bx) + "\" y=\"" + px(by) + "\" width=\"" + px(bar_w) +
               "\" height=\"" + px(h) + "\" fill=\"#5a8ac6\" stroke=\"#28415f\" stroke-width=\"1\""
               " data-count=\"" + std::to_string(count) + "\"/>\n";
    }
    svg += "</svg>\n";
    return {filename, std::move(svg), width_px};
}

std::vector<ImageAsset> render_assets(const std::vector<AssetJob>& jobs) {
    std::vector<ImageAsset> assets;
    assets.reserve(jobs.size());
    for (const AssetJob& job : jobs) {
        assets.push_back(std::visit(
            [](const auto& j) -> ImageAsset {
                using T = std::decay_t<decltype(j)>;
                if constexpr (std::is_same_v<T, ScatterplotJob>)
                    return render_scatterplot(j.data, j.filename, j.width_px);
                else if constexpr (std::is_same_v<T, LatticeFigureJob>)
                    return render_lattice_figure(j.trapezoid, j.grid_extent, j.filename);
                else if constexpr (std::is_same_v<T, TypesetJob>)
                    return render_typeset_radical(j.value, j.filename);
                else
                    return render_histogram(j.values, j.bin_count, j.filename, j.width_px);
            },
            job));
    }
    return assets;
}

} // namespace qbank
