#include "hexid/render.hpp"

#include <stdexcept>

namespace hexid {

namespace {

void require_renderable(const Window& w) {
    w.require_well_formed();
    if (w.area() > kMaxRenderArea)
        throw std::invalid_argument("render: window exceeds " + std::to_string(kMaxRenderArea) +
                                    " vertices");
}

}  // namespace

std::string render_text(const Window& w, const CodeParams& p) {
    require_renderable(w);
    std::string out;
    out.reserve(static_cast<std::size_t>(w.area()) + w.height());
    for (int y = w.y1; y >= w.y0; --y) {
        for (int x = w.x0; x <= w.x1; ++x) {
            char c = '.';
            if (is_codeword({x, y}, p))
                c = '#';
            else if (on_c_prime_row(y, p))
                c = 'o';
            out += c;
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const Window& w, const CodeParams& p) {
    require_renderable(w);
    constexpr int scale = 24;
    constexpr int margin = 24;
    const auto sx = [&](int x) { return margin + scale * (x - w.x0); };
    const auto sy = [&](int y) { return margin + scale * (w.y1 - y); };
    const int width = 2 * margin + scale * static_cast<int>(w.width() - 1);
    const int height = 2 * margin + scale * static_cast<int>(w.height() - 1);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";

    const auto line = [&](int x1, int y1, int x2, int y2) {
        out += "  <line x1=\"" + std::to_string(sx(x1)) + "\" y1=\"" + std::to_string(sy(y1)) +
               "\" x2=\"" + std::to_string(sx(x2)) + "\" y2=\"" + std::to_string(sy(y2)) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    };
    for (int y = w.y0; y <= w.y1; ++y)
        for (int x = w.x0; x < w.x1; ++x) line(x, y, x + 1, y);
    for (int y = w.y0; y < w.y1; ++y)
        for (int x = w.x0; x <= w.x1; ++x)
            if (parity_even(x + y)) line(x, y, x, y + 1);

    for (int y = w.y0; y <= w.y1; ++y)
        for (int x = w.x0; x <= w.x1; ++x) {
            const std::string cx = std::to_string(sx(x));
            const std::string cy = std::to_string(sy(y));
            if (is_codeword({x, y}, p))
                out += "  <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"6\" fill=\"black\"/>\n";
            else if (on_c_prime_row(y, p))
                out += "  <circle cx=\"" + cx + "\" cy=\"" + cy +
                       "\" r=\"6\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
            else
                out += "  <circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"2\" fill=\"black\"/>\n";
        }
    out += "</svg>\n";
    return out;
}

}  // namespace hexid
