#include "triplane/render.h"

#include <algorithm>
#include <vector>

namespace triplane {

namespace {

constexpr int kUnit = 24;  // strand spacing and row height
constexpr int kMargin = 18;
constexpr int kLabelRoom = 16;
constexpr int kGap = 36;

struct Panel {
    std::string label;
    SliceSeq slices;
    bool stubs = false;  // extend the final strands one extra row
};

void line(std::string& out, int x1, int y1, int x2, int y2) {
    out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>\n";
}

// arc between two points at the same height, bulging toward apex_y
void arc(std::string& out, int x1, int x2, int y, int apex_y) {
    out += "<path d=\"M " + std::to_string(x1) + ' ' + std::to_string(y) + " C " +
           std::to_string(x1) + ' ' + std::to_string(apex_y) + ", " + std::to_string(x2) + ' ' +
           std::to_string(apex_y) + ", " + std::to_string(x2) + ' ' + std::to_string(y) +
           "\"/>\n";
}

void draw_panel(std::string& body, std::string& labels, const Panel& panel, int ox, int oy) {
    labels += "<text x=\"" + std::to_string(ox + kUnit) + "\" y=\"" + std::to_string(oy - 6) +
              "\">" + panel.label + "</text>\n";

    const std::vector<int> profile = width_profile(panel.slices, 0);
    auto x = [&](int i) { return ox + i * kUnit; };
    for (std::size_t r = 0; r < panel.slices.size(); ++r) {
        const Slice& s = panel.slices[r];
        const int w = profile[r];
        const int y0 = oy + static_cast<int>(r) * kUnit;
        const int y1 = y0 + kUnit;
        const int j = s.pos;
        const int cx = x(j) + kUnit / 2;
        const int cy = y0 + kUnit / 2;
        switch (s.kind) {
            case SliceKind::Cap:
                for (int i = 1; i <= w; ++i) line(body, x(i), y0, x(i < j ? i : i + 2), y1);
                arc(body, x(j), x(j + 1), y1, y0 + 6);
                break;
            case SliceKind::Cup:
                for (int i = 1; i <= w; ++i) {
                    if (i == j || i == j + 1) continue;
                    line(body, x(i), y0, x(i < j ? i : i - 2), y1);
                }
                arc(body, x(j), x(j + 1), y0, y1 - 6);
                break;
            case SliceKind::Cross:
                for (int i = 1; i <= w; ++i) {
                    if (i == j || i == j + 1) continue;
                    line(body, x(i), y0, x(i), y1);
                }
                if (s.sign > 0) {
                    line(body, x(j), y0, x(j + 1), y1);
                    line(body, x(j + 1), y0, cx + 5, cy - 5);
                    line(body, cx - 5, cy + 5, x(j), y1);
                } else {
                    line(body, x(j + 1), y0, x(j), y1);
                    line(body, x(j), y0, cx - 5, cy - 5);
                    line(body, cx + 5, cy + 5, x(j + 1), y1);
                }
                break;
            case SliceKind::Mark:
                for (int i = 1; i <= w; ++i) {
                    if (i == j || i == j + 1) continue;
                    line(body, x(i), y0, x(i), y1);
                }
                line(body, x(j), y0, x(j + 1), y1);
                line(body, x(j + 1), y0, x(j), y1);
                body += "<rect x=\"" + std::to_string(cx - 5) + "\" y=\"" + std::to_string(cy - 5) +
                        "\" width=\"10\" height=\"10\" fill=\"" +
                        (s.axis == MarkAxis::Turnback ? "#1a1a1a" : "#ffffff") + "\"/>\n";
                break;
        }
    }
    if (panel.stubs) {
        const int y = oy + static_cast<int>(panel.slices.size()) * kUnit;
        for (int i = 1; i <= profile.back(); ++i) line(body, x(i), y, x(i), y + kUnit);
    }
}

}  // namespace

std::string render_svg(const DiagramFile& file) {
    std::vector<Panel> panels;
    if (file.kind == DiagramFileKind::TriPlane) {
        for (int i = 0; i < 3; ++i)
            panels.push_back({"D" + std::to_string(i + 1), file.triplane.tangle(i).slices(), true});
    } else {
        panels.push_back({"M", file.marked.slices(), false});
    }

    int total_width = kMargin;
    std::size_t max_rows = 1;
    std::vector<int> origins;
    for (std::size_t p = 0; p < panels.size(); ++p) {
        origins.push_back(total_width);
        const std::vector<int> profile = width_profile(panels[p].slices, 0);
        const int columns = std::max(1, *std::max_element(profile.begin(), profile.end()));
        total_width += (columns + 1) * kUnit;
        if (p + 1 < panels.size()) total_width += kGap;
        max_rows = std::max(max_rows, panels[p].slices.size() + (panels[p].stubs ? 1 : 0));
    }
    total_width += kMargin;
    const int oy = kMargin + kLabelRoom;
    const int total_height = oy + static_cast<int>(max_rows) * kUnit + kMargin;

    std::string body, labels;
    for (std::size_t p = 0; p < panels.size(); ++p) draw_panel(body, labels, panels[p], origins[p], oy);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(total_width) + "\" height=\"" + std::to_string(total_height) +
                      "\" viewBox=\"0 0 " + std::to_string(total_width) + ' ' +
                      std::to_string(total_height) + "\">\n";
    out += "<g fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    out += body;
    out += "</g>\n";
    out += "<g fill=\"#1a1a1a\" font-family=\"monospace\" font-size=\"13\">\n";
    out += labels;
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace triplane
