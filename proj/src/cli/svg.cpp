// Copyright 2026 The echochain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace echochain::cli {
namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 36, kBottom = 50;

std::string num(double x, int precision = 2) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

std::string tick_label(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 3);
    return std::string(buf, res.ptr);
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Axis {
    bool log = false;
    double lo = 0, hi = 1;

    double map(double v) const { return log ? std::log10(v) : v; }
    double unit(double v) const { return (map(v) - lo) / (hi - lo); }

    std::vector<double> ticks() const {
        std::vector<double> t;
        if (log) {
            for (double d = std::ceil(lo - 1e-9); d <= hi + 1e-9; d += 1) t.push_back(std::pow(10.0, d));
        } else {
            for (int k = 0; k <= 5; ++k) t.push_back(lo + (hi - lo) * k / 5);
        }
        return t;
    }
};

Axis fit_axis(bool log, const std::vector<double> &values) {
    Axis a;
    a.log = log;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double v : values) {
        if (!std::isfinite(v) || (log && v <= 0)) continue;
        lo = std::min(lo, a.map(v));
        hi = std::max(hi, a.map(v));
    }
    if (!std::isfinite(lo)) {
        lo = 0;
        hi = 1;
    }
    if (log) {
        lo = std::floor(lo);
        hi = std::ceil(hi);
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    a.lo = lo;
    a.hi = hi;
    return a;
}

bool plottable(const Axis &a, double v) { return std::isfinite(v) && (!a.log || v > 0); }

} // namespace

std::string render_svg(const PlotSpec &plot) {
    std::vector<double> xs, ys;
    for (const PlotSeries &s : plot.series) {
        xs.insert(xs.end(), s.x.begin(), s.x.end());
        ys.insert(ys.end(), s.y.begin(), s.y.end());
    }
    const Axis ax = fit_axis(plot.log_x, xs);
    const Axis ay = fit_axis(plot.log_y, ys);
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + ax.unit(v) * pw; };
    auto py = [&](double v) { return kTop + (1 - ay.unit(v)) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kWidth, 0)
      << "\" height=\"" << num(kHeight, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(plot.title) << "</text>\n"
      << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw)
      << "\" height=\"" << num(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (double t : ax.ticks()) {
        const double x = px(t);
        o << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(x)
          << "\" y2=\"" << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << num(x) << "\" y=\"" << num(kTop + ph + 18)
          << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ay.ticks()) {
        const double y = py(t);
        o << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
          << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y + 4)
          << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 10)
      << "\" text-anchor=\"middle\">" << escape(plot.x_label) << "</text>\n"
      << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << num(kTop + ph / 2) << ")\">" << escape(plot.y_label) << "</text>\n";

    double legend_y = kTop + 14;
    for (const PlotSeries &s : plot.series) {
        if (s.line) {
            o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
            bool first = true;
            for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
                if (!plottable(ax, s.x[k]) || !plottable(ay, s.y[k])) continue;
                o << (first ? "" : " ") << num(px(s.x[k])) << ',' << num(py(s.y[k]));
                first = false;
            }
            o << "\"/>\n";
        }
        if (s.markers) {
            for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
                if (!plottable(ax, s.x[k]) || !plottable(ay, s.y[k])) continue;
                o << "<circle cx=\"" << num(px(s.x[k])) << "\" cy=\"" << num(py(s.y[k]))
                  << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
            }
        }
        if (!s.label.empty()) {
            o << "<rect x=\"" << num(kLeft + pw - 150) << "\" y=\"" << num(legend_y - 9)
              << "\" width=\"10\" height=\"10\" fill=\"" << s.color << "\"/>\n"
              << "<text x=\"" << num(kLeft + pw - 135) << "\" y=\"" << num(legend_y) << "\">"
              << escape(s.label) << "</text>\n";
            legend_y += 16;
        }
    }
    o << "</svg>\n";
    return o.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

} // namespace echochain::cli
