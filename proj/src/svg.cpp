#include "cpmat/svg.hpp"

#include "cpmat/error.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace cpmat {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// M^-1 k in [0,1]^2.
bool in_closed(const Modulus& mod, const IntVector& k) {
    const IntVector g = mod.adjugate() * k;
    const Int d = mod.abs_det();
    const int s = sgn(mod.det());
    for (const auto& gi : g) {
        const Int v = s < 0 ? Int(-gi) : gi;
        if (v < 0 || v > d) return false;
    }
    return true;
}

}  // namespace

std::string render_fpd_svg(const Fpd& fpd, const SvgOptions& opts) {
    const IntMatrix& m = fpd.modulus;
    if (m.rows() != 2 || m.cols() != 2) {
        throw Error(ErrorKind::UnsupportedDimension, "SVG rendering needs a 2x2 modulus");
    }
    const Modulus mod(m);
    const IntVector a1 = m.col(0), a2 = m.col(1);
    const IntVector far = a1 + a2;
    const std::vector<IntVector> corners{{Int(0), Int(0)}, a1, a2, far};

    Int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& c : corners) {
        xmin = std::min(xmin, c[0]);
        xmax = std::max(xmax, c[0]);
        ymin = std::min(ymin, c[1]);
        ymax = std::max(ymax, c[1]);
    }
    const double x0 = xmin.get_d(), y1 = ymax.get_d();
    const double width = Int(xmax - xmin).get_d() * opts.unit + 2 * opts.margin;
    const double height = Int(ymax - ymin).get_d() * opts.unit + 2 * opts.margin;
    auto px = [&](const Int& x) { return num(opts.margin + (x.get_d() - x0) * opts.unit); };
    auto py = [&](const Int& y) { return num(opts.margin + (y1 - y.get_d()) * opts.unit); };
    const double r = std::max(2.0, opts.unit * 0.15);

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    os << "<rect class=\"background\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (opts.show_grid) {
        os << "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
        for (Int x = xmin; x <= xmax; ++x) {
            os << "<line x1=\"" << px(x) << "\" y1=\"" << py(ymin) << "\" x2=\"" << px(x) << "\" y2=\""
               << py(ymax) << "\"/>\n";
        }
        for (Int y = ymin; y <= ymax; ++y) {
            os << "<line x1=\"" << px(xmin) << "\" y1=\"" << py(y) << "\" x2=\"" << px(xmax) << "\" y2=\""
               << py(y) << "\"/>\n";
        }
        os << "</g>\n";
    }

    auto edge = [&](const IntVector& p, const IntVector& q, const char* cls, bool dashed) {
        os << "<line class=\"" << cls << "\" x1=\"" << px(p[0]) << "\" y1=\"" << py(p[1]) << "\" x2=\""
           << px(q[0]) << "\" y2=\"" << py(q[1]) << "\" stroke=\"black\" stroke-width=\"2\"";
        if (dashed) os << " stroke-dasharray=\"6 4\"";
        os << "/>\n";
    };
    edge(corners[0], a1, "edge", false);
    edge(corners[0], a2, "edge", false);
    edge(a1, far, "far-edge", true);
    edge(a2, far, "far-edge", true);

    std::set<IntVector> inside(fpd.points.begin(), fpd.points.end());
    auto dot = [&](const IntVector& p, const char* cls, bool filled) {
        os << "<circle class=\"" << cls << "\" cx=\"" << px(p[0]) << "\" cy=\"" << py(p[1]) << "\" r=\""
           << num(r) << "\" data-x=\"" << p[0] << "\" data-y=\"" << p[1] << "\"";
        if (filled) {
            os << " fill=\"#1f5fbf\"";
        } else {
            os << " fill=\"none\" stroke=\"#bf3f1f\" stroke-width=\"1.5\"";
        }
        os << "/>\n";
    };
    for (const auto& p : fpd.points) dot(p, "fpd-point", true);
    for (Int x = xmin; x <= xmax; ++x) {
        for (Int y = ymin; y <= ymax; ++y) {
            const IntVector p{x, y};
            if (!inside.count(p) && in_closed(mod, p)) dot(p, "excluded-point", false);
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cpmat
