#pragma once
// Standalone SVG rendering of a certificate: the triangle, the nine-point
// circle, the four tangent circles, and the four tangency points. Geometry
// is converted to decimals once; the drawing itself needs no exactness.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "certify.hpp"

namespace feuerbach {

namespace detail {

inline double approx_double(const FieldElem& x) {
    return std::strtod(approx(x, 12).c_str(), nullptr);
}

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace detail

inline void emit_svg(const FeuerbachCertificate& cert, const std::string& path) {
    using detail::approx_double;
    using detail::fmt;
    const TriangleMetrics& m = cert.metrics;

    struct Disk {
        double u, v, r;
        const char* stroke;
    };
    std::array<Disk, 5> disks = {
        Disk{approx_double(m.ninepoint_cart.u), approx_double(m.ninepoint_cart.v),
             approx_double(m.r_nine), "#b8860b"},
        Disk{approx_double(m.incenter_cart.u), approx_double(m.incenter_cart.v),
             approx_double(m.r_in), "#2563b0"},
        Disk{approx_double(m.excenter_cart[0].u), approx_double(m.excenter_cart[0].v),
             approx_double(m.r_ex[0]), "#3b7a3b"},
        Disk{approx_double(m.excenter_cart[1].u), approx_double(m.excenter_cart[1].v),
             approx_double(m.r_ex[1]), "#3b7a3b"},
        Disk{approx_double(m.excenter_cart[2].u), approx_double(m.excenter_cart[2].v),
             approx_double(m.r_ex[2]), "#3b7a3b"}};

    const std::array<double, 6> verts = {
        approx_double(cert.triangle->A.u), approx_double(cert.triangle->A.v),
        approx_double(cert.triangle->B.u), approx_double(cert.triangle->B.v),
        approx_double(cert.triangle->C.u), approx_double(cert.triangle->C.v)};

    double umin = verts[0], umax = verts[0], vmin = verts[1], vmax = verts[1];
    for (size_t i = 0; i < 3; ++i) {
        umin = std::min(umin, verts[2 * i]);
        umax = std::max(umax, verts[2 * i]);
        vmin = std::min(vmin, verts[2 * i + 1]);
        vmax = std::max(vmax, verts[2 * i + 1]);
    }
    for (const Disk& d : disks) {
        umin = std::min(umin, d.u - d.r);
        umax = std::max(umax, d.u + d.r);
        vmin = std::min(vmin, d.v - d.r);
        vmax = std::max(vmax, d.v + d.r);
    }
    const double mu = 0.1 * (umax - umin), mv = 0.1 * (vmax - vmin);
    const double span = std::max(umax - umin, vmax - vmin);
    const double stroke = 0.006 * span, arm = 0.02 * span;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += fmt(umin - mu) + " " + fmt(-(vmax + mv)) + " " + fmt(umax - umin + 2 * mu) + " " +
         fmt(vmax - vmin + 2 * mv) + "\">\n";
    s += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"" + fmt(stroke) +
         "\" stroke-linecap=\"round\">\n";

    s += "<polygon stroke=\"#1f1f1f\" points=\"";
    for (size_t i = 0; i < 3; ++i) {
        if (i) s += " ";
        s += fmt(verts[2 * i]) + "," + fmt(verts[2 * i + 1]);
    }
    s += "\"/>\n";

    for (const Disk& d : disks)
        s += "<circle stroke=\"" + std::string(d.stroke) + "\" cx=\"" + fmt(d.u) + "\" cy=\"" +
             fmt(d.v) + "\" r=\"" + fmt(d.r) + "\"/>\n";

    for (const CircleRecord& rec : cert.records) {
        const double zu = approx_double(rec.Z_cart.u), zv = approx_double(rec.Z_cart.v);
        s += "<path class=\"tangency\" stroke=\"#c21807\" d=\"M" + fmt(zu - arm) + " " +
             fmt(zv) + " L" + fmt(zu + arm) + " " + fmt(zv) + " M" + fmt(zu) + " " +
             fmt(zv - arm) + " L" + fmt(zu) + " " + fmt(zv + arm) + "\"/>\n";
    }

    s += "</g>\n</svg>\n";

    std::ofstream out(path, std::ios::binary);
    out << s;
    if (!out.good()) fail(ErrorCode::io_error, "cannot write " + path);
}

} // namespace feuerbach
