#include "stokes/core/path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stokes::core {

Cplx PathSeg::point(double u) const {
    if (kind == Kind::Line) return a + u * (b - a);
    double th = th0 + u * (th1 - th0);
    return center + radius * Cplx(std::cos(th), std::sin(th));
}

Cplx PathSeg::tangent(double u) const {
    if (kind == Kind::Line) return b - a;
    double th = th0 + u * (th1 - th0);
    return radius * (th1 - th0) * Cplx(-std::sin(th), std::cos(th));
}

double PathSeg::chord_length() const {
    if (kind == Kind::Line) return std::abs(b - a);
    return radius * std::abs(th1 - th0);
}

ComplexPath::ComplexPath(std::vector<PathSeg> segs) : segs_(std::move(segs)) { finish(); }

ComplexPath::ComplexPath(const std::vector<Cplx>& polyline) {
    if (polyline.size() < 2) throw std::invalid_argument("path needs at least two points");
    for (size_t i = 0; i + 1 < polyline.size(); ++i) {
        PathSeg s;
        s.kind = PathSeg::Kind::Line;
        s.a = polyline[i];
        s.b = polyline[i + 1];
        if (std::abs(s.b - s.a) == 0.0) continue;  // drop exact duplicates
        segs_.push_back(s);
    }
    if (segs_.empty()) throw std::invalid_argument("path is a single point");
    finish();
}

ComplexPath ComplexPath::line(Cplx a, Cplx b) {
    PathSeg s;
    s.kind = PathSeg::Kind::Line;
    s.a = a;
    s.b = b;
    return ComplexPath(std::vector<PathSeg>{s});
}

ComplexPath ComplexPath::circle(Cplx center, double radius, bool ccw) {
    // four quarter arcs so no single segment wraps more than pi/2
    std::vector<PathSeg> ss;
    double pi = 3.14159265358979323846;
    for (int k = 0; k < 4; ++k) {
        PathSeg s;
        s.kind = PathSeg::Kind::Arc;
        s.center = center;
        s.radius = radius;
        if (ccw) {
            s.th0 = 0.5 * pi * k;
            s.th1 = 0.5 * pi * (k + 1);
        } else {
            s.th0 = -0.5 * pi * k;
            s.th1 = -0.5 * pi * (k + 1);
        }
        ss.push_back(s);
    }
    return ComplexPath(std::move(ss));
}

ComplexPath ComplexPath::arc(Cplx center, double radius, double th0, double th1) {
    // split so each piece spans at most pi/2
    std::vector<PathSeg> ss;
    double span = th1 - th0;
    int n = std::max(1, (int)std::ceil(std::abs(span) / (0.5 * 3.14159265358979323846)));
    for (int k = 0; k < n; ++k) {
        PathSeg s;
        s.kind = PathSeg::Kind::Arc;
        s.center = center;
        s.radius = radius;
        s.th0 = th0 + span * k / n;
        s.th1 = th0 + span * (k + 1) / n;
        ss.push_back(s);
    }
    return ComplexPath(std::move(ss));
}

void ComplexPath::finish() {
    if (segs_.empty()) throw std::invalid_argument("empty path");
    double scale = 0.0;
    for (auto& s : segs_) scale = std::max({scale, std::abs(s.start()), std::abs(s.end())});
    double tol = 1e-12 * std::max(1.0, scale);
    for (size_t i = 0; i + 1 < segs_.size(); ++i) {
        if (std::abs(segs_[i].end() - segs_[i + 1].start()) > tol)
            throw std::invalid_argument("path segments do not join");
    }
    length_ = 0.0;
    cum_.assign(1, 0.0);
    for (auto& s : segs_) {
        length_ += s.chord_length();
        cum_.push_back(length_);
    }
    if (length_ <= 0.0) throw std::invalid_argument("path has zero length");
    for (auto& c : cum_) c /= length_;
    closed_ = std::abs(end() - start()) <= tol;
}

void ComplexPath::locate(double s, size_t& seg, double& u) const {
    s = std::clamp(s, 0.0, 1.0);
    auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    size_t i = (it == cum_.begin()) ? 0 : (size_t)(it - cum_.begin()) - 1;
    if (i >= segs_.size()) i = segs_.size() - 1;
    double lo = cum_[i], hi = cum_[i + 1];
    seg = i;
    u = (hi > lo) ? (s - lo) / (hi - lo) : 0.0;
}

double ComplexPath::seg_start_param(size_t seg) const { return cum_[seg]; }

Cplx ComplexPath::point(double s) const {
    size_t i;
    double u;
    locate(s, i, u);
    return segs_[i].point(u);
}

ComplexPath ComplexPath::reversed() const {
    std::vector<PathSeg> out;
    for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
        PathSeg s = *it;
        if (s.kind == PathSeg::Kind::Line) {
            std::swap(s.a, s.b);
        } else {
            std::swap(s.th0, s.th1);
        }
        out.push_back(s);
    }
    return ComplexPath(std::move(out));
}

ComplexPath ComplexPath::concat(const ComplexPath& other) const {
    std::vector<PathSeg> out = segs_;
    out.insert(out.end(), other.segs_.begin(), other.segs_.end());
    return ComplexPath(std::move(out));
}

std::vector<Cplx> ComplexPath::sample(int per_seg) const {
    std::vector<Cplx> pts;
    pts.push_back(start());
    for (auto& s : segs_)
        for (int k = 1; k <= per_seg; ++k) pts.push_back(s.point((double)k / per_seg));
    return pts;
}

double hausdorff(const std::vector<Cplx>& A, const std::vector<Cplx>& B) {
    auto one_sided = [](const std::vector<Cplx>& X, const std::vector<Cplx>& Y) {
        double worst = 0.0;
        for (auto& x : X) {
            double best = 1e300;
            for (auto& y : Y) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(A, B), one_sided(B, A));
}

}  // namespace stokes::core
