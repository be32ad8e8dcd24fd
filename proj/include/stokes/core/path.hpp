#pragma once
#include <vector>

#include "stokes/core/polynomial.hpp"

namespace stokes::core {

// One smooth arc: straight line or circular arc.
struct PathSeg {
    enum class Kind { Line, Arc } kind = Kind::Line;
    Cplx a{0.0}, b{0.0};        // Line endpoints
    Cplx center{0.0};           // Arc data
    double radius = 0.0, th0 = 0.0, th1 = 0.0;

    Cplx point(double u) const;    // u in [0,1]
    Cplx tangent(double u) const;  // dz/du
    Cplx start() const { return point(0.0); }
    Cplx end() const { return point(1.0); }
    double chord_length() const;
};

// Piecewise-smooth oriented path; consecutive endpoints must coincide within 1e-12.
class ComplexPath {
  public:
    ComplexPath() = default;
    explicit ComplexPath(std::vector<PathSeg> segs);
    explicit ComplexPath(const std::vector<Cplx>& polyline);

    static ComplexPath line(Cplx a, Cplx b);
    static ComplexPath circle(Cplx center, double radius, bool ccw = true);
    static ComplexPath arc(Cplx center, double radius, double th0, double th1);

    const std::vector<PathSeg>& segments() const { return segs_; }
    size_t size() const { return segs_.size(); }
    bool closed() const { return closed_; }
    Cplx start() const { return segs_.front().start(); }
    Cplx end() const { return segs_.back().end(); }
    double length() const { return length_; }

    // global parameter s in [0,1], arclength-proportional across segments
    Cplx point(double s) const;
    void locate(double s, size_t& seg, double& u) const;
    double seg_start_param(size_t seg) const;  // s at the start of segment seg

    ComplexPath reversed() const;
    ComplexPath concat(const ComplexPath& other) const;

    // dense polyline sample (for Hausdorff comparisons and rendering)
    std::vector<Cplx> sample(int per_seg = 32) const;

  private:
    void finish();
    std::vector<PathSeg> segs_;
    std::vector<double> cum_;  // cumulative length fractions, size()+1 entries
    double length_ = 0.0;
    bool closed_ = false;
};

// Hausdorff distance between two point sets (symmetric).
double hausdorff(const std::vector<Cplx>& A, const std::vector<Cplx>& B);

}  // namespace stokes::core
