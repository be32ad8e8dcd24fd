#pragma once
#include <vector>

#include "stokes/geom/stokes_graph.hpp"

namespace stokes::saddle {

using geom::Cplx;

// A certified saddle connection between zeros of the quadratic differential
// (a degenerate edge of the trajectory graph). from == to marks a loop based
// at one zero; its winding numbers identify the enclosed poles.
struct Segment {
    int from = -1, to = -1;
    bool loop = false;
    Cplx period{0.0};           // int sqrt(q) dz, sign fixed by Re(e^{i phase} P) > 0
    double im_residual = 0.0;   // |Im(e^{i phase} P)| / max(1, |P|)
    bool near_degenerate = false;
    std::vector<Cplx> path;     // zero-to-zero polyline (closed for loops)
    std::vector<int> winding;   // per-feature winding numbers, loops only
};

struct DetectOptions {
    double cert_tol = 1e-8;       // certified segment band
    double loose_tol = 1e-4;      // near-degenerate band above cert_tol
    double candidate_frac = 0.05; // near-miss threshold as a fraction of min_gap
    double quad_tol = 1e-11;
};

// Scans the traced rays for close approaches to zeros (including returns to
// the emitting zero) and certifies each candidate by integrating sqrt(q)
// along the traced polyline closed up to the two zeros. The period only
// depends on the homotopy class of the polyline, so trace drift near the
// target zero does not limit the certification accuracy.
std::vector<Segment> detect_segments(const geom::QuadraticDifferential& qd,
                                     const geom::StokesGraph& g,
                                     const DetectOptions& opt = {});

}  // namespace stokes::saddle
