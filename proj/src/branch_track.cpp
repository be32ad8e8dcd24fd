#include "stokes/core/branch_track.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stokes/core/errors.hpp"

namespace stokes::core {

Cplx SqrtTracker::step(Cplx qval) {
    Cplx w = std::sqrt(qval);
    if (!have_) {
        prev_ = w;
        have_ = true;
        return w;
    }
    if (std::abs(w - prev_) > std::abs(w + prev_)) w = -w;
    prev_ = w;
    return w;
}

TrackedSqrt::TrackedSqrt(std::function<Cplx(Cplx)> q, const ComplexPath& path, Cplx seed)
    : q_(std::move(q)), path_(path) {
    // scale prepass, branch-independent
    const int NC = 129;
    for (int i = 0; i < NC; ++i) {
        double s = (double)i / (NC - 1);
        wscale_ = std::max(wscale_, std::abs(std::sqrt(q_(path_.point(s)))));
    }
    if (wscale_ == 0.0) throw std::invalid_argument("sqrt target vanishes on whole path");
    build(seed);
}

void TrackedSqrt::build(Cplx seed) {
    const double zfloor = 1e-6 * wscale_;
    const double min_ds = 1e-9;
    Cplx w0 = std::sqrt(q_(path_.point(0.0)));
    if (std::abs(seed) > 0.0 && std::abs(w0) > zfloor &&
        std::abs(w0 - seed) > std::abs(w0 + seed))
        w0 = -w0;
    s_.push_back(0.0);
    w_.push_back(w0);

    // march to each target, bisecting intervals where the branch choice is not
    // clearly resolved; an unresolvable interior point is a branch crossing
    const int NT = std::max<int>(128, 24 * (int)path_.size());
    std::vector<double> stack;  // pending targets, descending
    for (int i = NT; i >= 1; --i) stack.push_back((double)i / NT);
    while (!stack.empty()) {
        double st = stack.back();
        double sp = s_.back();
        Cplx wp = w_.back();
        Cplx w = std::sqrt(q_(path_.point(st)));
        double d1 = std::abs(w - wp), d2 = std::abs(w + wp);
        if (d2 < d1) {
            w = -w;
            std::swap(d1, d2);
        }
        // a zero at the far end of the path never passes the resolution test
        // (d1 == d2 there), so once the interval is refined well below the
        // target spacing a negligible value is accepted as is: its branch
        // carries no weight, and the refinement bound keeps the reference
        // table dense enough for the later sign matching
        bool ok = (std::abs(wp) <= zfloor) || (d1 <= 0.5 * d2) ||
                  (std::abs(w) <= zfloor && st - sp <= 1e-6);
        if (!ok) {
            if (st - sp < min_ds)
                throw BranchPointAt(path_.point(0.5 * (sp + st)),
                                    "branch point on integration path");
            stack.push_back(0.5 * (sp + st));
            continue;
        }
        stack.pop_back();
        s_.push_back(st);
        w_.push_back(w);
    }
}

Cplx TrackedSqrt::operator()(double s, Cplx z) const {
    Cplx w = std::sqrt(q_(z));
    if (w == Cplx(0.0, 0.0)) return w;
    auto it = std::lower_bound(s_.begin(), s_.end(), s);
    size_t i = (it == s_.end()) ? s_.size() - 1 : (size_t)(it - s_.begin());
    if (i > 0 && (i == s_.size() || s - s_[i - 1] < s_[i] - s)) --i;
    // prefer a reference the branch is unambiguous at
    const double zfloor = 1e-6 * wscale_;
    size_t j = i;
    while (j + 1 < w_.size() && std::abs(w_[j]) <= zfloor) ++j;
    if (std::abs(w_[j]) <= zfloor) {
        j = i;
        while (j > 0 && std::abs(w_[j]) <= zfloor) --j;
    }
    if (std::abs(w - w_[j]) > std::abs(w + w_[j])) w = -w;
    return w;
}

PathIntegrand TrackedSqrt::integrand() const {
    return [this](double s, Cplx z) { return (*this)(s, z); };
}

int TrackedSqrt::closure_sign() const {
    if (!path_.closed())
        throw std::logic_error("closure_sign on open path");
    const double zfloor = 1e-6 * wscale_;
    if (std::abs(w_.front()) <= zfloor || std::abs(w_.back()) <= zfloor)
        throw BranchPointAt(path_.start(), "closed contour starts at a branch point");
    return std::abs(w_.back() - w_.front()) <= std::abs(w_.back() + w_.front()) ? 1 : -1;
}

}  // namespace stokes::core
