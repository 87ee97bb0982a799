#pragma once

#include "k3lab/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3lab {

// Rational matrix acting on column coordinate vectors of a fixed lattice.
// `integral` marks elements of O(L) as opposed to O(L_R); composition is
// (f * g)(x) = f(g(x)).
struct Isometry {
    LatticePtr lattice;
    QMat matrix;
    bool integral = false;

    Isometry() = default;
    Isometry(LatticePtr lat, QMat m) : lattice(std::move(lat)), matrix(std::move(m)) {
        if (matrix.rows() != lattice->rank() || matrix.cols() != lattice->rank())
            throw Error("isometry matrix shape does not match lattice rank");
        integral = true;
        for (std::size_t i = 0; i < matrix.rows() && integral; ++i)
            for (std::size_t j = 0; j < matrix.cols(); ++j)
                if (!isInteger(matrix(i, j))) { integral = false; break; }
    }

    static Isometry identityOn(const LatticePtr& lat) {
        return Isometry(lat, QMat::identity(lat->rank()));
    }
};

// Exact check matrix^T Gram matrix = Gram.
inline bool verifyIsometry(const Isometry& f) {
    QMat g = toRational(f.lattice->gram());
    return f.matrix.transposed() * g * f.matrix == g;
}

inline Isometry compose(const Isometry& f, const Isometry& g) {
    requireSameLattice(f.lattice, g.lattice);
    return Isometry(f.lattice, f.matrix * g.matrix);
}

inline Isometry inverseIsometry(const Isometry& f) {
    return Isometry(f.lattice, inverse(f.matrix));
}

inline RationalVector apply(const Isometry& f, const RationalVector& x) {
    requireSameLattice(f.lattice, x.lattice);
    return {f.lattice, f.matrix * x.coords};
}

inline LatticeVector apply(const Isometry& f, const LatticeVector& x) {
    if (!f.integral) throw Error("non-integral isometry applied to an integral vector");
    RationalVector y = apply(f, x.toRational());
    std::vector<Int> c(y.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = numerator(y.coords[i]);
    return {x.lattice, std::move(c)};
}

// Linear map between two lattices of the same rank (used where a map flips the
// sign of the form on a summand, which no single-lattice isometry can express).
struct LatticeMap {
    LatticePtr domain, codomain;
    QMat matrix;

    RationalVector operator()(const RationalVector& x) const {
        requireSameLattice(domain, x.lattice);
        return {codomain, matrix * x.coords};
    }
};

// matrix^T Gram_codomain matrix = Gram_domain
inline bool pullsFormBack(const LatticeMap& f) {
    return f.matrix.transposed() * toRational(f.codomain->gram()) * f.matrix ==
           toRational(f.domain->gram());
}

// -- marked splittings  Gamma + U = Gamma' + U' + U ---------------------------
//
// The context fixes, once and for all, a hyperbolic pair (v, vstar) inside
// Gamma, the complement Gamma' = {v, vstar}^perp, and an extra hyperbolic
// summand U with basis (w, wstar). The Mukai companion carries the same
// coordinates with the U block negated.
class MirrorContext {
public:
    MirrorContext(LatticePtr gammaLattice, LatticeVector vIn, LatticeVector vstarIn)
        : gamma_(std::move(gammaLattice)), v_(std::move(vIn)), vstar_(std::move(vstarIn)) {
        requireSameLattice(gamma_, v_.lattice);
        requireHyperbolicPair(v_, vstar_);

        const std::size_t n = gamma_->rank();
        // saturated basis of {v, vstar}^perp (may be empty when Gamma = U')
        IMat rows(2, n);
        const IMat& g = gamma_->gram();
        for (std::size_t j = 0; j < n; ++j) {
            Int a(0), b(0);
            for (std::size_t i = 0; i < n; ++i) {
                a += v_.coords[i] * g(i, j);
                b += vstar_.coords[i] * g(i, j);
            }
            rows(0, j) = a;
            rows(1, j) = b;
        }
        for (auto& col : integerKernel(rows)) gammaPrime_.emplace_back(gamma_, std::move(col));
        if (gammaPrime_.size() != n - 2)
            throw Error("hyperbolic pair complement has unexpected rank");

        sum_ = directSum(gamma_, hyperbolicPlane(), gamma_->label() + "+U");
        w_ = basisVector(sum_.sum, n);
        wstar_ = basisVector(sum_.sum, n + 1);

        IMat mg = sum_.sum->gram();
        mg(n, n + 1) = -1;
        mg(n + 1, n) = -1;
        mukai_ = makeLattice(std::move(mg), gamma_->label() + "+(-U)");

        // {gammaPrime, v, vstar, w, wstar} must be a Z-basis of Gamma + U
        IMat basisMat(n + 2, n + 2);
        for (std::size_t j = 0; j < gammaPrime_.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) basisMat(i, j) = gammaPrime_[j].coords[i];
        for (std::size_t i = 0; i < n; ++i) {
            basisMat(i, n - 2) = v_.coords[i];
            basisMat(i, n - 1) = vstar_.coords[i];
        }
        basisMat(n, n) = 1;
        basisMat(n + 1, n + 1) = 1;
        Int det = determinant(basisMat);
        if (det != 1 && det != -1)
            throw Error("hyperbolic pair does not split off: adapted basis not unimodular");
    }

    static MirrorContext standardK3() {
        auto k3 = k3Lattice();
        return MirrorContext(k3, basisVector(k3, 20), basisVector(k3, 21));
    }

    const LatticePtr& gamma() const { return gamma_; }
    const LatticePtr& gammaU() const { return sum_.sum; }
    const LatticePtr& mukai() const { return mukai_; }

    const LatticeVector& v() const { return v_; }
    const LatticeVector& vstar() const { return vstar_; }
    const LatticeVector& w() const { return w_; }
    const LatticeVector& wstar() const { return wstar_; }
    const std::vector<LatticeVector>& gammaPrimeBasis() const { return gammaPrime_; }

    LatticeVector vInGammaU() const { return sum_.embedLeft(v_); }
    LatticeVector vstarInGammaU() const { return sum_.embedLeft(vstar_); }

    RationalVector embed(const RationalVector& x) const { return sum_.embedLeft(x); }
    LatticeVector embed(const LatticeVector& x) const { return sum_.embedLeft(x); }

    // natural projection Gamma + U -> Gamma (kills w and wstar coordinates)
    RationalVector projectToGamma(const RationalVector& x) const {
        requireSameLattice(sum_.sum, x.lattice);
        std::vector<Rat> c(gamma_->rank());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i];
        return {gamma_, std::move(c)};
    }

    // reinterprets Gamma + U coordinates in the Mukai companion (same basis)
    RationalVector asMukai(const RationalVector& x) const {
        requireSameLattice(sum_.sum, x.lattice);
        return {mukai_, x.coords};
    }

    bool inGammaBlock(const RationalVector& x) const {
        requireSameLattice(sum_.sum, x.lattice);
        return pairing(x, w_) == 0 && pairing(x, wstar_) == 0;
    }
    bool inGammaPrime(const RationalVector& x) const {
        requireSameLattice(gamma_, x.lattice);
        return pairing(x, v_) == 0 && pairing(x, vstar_) == 0;
    }
    bool inGammaPrime(const LatticeVector& x) const { return inGammaPrime(x.toRational()); }

private:
    LatticePtr gamma_;
    LatticeVector v_, vstar_;
    std::vector<LatticeVector> gammaPrime_;
    DirectSum sum_;
    LatticeVector w_, wstar_;
    LatticePtr mukai_;
};

// -- B-field shifts ------------------------------------------------------------

// h |-> h, hstar |-> B + hstar - (B^2/2) h, y |-> y - <B,y> h  for y perp {h, hstar}.
inline Isometry bShiftOn(const LatticePtr& lat, const LatticeVector& h, const LatticeVector& hstar,
                         const RationalVector& b) {
    requireHyperbolicPair(h, hstar);
    requireSameLattice(lat, h.lattice);
    requireSameLattice(lat, b.lattice);
    if (pairing(b, h) != 0 || pairing(b, hstar) != 0)
        throw Error("B-field shift: B must be orthogonal to the hyperbolic pair");
    const std::size_t n = lat->rank();
    const Rat b2 = square(b);
    QMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector x = basisVector(lat, j).toRational();
        auto [y, lambda, mu] = splitHyperbolic(x, h, hstar);
        RationalVector img = y + mu * b +
                             (lambda - pairing(b, y) - mu * b2 / 2) * h.toRational() +
                             mu * hstar.toRational();
        for (std::size_t i = 0; i < n; ++i) m(i, j) = img.coords[i];
    }
    Isometry f(lat, std::move(m));
    if (!verifyIsometry(f)) throw Error("B-field shift failed the Gram check");
    return f;
}

// Shift on Gamma + U along the external summand (w, wstar); B lives in Gamma.
inline Isometry bFieldShift(const MirrorContext& ctx, const RationalVector& b0InGamma) {
    return bShiftOn(ctx.gammaU(), ctx.w(), ctx.wstar(), ctx.embed(b0InGamma));
}

// Internal shift on a lattice split as Gamma' + U' with basis (v, vstar).
inline Isometry internalBFieldShift(const LatticePtr& lat, const LatticeVector& v,
                                    const LatticeVector& vstar, const LatticeVector& b) {
    requireSameLattice(lat, b.lattice);
    return bShiftOn(lat, v, vstar, b.toRational());
}

// Multiplication by w^* + B0 + (B0^2/2) w in the Mukai companion:
// lambda w^* + x + mu w |-> lambda w^* + (x + lambda B0) + (mu + <B0,x> + lambda B0^2/2) w.
inline Isometry mukaiExponential(const MirrorContext& ctx, const RationalVector& b0InGamma) {
    const LatticePtr& mukai = ctx.mukai();
    RationalVector b = ctx.asMukai(ctx.embed(b0InGamma));
    RationalVector w = ctx.asMukai(ctx.w().toRational());
    RationalVector wstar = ctx.asMukai(ctx.wstar().toRational());
    const Rat b2 = pairing(b, b);
    const std::size_t n = mukai->rank();
    QMat m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector zeta = basisVector(mukai, j).toRational();
        Rat lambda = -pairing(zeta, w);
        Rat mu = -pairing(zeta, wstar);
        RationalVector x = zeta - lambda * wstar - mu * w;
        RationalVector img = lambda * wstar + (x + lambda * b) +
                             (mu + pairing(b, x) + lambda * b2 / 2) * w;
        for (std::size_t i = 0; i < n; ++i) m(i, j) = img.coords[i];
    }
    Isometry f(mukai, std::move(m));
    if (!verifyIsometry(f)) throw Error("Mukai exponential failed the Gram check");
    return f;
}

// Identity on Gamma, w |-> -w, wstar |-> wstar; pulls the Mukai form back to
// the Gamma + U form.
inline LatticeMap mukaiIdentification(const MirrorContext& ctx) {
    const std::size_t n = ctx.gammaU()->rank();
    QMat m = QMat::identity(n);
    m(n - 2, n - 2) = -1;
    LatticeMap f{ctx.gammaU(), ctx.mukai(), std::move(m)};
    if (!pullsFormBack(f)) throw Error("Mukai identification failed the form check");
    return f;
}

namespace detail {
inline Isometry fromImages(const LatticePtr& lat, const std::vector<RationalVector>& images) {
    const std::size_t n = lat->rank();
    QMat m(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = images[j].coords[i];
    Isometry f(lat, std::move(m));
    if (!verifyIsometry(f)) throw Error("constructed map failed the Gram check");
    return f;
}
} // namespace detail

// Identity on Gamma, -id on the U summand.
inline Isometry minusIdOnU(const MirrorContext& ctx) {
    const LatticePtr& lat = ctx.gammaU();
    const auto wq = ctx.w().toRational(), wsq = ctx.wstar().toRational();
    std::vector<RationalVector> images;
    for (std::size_t j = 0; j < lat->rank(); ++j) {
        RationalVector x = basisVector(lat, j).toRational();
        images.push_back(x - 2 * pairing(x, wsq) * wq - 2 * pairing(x, wq) * wsq);
    }
    return detail::fromImages(lat, images);
}

// Identity on Gamma, w <-> wstar.
inline Isometry swapUBasis(const MirrorContext& ctx) {
    const LatticePtr& lat = ctx.gammaU();
    const auto wq = ctx.w().toRational(), wsq = ctx.wstar().toRational();
    std::vector<RationalVector> images;
    for (std::size_t j = 0; j < lat->rank(); ++j) {
        RationalVector x = basisVector(lat, j).toRational();
        Rat lambda = pairing(x, wsq), mu = pairing(x, wq);
        images.push_back(x + (mu - lambda) * wq + (lambda - mu) * wsq);
    }
    return detail::fromImages(lat, images);
}

// Identity on Gamma', switches the two hyperbolic summands: v <-> w, vstar <-> wstar.
inline Isometry switchHyperbolicSummands(const MirrorContext& ctx) {
    const LatticePtr& lat = ctx.gammaU();
    const auto vq = ctx.vInGammaU().toRational(), vsq = ctx.vstarInGammaU().toRational();
    const auto wq = ctx.w().toRational(), wsq = ctx.wstar().toRational();
    std::vector<RationalVector> images;
    for (std::size_t j = 0; j < lat->rank(); ++j) {
        RationalVector x = basisVector(lat, j).toRational();
        Rat a = pairing(x, vsq), b = pairing(x, vq);
        Rat lambda = pairing(x, wsq), mu = pairing(x, wq);
        images.push_back(x + (lambda - a) * vq + (mu - b) * vsq + (a - lambda) * wq +
                         (b - mu) * wsq);
    }
    return detail::fromImages(lat, images);
}

// Reflection in the hyperplane c^perp for a (-2)-class: alpha |-> alpha + <alpha,c> c.
inline Isometry reflection(const LatticeVector& c) {
    if (square(c) != -2) throw Error("reflection requires a class of square -2");
    const LatticePtr& lat = c.lattice;
    const auto cq = c.toRational();
    std::vector<RationalVector> images;
    for (std::size_t j = 0; j < lat->rank(); ++j) {
        RationalVector x = basisVector(lat, j).toRational();
        images.push_back(x + pairing(x, cq) * cq);
    }
    return detail::fromImages(lat, images);
}

struct ChamberResult {
    RationalVector result;
    std::vector<std::size_t> word; // indices into the supplied root list
    bool converged = true;
};

// Applies reflections in listed (-2)-roots while some <alpha, root> < 0.
// The list is caller-supplied and finite; a cap guards against non-finite-type input.
inline ChamberResult reflectIntoChamber(RationalVector alpha, const std::vector<LatticeVector>& roots,
                                        std::size_t cap = 10000) {
    if (square(alpha) <= 0) throw Error("chamber reflection requires a vector of positive square");
    for (const auto& c : roots)
        if (square(c) != -2) throw Error("root list contains a class of square != -2");
    ChamberResult out{std::move(alpha), {}, true};
    for (std::size_t iter = 0; iter < cap; ++iter) {
        bool dirty = false;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            Rat p = pairing(out.result, roots[i].toRational());
            if (p < 0) {
                out.result = out.result + p * roots[i].toRational();
                out.word.push_back(i);
                dirty = true;
                break;
            }
        }
        if (!dirty) return out;
    }
    out.converged = false;
    return out;
}

} // namespace k3lab
