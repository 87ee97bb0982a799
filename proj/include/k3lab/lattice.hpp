#pragma once

#include "k3lab/matrix.hpp"
#include "k3lab/numeric.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace k3lab {

// A finite-rank free Z-module with a nondegenerate integral symmetric bilinear form.
class IntegralLattice {
public:
    IntegralLattice(IMat gram, std::string label)
        : gram_(std::move(gram)), label_(std::move(label)) {
        if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
            throw Error("lattice '" + label_ + "': Gram matrix must be square and nonempty");
        if (!gram_.isSymmetric())
            throw Error("lattice '" + label_ + "': Gram matrix not symmetric");
        if (determinant(gram_) == 0)
            throw Error("lattice '" + label_ + "': Gram matrix degenerate");
        even_ = true;
        for (std::size_t i = 0; i < gram_.rows(); ++i)
            if (gram_(i, i) % 2 != 0) { even_ = false; break; }
    }

    std::size_t rank() const { return gram_.rows(); }
    const IMat& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    bool even() const { return even_; }

    std::pair<std::size_t, std::size_t> signature() const {
        return symmetricSignature(toRational(gram_));
    }

    bool sameAs(const IntegralLattice& o) const {
        return this == &o || (label_ == o.label_ && gram_ == o.gram_);
    }

private:
    IMat gram_;
    std::string label_;
    bool even_ = false;
};

using LatticePtr = std::shared_ptr<const IntegralLattice>;

inline LatticePtr makeLattice(IMat gram, std::string label) {
    return std::make_shared<const IntegralLattice>(std::move(gram), std::move(label));
}

struct RationalVector {
    LatticePtr lattice;
    std::vector<Rat> coords;

    RationalVector() = default;
    RationalVector(LatticePtr lat, std::vector<Rat> c) : lattice(std::move(lat)), coords(std::move(c)) {
        if (!lattice) throw Error("vector without lattice");
        if (coords.size() != lattice->rank()) throw Error("vector length does not match lattice rank");
    }

    bool isZero() const {
        for (const auto& c : coords) if (c != 0) return false;
        return true;
    }
    bool isIntegral() const {
        for (const auto& c : coords) if (!isInteger(c)) return false;
        return true;
    }
};

struct LatticeVector {
    LatticePtr lattice;
    std::vector<Int> coords;

    LatticeVector() = default;
    LatticeVector(LatticePtr lat, std::vector<Int> c) : lattice(std::move(lat)), coords(std::move(c)) {
        if (!lattice) throw Error("vector without lattice");
        if (coords.size() != lattice->rank()) throw Error("vector length does not match lattice rank");
    }

    RationalVector toRational() const {
        std::vector<Rat> c(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) c[i] = Rat(coords[i]);
        return {lattice, std::move(c)};
    }

    bool isZero() const {
        for (const auto& c : coords) if (c != 0) return false;
        return true;
    }
};

inline void requireSameLattice(const LatticePtr& a, const LatticePtr& b) {
    if (!a || !b || !a->sameAs(*b))
        throw Error("vectors belong to different lattices ('" + (a ? a->label() : "?") + "' vs '" +
                    (b ? b->label() : "?") + "')");
}

// x^T Gram y, the bilinear pairing.
inline Rat pairing(const RationalVector& x, const RationalVector& y) {
    requireSameLattice(x.lattice, y.lattice);
    const IMat& g = x.lattice->gram();
    Rat acc(0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x.coords[i] == 0) continue;
        Rat row(0);
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (y.coords[j] != 0) row += Rat(g(i, j)) * y.coords[j];
        acc += x.coords[i] * row;
    }
    return acc;
}

inline Int pairing(const LatticeVector& x, const LatticeVector& y) {
    requireSameLattice(x.lattice, y.lattice);
    const IMat& g = x.lattice->gram();
    Int acc(0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x.coords[i] == 0) continue;
        Int row(0);
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (y.coords[j] != 0) row += g(i, j) * y.coords[j];
        acc += x.coords[i] * row;
    }
    return acc;
}

inline Rat pairing(const RationalVector& x, const LatticeVector& y) { return pairing(x, y.toRational()); }
inline Rat pairing(const LatticeVector& x, const RationalVector& y) { return pairing(x.toRational(), y); }

inline Rat square(const RationalVector& x) { return pairing(x, x); }
inline Int square(const LatticeVector& x) { return pairing(x, x); }

// -- coordinate arithmetic ----------------------------------------------------

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    requireSameLattice(a.lattice, b.lattice);
    std::vector<Rat> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return {a.lattice, std::move(c)};
}
inline RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    requireSameLattice(a.lattice, b.lattice);
    std::vector<Rat> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
    return {a.lattice, std::move(c)};
}
inline RationalVector operator*(const Rat& s, const RationalVector& a) {
    std::vector<Rat> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords[i];
    return {a.lattice, std::move(c)};
}
inline RationalVector operator-(const RationalVector& a) { return Rat(-1) * a; }

inline LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    requireSameLattice(a.lattice, b.lattice);
    std::vector<Int> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return {a.lattice, std::move(c)};
}
inline LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    requireSameLattice(a.lattice, b.lattice);
    std::vector<Int> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
    return {a.lattice, std::move(c)};
}
inline LatticeVector operator*(const Int& s, const LatticeVector& a) {
    std::vector<Int> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords[i];
    return {a.lattice, std::move(c)};
}
inline LatticeVector operator-(const LatticeVector& a) { return Int(-1) * a; }

inline bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.lattice->sameAs(*b.lattice) && a.coords == b.coords;
}
inline bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.lattice->sameAs(*b.lattice) && a.coords == b.coords;
}

inline LatticeVector basisVector(const LatticePtr& lat, std::size_t i) {
    std::vector<Int> c(lat->rank(), Int(0));
    c.at(i) = 1;
    return {lat, std::move(c)};
}

inline LatticeVector zeroVector(const LatticePtr& lat) {
    return {lat, std::vector<Int>(lat->rank(), Int(0))};
}
inline RationalVector zeroRationalVector(const LatticePtr& lat) {
    return {lat, std::vector<Rat>(lat->rank(), Rat(0))};
}

// Clears denominators and divides by the content; the result spans the same line.
inline LatticeVector primitivize(const RationalVector& x) {
    if (x.isZero()) throw Error("primitivize: zero vector");
    Int d(1);
    for (const auto& c : x.coords) d = lcm(d, denominator(c));
    std::vector<Int> v(x.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = numerator(x.coords[i]) * (d / denominator(x.coords[i]));
    Int g(0);
    for (const auto& c : v) g = gcd(g, c);
    for (auto& c : v) c /= g;
    return {x.lattice, std::move(v)};
}

// -- standard lattices --------------------------------------------------------

// Hyperbolic plane, Gram [[0,1],[1,0]].
inline LatticePtr hyperbolicPlane() {
    IMat g(2, 2);
    g(0, 1) = 1;
    g(1, 0) = 1;
    return makeLattice(std::move(g), "U");
}

// Negated E8: Cartan matrix of the E8 diagram, then negated. Even, unimodular,
// negative definite.
inline LatticePtr minusE8() {
    IMat g(8, 8);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (auto [a, b] : edges) { g(a, b) = -1; g(b, a) = -1; }
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) g(i, j) = -g(i, j);
    return makeLattice(std::move(g), "-E8");
}

struct DirectSum {
    LatticePtr sum;
    std::size_t leftRank = 0, rightRank = 0;

    LatticeVector embedLeft(const LatticeVector& x) const {
        std::vector<Int> c(sum->rank(), Int(0));
        for (std::size_t i = 0; i < leftRank; ++i) c[i] = x.coords[i];
        return {sum, std::move(c)};
    }
    LatticeVector embedRight(const LatticeVector& x) const {
        std::vector<Int> c(sum->rank(), Int(0));
        for (std::size_t i = 0; i < rightRank; ++i) c[leftRank + i] = x.coords[i];
        return {sum, std::move(c)};
    }
    RationalVector embedLeft(const RationalVector& x) const {
        std::vector<Rat> c(sum->rank(), Rat(0));
        for (std::size_t i = 0; i < leftRank; ++i) c[i] = x.coords[i];
        return {sum, std::move(c)};
    }
    RationalVector embedRight(const RationalVector& x) const {
        std::vector<Rat> c(sum->rank(), Rat(0));
        for (std::size_t i = 0; i < rightRank; ++i) c[leftRank + i] = x.coords[i];
        return {sum, std::move(c)};
    }
};

inline DirectSum directSum(const LatticePtr& a, const LatticePtr& b, std::string label = "") {
    const std::size_t ra = a->rank(), rb = b->rank();
    IMat g(ra + rb, ra + rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j) g(i, j) = a->gram()(i, j);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j) g(ra + i, ra + j) = b->gram()(i, j);
    if (label.empty()) label = a->label() + "+" + b->label();
    return {makeLattice(std::move(g), std::move(label)), ra, rb};
}

// 2(-E8) + 3U, rank 22, coordinates ordered E8, E8, U, U, U.
inline LatticePtr k3Lattice() {
    auto e8 = minusE8();
    auto u = hyperbolicPlane();
    auto s = directSum(e8, e8);
    s = directSum(s.sum, u);
    s = directSum(s.sum, u);
    s = directSum(s.sum, u, "K3");
    return s.sum;
}

inline LatticePtr uSum(std::size_t copies) {
    if (copies == 0) throw Error("USum needs at least one copy");
    auto u = hyperbolicPlane();
    if (copies == 1) return u;
    auto acc = u;
    for (std::size_t i = 1; i < copies; ++i) acc = directSum(acc, u, i + 1 == copies ? std::to_string(copies) + "U" : "").sum;
    return acc;
}

enum class StandardLattice { U, MinusE8, K3 };

inline LatticePtr makeStandardLattice(StandardLattice kind) {
    switch (kind) {
        case StandardLattice::U: return hyperbolicPlane();
        case StandardLattice::MinusE8: return minusE8();
        case StandardLattice::K3: return k3Lattice();
    }
    throw Error("unknown standard lattice kind");
}

// gcd of coordinates is 1
inline bool isPrimitive(const LatticeVector& x) {
    if (x.isZero()) throw Error("isPrimitive: zero vector");
    Int g(0);
    for (const auto& c : x.coords) g = gcd(g, c);
    return g == 1;
}

// -- sublattices --------------------------------------------------------------

// Saturated sublattice; construction replaces the generators by a basis of the
// saturation (ambient intersect Q-span), computed through Smith normal form.
class Sublattice {
public:
    Sublattice(LatticePtr ambient, const std::vector<LatticeVector>& generators)
        : ambient_(std::move(ambient)) {
        if (generators.empty()) throw Error("sublattice needs at least one generator");
        const std::size_t n = ambient_->rank();
        QMat cols(n, generators.size());
        for (std::size_t j = 0; j < generators.size(); ++j) {
            requireSameLattice(ambient_, generators[j].lattice);
            for (std::size_t i = 0; i < n; ++i) cols(i, j) = Rat(generators[j].coords[i]);
        }
        if (rank(cols) != generators.size())
            throw Error("sublattice generators linearly dependent");

        // left kernel rows kill exactly the Q-span; its integer kernel is the saturation
        IMat bt(generators.size(), n);
        for (std::size_t j = 0; j < generators.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) bt(j, i) = generators[j].coords[i];
        auto leftKernel = integerKernel(bt);
        if (leftKernel.empty()) {
            // full-rank sublattice: saturation is the whole ambient lattice
            for (std::size_t i = 0; i < n; ++i) basis_.push_back(basisVector(ambient_, i));
            return;
        }
        IMat c(leftKernel.size(), n);
        for (std::size_t r = 0; r < leftKernel.size(); ++r)
            for (std::size_t i = 0; i < n; ++i) c(r, i) = leftKernel[r][i];
        for (auto& col : integerKernel(c)) basis_.emplace_back(ambient_, std::move(col));
        if (basis_.size() != generators.size())
            throw Error("saturation rank mismatch"); // cannot happen
    }

    const LatticePtr& ambient() const { return ambient_; }
    const std::vector<LatticeVector>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }

    // Gram of the form restricted to the stored basis.
    IMat restrictedGram() const {
        IMat g(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) g(i, j) = pairing(basis_[i], basis_[j]);
        return g;
    }

    bool contains(const RationalVector& x) const {
        requireSameLattice(ambient_, x.lattice);
        QMat m(ambient_->rank(), rank());
        for (std::size_t j = 0; j < rank(); ++j)
            for (std::size_t i = 0; i < ambient_->rank(); ++i) m(i, j) = Rat(basis_[j].coords[i]);
        return solve(m, x.coords).has_value();
    }

private:
    LatticePtr ambient_;
    std::vector<LatticeVector> basis_;
};

// { x : <x, s> = 0 for all s in S }, saturated.
inline Sublattice orthogonalComplement(const Sublattice& s) {
    const std::size_t n = s.ambient()->rank();
    IMat rows(s.rank(), n);
    const IMat& g = s.ambient()->gram();
    for (std::size_t r = 0; r < s.rank(); ++r)
        for (std::size_t j = 0; j < n; ++j) {
            Int acc(0);
            for (std::size_t i = 0; i < n; ++i) acc += s.basis()[r].coords[i] * g(i, j);
            rows(r, j) = acc;
        }
    auto kernel = integerKernel(rows);
    if (kernel.empty()) throw Error("orthogonal complement is zero");
    std::vector<LatticeVector> basis;
    for (auto& v : kernel) basis.emplace_back(s.ambient(), std::move(v));
    return Sublattice(s.ambient(), basis);
}

struct HyperbolicSplit {
    LatticeVector orthogonalPart; // y with y perp v, y perp vstar
    Int lambda;                   // coefficient of v
    Int mu;                       // coefficient of vstar
};

inline void requireHyperbolicPair(const LatticeVector& v, const LatticeVector& vstar) {
    requireSameLattice(v.lattice, vstar.lattice);
    if (square(v) != 0 || square(vstar) != 0 || pairing(v, vstar) != 1)
        throw Error("not a standard hyperbolic basis (need v^2 = vstar^2 = 0, <v,vstar> = 1)");
}

// x = y + lambda v + mu vstar with y perp {v, vstar}; integrality is automatic.
inline HyperbolicSplit splitHyperbolic(const LatticeVector& x, const LatticeVector& v,
                                       const LatticeVector& vstar) {
    requireHyperbolicPair(v, vstar);
    requireSameLattice(x.lattice, v.lattice);
    Int lambda = pairing(x, vstar);
    Int mu = pairing(x, v);
    LatticeVector y = x - lambda * v - mu * vstar;
    return {std::move(y), std::move(lambda), std::move(mu)};
}

struct HyperbolicSplitQ {
    RationalVector orthogonalPart;
    Rat lambda, mu;
};

inline HyperbolicSplitQ splitHyperbolic(const RationalVector& x, const LatticeVector& v,
                                        const LatticeVector& vstar) {
    requireHyperbolicPair(v, vstar);
    requireSameLattice(x.lattice, v.lattice);
    Rat lambda = pairing(x, vstar);
    Rat mu = pairing(x, v);
    RationalVector y = x - lambda * v.toRational() - mu * vstar.toRational();
    return {std::move(y), std::move(lambda), std::move(mu)};
}

} // namespace k3lab
