#pragma once

#include "k3lab/isometry.hpp"
#include "k3lab/lattice.hpp"

#include <random>

namespace k3lab::testing {

using Rng = std::mt19937_64;

inline Int randInt(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return Int(d(rng));
}

inline Rat randRat(Rng& rng, long num = 9, long den = 4) {
    std::uniform_int_distribution<long> dn(-num, num);
    std::uniform_int_distribution<long> dd(1, den);
    return Rat(dn(rng), dd(rng));
}

inline LatticeVector randLatticeVector(Rng& rng, const LatticePtr& lat, long bound = 9) {
    std::vector<Int> c(lat->rank());
    for (auto& x : c) x = randInt(rng, -bound, bound);
    return {lat, std::move(c)};
}

inline LatticeVector randNonzeroLatticeVector(Rng& rng, const LatticePtr& lat, long bound = 9) {
    for (;;) {
        auto x = randLatticeVector(rng, lat, bound);
        if (!x.isZero()) return x;
    }
}

inline RationalVector randRationalVector(Rng& rng, const LatticePtr& lat, long num = 9, long den = 4) {
    std::vector<Rat> c(lat->rank());
    for (auto& x : c) x = randRat(rng, num, den);
    return {lat, std::move(c)};
}

// Product of random elementary integer row operations: always det +-1.
inline IMat randomUnimodular(Rng& rng, std::size_t n, int ops = 40) {
    IMat m = IMat::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2), coef(-2, 2);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
            case 0:
                if (i != j) m.addRow(i, j, Int(coef(rng)));
                break;
            case 1:
                m.swapRows(i, j);
                break;
            default:
                m.scaleRow(i, Int(-1));
                break;
        }
    }
    return m;
}

} // namespace k3lab::testing
