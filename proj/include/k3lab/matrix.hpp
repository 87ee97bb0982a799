#pragma once

#include "k3lab/numeric.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace k3lab {

// Dense row-major matrix over an exact scalar (Int or Rat).
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool isSymmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool isZero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }

    void swapRows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swapCols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += c * row b
    void addRow(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    void addCol(std::size_t a, std::size_t b, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void scaleRow(std::size_t a, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) *= c;
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    Mat<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix difference shape mismatch");
    Mat<T> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& x) {
    if (a.cols() != x.size()) throw Error("matrix-vector shape mismatch");
    std::vector<T> y(a.rows(), T(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline QMat toRational(const IMat& m) {
    QMat q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
    return q;
}

// Exact determinant, fraction-free (Bareiss).
inline Int determinant(const IMat& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IMat a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swapRows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / prev; // exact division
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

struct Rref {
    QMat mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

inline Rref rref(QMat a) {
    Rref out;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c) == 0) ++p;
        if (p == rows) continue;
        a.swapRows(r, p);
        Rat inv = Rat(1) / a(r, c);
        a.scaleRow(r, inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            a.addRow(i, r, -a(i, c));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(a);
    return out;
}

inline std::size_t rank(const QMat& a) { return rref(a).rank; }

// Solves a x = b exactly; empty if inconsistent.
inline std::optional<std::vector<Rat>> solve(const QMat& a, const std::vector<Rat>& b) {
    if (a.rows() != b.size()) throw Error("solve: shape mismatch");
    QMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    std::vector<Rat> x(a.cols(), Rat(0));
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (r.pivots[i] == a.cols()) return std::nullopt; // pivot in rhs column
        x[r.pivots[i]] = r.mat(i, a.cols());
    }
    // validate (free variables set to zero)
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        if (acc != b[i]) return std::nullopt;
    }
    return x;
}

inline QMat inverse(const QMat& a) {
    if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
    const std::size_t n = a.rows();
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.rank < n || r.pivots[n - 1] >= n) throw Error("matrix not invertible");
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

// Basis of { x : a x = 0 } over the rationals, one column per free variable.
inline std::vector<std::vector<Rat>> kernelBasis(const QMat& a) {
    Rref r = rref(a);
    std::vector<bool> isPivot(a.cols(), false);
    for (auto p : r.pivots) isPivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (isPivot[c]) continue;
        std::vector<Rat> v(a.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Column span of `a` as a reduced (rref-of-transpose) basis; canonical for span comparison.
inline std::vector<std::vector<Rat>> columnSpaceBasis(const QMat& a) {
    Rref r = rref(a.transposed());
    std::vector<std::vector<Rat>> basis;
    for (std::size_t i = 0; i < r.rank; ++i) basis.push_back(r.mat.row(i));
    return basis;
}

struct Snf {
    IMat s;             // diagonal, s = u * a * v
    IMat u, uinv, v;    // unimodular transforms
    std::size_t rank = 0;
};

// Smith normal form with transforms, gcd pivoting. Fine for the small ranks used here.
inline Snf smithNormalForm(const IMat& a0) {
    Snf out;
    IMat a = a0;
    const std::size_t m = a.rows(), n = a.cols();
    out.u = IMat::identity(m);
    out.uinv = IMat::identity(m);
    out.v = IMat::identity(n);

    auto rowOp = [&](std::size_t i, std::size_t j, const Int& c) { // row i += c row j
        a.addRow(i, j, c);
        out.u.addRow(i, j, c);
        out.uinv.addCol(j, i, -c); // E^{-1} applied on the right
    };
    auto colOp = [&](std::size_t i, std::size_t j, const Int& c) { // col i += c col j
        a.addCol(i, j, c);
        out.v.addCol(i, j, c);
    };
    auto rowSwap = [&](std::size_t i, std::size_t j) {
        a.swapRows(i, j);
        out.u.swapRows(i, j);
        out.uinv.swapCols(i, j);
    };
    auto colSwap = [&](std::size_t i, std::size_t j) {
        a.swapCols(i, j);
        out.v.swapCols(i, j);
    };
    auto rowNeg = [&](std::size_t i) {
        a.scaleRow(i, Int(-1));
        out.u.scaleRow(i, Int(-1));
        for (std::size_t r = 0; r < m; ++r) out.uinv(r, i) = -out.uinv(r, i);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // locate a pivot
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m && !found; ++i)
            for (std::size_t j = t; j < n && !found; ++j)
                if (a(i, j) != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        rowSwap(t, pi);
        colSwap(t, pj);

        // euclidean reduction until a(t,t) divides its row and column
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                while (a(i, t) != 0) {
                    Int q = a(i, t) / a(t, t);
                    rowOp(i, t, -q);
                    if (a(i, t) != 0) { rowSwap(t, i); again = true; }
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                while (a(t, j) != 0) {
                    Int q = a(t, j) / a(t, t);
                    colOp(j, t, -q);
                    if (a(t, j) != 0) { colSwap(t, j); again = true; }
                }
            }
        }
        if (a(t, t) < 0) rowNeg(t);
        ++t;
    }
    out.rank = t;
    // divisibility chain is not needed by any caller; diagonal form suffices
    out.s = a;
    return out;
}

// Saturated basis of { x in Z^n : a x = 0 }, one vector per column.
inline std::vector<std::vector<Int>> integerKernel(const IMat& a) {
    Snf s = smithNormalForm(a);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = s.rank; j < a.cols(); ++j) basis.push_back(s.v.col(j));
    return basis;
}

// Sylvester signature (p, n) of a symmetric rational matrix; throws if degenerate.
inline std::pair<std::size_t, std::size_t> symmetricSignature(QMat g) {
    if (!g.isSymmetric()) throw Error("signature of non-symmetric matrix");
    const std::size_t n = g.rows();
    std::size_t pos = 0, neg = 0;
    std::vector<bool> done(n, false);
    // congruence diagonalization
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && g(i, i) != 0) { p = i; break; }
        if (p == n) {
            // all remaining diagonal entries vanish; find an off-diagonal entry
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && g(i, j) != 0) { bi = i; bj = j; break; }
            }
            if (bi == n) break; // remaining block is zero
            g.addRow(bi, bj, Rat(1));
            g.addCol(bi, bj, Rat(1)); // keeps symmetry, makes g(bi,bi) = 2 g(bi,bj) != 0
            p = bi;
        }
        const Rat d = g(p, p);
        if (d > 0) ++pos; else ++neg;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || done[i] || g(i, p) == 0) continue;
            Rat c = -g(i, p) / d;
            g.addRow(i, p, c);
            g.addCol(i, p, c);
        }
        done[p] = true;
    }
    if (pos + neg != n) throw Error("degenerate symmetric form");
    return {pos, neg};
}

} // namespace k3lab
