#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "field.hpp"

namespace wcdim {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Row-list construction; all rows must share one length.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InputError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix ones(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        std::fill(m.data_.begin(), m.data_.end(), T(1));
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    Matrix without_row(std::size_t skip) const {
        Matrix out(rows_ - 1, cols_);
        for (std::size_t r = 0, o = 0; r < rows_; ++r) {
            if (r == skip) continue;
            std::copy(row(r).begin(), row(r).end(), out.row(o++).begin());
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Field-agnostic exact matrix; a FieldSpec decides how it is reduced.
using ExactMatrix = Matrix<mpq_class>;
using ExactVector = std::vector<mpq_class>;

namespace detail {

// Arithmetic policies for the generic elimination below.
struct RationalOps {
    using value_type = mpq_class;
    value_type from(const mpq_class& q) const { return q; }
    static bool is_zero(const value_type& x) { return sgn(x) == 0; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) {
        return a - f * b;
    }
    static value_type div(const value_type& a, const value_type& b) { return a / b; }
    static value_type neg(const value_type& a) { return -a; }
    static mpq_class to_exact(const value_type& a) { return a; }
};

struct PrimeOps {
    using value_type = std::uint64_t;
    std::uint64_t p;
    FieldSpec field;

    value_type from(const mpq_class& q) const { return field.residue(q); }
    static bool is_zero(value_type x) { return x == 0; }
    value_type sub_mul(value_type a, value_type f, value_type b) const {
        return (a + p - (f * b) % p) % p;
    }
    value_type inv(value_type a) const {
        // a^(p-2) mod p.
        value_type result = 1, base = a % p;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
        }
        return result;
    }
    value_type div(value_type a, value_type b) const { return a * inv(b) % p; }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    static mpq_class to_exact(value_type a) { return mpq_class(static_cast<unsigned long>(a)); }
};

template <class Ops>
Matrix<typename Ops::value_type> convert(const ExactMatrix& m, const Ops& ops) {
    Matrix<typename Ops::value_type> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ops.from(m(r, c));
    }
    return out;
}

// In-place reduced row echelon form; returns pivot columns in ascending order.
template <class Ops>
std::vector<std::size_t> rref(Matrix<typename Ops::value_type>& a, const Ops& ops) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && Ops::is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        const auto piv = a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = ops.div(a(r, j), piv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || Ops::is_zero(a(i, c))) continue;
            const auto f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = ops.sub_mul(a(i, j), f, a(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Fraction-free (Bareiss) elimination on an integer copy of m; every division is exact.
inline std::size_t bareiss_rank(const ExactMatrix& m) {
    Matrix<mpz_class> a(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class scale = 1;
        for (const auto& q : m.row(r)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpq_class v = m(r, c) * scale;
            a(r, c) = v.get_num();
        }
    }

    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j) {
                mpz_class t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

template <class Ops>
std::vector<ExactVector> nullspace_with(const ExactMatrix& m, const Ops& ops) {
    auto a = convert(m, ops);
    const auto pivots = rref(a, ops);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<ExactVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ExactVector v(m.cols(), mpq_class(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = Ops::to_exact(ops.neg(a(k, free)));
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

/// Rank of m over f. Characteristic 0 uses fraction-free elimination on integers.
inline std::size_t rank(const ExactMatrix& m, const FieldSpec& f) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (f.is_rational()) return detail::bareiss_rank(m);
    const detail::PrimeOps ops{f.characteristic(), f};
    auto a = detail::convert(m, ops);
    return detail::rref(a, ops).size();
}

/// Canonical nullspace basis: one vector per free column of the RREF, ascending,
/// with 1 in its free column and 0 in the other free columns. Over GF(p) entries
/// are residues in 0..p-1.
inline std::vector<ExactVector> nullspace_basis(const ExactMatrix& m, const FieldSpec& f) {
    if (f.is_rational()) return detail::nullspace_with(m, detail::RationalOps{});
    return detail::nullspace_with(m, detail::PrimeOps{f.characteristic(), f});
}

/// m * v reduced into f.
inline ExactVector multiply(const ExactMatrix& m, std::span<const mpq_class> v, const FieldSpec& f) {
    if (v.size() != m.cols()) throw InputError("vector length does not match matrix columns");
    ExactVector out(m.rows(), mpq_class(0));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
        out[r] = f.reduce(out[r]);
    }
    return out;
}

/// Block form: entry (i1*rows(m)+i2, j1*cols(m)+j2) = a(i1,j1) * m(i2,j2).
inline ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& m) {
    ExactMatrix out(a.rows() * m.rows(), a.cols() * m.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const mpq_class& s = a(i1, j1);
            if (sgn(s) == 0) continue;
            for (std::size_t i2 = 0; i2 < m.rows(); ++i2) {
                for (std::size_t j2 = 0; j2 < m.cols(); ++j2) {
                    out(i1 * m.rows() + i2, j1 * m.cols() + j2) = s * m(i2, j2);
                }
            }
        }
    }
    return out;
}

/// Subtracts row 0 from every other row, then drops row 0.
inline ExactMatrix reduce_first_row(const ExactMatrix& m) {
    if (m.rows() == 0) throw InputError("reduce_first_row needs at least one row");
    ExactMatrix out(m.rows() - 1, m.cols());
    for (std::size_t r = 1; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(r - 1, c) = m(r, c) - m(0, c);
    }
    return out;
}

inline bool has_dependent_rows(const ExactMatrix& m, const FieldSpec& f) {
    return rank(m, f) < m.rows();
}

/// True iff row r is a linear combination of the other rows over f.
inline bool row_in_span_of_others(const ExactMatrix& m, std::size_t r, const FieldSpec& f) {
    if (r >= m.rows()) throw InputError("row index out of range");
    return rank(m.without_row(r), f) == rank(m, f);
}

/// Swaps the first row lying in the span of the others to position 0; if no row
/// does, the order is left untouched.
inline ExactMatrix move_dependent_row_first(ExactMatrix m, const FieldSpec& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (row_in_span_of_others(m, r, f)) {
            m.swap_rows(0, r);
            break;
        }
    }
    return m;
}

}  // namespace wcdim
