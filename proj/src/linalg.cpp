#include "bireg/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bireg {

namespace {

struct PrimeOps {
    std::uint64_t p;
    using T = std::uint32_t;
    bool zero(T a) const { return a == 0; }
    T mul(T a, T b) const { return static_cast<T>(static_cast<std::uint64_t>(a) * b % p); }
    // a - c*b
    T sub_mul(T a, T c, T b) const {
        std::uint64_t cb = static_cast<std::uint64_t>(c) * b % p;
        return static_cast<T>((a + p - cb) % p);
    }
    T inv(T a) const {
        std::uint64_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1U) r = r * base % p;
            base = base * base % p;
            e >>= 1U;
        }
        return static_cast<T>(r);
    }
    T neg(T a) const { return a == 0 ? 0 : static_cast<T>(p - a); }
};

struct RationalOps {
    using T = mpq_class;
    bool zero(const T& a) const { return sgn(a) == 0; }
    T mul(const T& a, const T& b) const { return a * b; }
    T sub_mul(const T& a, const T& c, const T& b) const { return a - c * b; }
    T inv(const T& a) const { return 1 / a; }
    T neg(const T& a) const { return -a; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class Ops, class T>
std::vector<int> rref(std::vector<T>& a, int rows, int cols, const Ops& ops) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!ops.zero(a[static_cast<std::size_t>(i) * cols + c])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(piv) * cols + j], a[static_cast<std::size_t>(r) * cols + j]);
        T inv = ops.inv(a[static_cast<std::size_t>(r) * cols + c]);
        for (int j = c; j < cols; ++j) {
            auto& x = a[static_cast<std::size_t>(r) * cols + j];
            if (!ops.zero(x)) x = ops.mul(x, inv);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            T f = a[static_cast<std::size_t>(i) * cols + c];
            if (ops.zero(f)) continue;
            for (int j = c; j < cols; ++j) {
                const T& y = a[static_cast<std::size_t>(r) * cols + j];
                if (ops.zero(y)) continue;
                auto& x = a[static_cast<std::size_t>(i) * cols + j];
                x = ops.sub_mul(x, f, y);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Ops, class T, class Wrap>
std::vector<std::vector<Scalar>> nullspace_impl(std::vector<T> a, int rows, int cols, const Ops& ops, Wrap wrap) {
    std::vector<int> piv = rref(a, rows, cols, ops);
    std::vector<char> is_piv(static_cast<std::size_t>(cols), 0);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[static_cast<std::size_t>(f)]) continue;
        std::vector<T> v(static_cast<std::size_t>(cols), T(0));
        v[static_cast<std::size_t>(f)] = T(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[static_cast<std::size_t>(piv[r])] = ops.neg(a[r * static_cast<std::size_t>(cols) + f]);
        std::vector<Scalar> out;
        out.reserve(v.size());
        for (auto& x : v) out.push_back(wrap(x));
        basis.push_back(std::move(out));
    }
    return basis;
}

} // namespace

Matrix::Matrix(Field field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
    std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (field_.is_prime())
        p_.assign(n, 0);
    else
        q_.assign(n, mpq_class(0));
}

Scalar Matrix::at(int i, int j) const {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_prime()) return Scalar(Scalar::ModP{p_[k], field_.modulus()});
    return Scalar(q_[k]);
}

void Matrix::set(int i, int j, const Scalar& v) {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_prime())
        p_[k] = v.residue();
    else
        q_[k] = v.rational();
}

void Matrix::add_to(int i, int j, const Scalar& v) {
    std::size_t k = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_prime()) {
        std::uint64_t s = static_cast<std::uint64_t>(p_[k]) + v.residue();
        p_[k] = static_cast<std::uint32_t>(s % field_.modulus());
    } else {
        q_[k] += v.rational();
    }
}

bool Matrix::is_zero() const {
    if (field_.is_prime()) {
        for (auto x : p_)
            if (x) return false;
        return true;
    }
    for (const auto& x : q_)
        if (sgn(x) != 0) return false;
    return true;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("bireg: hconcat row mismatch");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b.at(i, j));
    }
    return r;
}

Matrix Matrix::from_columns(Field field, int rows, const std::vector<std::vector<Scalar>>& cols) {
    Matrix r(field, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < r.cols_; ++j)
        for (int i = 0; i < rows; ++i) r.set(i, j, cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("bireg: matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            Scalar x = a.at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) r.add_to(i, j, x * b.at(k, j));
        }
    return r;
}

long Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field_.is_prime()) {
        auto a = p_;
        return static_cast<long>(rref(a, rows_, cols_, PrimeOps{field_.modulus()}).size());
    }
    auto a = q_;
    return static_cast<long>(rref(a, rows_, cols_, RationalOps{}).size());
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
    if (field_.is_prime()) {
        std::uint32_t p = field_.modulus();
        return nullspace_impl(p_, rows_, cols_, PrimeOps{p},
                              [p](std::uint32_t x) { return Scalar(Scalar::ModP{x, p}); });
    }
    return nullspace_impl(q_, rows_, cols_, RationalOps{}, [](const mpq_class& x) { return Scalar(x); });
}

std::vector<Scalar> Matrix::column(int j) const {
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

} // namespace bireg
