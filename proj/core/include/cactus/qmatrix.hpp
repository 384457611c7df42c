#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cactus/qexact.hpp"

namespace cactus {

/// Dense matrix over QRational.  Matrices act on column vectors.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<QRational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<QRational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    QRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const QRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QRational& s, QMatrix a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    bool is_zero() const;
    bool is_diagonal() const;
    QMatrix inverse() const;  // throws ArithmeticError when singular
    QMatrix power(int k) const;
    QMatrix column(std::size_t c) const;
    QMatrix columns(const std::vector<std::size_t>& idx) const;
    QMatrix rows_subset(const std::vector<std::size_t>& idx) const;

    /// Basis of the kernel, one column per free variable, via exact row reduction.
    QMatrix kernel() const;

    /// Entrywise limit q -> 1.
    std::vector<std::vector<mpq_class>> at_q_one() const;

    std::string to_string() const;

    /// {"rows": r, "cols": c, "frame": frame, "entries": [[...]]}
    std::string to_json(std::string_view frame) const;
    struct Parsed;
    static Parsed from_json(std::string_view text);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<QRational> data_;
};

struct QMatrix::Parsed {
    QMatrix matrix;
    std::string frame;
};

/// A (x) B in the product-frame ordering used throughout: the FIRST tensor
/// factor's index varies fastest, i.e. index(i1, i2) = i1 + dim1 * i2.
QMatrix tensor(const QMatrix& a, const QMatrix& b);

}  // namespace cactus
