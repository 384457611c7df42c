#include "cactus/qmatrix.hpp"

#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace cactus {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<QRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ArithmeticError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<QRational>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArithmeticError("matrix sum with mismatched sizes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArithmeticError("matrix difference with mismatched sizes");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw ArithmeticError("matrix product with mismatched sizes");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const QRational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const QRational& y = b(k, j);
                if (!y.is_zero()) out(i, j) += x * y;
            }
        }
    }
    return out;
}

QMatrix operator*(const QRational& s, QMatrix a) {
    for (auto& x : a.data_)
        if (!x.is_zero()) x *= s;
    return a;
}

bool QMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool QMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && !(*this)(i, j).is_zero()) return false;
    return true;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw ArithmeticError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    QMatrix a = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw ArithmeticError("singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const QRational p = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (!a(col, j).is_zero()) a(col, j) *= p;
            if (!inv(col, j).is_zero()) inv(col, j) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const QRational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
                if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

QMatrix QMatrix::power(int k) const {
    if (k < 0) return inverse().power(-k);
    QMatrix acc = identity(rows_);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

QMatrix QMatrix::column(std::size_t c) const { return columns({c}); }

QMatrix QMatrix::columns(const std::vector<std::size_t>& idx) const {
    QMatrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
}

QMatrix QMatrix::rows_subset(const std::vector<std::size_t>& idx) const {
    QMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    return out;
}

QMatrix QMatrix::kernel() const {
    // Reduced row echelon form, then one basis vector per free column.
    QMatrix a = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && a(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(row, j));
        const QRational inv = a(row, col).inverse();
        for (std::size_t j = 0; j < cols_; ++j)
            if (!a(row, j).is_zero()) a(row, j) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const QRational f = a(r, col);
            for (std::size_t j = 0; j < cols_; ++j)
                if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free.push_back(c);
    QMatrix out(cols_, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(free[k], k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) out(pivots[r], k) = -a(r, free[k]);
    }
    return out;
}

std::vector<std::vector<mpq_class>> QMatrix::at_q_one() const {
    std::vector<std::vector<mpq_class>> out(rows_, std::vector<mpq_class>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).at_q_one();
    return out;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
        os << "]\n";
    }
    return os.str();
}

std::string QMatrix::to_json(std::string_view frame) const {
    nlohmann::json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    j["frame"] = std::string(frame);
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < cols_; ++c) row.push_back((*this)(i, c).to_string());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j.dump(2);
}

QMatrix::Parsed QMatrix::from_json(std::string_view text) {
    const auto j = nlohmann::json::parse(text);
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    Parsed out{QMatrix(rows, cols), j.at("frame").get<std::string>()};
    const auto& entries = j.at("entries");
    if (entries.size() != rows) throw ParseError("QMatrix JSON: row count mismatch");
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols) throw ParseError("QMatrix JSON: column count mismatch");
        for (std::size_t c = 0; c < cols; ++c) out.matrix(i, c) = QRational::parse(entries[i][c].get<std::string>());
    }
    return out;
}

QMatrix tensor(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r2 = 0; r2 < b.rows(); ++r2) {
        for (std::size_t c2 = 0; c2 < b.cols(); ++c2) {
            const QRational& y = b(r2, c2);
            if (y.is_zero()) continue;
            for (std::size_t r1 = 0; r1 < a.rows(); ++r1) {
                for (std::size_t c1 = 0; c1 < a.cols(); ++c1) {
                    const QRational& x = a(r1, c1);
                    if (!x.is_zero()) out(r1 + a.rows() * r2, c1 + a.cols() * c2) = x * y;
                }
            }
        }
    }
    return out;
}

}  // namespace cactus
