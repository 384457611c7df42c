#pragma once

// Exact arithmetic in the field of rational functions of q^(1/2).
//
// Everything is stored in the variable Q = q^(1/2), so "half-integer powers
// of q" become ordinary integer powers of Q.  The subring A of functions
// regular at q = infinity and the reduction A -> A / q^(-1/2) A live here too.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cactus {

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Laurent polynomial in Q = q^(1/2) with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class HalfLaurent {
public:
    using Terms = std::map<int, mpq_class>;

    HalfLaurent() = default;
    HalfLaurent(long c);  // NOLINT(google-explicit-constructor)
    HalfLaurent(const mpq_class& c);  // NOLINT(google-explicit-constructor)

    /// c * Q^e
    static HalfLaurent monomial(const mpq_class& c, int q_half_exponent);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// Smallest / largest Q-exponent.  Undefined on zero.
    int low_degree() const { return terms_.begin()->first; }
    int high_degree() const { return terms_.rbegin()->first; }
    const mpq_class& leading_coefficient() const { return terms_.rbegin()->second; }
    const mpq_class& trailing_coefficient() const { return terms_.begin()->second; }
    mpq_class coefficient(int q_half_exponent) const;

    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    HalfLaurent& operator*=(const HalfLaurent& o);
    HalfLaurent operator-() const;
    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);

    /// Multiply by Q^e.
    HalfLaurent shifted(int e) const;
    HalfLaurent scaled(const mpq_class& c) const;

    /// Evaluate at a nonzero rational value of Q.
    mpq_class evaluate(const mpq_class& q_half) const;

    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(int e, const mpq_class& c);

    Terms terms_;
};

/// Element of Q(q^(1/2)) in canonical form.
///
/// Canonical form: the denominator is an honest polynomial in Q with nonzero
/// constant term, integer-primitive coefficients and positive leading
/// coefficient; the numerator is a Laurent polynomial coprime to it.  Under
/// this normalization equal field elements have identical representations.
class QRational {
public:
    QRational() : den_(1) {}
    QRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QRational(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    QRational(const HalfLaurent& p) : num_(p), den_(1) { canonicalize(); }  // NOLINT(google-explicit-constructor)
    QRational(const HalfLaurent& num, const HalfLaurent& den);

    /// Q^e = q^(e/2).
    static QRational q_half_power(int e) { return QRational(HalfLaurent::monomial(1, e)); }
    /// q^k.
    static QRational q_power(int k) { return q_half_power(2 * k); }
    static QRational q() { return q_power(1); }

    const HalfLaurent& numerator() const { return num_; }
    const HalfLaurent& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// Constant rational (no Q dependence).
    bool is_constant() const;
    /// The constant value; requires is_constant().
    mpq_class constant_value() const;

    QRational& operator+=(const QRational& o);
    QRational& operator-=(const QRational& o);
    QRational& operator*=(const QRational& o);
    QRational& operator/=(const QRational& o);
    QRational operator-() const;
    QRational inverse() const;

    friend QRational operator+(QRational a, const QRational& b) { return a += b; }
    friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
    friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
    friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Evaluate at a rational Q; throws if Q hits a pole or Q = 0.
    mpq_class evaluate(const mpq_class& q_half) const;

    /// Value at q = 1 (that is Q = 1).  Throws ArithmeticError on a pole.
    mpq_class at_q_one() const;

    /// Canonical text, e.g. "(Q^4 - 1)/(Q^4 + 1)".
    std::string to_string() const;
    static QRational parse(std::string_view text);

private:
    void canonicalize();

    HalfLaurent num_;
    HalfLaurent den_;
};

std::ostream& operator<<(std::ostream& os, const HalfLaurent& p);
std::ostream& operator<<(std::ostream& os, const QRational& a);

enum class ArithOp { add, sub, mul, div };

QRational qr_arith(const QRational& a, const QRational& b, ArithOp op);

/// [n]_q = (q^n - q^-n)/(q - q^-1), as a Laurent polynomial.
QRational quantum_int(int n);

/// [n]_q! ; n >= 0.
QRational quantum_factorial(int n);

/// True iff a lies in A, i.e. has a finite limit as q -> infinity.
bool is_regular_at_infinity(const QRational& a);

/// Image of a in A / q^(-1/2) A.  Throws ArithmeticError if a is not in A.
mpq_class reduce_mod_qhalf(const QRational& a);

/// Square root of c * Q^(2k) with c a positive rational square: sqrt(c) * Q^k.
QRational monomial_sqrt(const QRational& a);

}  // namespace cactus
