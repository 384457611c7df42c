#include "cactus/qexact.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace cactus {

namespace {

// Dense polynomial in Q, index = degree, no trailing zeros.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly to_poly(const HalfLaurent& a, int shift) {
    Poly p;
    for (const auto& [e, c] : a.terms()) {
        const auto d = static_cast<std::size_t>(e - shift);
        if (p.size() <= d) p.resize(d + 1);
        p[d] = c;
    }
    return p;
}

HalfLaurent from_poly(const Poly& p, int shift) {
    HalfLaurent out;
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (p[d] != 0) out += HalfLaurent::monomial(p[d], static_cast<int>(d) + shift);
    }
    return out;
}

// a = quot * b + rem
void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    rem = a;
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const mpq_class& lead = b.back();
    while (rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        mpq_class f = rem.back() / lead;
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        rem.back() = 0;
        trim(rem);
    }
    trim(quot);
}

Poly monic_gcd(Poly a, Poly b) {
    Poly q, r;
    while (!b.empty()) {
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.empty()) throw ArithmeticError("internal: inexact polynomial division");
    return q;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

void write_term(std::ostream& os, const mpq_class& abs_c, int e) {
    if (e == 0) {
        os << abs_c.get_str();
        return;
    }
    if (abs_c != 1) os << abs_c.get_str() << '*';
    os << 'Q';
    if (e != 1) os << '^' << e;
}

// Recursive-descent parser for the canonical string grammar.
class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    QRational parse_all() {
        QRational out;
        skip();
        if (peek() == '(') {
            HalfLaurent num = parenthesized();
            skip();
            if (peek() == '/') {
                ++pos_;
                skip();
                HalfLaurent den = parenthesized();
                out = QRational(num, den);
            } else {
                out = QRational(num);
            }
        } else {
            out = QRational(sum());
        }
        skip();
        if (pos_ != s_.size()) fail("trailing characters");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("cannot parse QRational '" + std::string(s_) + "' at offset " +
                         std::to_string(pos_) + ": " + what);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    HalfLaurent parenthesized() {
        expect('(');
        HalfLaurent p = sum();
        expect(')');
        return p;
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    int signed_exponent() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        mpz_class v = integer();
        if (!v.fits_sint_p()) fail("exponent out of range");
        const int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }

    HalfLaurent term() {
        skip();
        mpq_class c = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class n = integer();
            mpz_class d = 1;
            skip();
            if (peek() == '/' && pos_ + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                d = integer();
                if (d == 0) fail("zero denominator");
            }
            c = mpq_class(n, d);
            c.canonicalize();
            have_coeff = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
            } else {
                return HalfLaurent(c);
            }
        }
        if (peek() != 'Q') {
            if (!have_coeff) fail("expected coefficient or Q");
            fail("expected Q after '*'");
        }
        ++pos_;
        int e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            e = signed_exponent();
        }
        return HalfLaurent::monomial(c, e);
    }

    HalfLaurent sum() {
        skip();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        HalfLaurent acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            HalfLaurent t = term();
            if (c == '-') acc -= t;
            else acc += t;
        }
        return acc;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- HalfLaurent

HalfLaurent::HalfLaurent(long c) {
    if (c != 0) terms_.emplace(0, mpq_class(c));
}

HalfLaurent::HalfLaurent(const mpq_class& c) {
    if (c != 0) terms_.emplace(0, c);
}

HalfLaurent HalfLaurent::monomial(const mpq_class& c, int q_half_exponent) {
    HalfLaurent out;
    if (c != 0) out.terms_.emplace(q_half_exponent, c);
    return out;
}

mpq_class HalfLaurent::coefficient(int q_half_exponent) const {
    auto it = terms_.find(q_half_exponent);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void HalfLaurent::add_term(int e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
    *this = *this * o;
    return *this;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

HalfLaurent HalfLaurent::shifted(int e) const {
    HalfLaurent out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + e, c);
    return out;
}

HalfLaurent HalfLaurent::scaled(const mpq_class& s) const {
    if (s == 0) return {};
    HalfLaurent out;
    for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, c * s);
    return out;
}

mpq_class HalfLaurent::evaluate(const mpq_class& x) const {
    if (x == 0) throw ArithmeticError("cannot evaluate a Laurent polynomial at Q = 0");
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class p = 1;
        const mpq_class base = e >= 0 ? x : mpq_class(1) / x;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
        acc += c * p;
    }
    return acc;
}

std::string HalfLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        write_term(os, abs(c), e);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HalfLaurent& p) { return os << p.to_string(); }

// ------------------------------------------------------------------ QRational

QRational::QRational(const HalfLaurent& num, const HalfLaurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ArithmeticError("QRational with zero denominator");
    canonicalize();
}

void QRational::canonicalize() {
    if (num_.is_zero()) {
        den_ = HalfLaurent(1);
        return;
    }
    const int shift = num_.low_degree() - den_.low_degree();
    Poly p = to_poly(num_, num_.low_degree());
    Poly d = to_poly(den_, den_.low_degree());
    if (d.size() > 1) {
        Poly g = monic_gcd(p, d);
        if (g.size() > 1) {
            p = exact_quotient(p, g);
            d = exact_quotient(d, g);
        }
    }
    // Integer-primitive denominator with positive leading coefficient.
    mpz_class den_lcm = 1;
    for (const auto& c : d) den_lcm = lcm(den_lcm, c.get_den());
    mpz_class num_gcd = 0;
    for (const auto& c : d) num_gcd = gcd(num_gcd, mpz_class(c.get_num() * (den_lcm / c.get_den())));
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (d.back() < 0) scale = -scale;
    for (auto& c : d) c *= scale;
    for (auto& c : p) c *= scale;
    num_ = from_poly(p, shift);
    den_ = from_poly(d, 0);
}

bool QRational::is_one() const { return den_ == HalfLaurent(1) && num_ == HalfLaurent(1); }

bool QRational::is_constant() const {
    return den_ == HalfLaurent(1) && (num_.is_zero() || (num_.is_monomial() && num_.low_degree() == 0));
}

mpq_class QRational::constant_value() const {
    if (!is_constant()) throw ArithmeticError("QRational " + to_string() + " is not a constant");
    return num_.coefficient(0);
}

QRational& QRational::operator+=(const QRational& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
    if (is_zero() || o.is_zero()) {
        *this = QRational();
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

QRational& QRational::operator/=(const QRational& o) { return *this *= o.inverse(); }

QRational QRational::operator-() const {
    QRational out = *this;
    out.num_ = -out.num_;
    return out;
}

QRational QRational::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    return QRational(den_, num_);
}

mpq_class QRational::evaluate(const mpq_class& x) const {
    const mpq_class d = den_.evaluate(x);
    if (d == 0) throw ArithmeticError("pole of " + to_string() + " at Q = " + x.get_str());
    return num_.evaluate(x) / d;
}

mpq_class QRational::at_q_one() const {
    // Canonical form is reduced, so a vanishing denominator at Q = 1 is a genuine pole.
    return evaluate(1);
}

std::string QRational::to_string() const {
    if (den_ == HalfLaurent(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational QRational::parse(std::string_view text) { return Parser(text).parse_all(); }

std::ostream& operator<<(std::ostream& os, const QRational& a) { return os << a.to_string(); }

// ----------------------------------------------------------------- operations

QRational qr_arith(const QRational& a, const QRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw ArithmeticError("unknown arithmetic operation");
}

QRational quantum_int(int n) {
    const int m = n < 0 ? -n : n;
    HalfLaurent acc;
    // q^(m-1) + q^(m-3) + ... + q^(1-m), in Q-exponents 2(m-1), 2(m-3), ...
    for (int k = m - 1; k >= 1 - m; k -= 2) acc += HalfLaurent::monomial(1, 2 * k);
    return QRational(n < 0 ? -acc : acc);
}

QRational quantum_factorial(int n) {
    if (n < 0) throw ArithmeticError("quantum factorial of a negative integer");
    QRational acc(1);
    for (int k = 2; k <= n; ++k) acc *= quantum_int(k);
    return acc;
}

bool is_regular_at_infinity(const QRational& a) {
    if (a.is_zero()) return true;
    return a.numerator().high_degree() <= a.denominator().high_degree();
}

mpq_class reduce_mod_qhalf(const QRational& a) {
    if (!is_regular_at_infinity(a))
        throw ArithmeticError("reduce_mod_qhalf: " + a.to_string() + " is not regular at q = infinity");
    if (a.is_zero()) return 0;
    // Substituting r = Q^-1 and multiplying through by r^deg(den) turns both
    // sides into power series in r; the constant terms are the top coefficients.
    const int top = a.denominator().high_degree();
    return a.numerator().coefficient(top) / a.denominator().leading_coefficient();
}

QRational monomial_sqrt(const QRational& a) {
    if (a.denominator() != HalfLaurent(1) || !a.numerator().is_monomial())
        throw ArithmeticError("monomial_sqrt: " + a.to_string() + " is not a monomial");
    const int e = a.numerator().low_degree();
    const mpq_class& c = a.numerator().trailing_coefficient();
    if (e % 2 != 0) throw ArithmeticError("monomial_sqrt: odd Q-exponent in " + a.to_string());
    if (c <= 0) throw ArithmeticError("monomial_sqrt: non-positive coefficient in " + a.to_string());
    if (mpz_perfect_square_p(c.get_num_mpz_t()) == 0 || mpz_perfect_square_p(c.get_den_mpz_t()) == 0)
        throw ArithmeticError("monomial_sqrt: coefficient of " + a.to_string() + " is not a rational square");
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), c.get_den_mpz_t());
    return QRational(HalfLaurent::monomial(mpq_class(rn, rd), e / 2));
}

}  // namespace cactus
