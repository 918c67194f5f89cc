#include "stretchlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace stretchlab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

const mpz_class& IntPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const mpz_class& IntPolynomial::constant_term() const {
    static const mpz_class zero(0);
    return is_zero() ? zero : coeffs_.front();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

IntPolynomial operator-(IntPolynomial p) {
    for (auto& x : p.coeffs_) x = -x;
    return p;
}

bool canonical_less(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string IntPolynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

IntPolynomial RationalDivision::integer_quotient() const {
    if (!integral) throw std::domain_error("quotient has non-integer coefficients");
    std::vector<mpz_class> v;
    v.reserve(quotient.size());
    for (const auto& c : quotient) v.push_back(c.get_num());
    return IntPolynomial(std::move(v));
}

IntPolynomial RationalDivision::integer_remainder() const {
    if (!integral) throw std::domain_error("remainder has non-integer coefficients");
    std::vector<mpz_class> v;
    v.reserve(remainder.size());
    for (const auto& c : remainder) v.push_back(c.get_num());
    return IntPolynomial(std::move(v));
}

namespace {

void trim_rational(RationalCoeffs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Division by a divisor with unit leading coefficient stays in Z.
RationalDivision divrem_unit_leading(const IntPolynomial& p, const IntPolynomial& q) {
    const int dp = p.degree();
    const int dq = q.degree();
    std::vector<mpz_class> r = p.coeffs();
    std::vector<mpz_class> quot(dp - dq + 1);
    const bool negate = q.leading() < 0;
    std::vector<std::size_t> support;
    for (int j = 0; j < dq; ++j)
        if (q.coeffs()[j] != 0) support.push_back(static_cast<std::size_t>(j));
    for (int k = dp - dq; k >= 0; --k) {
        mpz_class c = r[k + dq];
        if (c == 0) continue;
        if (negate) c = -c;
        quot[k] = c;
        r[k + dq] = 0;
        for (std::size_t j : support) r[k + j] -= c * q.coeffs()[j];
    }
    RationalDivision out;
    IntPolynomial qp(std::move(quot));
    IntPolynomial rp(std::move(r));
    for (const auto& c : qp.coeffs()) out.quotient.emplace_back(c);
    for (const auto& c : rp.coeffs()) out.remainder.emplace_back(c);
    out.integral = true;
    return out;
}

}  // namespace

RationalDivision divrem(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    RationalDivision out;
    if (p.degree() < q.degree()) {
        for (const auto& c : p.coeffs()) out.remainder.emplace_back(c);
        return out;
    }
    if (q.leading() == 1 || q.leading() == -1) return divrem_unit_leading(p, q);

    const int dp = p.degree();
    const int dq = q.degree();
    RationalCoeffs r(p.coeffs().begin(), p.coeffs().end());
    RationalCoeffs quot(dp - dq + 1);
    const mpq_class lead(q.leading());
    for (int k = dp - dq; k >= 0; --k) {
        if (r[k + dq] == 0) continue;
        mpq_class c = r[k + dq] / lead;
        quot[k] = c;
        r[k + dq] = 0;
        for (int j = 0; j < dq; ++j)
            if (q.coeffs()[j] != 0) r[k + j] -= c * q.coeffs()[j];
    }
    trim_rational(quot);
    trim_rational(r);
    out.quotient = std::move(quot);
    out.remainder = std::move(r);
    auto is_int = [](const mpq_class& c) { return c.get_den() == 1; };
    out.integral = std::all_of(out.quotient.begin(), out.quotient.end(), is_int) &&
                   std::all_of(out.remainder.begin(), out.remainder.end(), is_int);
    return out;
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& p, const IntPolynomial& q) {
    RationalDivision d = divrem(p, q);
    if (!d.remainder_is_zero() || !d.integral) return std::nullopt;
    return d.integer_quotient();
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() <= 0) return {};
    std::vector<mpz_class> v(p.degree());
    for (int i = 1; i <= p.degree(); ++i) v[i - 1] = p.coeffs()[i] * i;
    return IntPolynomial(std::move(v));
}

mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    mpz_class g = content(p);
    if (g == 1) return p;
    std::vector<mpz_class> v = p.coeffs();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial pseudo_remainder(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("pseudo-remainder by the zero polynomial");
    if (p.degree() < q.degree()) return p;
    const int dq = q.degree();
    const mpz_class& lq = q.leading();
    std::vector<mpz_class> r = p.coeffs();
    int steps_left = p.degree() - dq + 1;
    int dr = p.degree();
    while (dr >= dq && dr >= 0) {
        mpz_class lr = r[dr];
        for (int i = 0; i <= dr; ++i) r[i] *= lq;
        for (int j = 0; j <= dq; ++j)
            if (q.coeffs()[j] != 0) r[dr - dq + j] -= lr * q.coeffs()[j];
        --steps_left;
        --dr;
        while (dr >= 0 && r[dr] == 0) --dr;
    }
    r.resize(static_cast<std::size_t>(std::max(dr + 1, 0)));
    IntPolynomial out(std::move(r));
    if (steps_left > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lq.get_mpz_t(), static_cast<unsigned long>(steps_left));
        out *= f;
    }
    return out;
}

IntPolynomial gcd(const IntPolynomial& p, const IntPolynomial& q) {
    IntPolynomial a = primitive_part(p);
    IntPolynomial b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    if (a.degree() == 0) return IntPolynomial{1};
    if (a.leading() < 0) a = -a;
    return a;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
    IntPolynomial f = primitive_part(p);
    if (f.degree() <= 0) return f;
    IntPolynomial g = gcd(f, derivative(f));
    auto q = exact_quotient(f, g);
    if (!q) throw std::logic_error("square_free_part: inexact division by gcd");
    return primitive_part(*q);
}

std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<IntPolynomial> factors;
    IntPolynomial f = primitive_part(p);
    if (f.degree() <= 0) return factors;
    IntPolynomial g = gcd(f, derivative(f));
    IntPolynomial h = *exact_quotient(f, g);
    while (h.degree() > 0) {
        IntPolynomial h2 = gcd(g, h);
        auto s = exact_quotient(h, h2);
        auto g2 = exact_quotient(g, h2);
        if (!s || !g2) throw std::logic_error("square_free_decomposition: inexact division");
        factors.push_back(primitive_part(*s));
        g = std::move(*g2);
        h = std::move(h2);
    }
    return factors;
}

mpq_class evaluate(const IntPolynomial& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeffs()[i];
    return acc;
}

int sign_at(const IntPolynomial& p, const mpq_class& x) {
    if (p.is_zero()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    // den^n * p(num/den) = sum c_i num^i den^(n-i), den > 0.
    mpz_class acc = p.leading();
    mpz_class dpow = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        dpow *= den;
        acc *= num;
        if (p.coeffs()[i] != 0) acc += p.coeffs()[i] * dpow;
    }
    return sgn(acc);
}

IntPolynomial reversed(const IntPolynomial& p) {
    std::vector<mpz_class> v(p.coeffs().rbegin(), p.coeffs().rend());
    return IntPolynomial(std::move(v));
}

IntPolynomial negate_variable(const IntPolynomial& p) {
    std::vector<mpz_class> v = p.coeffs();
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial substitute_power(const IntPolynomial& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
    if (p.is_zero()) return p;
    std::vector<mpz_class> v(static_cast<std::size_t>(p.degree()) * k + 1);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(i) * k] = p.coeffs()[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial power_minus_one(unsigned k) {
    std::vector<mpz_class> v(k + 1);
    v[0] = -1;
    v[k] += 1;
    return IntPolynomial(std::move(v));
}

unsigned lowest_degree(const IntPolynomial& p) {
    unsigned k = 0;
    while (k < p.coeffs().size() && p.coeffs()[k] == 0) ++k;
    return k;
}

int sign_variations(const IntPolynomial& p) {
    int changes = 0;
    int last = 0;
    for (const auto& c : p.coeffs()) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

unsigned totient(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

IntPolynomial cyclotomic(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic: m must be positive");
    IntPolynomial num{1};
    std::vector<unsigned> denominators;
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        int mu = moebius(m / d);
        if (mu == 1) num *= power_minus_one(d);
        else if (mu == -1) denominators.push_back(d);
    }
    for (unsigned d : denominators) {
        auto q = exact_quotient(num, power_minus_one(d));
        if (!q) throw std::logic_error("cyclotomic: Moebius product is not exact");
        num = std::move(*q);
    }
    return num;
}

}  // namespace stretchlab
