#include "hrl/rational.hpp"

namespace hrl {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0)
        throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational rat_abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
Rational rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational rat_pow(const Rational& a, unsigned e) {
    Rational r(1);
    Rational base = a;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace hrl
