#include "confjord/rational.hpp"

#include <ostream>

namespace confjord {

Rational Rational::parse(const std::string& s) {
    if (s.empty())
        throw InputError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0)
            throw InputError("rational with zero denominator: " + s);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw InputError("malformed rational literal: " + s);
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1)
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational binom(long a, long n) {
    if (n < 0)
        throw InputError("binom lower index must be nonnegative");
    mpz_class num(1);
    for (long i = 0; i < n; ++i)
        num *= mpz_class(a - i);
    mpz_class den(1);
    for (long i = 2; i <= n; ++i)
        den *= i;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
}

Rational factorial(long n) {
    mpz_class f(1);
    for (long i = 2; i <= n; ++i)
        f *= i;
    return Rational(mpq_class(f));
}

}  // namespace confjord
