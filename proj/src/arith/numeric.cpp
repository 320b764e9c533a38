#include "bstower/arith/numeric.hpp"

#include <mpfr.h>

namespace bstower {

Real to_real(Integer const& z)
{
    Real r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real to_real(Rational const& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Rational exact_rational(Real const& x)
{
    if (x == 0)
        return Rational(0);
    Integer mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.backend().data());
    Rational q(mant);
    if (e >= 0) {
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    q.canonicalize();
    return q;
}

namespace {

Integer pow10(unsigned long k)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

Integer floor_of(Rational const& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(Rational const& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace

Rational round_to_rational(Real const& x, Rounding dir, int digits)
{
    if (x == 0)
        return Rational(0);
    long e10 = static_cast<long>(floor(log10(abs(x))).convert_to<long>());
    long k = digits - 1 - e10;
    Rational exact = exact_rational(x);
    // MPFR carries ~100 digits; a relative guard of 1e-90 covers its rounding error.
    Rational guard = abs(exact) / Rational(pow10(90));
    if (dir == Rounding::up)
        exact += guard;
    else
        exact -= guard;
    Rational scale = k >= 0 ? Rational(pow10(static_cast<unsigned long>(k)))
                            : Rational(1, 1) / Rational(pow10(static_cast<unsigned long>(-k)));
    Rational y = exact * scale;
    Integer n = (dir == Rounding::up) ? ceil_of(y) : floor_of(y);
    Rational r = Rational(n) / scale;
    r.canonicalize();
    return r;
}

Real real_pi()
{
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real euler_gamma()
{
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

Real real_log(Integer const& z)
{
    if (z <= 0)
        throw Error("log of a non-positive integer");
    return log(to_real(z));
}

std::string format_fixed(Real const& x, int decimals)
{
    return x.str(decimals, std::ios_base::fixed);
}

std::string format_fixed(Rational const& x, int decimals)
{
    Integer scale = pow10(static_cast<unsigned long>(decimals));
    Rational y = x * Rational(scale) + Rational(sgn(x) >= 0 ? 1 : -1, 2);
    Integer n;
    mpz_tdiv_q(n.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    bool negative = n < 0;
    if (negative)
        n = -n;
    std::string digits = n.get_str();
    if (static_cast<int>(digits.size()) <= decimals)
        digits.insert(0, static_cast<std::size_t>(decimals + 1 - static_cast<int>(digits.size())), '0');
    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
    if (decimals > 0)
        out += "." + digits.substr(digits.size() - static_cast<std::size_t>(decimals));
    return out;
}

}  // namespace bstower
