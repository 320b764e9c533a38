#include "bstower/arith/integer_factor.hpp"

namespace bstower {

bool is_prime(Integer const& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi < 2)
        return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i <= hi; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= hi; j += i)
            composite[j] = true;
    }
    return out;
}

namespace {

// Brent's variant of Pollard rho; n odd composite.
Integer pollard_brent(Integer const& n)
{
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](Integer const& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(Integer(abs(x - ys)), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<Integer, int> factor_integer(Integer const& n_in)
{
    if (n_in == 0)
        throw Error("cannot factor zero");
    Integer n = abs(n_in);
    std::map<Integer, int> out;
    for (unsigned long p = 2; p < 100000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            n /= p;
        }
    }
    if (n > 1)
        factor_into(n, out);
    return out;
}

std::pair<Integer, int> prime_power(Integer const& n)
{
    if (n < 2)
        return {Integer(0), 0};
    auto f = factor_integer(n);
    if (f.size() != 1)
        return {Integer(0), 0};
    return *f.begin();
}

}  // namespace bstower
