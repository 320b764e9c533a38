#include "bstower/arith/int_poly.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace bstower {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

IntPoly IntPoly::monomial(Integer c, int degree)
{
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer const& IntPoly::leading() const
{
    if (coeffs_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Integer(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Integer IntPoly::content() const
{
    Integer g = 0;
    for (auto const& c : coeffs_)
        g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero())
        return *this;
    Integer g = content();
    if (leading() < 0)
        g = -g;
    return divided_by(g);
}

IntPoly IntPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return IntPoly();
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Integer IntPoly::eval(Integer const& x) const
{
    Integer r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Rational IntPoly::eval(Rational const& x) const
{
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * x + Rational(*it);
    return r;
}

IntPoly IntPoly::divided_by(Integer const& d) const
{
    if (d == 0)
        throw Error("division of a polynomial by zero");
    std::vector<Integer> r(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t()))
            throw Error("inexact polynomial division by " + d.get_str());
        mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Integer const& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        if (i == 0 || mag != 1)
            out += mag.get_str();
        if (i > 0) {
            if (mag != 1)
                out += '*';
            out += var;
            if (i > 1)
                out += '^' + std::to_string(i);
        }
    }
    return out;
}

IntPoly IntPoly::parse(std::string_view text, char var)
{
    std::map<int, Integer> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto fail = [&](char const* what) -> IntPoly {
        throw Error("cannot parse polynomial '" + std::string(text) + "': " + what);
    };
    auto read_int = [&](std::string& digits) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits += text[i++];
    };

    skip_ws();
    if (i == text.size())
        return fail("empty expression");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size())
            break;
        int sgn_term = 1;
        if (text[i] == '+' || text[i] == '-') {
            sgn_term = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            return fail("expected '+' or '-' between terms");
        }
        first = false;

        std::string digits;
        read_int(digits);
        skip_ws();
        Integer c = digits.empty() ? Integer(1) : Integer(digits);
        int deg = 0;
        bool star = false;
        if (i < text.size() && text[i] == '*') {
            if (digits.empty())
                return fail("'*' without a coefficient");
            star = true;
            ++i;
            skip_ws();
        }
        if (i < text.size() && text[i] == var) {
            ++i;
            deg = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string e;
                read_int(e);
                if (e.empty())
                    return fail("missing exponent");
                deg = std::stoi(e);
            }
        } else if (star || digits.empty()) {
            return fail("expected a term");
        }
        terms[deg] += sgn_term * c;
    }

    std::vector<Integer> coeffs(terms.empty() ? 0 : static_cast<std::size_t>(terms.rbegin()->first) + 1);
    for (auto const& [d, c] : terms)
        coeffs[static_cast<std::size_t>(d)] = c;
    return IntPoly(std::move(coeffs));
}

IntPoly operator+(IntPoly const& a, IntPoly const& b)
{
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPoly(std::move(r));
}

IntPoly operator-(IntPoly const& a, IntPoly const& b) { return a + (-b); }

IntPoly operator*(IntPoly const& a, IntPoly const& b)
{
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(r));
}

IntPoly operator*(Integer const& c, IntPoly const& a)
{
    std::vector<Integer> r(a.coeffs_);
    for (auto& x : r)
        x *= c;
    return IntPoly(std::move(r));
}

IntPoly pseudo_remainder(IntPoly const& a, IntPoly const& b)
{
    if (b.is_zero())
        throw Error("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree())
        return a;
    std::vector<Integer> r = a.coeffs();
    int db = b.degree();
    Integer const& lb = b.leading();
    for (int k = a.degree(); k >= db; --k) {
        Integer lead = r[static_cast<std::size_t>(k)];
        for (auto& c : r)
            c *= lb;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(k - db + j)] -= lead * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return IntPoly(std::move(r));
}

IntPoly gcd(IntPoly const& a_in, IntPoly const& b_in)
{
    IntPoly a = a_in.primitive_part(), b = b_in.primitive_part();
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a;
}

namespace {

Integer ipow(Integer const& b, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer exact_div(Integer const& a, Integer const& b)
{
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

Integer resultant(IntPoly const& a_in, IntPoly const& b_in)
{
    if (a_in.is_zero() || b_in.is_zero())
        throw Error("undefined resultant");
    IntPoly A = a_in, B = b_in;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1))
            s = -s;
        std::swap(A, B);
    }
    if (B.degree() == 0)
        return s * ipow(B.leading(), static_cast<unsigned long>(A.degree()));

    Integer ca = A.content(), cb = B.content();
    A = A.divided_by(ca);
    B = B.divided_by(cb);
    Integer t = ipow(ca, static_cast<unsigned long>(B.degree())) * ipow(cb, static_cast<unsigned long>(A.degree()));
    Integer g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1))
            s = -s;
        IntPoly R = pseudo_remainder(A, B);
        A = std::move(B);
        if (R.is_zero())
            return Integer(0);
        B = R.divided_by(g * ipow(h, static_cast<unsigned long>(delta)));
        g = A.leading();
        if (delta > 0)
            h = exact_div(ipow(g, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0)
            break;
    }
    int da = A.degree();
    h = exact_div(ipow(B.leading(), static_cast<unsigned long>(da)), ipow(h, static_cast<unsigned long>(da - 1)));
    return s * t * h;
}

Integer discriminant(IntPoly const& a)
{
    if (a.degree() < 1)
        throw Error("discriminant of a constant polynomial");
    int n = a.degree();
    Integer r = resultant(a, a.derivative());
    Integer d = exact_div(r, a.leading());
    long k = static_cast<long>(n) * (n - 1) / 2;
    return (k % 2 == 0) ? d : Integer(-d);
}

}  // namespace bstower
