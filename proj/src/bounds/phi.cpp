#include "bstower/bounds/phi.hpp"

#include "bstower/arith/integer_factor.hpp"

#include <sstream>

namespace bstower {

PhiIndex PhiIndex::prime_power(std::uint64_t q)
{
    if (bstower::prime_power(Integer(static_cast<unsigned long>(q))).second == 0)
        throw Error(std::to_string(q) + " is not a prime power");
    return {Kind::prime_power, q};
}

std::string PhiIndex::to_string() const
{
    switch (kind) {
    case Kind::real:
        return "R";
    case Kind::complex:
        return "C";
    case Kind::prime_power:
        break;
    }
    return std::to_string(q);
}

void PhiVector::set(PhiIndex const& a, Real const& v)
{
    if (v < 0)
        throw Error("negative phi entry at " + a.to_string());
    if (v == 0)
        values_.erase(a);
    else
        values_[a] = v;
}

Real PhiVector::get(PhiIndex const& a) const
{
    auto it = values_.find(a);
    return it == values_.end() ? Real(0) : it->second;
}

Real bs_ratio(PhiVector const& phi)
{
    Real r = 1;
    for (auto const& [a, v] : phi.entries()) {
        if (v < 0)
            throw Error("negative phi entry at " + a.to_string());
        switch (a.kind) {
        case PhiIndex::Kind::real:
            r -= v * log(Real(2));
            break;
        case PhiIndex::Kind::complex:
            r -= v * log(2 * real_pi());
            break;
        case PhiIndex::Kind::prime_power:
            r += v * log(Real(a.q) / Real(a.q - 1));
            break;
        }
    }
    return r;
}

Real InequalityCoefficients::q_coefficient(std::uint64_t q) const
{
    Real rq(q);
    return log(rq) / (pow(rq, q_exponent) - 1);
}

InequalityCoefficients InequalityCoefficients::grh()
{
    InequalityCoefficients c;
    Real pi = real_pi(), gamma = euler_gamma();
    c.c_real = log(2 * sqrt(2 * pi)) + pi / 4 + gamma / 2;
    c.c_complex = log(8 * pi) + gamma;
    return c;
}

InequalityCoefficients InequalityCoefficients::parse(std::string_view text)
{
    InequalityCoefficients c = grh();
    InequalityCoefficients defaults = c;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("inequality line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        auto number = [&](Real const& fallback) {
            if (value == "grh")
                return fallback;
            try {
                return Real(value);
            } catch (std::exception const&) {
                throw Error("inequality line " + std::to_string(lineno) + ": bad number '" + value + "'");
            }
        };
        if (key == "name")
            c.name = value;
        else if (key == "q_exponent")
            c.q_exponent = number(defaults.q_exponent);
        else if (key == "c_real")
            c.c_real = number(defaults.c_real);
        else if (key == "c_complex")
            c.c_complex = number(defaults.c_complex);
        else
            throw Error("inequality line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (c.q_exponent <= 0 || c.c_real < 0 || c.c_complex < 0)
        throw Error("inequality coefficients must be positive");
    return c;
}

Real basic_inequality_lhs(PhiVector const& phi, InequalityCoefficients const& c)
{
    Real s = 0;
    for (auto const& [a, v] : phi.entries()) {
        switch (a.kind) {
        case PhiIndex::Kind::real:
            s += v * c.c_real;
            break;
        case PhiIndex::Kind::complex:
            s += v * c.c_complex;
            break;
        case PhiIndex::Kind::prime_power:
            s += v * c.q_coefficient(a.q);
            break;
        }
    }
    return s;
}

}  // namespace bstower
