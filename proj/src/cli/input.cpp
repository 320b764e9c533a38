#include "bstower/cli/input.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace bstower {

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string const& s, char sep)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, sep))
        out.push_back(trim(part));
    return out;
}

long parse_long(std::string const& s, std::string const& key)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (std::exception const&) {
        used = 0;
    }
    if (used == 0 || used != s.size())
        throw Error("key '" + key + "': expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

Integer parse_integer_expression(std::string_view text)
{
    std::string s = trim(text);
    if (s.empty())
        throw Error("empty integer expression");
    Integer result = 1;
    if (s[0] == '-') {
        result = -1;
        s = trim(s.substr(1));
    }
    if (!s.empty() && s.back() == '*')
        throw Error("cannot parse integer expression '" + std::string(text) + "'");
    for (auto const& factor : split(s, '*')) {
        auto caret = factor.find('^');
        std::string base = trim(factor.substr(0, caret));
        if (base.empty() || base.find_first_not_of("0123456789") != std::string::npos)
            throw Error("cannot parse integer expression '" + std::string(text) + "'");
        Integer b(base);
        unsigned long e = 1;
        if (caret != std::string::npos) {
            std::string exp = trim(factor.substr(caret + 1));
            if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos)
                throw Error("cannot parse integer expression '" + std::string(text) + "'");
            e = std::stoul(exp);
        }
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), b.get_mpz_t(), e);
        result *= power;
    }
    return result;
}

InputDocument InputDocument::parse(std::string_view text)
{
    InputDocument doc;
    std::set<std::string> seen;
    bool have_poly = false, have_eta = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        auto eq = line.find('=');
        std::string where = "line " + std::to_string(lineno);
        if (eq == std::string::npos)
            throw Error(where + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw Error(where + ": empty key or value");
        if (key != "factor" && !seen.insert(key).second)
            throw Error(where + ": duplicate key '" + key + "'");

        try {
            if (key == "name") {
                doc.name = value;
            } else if (key == "degree") {
                doc.degree = static_cast<int>(parse_long(value, key));
            } else if (key == "poly") {
                doc.poly = IntPoly::parse(value);
                have_poly = true;
            } else if (key == "eta") {
                doc.eta = IntPoly::parse(value);
                have_eta = true;
            } else if (key == "eta_unit") {
                long u = parse_long(value, key);
                if (u != 1 && u != -1)
                    throw Error("eta_unit must be 1 or -1");
                doc.eta_unit = static_cast<int>(u);
            } else if (key == "eta_abstract") {
                doc.eta_abstract = IntPoly::parse(value);
            } else if (key == "beta") {
                doc.beta = IntPoly::parse(value);
            } else if (key == "gamma") {
                doc.gamma = IntPoly::parse(value);
            } else if (key == "factor") {
                auto parts = split(value, ':');
                if (parts.size() != 3 || parts[0].empty())
                    throw Error("expected 'factor = label : norm : poly'");
                doc.factors.push_back({parts[0], parse_integer_expression(parts[1]), IntPoly::parse(parts[2])});
            } else if (key == "product_mode") {
                if (value == "exact")
                    doc.product_mode = ProductMode::exact;
                else if (value == "up_to_unit")
                    doc.product_mode = ProductMode::up_to_unit;
                else
                    throw Error("product_mode must be 'exact' or 'up_to_unit'");
            } else if (key == "aug.new") {
                doc.aug.new_prime = IntPoly::parse(value);
            } else if (key == "aug.old") {
                doc.aug.old_prime = IntPoly::parse(value);
            } else if (key == "aug.product") {
                doc.aug.product = IntPoly::parse(value);
            } else if (key == "aug.beta") {
                doc.aug.beta = IntPoly::parse(value);
            } else if (key == "aug.gamma") {
                doc.aug.gamma = IntPoly::parse(value);
            } else if (key == "ell") {
                doc.ell = static_cast<int>(parse_long(value, key));
            } else if (key == "bound") {
                long b = parse_long(value, key);
                if (b < 1)
                    throw Error("bound must be positive");
                doc.bound = static_cast<std::uint64_t>(b);
            } else if (key == "deviation.t_norms") {
                for (auto const& n : split(value, ','))
                    doc.deviation_t_norms.push_back(parse_integer_expression(n));
            } else if (key.rfind("expect.", 0) == 0 && key.size() > 7) {
                doc.expect[key.substr(7)] = value;
            } else if (key.rfind("tolerance.", 0) == 0 && key.size() > 10) {
                doc.tolerance[key.substr(10)] = value;
            } else {
                throw Error("unknown key '" + key + "'");
            }
        } catch (Error const& e) {
            std::string msg = e.what();
            throw Error(msg.rfind("line ", 0) == 0 ? msg : where + ": " + msg);
        }
    }
    if (!have_poly)
        throw Error("input document has no 'poly'");
    if (!have_eta)
        throw Error("input document has no 'eta'");
    if ((doc.beta.has_value()) != (doc.gamma.has_value()))
        throw Error("beta and gamma must be given together");
    if ((doc.aug.beta.has_value()) != (doc.aug.gamma.has_value()))
        throw Error("aug.beta and aug.gamma must be given together");
    if ((doc.aug.new_prime.has_value()) != (doc.aug.old_prime.has_value()))
        throw Error("aug.new and aug.old must be given together");

    int n = doc.poly.degree();
    if (doc.degree && *doc.degree != n)
        throw Error("poly has degree " + std::to_string(n) + " but degree = " + std::to_string(*doc.degree));
    auto check_len = [&](std::optional<IntPoly> const& p, char const* what) {
        if (p && p->degree() >= n)
            throw Error(std::string(what) + " has degree >= " + std::to_string(n));
    };
    check_len(doc.eta, "eta");
    check_len(doc.eta_abstract, "eta_abstract");
    check_len(doc.beta, "beta");
    check_len(doc.gamma, "gamma");
    check_len(doc.aug.new_prime, "aug.new");
    check_len(doc.aug.old_prime, "aug.old");
    check_len(doc.aug.product, "aug.product");
    check_len(doc.aug.beta, "aug.beta");
    check_len(doc.aug.gamma, "aug.gamma");
    for (auto const& f : doc.factors)
        check_len(f.poly, ("factor " + f.label).c_str());
    return doc;
}

InputDocument InputDocument::load(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

}  // namespace bstower
