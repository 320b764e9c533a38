#include "bstower/cli/commands.hpp"

#include "bstower/arith/integer_factor.hpp"

#include <algorithm>
#include <sstream>

namespace bstower {

namespace {

std::string fmt(Real const& x, int decimals = 10) { return format_fixed(x, decimals); }

std::string sci(Real const& x) { return x.str(3, std::ios_base::scientific); }

std::string factored(Integer const& n)
{
    if (n == 0)
        return "0";
    std::string s = n < 0 ? "-" : "";
    bool first = true;
    for (auto const& [p, e] : factor_integer(n)) {
        s += (first ? "" : "*") + p.get_str() + (e > 1 ? "^" + std::to_string(e) : "");
        first = false;
    }
    return first ? s + "1" : s;
}

std::string join(std::vector<std::string> const& parts, std::string const& sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

class Recorder {
public:
    Recorder(Report& report, InputDocument const& doc) : r_(report), doc_(doc) {}

    std::optional<std::string> expected(std::string const& key) const
    {
        auto it = doc_.expect.find(key);
        return it == doc_.expect.end() ? std::nullopt : std::optional<std::string>(it->second);
    }

    void info(std::string name, std::string computed, std::string detail = {})
    {
        ReportStep s;
        s.name = std::move(name);
        s.computed = std::move(computed);
        s.informational = true;
        s.detail = std::move(detail);
        r_.steps.push_back(std::move(s));
    }

    void check(std::string name, bool pass, std::string computed, std::string detail = {})
    {
        ReportStep s;
        s.name = std::move(name);
        s.computed = std::move(computed);
        s.pass = pass;
        s.detail = std::move(detail);
        r_.steps.push_back(std::move(s));
    }

    /// Exact comparison of integers; the reference may be a factored product.
    void integer(std::string name, std::string const& key, Integer const& computed, std::string detail = {})
    {
        auto exp = expected(key);
        if (!exp) {
            info(std::move(name), computed.get_str(), std::move(detail));
            return;
        }
        Integer e = parse_integer_expression(*exp);
        ReportStep s;
        s.name = std::move(name);
        s.computed = computed.get_str();
        s.expected = e.get_str();
        s.tolerance = "exact";
        s.delta = Integer(computed - e).get_str();
        s.pass = computed == e;
        s.detail = std::move(detail);
        r_.steps.push_back(std::move(s));
    }

    void text(std::string name, std::string const& key, std::string computed, std::string detail = {})
    {
        auto exp = expected(key);
        if (!exp) {
            info(std::move(name), std::move(computed), std::move(detail));
            return;
        }
        ReportStep s;
        s.name = std::move(name);
        s.pass = computed == *exp;
        s.computed = std::move(computed);
        s.expected = *exp;
        s.tolerance = "exact";
        s.detail = std::move(detail);
        r_.steps.push_back(std::move(s));
    }

    /// |computed - expected| <= tolerance; a miss is also recorded as a deviation.
    void real(std::string name, std::string const& key, Real const& computed, std::string detail = {},
              std::string const& analysis = {})
    {
        auto exp = expected(key);
        if (!exp) {
            info(std::move(name), fmt(computed), std::move(detail));
            return;
        }
        auto tol_it = doc_.tolerance.find(key);
        std::string tol = tol_it == doc_.tolerance.end() ? "1e-4" : tol_it->second;
        Real e, t;
        try {
            e = Real(*exp);
            t = Real(tol);
        } catch (std::exception const&) {
            throw Error("expect." + key + ": not a decimal number");
        }
        Real delta = computed - e;
        ReportStep s;
        s.name = std::move(name);
        s.computed = fmt(computed);
        s.expected = *exp;
        s.tolerance = tol;
        s.delta = sci(delta);
        s.pass = abs(delta) <= t;
        s.detail = std::move(detail);
        if (!s.pass) {
            r_.deviations.push_back({s.name, s.computed, s.expected, s.tolerance, s.delta,
                                     analysis.empty() ? "outside tolerance" : analysis});
        }
        r_.steps.push_back(std::move(s));
    }

private:
    Report& r_;
    InputDocument const& doc_;
};

std::optional<SquareWitness> witness_of(FieldOrder const& k, std::optional<IntPoly> const& beta,
                                        std::optional<IntPoly> const& gamma)
{
    if (!beta)
        return std::nullopt;
    return SquareWitness{k.element(*beta), k.element(*gamma)};
}

OrderElement effective_eta(FieldOrder const& k, InputDocument const& doc)
{
    OrderElement eta = k.element(doc.eta);
    return doc.eta_unit == -1 ? k.neg(eta) : eta;
}

std::string phi_name(ExtensionKind kind) { return kind == ExtensionKind::totally_real ? "phi_R" : "phi_C"; }

void verification_steps(Recorder& rec, FieldOrder const& k, InputDocument const& doc)
{
    OrderElement eta = effective_eta(k, doc);

    std::vector<std::string> certified;
    bool all_prime = true;
    std::vector<OrderElement> factors;
    std::vector<Integer> certified_norms;
    for (auto const& f : doc.factors) {
        OrderElement e = k.element(f.poly);
        factors.push_back(e);
        PrimeCertificate c = verify_prime_element(k, e);
        certified_norms.push_back(c.certified ? c.norm : Integer(0));
        if (c.certified) {
            certified.push_back(f.label + " -> " + c.ideal->describe() + ", norm " + c.norm.get_str());
        } else {
            all_prime = false;
            certified.push_back(f.label + ": " + c.reason);
        }
    }
    if (doc.factors.empty()) {
        rec.info("prime certification", "no factors supplied");
    } else {
        std::size_t ok = static_cast<std::size_t>(
            std::count_if(certified_norms.begin(), certified_norms.end(), [](Integer const& n) { return n != 0; }));
        rec.check("prime certification", all_prime,
                  std::to_string(ok) + " of " + std::to_string(doc.factors.size()) + " certified prime",
                  join(certified, "; "));
    }

    if (!doc.factors.empty()) {
        std::vector<std::string> problems;
        for (std::size_t i = 0; i < doc.factors.size(); ++i) {
            if (certified_norms[i] != 0 && certified_norms[i] != doc.factors[i].norm)
                problems.push_back(doc.factors[i].label + " has norm " + certified_norms[i].get_str() +
                                   ", claimed " + doc.factors[i].norm.get_str());
        }
        OrderElement prod = k.product(factors);
        bool equal = prod == eta;
        std::string computed = equal ? "product equals eta" : "product differs from eta";
        if (!equal && doc.product_mode == ProductMode::up_to_unit) {
            auto q = k.divide_exact(eta, prod);
            if (q && abs(k.norm(*q)) == 1) {
                equal = true;
                computed = "product equals eta up to the unit " + q->to_string();
            }
        }
        if (!equal)
            problems.push_back("product = " + prod.to_string());
        rec.check("product identity", equal && problems.empty(), computed, join(problems, "; "));
    }

    Integer n_eta = k.norm(eta);
    rec.integer("eta norm", "eta_norm", abs(n_eta), factored(n_eta));

    if (doc.eta_unit == -1) {
        OrderElement printed = k.element(doc.eta);
        std::vector<std::string> signs;
        for (int s : k.real_signs(printed))
            signs.push_back(s > 0 ? "+" : "-");
        rec.info("printed eta", "effective eta = -1 * printed eta",
                 "printed eta signs at the real embeddings: " + join(signs, " "));
    }

    if (doc.eta_abstract) {
        OrderElement abstract = k.element(*doc.eta_abstract);
        NonSquareCertificate c = certify_nonsquare(k, k.mul(eta, abstract));
        rec.info("abstract eta", c.certified ? "defines a different extension" : "not distinguished from eta",
                 "norm " + factored(k.norm(abstract)) + (c.certified ? "; eta * abstract is not a square: " + c.reason
                                                                      : ""));
    }

    if (auto w = witness_of(k, doc.beta, doc.gamma))
        rec.check("square witness", check_square_witness(k, eta, *w),
                  check_square_witness(k, eta, *w) ? "eta = beta^2 + 4 gamma" : "eta != beta^2 + 4 gamma");
}

}  // namespace

PipelineResult run_pipeline(InputDocument const& doc, std::string const& command,
                            InequalityCoefficients const& coeffs)
{
    PipelineResult out;
    Report& report = out.report;
    report.command = command;
    report.subject = doc.name.empty() ? "input document" : doc.name;
    Recorder rec(report, doc);
    std::string stage = "field";
    bool grh = coeffs.name == "GRH" && coeffs.q_exponent == InequalityCoefficients::grh().q_exponent &&
               coeffs.c_real == InequalityCoefficients::grh().c_real &&
               coeffs.c_complex == InequalityCoefficients::grh().c_complex;

    try {
        FieldOrder k(doc.poly);

        stage = "discriminant";
        rec.integer("discriminant", "discriminant", k.poly_discriminant(), factored(k.poly_discriminant()));

        stage = "signature";
        rec.text("signature", "signature", std::to_string(k.r1()) + "," + std::to_string(k.r2()),
                 "Sturm count of real roots");

        stage = "maximality";
        std::vector<std::string> primes;
        for (auto const& d : k.verify_maximal())
            primes.push_back(d.p.get_str());
        rec.check("maximality", true, "Z[x] is maximal",
                  primes.empty() ? "disc(f) = +-1" : "Dedekind criterion at " + join(primes, ", "));

        stage = "prime certification";
        verification_steps(rec, k, doc);

        stage = "extension";
        OrderElement eta = effective_eta(k, doc);
        QuadraticExtension K(k, eta, witness_of(k, doc.beta, doc.gamma));
        if (!doc.beta) {
            auto const& w = K.relative_disc().witness;
            rec.info("square witness", w ? "found beta = " + w->beta.to_string() : "none with beta in {0,1}^n");
        }

        stage = "relative discriminant";
        rec.integer("relative discriminant", "rel_disc", K.relative_disc().norm, factored(K.relative_disc().norm));
        stage = "absolute discriminant";
        rec.integer("absolute discriminant", "abs_disc", K.abs_disc(), factored(K.abs_disc()));
        stage = "genus";
        rec.real("genus", "genus", K.genus(), "log|d_K| / 2");

        stage = "extension signature";
        ExtensionSignature const& sig = K.signature();
        rec.text("extension signature", "extension", to_string(sig.kind),
                 "r1(K) = " + std::to_string(sig.r1) + ", r2(K) = " + std::to_string(sig.r2) +
                     ", real places of k ramified = " + std::to_string(sig.rho));
        out.kind = sig.kind;

        stage = "ramification";
        RamificationData ram = ramification_data(K, doc.ell);
        int d_empty = dgt_lower_bound(ram);
        rec.integer("ramification", "d_empty", Integer(d_empty),
                    "d(G_empty) >= t - r1 - r2 + rho - delta = " + std::to_string(ram.t) + "-" +
                        std::to_string(ram.r1) + "-" + std::to_string(ram.r2) + "+" + std::to_string(ram.rho) + "-" +
                        std::to_string(ram.delta_ell));

        stage = "GS threshold";
        rec.real("GS threshold (theta=0)", "gs_threshold", gs_threshold(sig.r1, sig.r2, 0), "2 + 2 sqrt(r1 + r2)");
        GSCertificate base = gs_certificate(d_empty, sig.r1, sig.r2, 0);
        rec.info("GS certificate without T (theta=0)", base.infinite ? "infinite" : "inconclusive",
                 std::to_string(d_empty) + (base.infinite ? " >= " : " < ") + fmt(base.threshold, 4));

        stage = "augmentation";
        int d_T = d_empty;
        std::vector<TPlace> T;
        if (doc.aug.new_prime) {
            AugmentationVerdict v = verify_tame_augmentation(K, k.element(*doc.aug.new_prime),
                                                             k.element(*doc.aug.old_prime), doc.ell,
                                                             witness_of(k, doc.aug.beta, doc.aug.gamma));
            std::vector<std::string> checks;
            for (auto const& c : v.checks)
                checks.push_back(c.name + ": " + (c.pass ? "ok" : "failed") + (c.detail.empty() ? "" : " (" + c.detail + ")"));
            std::vector<std::string> tdesc;
            for (auto const& t : v.T)
                tdesc.push_back(t.description + " of norm " + t.norm.get_str());
            rec.check("augmentation", v.valid,
                      v.valid ? "ramified exactly at T = {" + join(tdesc, ", ") + "}" : "not a valid augmentation",
                      join(checks, "; "));
            if (doc.aug.product) {
                OrderElement claimed = k.element(*doc.aug.product);
                rec.check("augmentation product", v.aug == claimed, v.aug.to_string(),
                          v.aug == claimed ? "" : "claimed " + claimed.to_string());
            }
            if (v.real_places_ramified > 0)
                rec.info("augmentation real places", std::to_string(v.real_places_ramified) + " real places of K ramify",
                         "aug is negative at some real embeddings where eta is positive");
            if (v.valid) {
                d_T = d_empty + 1;
                T = v.T;
            }
        }
        rec.integer("d(G_T)", "d_T", Integer(d_T), T.empty() ? "no augmentation" : "d(G_empty) + 1");

        stage = "GS certificate";
        GSCertificate gs0 = gs_certificate(d_T, sig.r1, sig.r2, 0, T);
        rec.text("GS certificate (theta=0)", "verdict", gs0.infinite ? "infinite" : "inconclusive",
                 std::to_string(d_T) + (gs0.infinite ? " >= " : " < ") + fmt(gs0.threshold, 4));
        GSCertificate gs1 = gs_certificate(d_T, sig.r1, sig.r2, 1, T);
        rec.info("GS certificate (theta=1)", gs1.infinite ? "infinite" : "inconclusive",
                 std::to_string(d_T) + (gs1.infinite ? " >= " : " < ") + fmt(gs1.threshold, 4));

        stage = "genus limit";
        std::vector<Integer> t_norms;
        for (auto const& t : T)
            t_norms.push_back(t.norm);
        GenusLimit limit = genus_ratio_limit(K.genus(), K.degree(), t_norms);
        rec.info("genus limit", fmt(limit.ratio_bound),
                 "g/n + sum log N(T) / (2n) with sum log N(T) = " + fmt(limit.t_norm_log_sum));

        stage = "phi interval";
        auto phi = phi_intervals(limit, sig.kind);
        PhiInterval const& arch = sig.kind == ExtensionKind::totally_real ? phi[0] : phi[1];
        rec.real(phi_name(sig.kind) + " lower endpoint", "phi_lo", arch.lo);
        rec.real(phi_name(sig.kind) + " upper endpoint", "phi_hi", arch.hi);

        stage = "BS bounds";
        PlaceTally tally = place_tally(K, doc.bound);
        BsBounds b = lp_upper_bound(tally, phi, K.genus(), coeffs);
        out.bounds = b;
        rec.real("BS lower bound", "bsl", b.bsl, phi_name(sig.kind) + " at the upper endpoint");

        std::ostringstream analysis;
        analysis << "reconstructed program: " << coeffs.name << " basic inequality at the lower "
                 << phi_name(sig.kind) << " endpoint, caps N_q/g, support q <= " << doc.bound
                 << "; T norms {" << join([&] {
                        std::vector<std::string> v;
                        for (auto const& n : t_norms)
                            v.push_back(n.get_str());
                        return v;
                    }(), ", ")
                 << "}";
        if (!doc.deviation_t_norms.empty()) {
            std::vector<std::string> alt;
            for (auto const& n : doc.deviation_t_norms)
                alt.push_back(n.get_str());
            auto alt_phi = phi_intervals(genus_ratio_limit(K.genus(), K.degree(), doc.deviation_t_norms), sig.kind);
            BsBounds alt_b = lp_upper_bound(tally, alt_phi, K.genus(), coeffs);
            analysis << "; with T norms {" << join(alt, ", ") << "} the same program gives BSL "
                     << fmt(alt_b.bsl) << ", BSU " << fmt(alt_b.bsu);
        }
        if (grh) {
            rec.real("BS upper bound", "bsu", b.bsu, "exact simplex on the outward-rounded program", analysis.str());
        } else {
            rec.info("BS upper bound", fmt(b.bsu), "inequality set " + coeffs.name);
        }

        std::vector<std::pair<std::uint64_t, std::string>> phi_keys;
        for (auto const& [key, value] : doc.expect)
            if (key.rfind("phi.", 0) == 0)
                phi_keys.emplace_back(std::stoull(key.substr(4)), key);
        std::sort(phi_keys.begin(), phi_keys.end());
        for (auto const& [q, key] : phi_keys) {
            Real v = b.optimum.get(PhiIndex::prime_power(q));
            if (grh)
                rec.real("LP optimum phi_" + std::to_string(q), key, v);
            else
                rec.info("LP optimum phi_" + std::to_string(q), fmt(v));
        }

        std::vector<std::string> support;
        for (auto const& [idx, v] : b.optimum.entries())
            support.push_back(idx.to_string() + " = " + fmt(v));
        rec.info("LP optimum", join(support, ", "), "binding: " + join(b.binding, "; "));

        stage = "exclusion certificate";
        ExclusionCertificate const& ex = b.exclusion;
        rec.check("exclusion certificate", ex.holds,
                  ex.holds ? "no prime power beyond the support can enter" : "a prime power beyond the support may enter",
                  "dual price " + fmt(ex.dual_price) + ", max ratio " + fmt(ex.max_ratio) + " at q = " +
                      std::to_string(ex.worst_q) + " for q <= " + std::to_string(ex.checked_up_to) +
                      ", tail bound " + fmt(ex.tail_bound));

        stage = "rounding audit";
        Real gap = b.bsu - b.bsu_unrounded;
        rec.check("rounding audit", gap >= 0 && gap <= Real("1e-20"), sci(gap),
                  "rounded optimum minus the optimum of the unrounded program");
    } catch (Error const& e) {
        rec.check(stage, false, "error", e.what());
    }
    return out;
}

Report cmd_verify(int example, std::optional<InputDocument> const& input)
{
    if (example != 1 && example != 2)
        throw Error("example must be 1 or 2");
    InputDocument doc = input ? *input : InputDocument::parse(bundled_example(example));
    Report r = run_pipeline(doc, "verify").report;
    r.subject = "example " + std::to_string(example) + (input ? " (" + r.subject + ")" : "");
    return r;
}

Report cmd_splitting(InputDocument const& input, std::uint64_t bound)
{
    Report r;
    r.command = "splitting";
    r.subject = input.name.empty() ? "input document" : input.name;
    try {
        FieldOrder k(input.poly);
        QuadraticExtension K(k, effective_eta(k, input), witness_of(k, input.beta, input.gamma));
        PlaceTally t = place_tally(K, bound);
        r.output.push_back("q N_q");
        for (auto const& [q, n] : t.counts)
            r.output.push_back(std::to_string(q) + " " + std::to_string(n));
        r.output.push_back("real places " + std::to_string(t.n_real));
        r.output.push_back("complex places " + std::to_string(t.n_complex));

        std::vector<std::string> bad;
        for (std::uint64_t p : primes_up_to(bound))
            if (t.local_degree_sum(p) != K.degree())
                bad.push_back(std::to_string(p));
        r.steps.push_back({"local degrees", bad.empty() ? "sum e*f = " + std::to_string(K.degree()) + " for every p <= " + std::to_string(bound) : "mismatch at " + join(bad, ", "),
                           "", "", "", bad.empty(), false, ""});
        r.steps.push_back({"tally", std::to_string(t.counts.size()) + " prime powers q <= " + std::to_string(bound),
                           "", "", "", true, true, ""});
    } catch (Error const& e) {
        r.steps.push_back({"splitting", "error", "", "", "", false, false, e.what()});
    }
    return r;
}

Report cmd_bounds(InputDocument const& input, InequalityCoefficients const& coeffs)
{
    return run_pipeline(input, "bounds", coeffs).report;
}

Report cmd_table(TableConfig const& config)
{
    Report r;
    r.command = "table";
    r.subject = "summary table";
    std::vector<TowerBounds> towers;
    for (int example : {1, 2}) {
        PipelineResult p = run_pipeline(InputDocument::parse(bundled_example(example)), "table");
        std::string label = "example " + std::to_string(example);
        if (!p.bounds || !p.kind) {
            auto first = p.report.first_failure();
            r.steps.push_back({label, "no bounds", "", "", "", false, false,
                               "pipeline stopped at " + first.value_or("unknown step")});
            continue;
        }
        towers.push_back({label, *p.kind, p.bounds->bsl, p.bounds->bsu});
        r.steps.push_back({label, example_cell(p.bounds->bsl, p.bounds->bsu), "", "", "", true, true,
                           to_string(*p.kind)});
    }
    SummaryTable table = emit_table(towers, config);
    std::istringstream lines(render_text(table));
    std::string line;
    while (std::getline(lines, line))
        r.output.push_back(line);
    return r;
}

}  // namespace bstower
