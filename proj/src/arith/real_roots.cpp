#include "bstower/arith/real_roots.hpp"

#include <algorithm>
#include <functional>

namespace bstower {

SturmSequence::SturmSequence(IntPoly const& a)
{
    if (a.degree() < 1)
        throw Error("Sturm sequence of a constant polynomial");
    if (a.degree() > 1 && discriminant(a) == 0)
        throw Error("Sturm sequence requires a squarefree polynomial");
    seq_.push_back(a.divided_by(a.content()));
    IntPoly d = a.derivative();
    seq_.push_back(d.divided_by(d.content()));
    while (seq_.back().degree() > 0) {
        IntPoly const& prev = seq_[seq_.size() - 2];
        IntPoly const& cur = seq_.back();
        IntPoly r = pseudo_remainder(prev, cur);
        if (r.is_zero())
            break;
        int delta = prev.degree() - cur.degree();
        // prem = lc^(delta+1) * rem; keep the sign of -rem.
        bool flip = !(cur.leading() < 0 && (delta + 1) % 2 == 1);
        r = r.divided_by(r.content());
        seq_.push_back(flip ? -r : r);
    }
}

namespace {

int count_variations(std::vector<int> const& signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

}  // namespace

int SturmSequence::variations_at(Rational const& x) const
{
    std::vector<int> s;
    s.reserve(seq_.size());
    for (auto const& p : seq_)
        s.push_back(sgn(p.eval(x)));
    return count_variations(s);
}

int SturmSequence::variations_at_infinity(bool positive) const
{
    std::vector<int> s;
    s.reserve(seq_.size());
    for (auto const& p : seq_) {
        int lc = sgn(p.leading());
        s.push_back((positive || p.degree() % 2 == 0) ? lc : -lc);
    }
    return count_variations(s);
}

int SturmSequence::count_in(Rational const& lo, Rational const& hi) const
{
    return variations_at(lo) - variations_at(hi);
}

int SturmSequence::count_total() const { return variations_at_infinity(false) - variations_at_infinity(true); }

int sturm_real_root_count(IntPoly const& a) { return SturmSequence(a).count_total(); }

std::vector<RootInterval> isolate_real_roots(IntPoly const& a)
{
    SturmSequence s(a);
    Integer maxc = 0;
    for (int i = 0; i < a.degree(); ++i)
        maxc = std::max(maxc, Integer(abs(a.coeff(i))));
    Integer lc = abs(a.leading());
    Integer bound = 1 + (maxc + lc - 1) / lc;
    std::vector<RootInterval> out;

    std::function<void(Rational const&, Rational const&, int)> split = [&](Rational const& lo, Rational const& hi,
                                                                          int count) {
        if (count == 0)
            return;
        if (count == 1) {
            if (a.eval(hi) == 0)
                out.push_back({hi, hi});
            else
                out.push_back({lo, hi});
            return;
        }
        Rational mid = (lo + hi) / 2;
        int left = s.count_in(lo, mid);
        split(lo, mid, left);
        split(mid, hi, count - left);
    };
    Rational lo(-bound), hi(bound);
    split(lo, hi, s.count_in(lo, hi));
    return out;
}

namespace {

RootInterval refine_with(SturmSequence const& s, IntPoly const& a, RootInterval const& iv)
{
    if (iv.exact())
        return iv;
    Rational mid = (iv.lo + iv.hi) / 2;
    if (a.eval(mid) == 0)
        return {mid, mid};
    if (s.count_in(iv.lo, mid) == 1)
        return {iv.lo, mid};
    return {mid, iv.hi};
}

}  // namespace

RootInterval refine_root(IntPoly const& a, RootInterval const& iv)
{
    return refine_with(SturmSequence(a), a, iv);
}

RationalInterval eval_interval(IntPoly const& p, Rational const& lo, Rational const& hi)
{
    RationalInterval r{Rational(0), Rational(0)};
    for (int i = p.degree(); i >= 0; --i) {
        Rational c1 = r.lo * lo, c2 = r.lo * hi, c3 = r.hi * lo, c4 = r.hi * hi;
        Rational mn = std::min({c1, c2, c3, c4});
        Rational mx = std::max({c1, c2, c3, c4});
        Rational c(p.coeff(i));
        r = {mn + c, mx + c};
    }
    return r;
}

int sign_at_root(IntPoly const& a, RootInterval iv, IntPoly const& p, int max_bits)
{
    SturmSequence s(a);
    IntPoly common = gcd(a, p);
    if (common.degree() >= 1) {
        bool vanishes = iv.exact() ? common.eval(iv.lo) == 0 : SturmSequence(common).count_in(iv.lo, iv.hi) > 0;
        if (vanishes)
            return 0;
    }
    Rational cap(1);
    mpq_div_2exp(cap.get_mpq_t(), cap.get_mpq_t(), static_cast<mp_bitcnt_t>(max_bits));
    while (true) {
        if (iv.exact())
            return sgn(p.eval(iv.lo));
        RationalInterval v = eval_interval(p, iv.lo, iv.hi);
        if (v.lo > 0)
            return 1;
        if (v.hi < 0)
            return -1;
        if (iv.hi - iv.lo < cap)
            throw Error("sign undecidable at precision cap: the element may vanish at a real embedding");
        iv = refine_with(s, a, iv);
    }
}

}  // namespace bstower
