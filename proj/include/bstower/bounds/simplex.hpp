#ifndef BSTOWER_BOUNDS_SIMPLEX_HPP_
#define BSTOWER_BOUNDS_SIMPLEX_HPP_

#include "bstower/arith/numeric.hpp"

#include <vector>

namespace bstower {

template <class Scalar>
struct LpSolution {
    Scalar value;
    std::vector<Scalar> x;
    std::vector<Scalar> slack;   // b - A x
    std::vector<Scalar> duals;   // one per row, nonnegative at optimality
    int pivots = 0;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the slack basis is
/// feasible. Dense tableau, Bland's rule. Entries with |v| <= eps count as zero
/// (eps = 0 for exact scalars).
template <class Scalar>
LpSolution<Scalar> simplex_maximize(std::vector<Scalar> const& c, std::vector<std::vector<Scalar>> const& A,
                                    std::vector<Scalar> const& b, Scalar const& eps = Scalar(0))
{
    std::size_t m = A.size(), n = c.size();
    if (b.size() != m)
        throw Error("right-hand side length mismatch");
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n)
            throw Error("constraint row length mismatch");
        if (b[i] < -eps)
            throw Error("infeasible linear program: negative right-hand side");
    }

    std::size_t cols = n + m;
    // row i: [A | I | b]; z: reduced costs negated, value in z[cols]
    std::vector<std::vector<Scalar>> t(m, std::vector<Scalar>(cols + 1, Scalar(0)));
    std::vector<Scalar> z(cols + 1, Scalar(0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            t[i][j] = A[i][j];
        t[i][n + i] = Scalar(1);
        t[i][cols] = b[i] < 0 ? Scalar(0) : b[i];
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j)
        z[j] = -c[j];

    LpSolution<Scalar> sol;
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (z[j] < -eps) {
                enter = j;
                break;
            }
        }
        if (enter == cols)
            break;
        std::size_t leave = m;
        Scalar best(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= eps)
                continue;
            Scalar ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            throw Error("unbounded linear program");
        Scalar piv = t[leave][enter];
        for (auto& v : t[leave])
            v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0)
                continue;
            Scalar f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                t[i][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Scalar f = z[enter];
            for (std::size_t j = 0; j <= cols; ++j)
                z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
        ++sol.pivots;
    }

    sol.value = z[cols];
    sol.x.assign(n, Scalar(0));
    sol.slack.assign(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n)
            sol.x[basis[i]] = t[i][cols];
        else
            sol.slack[basis[i] - n] = t[i][cols];
    }
    sol.duals.assign(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i)
        sol.duals[i] = z[n + i];
    return sol;
}

}  // namespace bstower

#endif  // BSTOWER_BOUNDS_SIMPLEX_HPP_
