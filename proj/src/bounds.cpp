#include "cws/bounds.hpp"

#include <stdexcept>

namespace cws {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt singleton_bound(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("singleton_bound: need n, d >= 1");
    int exponent = n - 2 * (d - 1);
    if (exponent < 0) return 0;
    return BigInt(1) << exponent;
}

namespace {

// Columns of the two enumerator transforms: column i holds the y-degree
// coefficients of ((x+3y)/2)^(n-i) * ((x+-y... see below)/2)^i, so that
//   B_j = K * sum_i TB[j][i] A_i     (second factor (x-y)/2)
//   S_j = K * sum_i TS[j][i] A_i     (second factor (y-x)/2)
struct Transforms {
    // [j][i], j = y-degree, i = input index; both (n+1) x (n+1)
    std::vector<std::vector<Rational>> tb, ts;
};

Transforms build_transforms(int n) {
    Transforms t;
    t.tb.assign(n + 1, std::vector<Rational>(n + 1, 0));
    t.ts.assign(n + 1, std::vector<Rational>(n + 1, 0));
    BigInt scale = BigInt(1) << n; // the 2^-n from the two halved arguments
    for (int i = 0; i <= n; ++i) {
        // (x+3y)^(n-i): y-coefficients a -> C(n-i,a) 3^a
        std::vector<BigInt> f1(n - i + 1);
        BigInt pow3 = 1;
        for (int a = 0; a <= n - i; ++a) {
            f1[a] = binomial(n - i, a) * pow3;
            pow3 *= 3;
        }
        // (x-y)^i: y-coefficients b -> C(i,b) (-1)^b
        // (y-x)^i: y-coefficients k -> C(i,k) (-1)^(i-k)
        std::vector<BigInt> f2(i + 1), f2s(i + 1);
        for (int b = 0; b <= i; ++b) {
            BigInt c = binomial(i, b);
            f2[b] = (b % 2) ? -c : c;
            f2s[b] = ((i - b) % 2) ? -c : c;
        }
        for (int a = 0; a <= n - i; ++a)
            for (int b = 0; b <= i; ++b) {
                int j = a + b;
                t.tb[j][i] += Rational(f1[a] * f2[b], scale);
                t.ts[j][i] += Rational(f1[a] * f2s[b], scale);
            }
    }
    return t;
}

// Phase-1 simplex with Bland's rule over exact rationals.  Decides whether
// {x >= 0 : eq rows hold with equality, ge rows hold with >=} is nonempty.
// Each row is (coefficients..., rhs).
bool simplex_feasible(std::vector<std::vector<Rational>> eq_rows,
                      std::vector<std::vector<Rational>> ge_rows, int nvars) {
    // standard form: ge rows get a surplus variable, every row gets an
    // artificial variable after its rhs is normalized nonnegative
    int nsurplus = (int)ge_rows.size();
    int nrows = (int)(eq_rows.size() + ge_rows.size());
    int nart = nrows;
    int ncols = nvars + nsurplus + nart;

    std::vector<std::vector<Rational>> tab(nrows, std::vector<Rational>(ncols + 1, 0));
    int r = 0;
    for (auto& row : eq_rows) {
        for (int j = 0; j < nvars; ++j) tab[r][j] = row[j];
        tab[r][ncols] = row[nvars];
        ++r;
    }
    for (int s = 0; s < (int)ge_rows.size(); ++s, ++r) {
        for (int j = 0; j < nvars; ++j) tab[r][j] = ge_rows[s][j];
        tab[r][nvars + s] = -1; // surplus
        tab[r][ncols] = ge_rows[s][nvars];
    }
    for (int row = 0; row < nrows; ++row) {
        if (tab[row][ncols] < 0)
            for (auto& x : tab[row]) x = -x;
        tab[row][nvars + nsurplus + row] = 1; // artificial
    }

    // reduced costs for minimizing the artificial sum: cost 1 on artificials
    std::vector<int> basis(nrows);
    std::vector<Rational> reduced(ncols, 0);
    Rational objective = 0;
    for (int row = 0; row < nrows; ++row) {
        basis[row] = nvars + nsurplus + row;
        for (int j = 0; j < ncols; ++j) reduced[j] -= tab[row][j];
        objective += tab[row][ncols];
    }
    for (int row = 0; row < nrows; ++row) reduced[basis[row]] = 0;

    while (true) {
        // Bland: smallest-index column with negative reduced cost
        int enter = -1;
        for (int j = 0; j < ncols; ++j)
            if (reduced[j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio = 0;
        for (int row = 0; row < nrows; ++row) {
            if (tab[row][enter] <= 0) continue;
            Rational ratio = tab[row][ncols] / tab[row][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[row] < basis[leave])) {
                leave = row;
                best_ratio = ratio;
            }
        }
        if (leave < 0) break; // unbounded in the artificial objective: cannot happen, bail

        Rational pivot = tab[leave][enter];
        for (auto& x : tab[leave]) x /= pivot;
        for (int row = 0; row < nrows; ++row) {
            if (row == leave) continue;
            Rational factor = tab[row][enter];
            if (factor == 0) continue;
            for (int j = 0; j <= ncols; ++j) tab[row][j] -= factor * tab[leave][j];
        }
        Rational rfactor = reduced[enter];
        for (int j = 0; j < ncols; ++j) reduced[j] -= rfactor * tab[leave][j];
        objective += rfactor * tab[leave][ncols];
        basis[leave] = enter;
    }
    return objective == 0;
}

} // namespace

bool lp_feasible(int n, int d, const Rational& K, bool pure) {
    if (n < 1 || n > 32) throw std::invalid_argument("lp_feasible: n out of range 1..32");
    if (d < 1 || d > n + 1) throw std::invalid_argument("lp_feasible: need 1 <= d <= n+1");
    if (K < 1) throw std::invalid_argument("lp_feasible: need K >= 1");

    Transforms t = build_transforms(n);

    // variables: A_1..A_n; pure codes have A_1..A_{d-1} pinned to zero,
    // which we encode by dropping those columns
    std::vector<int> var_of; // variable slot -> weight index i
    for (int i = 1; i <= n; ++i)
        if (!(pure && i < d)) var_of.push_back(i);
    int nvars = (int)var_of.size();

    auto b_row = [&](int j) {
        // sum_i (K TB[j][i] - delta_ij) A_i  (cmp)  -(K TB[j][0] - delta_0j)
        std::vector<Rational> row(nvars + 1, 0);
        for (int s = 0; s < nvars; ++s) {
            int i = var_of[s];
            row[s] = K * t.tb[j][i] - (i == j ? 1 : 0);
        }
        row[nvars] = -(K * t.tb[j][0] - (j == 0 ? 1 : 0));
        return row;
    };
    auto s_row = [&](int j) {
        std::vector<Rational> row(nvars + 1, 0);
        for (int s = 0; s < nvars; ++s) row[s] = K * t.ts[j][var_of[s]];
        row[nvars] = -(K * t.ts[j][0]);
        return row;
    };

    std::vector<std::vector<Rational>> eq_rows, ge_rows;
    for (int j = 0; j < d; ++j) eq_rows.push_back(b_row(j));
    for (int j = d; j <= n; ++j) ge_rows.push_back(b_row(j));
    for (int j = 0; j <= n; ++j) ge_rows.push_back(s_row(j));

    return simplex_feasible(std::move(eq_rows), std::move(ge_rows), nvars);
}

LpBound lp_max_K(int n, int d, bool pure) {
    LpBound bound;
    if (!lp_feasible(n, d, 1, pure)) {
        bound.best_integer = 0;
        bound.sup = 0;
        return bound;
    }
    // exponential growth then binary search for the largest feasible integer
    BigInt lo = 1, hi = 2;
    BigInt cap = BigInt(1) << n;
    while (hi <= cap && lp_feasible(n, d, Rational(hi), pure)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > cap) {
        bound.best_integer = cap; // K cannot exceed the space dimension
        bound.sup = Rational(cap);
        return bound;
    }
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (lp_feasible(n, d, Rational(mid), pure)) lo = mid;
        else hi = mid;
    }
    bound.best_integer = lo;

    // rational supremum in [lo, lo+1), bisected to 2^-20
    Rational rlo(lo), rhi(lo + 1);
    for (int iter = 0; iter < 20; ++iter) {
        Rational mid = (rlo + rhi) / 2;
        if (lp_feasible(n, d, mid, pure)) rlo = mid;
        else rhi = mid;
    }
    bound.sup = rlo;
    return bound;
}

OddBound odd_n_d2_bound(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd_n_d2_bound: need odd n >= 3");
    OddBound b;
    b.exact = Rational((BigInt(1) << (n - 2)) * (n - 2), n - 1);
    b.floor_value = boost::multiprecision::numerator(b.exact) /
                    boost::multiprecision::denominator(b.exact);
    return b;
}

BigInt known_family_size(KnownFamily family, int n) {
    if (family == KnownFamily::rains) {
        if (n < 5 || n % 2 == 0)
            throw std::invalid_argument("rains family: need odd n >= 5");
        int a = (n - 1) / 2;
        return BigInt(3) << (2 * a - 3);
    }
    // smolin: n = 4a + 2b + 3 with b in {0,1}, a >= 1
    int rem = (n - 3) % 4;
    int a, b;
    if (rem == 0) {
        a = (n - 3) / 4;
        b = 0;
    } else if (rem == 2) {
        a = (n - 5) / 4;
        b = 1;
    } else {
        throw std::invalid_argument("smolin family: n must be 4a+2b+3, b in {0,1}");
    }
    if (a < 1) throw std::invalid_argument("smolin family: need a >= 1, i.e. n >= 7");
    BigInt total = 0;
    for (int i = 0; i <= a; ++i) total += binomial(n, 2 * i + b);
    return total;
}

} // namespace cws
