#ifndef TORIC_TESTS_COMMON_HPP
#define TORIC_TESTS_COMMON_HPP

#include <random>

#include <gtest/gtest.h>

#include "toric/counting.hpp"

namespace toric::testing {

inline FanPtr fan_p2()
{
    return share(Fan::make(columns({{1, 0}, {0, 1}, {-1, -1}}), {{0, 1}, {0, 2}, {1, 2}}, 2));
}

inline FanPtr fan_p1p1()
{
    return share(Fan::make(columns({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
                           {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2));
}

inline FanPtr fan_hirzebruch()
{
    return share(Fan::make(columns({{1, 0}, {0, 1}, {-1, 2}, {0, -1}}),
                           {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2));
}

inline FanPtr fan_singular_quad()
{
    return share(Fan::make(columns({{1, 2}, {1, 0}, {-3, -2}, {0, 1}}),
                           {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2));
}

inline FanPtr fan_diamond()
{
    return share(Fan::make(columns({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
                           {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 2));
}

inline FanPtr fan_blowup()
{
    return share(Fan::make(columns({{1, 0}, {0, 1}, {1, 1}}), {{0, 2}, {1, 2}}, 2));
}

inline IntMatrix pentagon_points()
{
    return columns({{0, 0}, {1, 0}, {0, 1}, {2, 1}, {1, 2}});
}

inline IntMatrix permutations(int n)
{
    std::vector<long> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i + 1;
    std::vector<std::vector<long>> out;
    do
        out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return columns(out);
}

inline LaurentPolynomial laurent(const std::vector<std::vector<long>>& exps,
                                 const std::vector<long>& coeffs = {})
{
    LaurentPolynomial f;
    for (size_t i = 0; i < exps.size(); ++i) {
        IntVector e(static_cast<int>(exps[i].size()));
        for (size_t j = 0; j < exps[i].size(); ++j)
            e(j) = exps[i][j];
        f.add_term(e, coeffs.empty() ? Rational(1) : Rational(coeffs[i]));
    }
    return f;
}

inline IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            M(i, j) = d(rng);
    return M;
}

/** Random lattice polygon with nonempty interior. */
inline LatticePolytope random_polygon(std::mt19937& rng, int points = 5, int box = 4)
{
    while (true) {
        LatticePolytope P = hull(random_matrix(rng, 2, points, -box, box));
        if (P.is_full_dim())
            return P;
    }
}

inline std::vector<Polynomial> parse_all(const std::vector<std::string>& texts, int nvars)
{
    std::vector<Polynomial> out;
    for (const std::string& t : texts)
        out.push_back(Polynomial::parse(t, nvars));
    return out;
}

} // namespace toric::testing

#endif
