#ifndef TORIC_COUNTING_HPP
#define TORIC_COUNTING_HPP

#include "toric/cox.hpp"

namespace toric {

struct KushnirenkoCount
{
    Integer degree;
    Integer normalized_volume;
    /** Index of the affine lattice of A in the saturated lattice of its span. */
    Integer index;
};

/** Columns of A are the exponents. */
KushnirenkoCount kushnirenko_count(const IntMatrix& A);

/** Laurent polynomials f_1, ..., f_n in n variables. */
struct SparseSystem
{
    int n = 0;
    std::vector<LaurentPolynomial> equations;

    IntMatrix support(int i) const;
};

struct CountReport
{
    Integer bkk;
    /** Set when every support has nonnegative exponents. */
    std::optional<Integer> bezout;
    /** Set when all supports coincide. */
    std::optional<Integer> kushnirenko;
    /** Index of the lattice spanned by differences within each support. */
    Integer lattice_index;
    FanPtr fan;
    std::vector<TorusInvariantDivisor> divisors;
    std::vector<Polynomial> homogenized;
    /** Per verification point: whether every homogenized equation vanishes there. */
    std::vector<bool> verified;
};

/**
 * The fan defaults to the normal fan of the Minkowski sum of the Newton
 * polytopes; a supplied fan must refine the normal fan of each of them.
 */
CountReport bkk_count(const SparseSystem& system, const FanPtr& fan = nullptr,
                      const std::vector<std::vector<Rational>>& points = {});

Integer bezout_count(const std::vector<Integer>& degrees);

} // namespace toric

#endif
