#ifndef TORIC_ZLATTICE_HPP
#define TORIC_ZLATTICE_HPP

#include <optional>

#include "toric/scalar.hpp"

namespace toric {

struct HermiteForm
{
    IntMatrix H;
    IntMatrix U;
    int rank = 0;
};

struct SmithForm
{
    IntMatrix S;
    IntMatrix P;
    IntMatrix Q;
    int rank = 0;

    /** The nonzero diagonal entries d_1 | d_2 | ... */
    std::vector<Integer> diagonal() const;
};

/** Finitely generated abelian group Z^free_rank + sum Z/d_i. */
struct AbelianGroup
{
    int free_rank = 0;
    std::vector<Integer> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool operator==(const AbelianGroup& other) const = default;
    std::string to_string() const;
};

struct Cokernel
{
    AbelianGroup group;
    /** Rows map a vector of Z^rows to coordinates before reduction. */
    IntMatrix proj;
    /** Moduli per coordinate; 0 for free coordinates. */
    std::vector<Integer> moduli;

    /** Canonical coordinates: free part first, then torsion residues in [0, d). */
    IntVector coordinates(const IntVector& v) const;
};

struct RationalPolynomial
{
    /** coeffs[i] is the coefficient of x^i. */
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational operator()(const Rational& x) const;
    bool operator==(const RationalPolynomial& other) const = default;
    std::string to_string() const;
};

HermiteForm hnf(const IntMatrix& M);
SmithForm snf(const IntMatrix& M);

/** Saturated kernel lattice basis, as columns. */
IntMatrix kernel_basis(const IntMatrix& M);

Cokernel cokernel(const IntMatrix& M);

std::optional<IntVector> solve_integer(const IntMatrix& M, const IntVector& b);

/** Rational solution with free variables set to zero, if one exists. */
std::optional<RatVector> solve_rational(const RatMatrix& M, const RatVector& b);

/** Index of the lattice spanned by Msub in the lattice spanned by Msup; nullopt means infinite. */
std::optional<Integer> lattice_index(const IntMatrix& Msub, const IntMatrix& Msup);

/** Columns m_j - m_1. */
IntMatrix affine_lattice_gens(const IntMatrix& A);

/** Basis of span(M) intersected with the integer lattice, in Hermite form. */
IntMatrix saturated_span_basis(const IntMatrix& M);

/** A basis of the lattice spanned by the columns of M. */
IntMatrix lattice_basis(const IntMatrix& M);

/** Unimodular completion: returns U with U.leftCols(k) spanning the same lattice as the
 *  saturated basis B, together with U^{-1}. */
struct LatticeSplit
{
    IntMatrix U;
    IntMatrix Uinv;
    int k = 0;
};
LatticeSplit split_lattice(const IntMatrix& B);

IntMatrix inverse_unimodular(const IntMatrix& U);

/** Integer LLL reduction of the columns (delta = 3/4). */
IntMatrix lll_reduce(const IntMatrix& B);

RationalPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points);

} // namespace toric

#endif
