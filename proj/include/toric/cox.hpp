#ifndef TORIC_COX_HPP
#define TORIC_COX_HPP

#include "toric/divisors.hpp"
#include "toric/ideals.hpp"

namespace toric {

/** Cox ring data; variable x_i corresponds to ray i. */
struct CoxData
{
    FanPtr fan;
    ClassGroup class_group;
    /** Class of D_i per variable (columns). */
    IntMatrix weights;
    std::vector<Monomial> irrelevant;
    std::vector<RaySet> primitive_collections;
};

/** Throws DomainError if the fan has a torus factor. */
CoxData cox_data(const FanPtr& fan);

/** x^sigma-hat per maximal cone, duplicates removed. */
std::vector<Monomial> irrelevant_ideal(const Fan& fan);

/** Minimal subsets of rays not contained in any cone, in lexicographic order. */
std::vector<RaySet> primitive_collections(const Fan& fan);

/** Class of x^a, i.e. of sum a_i D_i. */
IntVector degree(const CoxData& cox, const Monomial& a);

/** Monomials x^(F^T m + a) for m in P_D. */
std::vector<Monomial> graded_piece(const TorusInvariantDivisor& D);

/** t^m -> x^(F^T m + a); throws if an exponent lies outside P_D. */
Polynomial homogenize(const LaurentPolynomial& f, const TorusInvariantDivisor& D);

/** f / x^(F^T v + a) in the chart of maximal cone sigma, with v = m_sigma. */
LaurentPolynomial dehomogenize(const Polynomial& f, const TorusInvariantDivisor& D, int sigma);

/** Cones (as ray sets) that are not simplicial. */
std::vector<RaySet> non_simplicial_cones(const Fan& fan);

} // namespace toric

#endif
