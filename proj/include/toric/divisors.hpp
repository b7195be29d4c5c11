#ifndef TORIC_DIVISORS_HPP
#define TORIC_DIVISORS_HPP

#include <memory>

#include "toric/fans.hpp"

namespace toric {

typedef std::shared_ptr<const Fan> FanPtr;

inline FanPtr share(Fan fan)
{
    return std::make_shared<const Fan>(std::move(fan));
}

/** D = sum a_i D_i over the rays of the fan. */
struct TorusInvariantDivisor
{
    FanPtr fan;
    IntVector coeffs;

    TorusInvariantDivisor operator+(const TorusInvariantDivisor& E) const;
    TorusInvariantDivisor operator-(const TorusInvariantDivisor& E) const;
    TorusInvariantDivisor operator*(long l) const;
    bool operator==(const TorusInvariantDivisor& E) const;
    std::string to_string() const;
};

TorusInvariantDivisor divisor(const FanPtr& fan, const IntVector& coeffs);
/** The prime divisor D_i (0-based). */
TorusInvariantDivisor prime_divisor(const FanPtr& fan, int i);

/** k x n matrix whose rows are the rays. */
IntMatrix ray_rows(const Fan& fan);

TorusInvariantDivisor principal_divisor(const FanPtr& fan, const IntVector& m);

struct ClassGroup
{
    Cokernel presentation;
    /** Set when the rays do not span; the sequence is then not left exact. */
    bool torus_factor = false;

    const AbelianGroup& group() const { return presentation.group; }
    IntVector class_of(const IntVector& a) const { return presentation.coordinates(a); }
    IntVector class_of(const TorusInvariantDivisor& D) const { return class_of(D.coeffs); }
};

ClassGroup class_group(const Fan& fan);

/** Characters m_sigma per maximal cone with <u_rho, m_sigma> + a_rho = 0. */
struct CartierData
{
    std::vector<IntVector> characters;
};

struct CartierCheck
{
    std::optional<CartierData> data;
    /** Index of the first maximal cone without a solution, or -1. */
    int failing_cone = -1;

    bool is_cartier() const { return data.has_value(); }
};

CartierCheck is_cartier(const TorusInvariantDivisor& D);

/** Least l > 0 with l*D Cartier; nullopt if no multiple is Cartier. */
std::optional<Integer> minimal_cartier_multiple(const TorusInvariantDivisor& D);

AbelianGroup picard_group(const Fan& fan);

/** P_D = {m : F^T m + a >= 0}; inequalities are kept as given, one per ray. */
struct DivisorPolyhedron
{
    IntMatrix normals;
    IntVector offsets;
    bool bounded = false;
    bool empty = false;
    /** Vertices (columns), only when bounded. */
    RatMatrix vertices;
    /** Lattice points in lexicographic order, only when bounded. */
    IntMatrix lattice_points;
};

DivisorPolyhedron divisor_polyhedron(const TorusInvariantDivisor& D);

/** Exponents m of the sections chi^m; throws if P_D is unbounded. */
IntMatrix global_sections(const TorusInvariantDivisor& D);

/** a_j = -min over P of <u_j, .>; P must be a Minkowski summand of a polytope with fan Sigma. */
TorusInvariantDivisor polytope_divisor(const LatticePolytope& P, const FanPtr& fan);

/** m with D - E = div(chi^m), if any. */
std::optional<IntVector> linearly_equivalent(const TorusInvariantDivisor& D,
                                             const TorusInvariantDivisor& E);

} // namespace toric

#endif
