#ifndef TORIC_CONES_HPP
#define TORIC_CONES_HPP

#include <optional>

#include "toric/zlattice.hpp"

namespace toric {

/** Result of the double description method applied to {x : A x >= 0}. */
struct DoubleDescription
{
    /** Saturated basis of {x : A x = 0}. */
    IntMatrix lineality;
    /** Primitive extreme rays, orthogonal to the lineality space. */
    std::vector<IntVector> rays;
};

/** Constraints are the rows of A, inserted in row order. */
DoubleDescription double_description(const IntMatrix& A);

/**
 * Rational polyhedral cone in R^n. Stores both representations:
 * rays (modulo lineality) and lineality basis, inward facet normals and
 * a basis of the orthogonal complement of the span.
 */
class Cone
{
  public:
    Cone() = default;

    /** Cone generated by the columns of gens; redundant generators are allowed. */
    static Cone from_generators(const IntMatrix& gens, int ambient);
    /** {x : <f, x> >= 0 for columns f of ineqs, <e, x> = 0 for columns e of eqs}. */
    static Cone from_inequalities(const IntMatrix& ineqs, const IntMatrix& eqs, int ambient);

    int ambient_dim() const { return n_; }
    int dim() const { return n_ - static_cast<int>(equations_.cols()); }
    const IntMatrix& rays() const { return rays_; }
    const IntMatrix& lineality() const { return lineality_; }
    const IntMatrix& facets() const { return facets_; }
    const IntMatrix& equations() const { return equations_; }
    int num_rays() const { return static_cast<int>(rays_.cols()); }

    bool is_pointed() const { return lineality_.cols() == 0; }
    bool is_full_dim() const { return equations_.cols() == 0; }
    bool is_simplicial() const;
    bool is_smooth() const;

    bool contains(const IntVector& x) const;
    bool contains(const Cone& other) const;
    bool in_relative_interior(const IntVector& x) const;
    bool operator==(const Cone& other) const;

    /** Ray indices tight on facet f. */
    std::vector<int> tight_rays(int f) const;

    /** Sum of rays, a point of the relative interior. */
    IntVector interior_point() const;

  private:
    int n_ = 0;
    IntMatrix rays_;
    IntMatrix lineality_;
    IntMatrix facets_;
    IntMatrix equations_;
};

Cone cone(const IntMatrix& gens, int ambient);
Cone dual(const Cone& sigma);
Cone intersect(const Cone& a, const Cone& b);

/** Faces as ray-index sets (sorted), ordered by dimension then lexicographically. */
std::vector<std::vector<int>> face_ray_sets(const Cone& sigma);
std::vector<Cone> faces(const Cone& sigma);
Cone face_from_character(const Cone& sigma, const IntVector& m);
/** Subcone generated by a subset of rays plus the lineality space. */
Cone subcone(const Cone& sigma, const std::vector<int>& ray_indices);

/** Primitive rays; throws for non-pointed cones. */
IntMatrix rays(const Cone& sigma);

/** Placing triangulation of a pointed cone, as index sets into rays(sigma). */
std::vector<std::vector<int>> triangulate(const Cone& sigma);

/**
 * Irreducible elements of sigma ∩ Z^n. Rays come first in ray order, the
 * remaining elements follow in lexicographic order.
 */
IntMatrix hilbert_basis(const Cone& sigma);

/** Generators of sigma ∩ Z^n; Hilbert basis plus ± lineality basis if not pointed. */
IntMatrix semigroup_generators(const Cone& sigma);

std::optional<IntVector> semigroup_member(const IntMatrix& gens, const IntVector& target);

struct DistinguishedPoint
{
    IntMatrix generators;
    std::vector<int> values;
};

DistinguishedPoint distinguished_point(const Cone& sigma);
bool is_fixed_point(const Cone& sigma);

IntVector separating_character(const Cone& a, const Cone& b);

} // namespace toric

#endif
