#ifndef TORIC_POLYTOPES_HPP
#define TORIC_POLYTOPES_HPP

#include "toric/cones.hpp"

namespace toric {

/**
 * Lattice polytope given by its vertices (lexicographic order) and a minimal
 * H-representation <u, m> + a >= 0 with primitive inward normals u.
 * Lower-dimensional polytopes also carry affine equations <u, m> + a = 0.
 */
class LatticePolytope
{
  public:
    LatticePolytope() = default;

    static LatticePolytope hull(const IntMatrix& points);

    int ambient_dim() const { return n_; }
    int dim() const { return dim_; }
    bool is_full_dim() const { return dim_ == n_; }
    const IntMatrix& vertices() const { return vertices_; }
    int num_vertices() const { return static_cast<int>(vertices_.cols()); }
    const IntMatrix& facet_normals() const { return normals_; }
    const std::vector<Integer>& facet_offsets() const { return offsets_; }
    int num_facets() const { return static_cast<int>(normals_.cols()); }
    const IntMatrix& equation_normals() const { return eq_normals_; }
    const std::vector<Integer>& equation_offsets() const { return eq_offsets_; }
    /** The cone over P x {1}; its rays are the homogenized vertices in order. */
    const Cone& homogenized_cone() const { return cone_; }

    bool contains(const IntVector& m) const;
    /** Facet indices containing vertex v. */
    std::vector<int> facets_at_vertex(int v) const;
    bool operator==(const LatticePolytope& other) const;

  private:
    int n_ = 0;
    int dim_ = -1;
    IntMatrix vertices_;
    IntMatrix normals_;
    std::vector<Integer> offsets_;
    IntMatrix eq_normals_;
    std::vector<Integer> eq_offsets_;
    Cone cone_;
};

inline LatticePolytope hull(const IntMatrix& points)
{
    return LatticePolytope::hull(points);
}

/** Affine lattice map c -> origin + basis * c onto the saturated affine span. */
struct ProjectedPolytope
{
    LatticePolytope polytope;
    IntVector origin;
    IntMatrix basis;

    IntVector lift(const IntVector& c) const { return origin + basis * c; }
};

ProjectedPolytope project_full(const LatticePolytope& P);

/** All lattice points, sorted lexicographically (as columns). */
IntMatrix lattice_points(const LatticePolytope& P);
Integer count_lattice_points(const LatticePolytope& P);

LatticePolytope dilate(const LatticePolytope& P, long k);
LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q);

/** Euclidean volume in the ambient space; zero for lower-dimensional P. */
Rational volume(const LatticePolytope& P);
/** dim! times the volume measured in the saturated lattice of the affine span. */
Integer normalized_volume(const LatticePolytope& P);
Integer mixed_volume(const std::vector<LatticePolytope>& Ps);

RationalPolynomial ehrhart(const LatticePolytope& P);

LatticePolytope face_in_direction(const LatticePolytope& P, const IntVector& u);

bool is_normal(const LatticePolytope& P);
bool is_very_ample(const LatticePolytope& P);
bool is_smooth(const LatticePolytope& P);

/** Convex hull of the exponent columns. */
LatticePolytope newton_polytope(const IntMatrix& exponents);

/** Cartesian product P x Q. */
LatticePolytope product(const LatticePolytope& P, const LatticePolytope& Q);

/** The standard simplex scaled by k in dimension n. */
LatticePolytope simplex(int n, long k = 1);

} // namespace toric

#endif
