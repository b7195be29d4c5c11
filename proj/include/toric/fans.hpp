#ifndef TORIC_FANS_HPP
#define TORIC_FANS_HPP

#include "toric/polytopes.hpp"

namespace toric {

typedef std::vector<int> RaySet;

/**
 * Fan given by primitive rays (columns, input order after deduplication) and
 * maximal cones as sorted ray-index sets (0-based internally).
 */
class Fan
{
  public:
    Fan() = default;

    /** Validates pointedness and the common-face property; throws DomainError. */
    static Fan make(const IntMatrix& rays, const std::vector<RaySet>& max_cones, int ambient);

    int ambient_dim() const { return n_; }
    const IntMatrix& rays() const { return rays_; }
    int num_rays() const { return static_cast<int>(rays_.cols()); }
    const std::vector<RaySet>& maximal_cones() const { return max_; }
    int num_maximal_cones() const { return static_cast<int>(max_.size()); }

    Cone cone(const RaySet& s) const;
    Cone maximal_cone(int i) const { return cone(max_[i]); }
    /** Every cone of the fan, by dimension then lexicographically. */
    const std::vector<RaySet>& all_cones() const { return all_; }
    int cone_dim(const RaySet& s) const;
    bool has_cone(const RaySet& s) const;

  private:
    int n_ = 0;
    IntMatrix rays_;
    std::vector<RaySet> max_;
    std::vector<RaySet> all_;
};

struct LatticeMap
{
    IntMatrix matrix;
};

Fan normal_fan(const LatticePolytope& P);

bool is_smooth(const Fan& fan);
bool is_simplicial(const Fan& fan);
bool is_complete(const Fan& fan);

Fan star_subdivision(const Fan& fan, int max_cone);
Fan product_fan(const Fan& a, const Fan& b);

std::optional<RaySet> cone_containing_relint(const Fan& fan, const IntVector& u);

struct StarQuotient
{
    Fan fan;
    LatticeMap projection;
};
StarQuotient star_quotient_fan(const Fan& fan, const RaySet& tau);

struct OrbitEntry
{
    RaySet cone;
    int orbit_dim = 0;
    /** Indices (into the table) of orbits lying in the closure of this one. */
    std::vector<int> closure;
};
std::vector<OrbitEntry> orbit_table(const Fan& fan);

bool has_torus_factor(const Fan& fan);

std::optional<RaySet> image_cone(const LatticeMap& F, const Fan& target, const Cone& sigma);
bool is_compatible(const LatticeMap& F, const Fan& source, const Fan& target);

bool is_refinement(const Fan& finer, const Fan& coarser);

struct ChartTransition
{
    IntVector m;
    /** Hilbert basis of the dual of the first cone (columns). */
    IntMatrix source_basis;
    /** Hilbert basis of the dual of the second cone (columns). */
    IntMatrix target_basis;
    /** Row i: exponents of target generator i in the source generators. */
    IntMatrix expression;
};
ChartTransition chart_transition(const Fan& fan, int sigma1, int sigma2);

} // namespace toric

#endif
