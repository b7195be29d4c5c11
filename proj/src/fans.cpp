#include "toric/fans.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string set_str(const RaySet& s)
{
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i] + 1;
    os << "}";
    return os.str();
}

bool subset(const RaySet& a, const RaySet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

Cone Fan::cone(const RaySet& s) const
{
    IntMatrix G(n_, static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        G.col(i) = rays_.col(s[i]);
    return Cone::from_generators(G, n_);
}

int Fan::cone_dim(const RaySet& s) const
{
    IntMatrix G(n_, static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        G.col(i) = rays_.col(s[i]);
    return rank(G);
}

bool Fan::has_cone(const RaySet& s) const
{
    return std::find(all_.begin(), all_.end(), s) != all_.end();
}

Fan Fan::make(const IntMatrix& rays, const std::vector<RaySet>& max_cones, int ambient)
{
    if (rays.cols() > 0 && rays.rows() != ambient)
        throw DomainError("fan: ray dimension differs from ambient dimension");
    Fan f;
    f.n_ = ambient;
    std::vector<IntVector> uniq;
    std::vector<int> remap(rays.cols());
    for (int j = 0; j < rays.cols(); ++j) {
        IntVector r = primitive(rays.col(j));
        if (content(r) == 0)
            throw DomainError("fan: zero ray " + std::to_string(j + 1));
        int found = -1;
        for (size_t k = 0; k < uniq.size(); ++k)
            if (equal(uniq[k], r))
                found = static_cast<int>(k);
        if (found < 0) {
            found = static_cast<int>(uniq.size());
            uniq.push_back(r);
        }
        remap[j] = found;
    }
    f.rays_ = from_columns(uniq, ambient);
    std::vector<RaySet> cones;
    for (const RaySet& c : max_cones) {
        RaySet s;
        for (int i : c) {
            if (i < 0 || i >= rays.cols())
                throw DomainError("fan: ray index out of range");
            s.push_back(remap[i]);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        cones.push_back(s);
    }
    for (const RaySet& s : cones) {
        Cone c = f.cone(s);
        if (!c.is_pointed())
            throw DomainError("fan: cone " + set_str(s) + " is not pointed");
        if (c.num_rays() != static_cast<int>(s.size()))
            throw DomainError("fan: cone " + set_str(s) + " lists a ray that is not extreme");
    }
    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = i + 1; j < cones.size(); ++j) {
            try {
                separating_character(f.cone(cones[i]), f.cone(cones[j]));
            } catch (const DomainError&) {
                throw DomainError("fan: cones " + set_str(cones[i]) + " and " + set_str(cones[j]) +
                                  " do not meet in a common face");
            }
        }
    for (size_t i = 0; i < cones.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < cones.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (subset(cones[i], cones[j]) && (cones[i] != cones[j] || j < i))
                redundant = true;
        }
        if (!redundant)
            f.max_.push_back(cones[i]);
    }
    std::set<RaySet> all;
    for (const RaySet& s : f.max_) {
        Cone c = f.cone(s);
        for (const auto& local : face_ray_sets(c)) {
            RaySet g;
            for (int i : local)
                g.push_back(s[i]);
            std::sort(g.begin(), g.end());
            all.insert(g);
        }
    }
    if (f.max_.empty())
        all.insert(RaySet{});
    f.all_.assign(all.begin(), all.end());
    std::stable_sort(f.all_.begin(), f.all_.end(), [&f](const RaySet& a, const RaySet& b) {
        int da = f.cone_dim(a), db = f.cone_dim(b);
        return da != db ? da < db : a < b;
    });
    return f;
}

Fan normal_fan(const LatticePolytope& P)
{
    if (!P.is_full_dim())
        throw DomainError("normal_fan: polytope is not full-dimensional");
    std::vector<RaySet> cones;
    for (int v = 0; v < P.num_vertices(); ++v)
        cones.push_back(P.facets_at_vertex(v));
    return Fan::make(P.facet_normals(), cones, P.ambient_dim());
}

bool is_smooth(const Fan& fan)
{
    for (int i = 0; i < fan.num_maximal_cones(); ++i)
        if (!fan.maximal_cone(i).is_smooth())
            return false;
    return true;
}

bool is_simplicial(const Fan& fan)
{
    for (int i = 0; i < fan.num_maximal_cones(); ++i)
        if (!fan.maximal_cone(i).is_simplicial())
            return false;
    return true;
}

namespace {

/**
 * True when the d-dimensional cones in `cells` cover `region` (a d-dimensional
 * cone, or all of R^n when region is null): every (d-1)-face is shared by
 * exactly two cells unless it lies on the boundary of the region.
 */
bool covers(const Fan& fan, const std::vector<RaySet>& cells, const Cone* region, int d)
{
    if (d == 0)
        return true;
    if (cells.empty())
        return false;
    std::map<RaySet, int> count;
    for (const RaySet& s : cells) {
        Cone c = fan.cone(s);
        for (int f = 0; f < c.facets().cols(); ++f) {
            RaySet g;
            for (int i : c.tight_rays(f))
                g.push_back(s[i]);
            ++count[g];
        }
    }
    for (const auto& [face, k] : count) {
        bool boundary = false;
        if (region) {
            for (int f = 0; f < region->facets().cols() && !boundary; ++f) {
                bool all = true;
                for (int i : face)
                    all = all && dot(region->facets().col(f), fan.rays().col(i)) == 0;
                boundary = all;
            }
        }
        if (k != (boundary ? 1 : 2))
            return false;
    }
    return true;
}

} // namespace

bool is_complete(const Fan& fan)
{
    const int n = fan.ambient_dim();
    if (n == 0)
        return true;
    for (const RaySet& s : fan.maximal_cones())
        if (fan.cone_dim(s) != n)
            return false;
    return covers(fan, fan.maximal_cones(), nullptr, n);
}

Fan star_subdivision(const Fan& fan, int idx)
{
    if (idx < 0 || idx >= fan.num_maximal_cones())
        throw DomainError("star_subdivision: cone index out of range");
    const RaySet& s = fan.maximal_cones()[idx];
    Cone c = fan.cone(s);
    if (!c.is_smooth() || !c.is_full_dim())
        throw DomainError("star_subdivision: cone is not smooth and full-dimensional");
    const int n = fan.ambient_dim();
    const int k = fan.num_rays();
    IntMatrix R(n, k + 1);
    R.leftCols(k) = fan.rays();
    R.col(k) = c.interior_point();
    std::vector<RaySet> cones;
    for (int i = 0; i < fan.num_maximal_cones(); ++i) {
        if (i != idx) {
            cones.push_back(fan.maximal_cones()[i]);
            continue;
        }
        for (size_t drop = 0; drop < s.size(); ++drop) {
            RaySet t;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != drop)
                    t.push_back(s[j]);
            t.push_back(k);
            cones.push_back(t);
        }
    }
    return Fan::make(R, cones, n);
}

Fan product_fan(const Fan& a, const Fan& b)
{
    const int n = a.ambient_dim(), m = b.ambient_dim();
    const int ka = a.num_rays(), kb = b.num_rays();
    IntMatrix R = IntMatrix::Zero(n + m, ka + kb);
    R.block(0, 0, n, ka) = a.rays();
    R.block(n, ka, m, kb) = b.rays();
    std::vector<RaySet> cones;
    for (const RaySet& s : a.maximal_cones())
        for (const RaySet& t : b.maximal_cones()) {
            RaySet u = s;
            for (int i : t)
                u.push_back(ka + i);
            cones.push_back(u);
        }
    return Fan::make(R, cones, n + m);
}

std::optional<RaySet> cone_containing_relint(const Fan& fan, const IntVector& u)
{
    if (u.size() != fan.ambient_dim())
        throw DomainError("cone_containing_relint: dimension mismatch");
    for (const RaySet& s : fan.all_cones())
        if (fan.cone(s).in_relative_interior(u))
            return s;
    return std::nullopt;
}

StarQuotient star_quotient_fan(const Fan& fan, const RaySet& tau0)
{
    RaySet tau = tau0;
    std::sort(tau.begin(), tau.end());
    if (!fan.has_cone(tau))
        throw DomainError("star_quotient_fan: " + set_str(tau) + " is not a cone of the fan");
    const int n = fan.ambient_dim();
    IntMatrix T(n, static_cast<int>(tau.size()));
    for (size_t i = 0; i < tau.size(); ++i)
        T.col(i) = fan.rays().col(tau[i]);
    IntMatrix B = saturated_span_basis(T);
    const int k = static_cast<int>(B.cols());
    IntMatrix q;
    if (k == 0) {
        q = IntMatrix::Identity(n, n);
    } else {
        LatticeSplit sp = split_lattice(B);
        q = sp.Uinv.bottomRows(n - k);
    }
    std::vector<IntVector> rays;
    std::vector<RaySet> cones;
    auto index_of = [&](const IntVector& v) {
        for (size_t i = 0; i < rays.size(); ++i)
            if (equal(rays[i], v))
                return static_cast<int>(i);
        rays.push_back(v);
        return static_cast<int>(rays.size()) - 1;
    };
    for (const RaySet& s : fan.maximal_cones()) {
        if (!subset(tau, s))
            continue;
        RaySet img;
        for (int i : s)
            if (!std::binary_search(tau.begin(), tau.end(), i))
                img.push_back(index_of(primitive(q * fan.rays().col(i))));
        cones.push_back(img);
    }
    StarQuotient out;
    out.fan = Fan::make(from_columns(rays, n - k), cones, n - k);
    out.projection.matrix = q;
    return out;
}

std::vector<OrbitEntry> orbit_table(const Fan& fan)
{
    std::vector<OrbitEntry> out;
    const auto& all = fan.all_cones();
    for (const RaySet& s : all) {
        OrbitEntry e;
        e.cone = s;
        e.orbit_dim = fan.ambient_dim() - fan.cone_dim(s);
        for (size_t j = 0; j < all.size(); ++j)
            if (subset(s, all[j]))
                e.closure.push_back(static_cast<int>(j));
        out.push_back(e);
    }
    return out;
}

bool has_torus_factor(const Fan& fan)
{
    return rank(fan.rays()) < fan.ambient_dim();
}

std::optional<RaySet> image_cone(const LatticeMap& F, const Fan& target, const Cone& sigma)
{
    if (F.matrix.cols() != sigma.ambient_dim() || F.matrix.rows() != target.ambient_dim())
        throw DomainError("image_cone: map shape does not match the fans");
    auto s = cone_containing_relint(target, F.matrix * sigma.interior_point());
    if (!s)
        return std::nullopt;
    Cone c = target.cone(*s);
    for (int j = 0; j < sigma.num_rays(); ++j)
        if (!c.contains(IntVector(F.matrix * sigma.rays().col(j))))
            return std::nullopt;
    return s;
}

bool is_compatible(const LatticeMap& F, const Fan& source, const Fan& target)
{
    for (int i = 0; i < source.num_maximal_cones(); ++i)
        if (!image_cone(F, target, source.maximal_cone(i)))
            return false;
    return true;
}

bool is_refinement(const Fan& finer, const Fan& coarser)
{
    if (finer.ambient_dim() != coarser.ambient_dim())
        throw DomainError("is_refinement: ambient dimensions differ");
    std::vector<Cone> big;
    for (int i = 0; i < coarser.num_maximal_cones(); ++i)
        big.push_back(coarser.maximal_cone(i));
    for (int i = 0; i < finer.num_maximal_cones(); ++i) {
        Cone c = finer.maximal_cone(i);
        bool inside = false;
        for (const Cone& b : big)
            inside = inside || b.contains(c);
        if (!inside)
            return false;
    }
    for (const Cone& b : big) {
        std::vector<RaySet> cells;
        for (const RaySet& s : finer.all_cones())
            if (finer.cone_dim(s) == b.dim() && b.contains(finer.cone(s)))
                cells.push_back(s);
        if (!covers(finer, cells, &b, b.dim()))
            return false;
    }
    return true;
}

ChartTransition chart_transition(const Fan& fan, int i1, int i2)
{
    if (i1 < 0 || i2 < 0 || i1 >= fan.num_maximal_cones() || i2 >= fan.num_maximal_cones())
        throw DomainError("chart_transition: cone index out of range");
    Cone s1 = fan.maximal_cone(i1), s2 = fan.maximal_cone(i2);
    ChartTransition t;
    t.m = separating_character(s1, s2);
    t.source_basis = semigroup_generators(dual(s1));
    t.target_basis = semigroup_generators(dual(s2));
    IntVector dm = *semigroup_member(t.source_basis, t.m);
    t.expression.resize(t.target_basis.cols(), t.source_basis.cols());
    for (int j = 0; j < t.target_basis.cols(); ++j) {
        IntVector h = t.target_basis.col(j);
        Integer k = 0;
        for (int r = 0; r < s1.num_rays(); ++r) {
            Integer a = dot(s1.rays().col(r), h), b = dot(s1.rays().col(r), t.m);
            if (b > 0) {
                Integer need = a >= 0 ? Integer(0) : Integer((-a + b - 1) / b);
                k = std::max(k, need);
            } else if (a < 0) {
                throw DomainError("chart_transition: generator does not extend across the common face");
            }
        }
        auto c = semigroup_member(t.source_basis, IntVector(h + t.m * k));
        if (!c)
            throw std::logic_error("chart_transition: decomposition failed");
        t.expression.row(j) = (*c - dm * k).transpose();
    }
    return t;
}

} // namespace toric
