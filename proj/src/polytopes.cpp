#include "toric/polytopes.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

long long to_ll(const Integer& x)
{
    if (abs(x) > Integer(1) << 60)
        throw DomainError("lattice point enumeration: coordinates too large");
    return x.convert_to<long long>();
}

} // namespace

LatticePolytope LatticePolytope::hull(const IntMatrix& points)
{
    if (points.cols() == 0)
        throw DomainError("hull: empty point set");
    const int n = static_cast<int>(points.rows());
    std::vector<IntVector> pts = column_list(points);
    std::sort(pts.begin(), pts.end(), LexLess());
    pts.erase(std::unique(pts.begin(), pts.end(), equal), pts.end());
    IntMatrix H(n + 1, static_cast<int>(pts.size()));
    for (size_t j = 0; j < pts.size(); ++j) {
        H.col(j).head(n) = pts[j];
        H(n, j) = 1;
    }
    LatticePolytope P;
    P.n_ = n;
    P.cone_ = Cone::from_generators(H, n + 1);
    P.dim_ = P.cone_.dim() - 1;
    const IntMatrix& R = P.cone_.rays();
    P.vertices_ = R.topRows(n);
    if (P.dim_ > 0) {
        const IntMatrix& F = P.cone_.facets();
        P.normals_ = F.topRows(n);
        for (int j = 0; j < F.cols(); ++j)
            P.offsets_.push_back(F(n, j));
    } else {
        P.normals_ = IntMatrix(n, 0);
    }
    const IntMatrix& E = P.cone_.equations();
    P.eq_normals_ = E.topRows(n);
    for (int j = 0; j < E.cols(); ++j)
        P.eq_offsets_.push_back(E(n, j));
    return P;
}

bool LatticePolytope::contains(const IntVector& m) const
{
    for (int j = 0; j < eq_normals_.cols(); ++j)
        if (dot(eq_normals_.col(j), m) + eq_offsets_[j] != 0)
            return false;
    for (int j = 0; j < normals_.cols(); ++j)
        if (dot(normals_.col(j), m) + offsets_[j] < 0)
            return false;
    return true;
}

std::vector<int> LatticePolytope::facets_at_vertex(int v) const
{
    std::vector<int> out;
    for (int j = 0; j < normals_.cols(); ++j)
        if (dot(normals_.col(j), vertices_.col(v)) + offsets_[j] == 0)
            out.push_back(j);
    return out;
}

bool LatticePolytope::operator==(const LatticePolytope& other) const
{
    if (n_ != other.n_ || vertices_.cols() != other.vertices_.cols())
        return false;
    for (int j = 0; j < vertices_.cols(); ++j)
        if (!equal(vertices_.col(j), other.vertices_.col(j)))
            return false;
    return true;
}

ProjectedPolytope project_full(const LatticePolytope& P)
{
    ProjectedPolytope out;
    const int n = P.ambient_dim();
    if (P.is_full_dim()) {
        out.polytope = P;
        out.origin = IntVector::Zero(n);
        out.basis = IntMatrix::Identity(n, n);
        return out;
    }
    out.origin = P.vertices().col(0);
    IntMatrix D(n, P.num_vertices());
    for (int j = 0; j < P.num_vertices(); ++j)
        D.col(j) = P.vertices().col(j) - out.origin;
    out.basis = saturated_span_basis(D);
    IntMatrix C(out.basis.cols(), D.cols());
    for (int j = 0; j < D.cols(); ++j)
        C.col(j) = *solve_integer(out.basis, D.col(j));
    out.polytope = LatticePolytope::hull(C);
    return out;
}

namespace {

/** Odometer enumeration over the bounding box of a full-dimensional polytope. */
template <typename Visit>
void enumerate_box(const LatticePolytope& P, Visit visit)
{
    const int n = P.ambient_dim();
    if (n == 0) {
        visit(std::vector<long long>{});
        return;
    }
    std::vector<long long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Integer a = P.vertices()(i, 0), b = a;
        for (int j = 1; j < P.num_vertices(); ++j) {
            a = std::min(a, Integer(P.vertices()(i, j)));
            b = std::max(b, Integer(P.vertices()(i, j)));
        }
        lo[i] = to_ll(a);
        hi[i] = to_ll(b);
    }
    const int f = P.num_facets();
    std::vector<std::vector<long long>> U(f, std::vector<long long>(n));
    std::vector<long long> a(f);
    for (int j = 0; j < f; ++j) {
        for (int i = 0; i < n; ++i)
            U[j][i] = to_ll(P.facet_normals()(i, j));
        a[j] = to_ll(P.facet_offsets()[j]);
    }
    std::vector<long long> x = lo;
    while (true) {
        bool in = true;
        for (int j = 0; j < f && in; ++j) {
            long long s = a[j];
            for (int i = 0; i < n; ++i)
                s += U[j][i] * x[i];
            in = s >= 0;
        }
        if (in)
            visit(x);
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++x[i] <= hi[i])
                break;
            x[i] = lo[i];
        }
        if (i < 0)
            break;
    }
}

} // namespace

IntMatrix lattice_points(const LatticePolytope& P)
{
    ProjectedPolytope pr = project_full(P);
    std::vector<IntVector> pts;
    const int d = pr.polytope.ambient_dim();
    enumerate_box(pr.polytope, [&](const std::vector<long long>& x) {
        IntVector c(d);
        for (int i = 0; i < d; ++i)
            c(i) = x[i];
        pts.push_back(pr.lift(c));
    });
    std::sort(pts.begin(), pts.end(), LexLess());
    return from_columns(pts, P.ambient_dim());
}

Integer count_lattice_points(const LatticePolytope& P)
{
    ProjectedPolytope pr = project_full(P);
    long long count = 0;
    enumerate_box(pr.polytope, [&](const std::vector<long long>&) { ++count; });
    return count;
}

LatticePolytope dilate(const LatticePolytope& P, long k)
{
    if (k < 0)
        throw DomainError("dilate: negative factor");
    return LatticePolytope::hull(P.vertices() * Integer(k));
}

LatticePolytope minkowski_sum(const LatticePolytope& P, const LatticePolytope& Q)
{
    if (P.ambient_dim() != Q.ambient_dim())
        throw DomainError("minkowski_sum: ambient dimensions differ");
    IntMatrix S(P.ambient_dim(), P.num_vertices() * Q.num_vertices());
    int c = 0;
    for (int i = 0; i < P.num_vertices(); ++i)
        for (int j = 0; j < Q.num_vertices(); ++j)
            S.col(c++) = P.vertices().col(i) + Q.vertices().col(j);
    return LatticePolytope::hull(S);
}

Integer normalized_volume(const LatticePolytope& P)
{
    ProjectedPolytope pr = project_full(P);
    const Cone& C = pr.polytope.homogenized_cone();
    Integer total = 0;
    for (const auto& s : triangulate(C)) {
        IntMatrix M(C.ambient_dim(), static_cast<int>(s.size()));
        for (size_t i = 0; i < s.size(); ++i)
            M.col(i) = C.rays().col(s[i]);
        total += abs(determinant(M));
    }
    return total;
}

Rational volume(const LatticePolytope& P)
{
    if (!P.is_full_dim())
        return 0;
    Integer fact = 1;
    for (int i = 2; i <= P.ambient_dim(); ++i)
        fact *= i;
    return Rational(normalized_volume(P)) / Rational(fact);
}

Integer mixed_volume(const std::vector<LatticePolytope>& Ps)
{
    const int n = static_cast<int>(Ps.size());
    for (const auto& P : Ps)
        if (P.ambient_dim() != n)
            throw DomainError("mixed_volume: need exactly n polytopes in R^n");
    Rational mv = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        LatticePolytope S;
        bool first = true;
        int size = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                S = first ? Ps[i] : minkowski_sum(S, Ps[i]);
                first = false;
                ++size;
            }
        Rational v = volume(S);
        mv += ((n - size) % 2 == 0) ? v : Rational(-v);
    }
    if (denominator(mv) != 1)
        throw std::logic_error("mixed_volume: non-integral result");
    return numerator(mv);
}

RationalPolynomial ehrhart(const LatticePolytope& P)
{
    LatticePolytope Q = project_full(P).polytope;
    std::vector<std::pair<Integer, Rational>> pts;
    for (int k = 0; k <= Q.dim(); ++k)
        pts.emplace_back(Integer(k), Rational(count_lattice_points(dilate(Q, k))));
    return interpolate(pts);
}

LatticePolytope face_in_direction(const LatticePolytope& P, const IntVector& u)
{
    Integer best;
    std::vector<IntVector> keep;
    for (int j = 0; j < P.num_vertices(); ++j) {
        Integer v = dot(u, P.vertices().col(j));
        if (keep.empty() || v < best) {
            best = v;
            keep.clear();
        }
        if (v == best)
            keep.push_back(P.vertices().col(j));
    }
    return LatticePolytope::hull(from_columns(keep, P.ambient_dim()));
}

namespace {

std::set<IntVector, LexLess> point_set(const LatticePolytope& P)
{
    IntMatrix L = lattice_points(P);
    std::set<IntVector, LexLess> s;
    for (int j = 0; j < L.cols(); ++j)
        s.insert(L.col(j));
    return s;
}

} // namespace

bool is_normal(const LatticePolytope& P)
{
    LatticePolytope Q = project_full(P).polytope;
    std::set<IntVector, LexLess> base = point_set(Q);
    for (int k = 1; k <= Q.dim() - 1; ++k) {
        std::set<IntVector, LexLess> kq = point_set(dilate(Q, k));
        std::set<IntVector, LexLess> sum;
        for (const IntVector& a : base)
            for (const IntVector& b : kq)
                sum.insert(IntVector(a + b));
        if (sum.size() != point_set(dilate(Q, k + 1)).size())
            return false;
    }
    return true;
}

bool is_very_ample(const LatticePolytope& P)
{
    LatticePolytope Q = project_full(P).polytope;
    const int d = Q.ambient_dim();
    IntMatrix pts = lattice_points(Q);
    for (int v = 0; v < Q.num_vertices(); ++v) {
        IntMatrix gens(d, pts.cols());
        std::set<IntVector, LexLess> gs;
        for (int j = 0; j < pts.cols(); ++j) {
            gens.col(j) = pts.col(j) - Q.vertices().col(v);
            gs.insert(gens.col(j));
        }
        IntMatrix hb = hilbert_basis(Cone::from_generators(gens, d));
        for (int j = 0; j < hb.cols(); ++j) {
            if (gs.count(hb.col(j)))
                continue;
            if (!semigroup_member(gens, hb.col(j)))
                return false;
        }
    }
    return true;
}

bool is_smooth(const LatticePolytope& P)
{
    LatticePolytope Q = project_full(P).polytope;
    const int d = Q.ambient_dim();
    for (int v = 0; v < Q.num_vertices(); ++v) {
        std::vector<IntVector> normals;
        for (int f : Q.facets_at_vertex(v))
            normals.push_back(Q.facet_normals().col(f));
        if (!Cone::from_generators(from_columns(normals, d), d).is_smooth())
            return false;
    }
    return true;
}

LatticePolytope newton_polytope(const IntMatrix& exponents)
{
    if (exponents.cols() == 0)
        throw DomainError("newton_polytope: empty support");
    return LatticePolytope::hull(exponents);
}

LatticePolytope product(const LatticePolytope& P, const LatticePolytope& Q)
{
    const int n = P.ambient_dim(), m = Q.ambient_dim();
    IntMatrix S(n + m, P.num_vertices() * Q.num_vertices());
    int c = 0;
    for (int i = 0; i < P.num_vertices(); ++i)
        for (int j = 0; j < Q.num_vertices(); ++j) {
            S.col(c).head(n) = P.vertices().col(i);
            S.col(c).tail(m) = Q.vertices().col(j);
            ++c;
        }
    return LatticePolytope::hull(S);
}

LatticePolytope simplex(int n, long k)
{
    IntMatrix S = IntMatrix::Zero(n, n + 1);
    for (int i = 0; i < n; ++i)
        S(i, i + 1) = k;
    return LatticePolytope::hull(S);
}

} // namespace toric
