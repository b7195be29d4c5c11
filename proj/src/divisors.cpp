#include "toric/divisors.hpp"

#include <algorithm>

namespace toric {

namespace {

void same_fan(const TorusInvariantDivisor& D, const TorusInvariantDivisor& E)
{
    if (D.fan != E.fan && !(D.fan && E.fan && D.fan->rays() == E.fan->rays() &&
                            D.fan->maximal_cones() == E.fan->maximal_cones()))
        throw DomainError("divisors live on different fans");
}

IntMatrix cone_rows(const Fan& fan, const RaySet& s)
{
    IntMatrix M(static_cast<int>(s.size()), fan.ambient_dim());
    for (size_t i = 0; i < s.size(); ++i)
        M.row(i) = fan.rays().col(s[i]).transpose();
    return M;
}

IntVector restrict_neg(const IntVector& a, const RaySet& s)
{
    IntVector b(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        b(i) = -a(s[i]);
    return b;
}

} // namespace

TorusInvariantDivisor TorusInvariantDivisor::operator+(const TorusInvariantDivisor& E) const
{
    same_fan(*this, E);
    return {fan, IntVector(coeffs + E.coeffs)};
}

TorusInvariantDivisor TorusInvariantDivisor::operator-(const TorusInvariantDivisor& E) const
{
    same_fan(*this, E);
    return {fan, IntVector(coeffs - E.coeffs)};
}

TorusInvariantDivisor TorusInvariantDivisor::operator*(long l) const
{
    return {fan, IntVector(coeffs * Integer(l))};
}

bool TorusInvariantDivisor::operator==(const TorusInvariantDivisor& E) const
{
    return fan == E.fan && coeffs == E.coeffs;
}

std::string TorusInvariantDivisor::to_string() const
{
    std::string out;
    for (int i = 0; i < coeffs.size(); ++i) {
        const Integer& c = coeffs(i);
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        Integer a = abs(c);
        if (a != 1)
            out += a.str() + "*";
        out += "D" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

TorusInvariantDivisor divisor(const FanPtr& fan, const IntVector& coeffs)
{
    if (coeffs.size() != fan->num_rays())
        throw DomainError("divisor: expected " + std::to_string(fan->num_rays()) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    return {fan, coeffs};
}

TorusInvariantDivisor prime_divisor(const FanPtr& fan, int i)
{
    IntVector a = IntVector::Zero(fan->num_rays());
    a(i) = 1;
    return {fan, a};
}

IntMatrix ray_rows(const Fan& fan)
{
    return fan.rays().transpose();
}

TorusInvariantDivisor principal_divisor(const FanPtr& fan, const IntVector& m)
{
    if (m.size() != fan->ambient_dim())
        throw DomainError("principal_divisor: character has wrong length");
    return {fan, IntVector(ray_rows(*fan) * m)};
}

ClassGroup class_group(const Fan& fan)
{
    ClassGroup out;
    IntMatrix Ft = ray_rows(fan);
    out.presentation = cokernel(Ft);
    out.torus_factor = rank(Ft) < fan.ambient_dim();
    return out;
}

CartierCheck is_cartier(const TorusInvariantDivisor& D)
{
    const Fan& fan = *D.fan;
    CartierCheck out;
    CartierData data;
    for (int s = 0; s < fan.num_maximal_cones(); ++s) {
        const RaySet& rs = fan.maximal_cones()[s];
        auto m = solve_integer(cone_rows(fan, rs), restrict_neg(D.coeffs, rs));
        if (!m) {
            out.failing_cone = s;
            return out;
        }
        data.characters.push_back(*m);
    }
    out.data = std::move(data);
    return out;
}

std::optional<Integer> minimal_cartier_multiple(const TorusInvariantDivisor& D)
{
    const Fan& fan = *D.fan;
    Integer l = 1;
    for (const RaySet& rs : fan.maximal_cones()) {
        SmithForm s = snf(cone_rows(fan, rs));
        IntVector c = s.P * restrict_neg(D.coeffs, rs);
        for (int i = 0; i < c.size(); ++i) {
            if (i < s.rank) {
                Integer d = abs(s.S(i, i));
                l = lcm_int(l, d / gcd(d, Integer(abs(c(i)))));
            } else if (c(i) != 0) {
                return std::nullopt;
            }
        }
    }
    return l;
}

AbelianGroup picard_group(const Fan& fan)
{
    const int n = fan.ambient_dim(), k = fan.num_rays();
    const int s = fan.num_maximal_cones();
    int rows = 0;
    for (const RaySet& rs : fan.maximal_cones())
        rows += static_cast<int>(rs.size());
    // Unknowns (a, m_1, ..., m_s); one equation <u_rho, m_sigma> + a_rho = 0 per incidence.
    IntMatrix E = IntMatrix::Zero(rows, k + s * n);
    int r = 0;
    for (int c = 0; c < s; ++c)
        for (int rho : fan.maximal_cones()[c]) {
            E(r, rho) = 1;
            E.block(r, k + c * n, 1, n) = fan.rays().col(rho).transpose();
            ++r;
        }
    IntMatrix K = kernel_basis(E);
    IntMatrix B = lattice_basis(IntMatrix(K.topRows(k)));
    IntMatrix Ft = ray_rows(fan);
    IntMatrix C(B.cols(), n);
    for (int j = 0; j < n; ++j) {
        auto x = solve_integer(B, IntVector(Ft.col(j)));
        if (!x)
            throw std::logic_error("picard_group: principal divisor is not Cartier");
        C.col(j) = *x;
    }
    return cokernel(C).group;
}

DivisorPolyhedron divisor_polyhedron(const TorusInvariantDivisor& D)
{
    const Fan& fan = *D.fan;
    const int n = fan.ambient_dim(), k = fan.num_rays();
    DivisorPolyhedron out;
    out.normals = fan.rays();
    out.offsets = D.coeffs;

    Cone rec = Cone::from_inequalities(fan.rays(), IntMatrix(n, 0), n);
    out.bounded = rec.dim() == 0;

    IntMatrix H = IntMatrix::Zero(n + 1, k + 1);
    H.topLeftCorner(n, k) = fan.rays();
    H.block(n, 0, 1, k) = D.coeffs.transpose();
    H(n, k) = 1;
    Cone hc = Cone::from_inequalities(H, IntMatrix(n + 1, 0), n + 1);
    std::vector<RatVector> verts;
    for (int j = 0; j < hc.num_rays(); ++j) {
        const Integer t = hc.rays()(n, j);
        if (t > 0) {
            RatVector v(n);
            for (int i = 0; i < n; ++i)
                v(i) = Rational(hc.rays()(i, j), t);
            verts.push_back(v);
        }
    }
    out.empty = verts.empty();
    if (!out.bounded)
        return out;
    std::sort(verts.begin(), verts.end(), [](const RatVector& a, const RatVector& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    out.vertices.resize(n, static_cast<int>(verts.size()));
    for (size_t j = 0; j < verts.size(); ++j)
        out.vertices.col(j) = verts[j];
    if (out.empty) {
        out.lattice_points.resize(n, 0);
        return out;
    }

    std::vector<long> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rational mn = verts[0](i), mx = verts[0](i);
        for (const RatVector& v : verts) {
            mn = std::min(mn, v(i));
            mx = std::max(mx, v(i));
        }
        lo[i] = ceil_q(mn).convert_to<long>();
        hi[i] = floor_q(mx).convert_to<long>();
    }
    std::vector<IntVector> pts;
    std::vector<long> cur = lo;
    bool done = false;
    for (int i = 0; i < n; ++i)
        if (lo[i] > hi[i])
            done = true;
    while (!done) {
        IntVector m(n);
        for (int i = 0; i < n; ++i)
            m(i) = cur[i];
        IntVector val = ray_rows(fan) * m + D.coeffs;
        if ((val.array() >= 0).all())
            pts.push_back(m);
        int i = n - 1;
        while (i >= 0 && cur[i] == hi[i]) {
            cur[i] = lo[i];
            --i;
        }
        if (i < 0)
            done = true;
        else
            ++cur[i];
    }
    out.lattice_points = from_columns(pts, n);
    return out;
}

IntMatrix global_sections(const TorusInvariantDivisor& D)
{
    DivisorPolyhedron P = divisor_polyhedron(D);
    if (!P.bounded)
        throw DomainError("global_sections: the section polyhedron P_D is unbounded");
    return P.lattice_points;
}

TorusInvariantDivisor polytope_divisor(const LatticePolytope& P, const FanPtr& fan)
{
    const Fan& f = *fan;
    if (P.ambient_dim() != f.ambient_dim())
        throw DomainError("polytope_divisor: polytope and fan have different ambient dimensions");
    const IntMatrix& V = P.vertices();
    const int k = f.num_rays();
    IntMatrix vals = ray_rows(f) * V;
    IntVector a(k);
    for (int j = 0; j < k; ++j)
        a(j) = -vals.row(j).minCoeff();
    for (int s = 0; s < f.num_maximal_cones(); ++s) {
        const RaySet& rs = f.maximal_cones()[s];
        bool found = false;
        for (int v = 0; v < V.cols() && !found; ++v) {
            found = true;
            for (int rho : rs)
                if (vals(rho, v) != -a(rho)) {
                    found = false;
                    break;
                }
        }
        if (!found) {
            std::string set;
            for (int rho : rs)
                set += (set.empty() ? "" : ",") + std::to_string(rho + 1);
            throw DomainError("polytope_divisor: the normal fan of P is not refined by the fan; "
                              "no vertex minimizes all rays of cone {" + set + "}");
        }
    }
    return {fan, a};
}

std::optional<IntVector> linearly_equivalent(const TorusInvariantDivisor& D,
                                             const TorusInvariantDivisor& E)
{
    same_fan(D, E);
    return solve_integer(ray_rows(*D.fan), IntVector(D.coeffs - E.coeffs));
}

} // namespace toric
