#include "toric/cox.hpp"

#include <algorithm>
#include <set>

namespace toric {

namespace {

Monomial to_monomial(const IntVector& b)
{
    Monomial e(b.size());
    for (int i = 0; i < b.size(); ++i)
        e[i] = b(i).convert_to<int>();
    return e;
}

IntVector to_vector(const Monomial& m)
{
    IntVector v(static_cast<int>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        v(i) = m[i];
    return v;
}

} // namespace

CoxData cox_data(const FanPtr& fan)
{
    if (has_torus_factor(*fan))
        throw DomainError("cox_data: the fan has a torus factor (rays do not span)");
    CoxData out;
    out.fan = fan;
    out.class_group = class_group(*fan);
    const int k = fan->num_rays();
    out.weights.resize(out.class_group.presentation.proj.rows(), k);
    for (int i = 0; i < k; ++i) {
        IntVector e = IntVector::Zero(k);
        e(i) = 1;
        out.weights.col(i) = out.class_group.class_of(e);
    }
    out.irrelevant = irrelevant_ideal(*fan);
    out.primitive_collections = primitive_collections(*fan);
    return out;
}

std::vector<Monomial> irrelevant_ideal(const Fan& fan)
{
    std::vector<Monomial> out;
    for (const RaySet& s : fan.maximal_cones()) {
        Monomial m(fan.num_rays(), 1);
        for (int r : s)
            m[r] = 0;
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
    }
    return out;
}

std::vector<RaySet> primitive_collections(const Fan& fan)
{
    const int k = fan.num_rays();
    if (k > 24)
        throw DomainError("primitive_collections: too many rays");
    std::vector<unsigned long> cones;
    for (const RaySet& s : fan.maximal_cones()) {
        unsigned long b = 0;
        for (int r : s)
            b |= 1UL << r;
        cones.push_back(b);
    }
    auto is_face = [&](unsigned long m) {
        for (unsigned long c : cones)
            if ((m & c) == m)
                return true;
        return false;
    };
    std::vector<RaySet> out;
    for (unsigned long m = 1; m < (1UL << k); ++m) {
        if (is_face(m))
            continue;
        bool minimal = true;
        for (int i = 0; i < k && minimal; ++i)
            if ((m >> i & 1) && !is_face(m & ~(1UL << i)))
                minimal = false;
        if (!minimal)
            continue;
        RaySet s;
        for (int i = 0; i < k; ++i)
            if (m >> i & 1)
                s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntVector degree(const CoxData& cox, const Monomial& a)
{
    if (static_cast<int>(a.size()) != cox.fan->num_rays())
        throw DomainError("degree: exponent vector has wrong length");
    return cox.class_group.class_of(to_vector(a));
}

std::vector<Monomial> graded_piece(const TorusInvariantDivisor& D)
{
    IntMatrix pts = global_sections(D);
    IntMatrix Ft = ray_rows(*D.fan);
    std::vector<Monomial> out;
    for (int j = 0; j < pts.cols(); ++j)
        out.push_back(to_monomial(Ft * pts.col(j) + D.coeffs));
    return out;
}

Polynomial homogenize(const LaurentPolynomial& f, const TorusInvariantDivisor& D)
{
    const Fan& fan = *D.fan;
    IntMatrix Ft = ray_rows(fan);
    Polynomial out(fan.num_rays());
    for (const auto& [m, c] : f.terms) {
        if (m.size() != fan.ambient_dim())
            throw DomainError("homogenize: exponent has wrong length");
        IntVector b = Ft * m + D.coeffs;
        for (int i = 0; i < b.size(); ++i)
            if (b(i) < 0) {
                std::string e;
                for (int j = 0; j < m.size(); ++j)
                    e += (j ? "," : "") + m(j).str();
                throw DomainError("homogenize: exponent (" + e + ") lies outside P_D");
            }
        out.add_term(to_monomial(b), c);
    }
    return out;
}

LaurentPolynomial dehomogenize(const Polynomial& f, const TorusInvariantDivisor& D, int sigma)
{
    const Fan& fan = *D.fan;
    if (sigma < 0 || sigma >= fan.num_maximal_cones())
        throw DomainError("dehomogenize: no maximal cone with index " + std::to_string(sigma + 1));
    const RaySet& rs = fan.maximal_cones()[sigma];
    IntMatrix Fs(static_cast<int>(rs.size()), fan.ambient_dim());
    IntVector b(static_cast<int>(rs.size()));
    for (size_t i = 0; i < rs.size(); ++i) {
        Fs.row(i) = fan.rays().col(rs[i]).transpose();
        b(i) = -D.coeffs(rs[i]);
    }
    auto v = solve_integer(Fs, b);
    if (!v)
        throw DomainError("dehomogenize: D is not Cartier on the chosen cone");
    IntMatrix Ft = ray_rows(fan);
    LaurentPolynomial out;
    for (const Term& t : f.terms()) {
        auto m = solve_integer(Ft, IntVector(to_vector(t.m) - D.coeffs));
        if (!m)
            throw DomainError("dehomogenize: term of f does not have the degree of D");
        out.add_term(IntVector(*m - *v), t.c);
    }
    return out;
}

std::vector<RaySet> non_simplicial_cones(const Fan& fan)
{
    std::vector<RaySet> out;
    for (const RaySet& s : fan.all_cones())
        if (fan.cone_dim(s) != static_cast<int>(s.size()))
            out.push_back(s);
    return out;
}

} // namespace toric
