#include "toric/counting.hpp"

#include <algorithm>

namespace toric {

KushnirenkoCount kushnirenko_count(const IntMatrix& A)
{
    if (A.cols() == 0)
        throw DomainError("kushnirenko_count: empty point configuration");
    LatticePolytope P = hull(A);
    KushnirenkoCount out;
    out.normalized_volume = normalized_volume(P);
    IntMatrix D = affine_lattice_gens(A);
    if (rank(D) == 0) {
        out.index = 1;
    } else {
        auto idx = lattice_index(D, saturated_span_basis(D));
        out.index = *idx;
    }
    out.degree = out.normalized_volume / out.index;
    return out;
}

IntMatrix SparseSystem::support(int i) const
{
    std::vector<IntVector> cols;
    for (const auto& t : equations[i].terms)
        cols.push_back(t.first);
    return from_columns(cols, n);
}

CountReport bkk_count(const SparseSystem& system, const FanPtr& fan,
                      const std::vector<std::vector<Rational>>& points)
{
    const int n = system.n;
    if (static_cast<int>(system.equations.size()) != n)
        throw DomainError("bkk_count: expected " + std::to_string(n) + " equations, got " +
                          std::to_string(system.equations.size()));
    std::vector<LatticePolytope> Ps;
    std::vector<IntVector> diffs;
    for (int i = 0; i < n; ++i) {
        if (system.equations[i].terms.empty())
            throw DomainError("bkk_count: equation " + std::to_string(i + 1) + " is zero");
        IntMatrix S = system.support(i);
        Ps.push_back(newton_polytope(S));
        for (int j = 1; j < S.cols(); ++j)
            diffs.push_back(S.col(j) - S.col(0));
    }
    LatticePolytope sum = Ps[0];
    for (int i = 1; i < n; ++i)
        sum = minkowski_sum(sum, Ps[i]);
    if (!sum.is_full_dim())
        throw DomainError("bkk_count: the Minkowski sum of the Newton polytopes is not "
                          "full-dimensional (degenerate system)");

    CountReport out;
    out.bkk = mixed_volume(Ps);
    auto idx = lattice_index(from_columns(diffs, n), IntMatrix::Identity(n, n));
    out.lattice_index = *idx;

    bool all_equal = true;
    for (int i = 1; i < n; ++i)
        all_equal = all_equal && Ps[i] == Ps[0];
    if (all_equal)
        out.kushnirenko = normalized_volume(Ps[0]);

    bool nonnegative = true;
    std::vector<Integer> degs;
    for (int i = 0; i < n; ++i) {
        IntMatrix S = system.support(i);
        if ((S.array() < 0).any())
            nonnegative = false;
        Integer d = 0;
        for (int j = 0; j < S.cols(); ++j)
            d = std::max(d, Integer(S.col(j).sum()));
        degs.push_back(d);
    }
    if (nonnegative && std::all_of(degs.begin(), degs.end(), [](const Integer& d) { return d > 0; }))
        out.bezout = bezout_count(degs);

    out.fan = fan ? fan : share(normal_fan(sum));
    if (out.fan->ambient_dim() != n)
        throw DomainError("bkk_count: fan has the wrong ambient dimension");
    for (int i = 0; i < n; ++i) {
        out.divisors.push_back(polytope_divisor(Ps[i], out.fan));
        out.homogenized.push_back(homogenize(system.equations[i], out.divisors.back()));
    }
    for (const auto& z : points) {
        if (static_cast<int>(z.size()) != out.fan->num_rays())
            throw DomainError("bkk_count: verification point needs one coordinate per ray");
        bool ok = true;
        for (const Polynomial& f : out.homogenized)
            ok = ok && f.evaluate(z) == 0;
        out.verified.push_back(ok);
    }
    return out;
}

Integer bezout_count(const std::vector<Integer>& degrees)
{
    Integer p = 1;
    for (const Integer& d : degrees) {
        if (d <= 0)
            throw DomainError("bezout_count: degrees must be positive");
        p *= d;
    }
    return p;
}

} // namespace toric
