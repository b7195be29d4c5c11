#include "toric/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace toric {

namespace {

struct DDRay
{
    IntVector v;
    std::vector<bool> zero;
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y)
{
    IntVector r(x.size());
    for (int i = 0; i < x.size(); ++i)
        r(i) = a * x(i) - b * y(i);
    return primitive(r);
}

/** Orthogonal projection of v onto the complement of span(L), scaled primitive. */
IntVector project_out(const IntVector& v, const IntMatrix& L)
{
    if (L.cols() == 0)
        return primitive(v);
    RatMatrix Lq = to_rational(L);
    RatMatrix G = Lq.transpose() * Lq;
    RatVector rhs = Lq.transpose() * to_rational(v);
    RatVector c = *solve_rational(G, rhs);
    RatVector w = to_rational(v) - Lq * c;
    return clear_denominators(w);
}

bool is_zero(const IntVector& v)
{
    for (int i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            return false;
    return true;
}

IntMatrix stack_rows(const std::vector<IntVector>& rows, int n)
{
    IntMatrix A(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        A.row(i) = rows[i].transpose();
    return A;
}

} // namespace

DoubleDescription double_description(const IntMatrix& A)
{
    const int n = static_cast<int>(A.cols());
    std::vector<IntVector> lin;
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e(i) = 1;
        lin.push_back(e);
    }
    std::vector<DDRay> rays;
    for (int k = 0; k < A.rows(); ++k) {
        IntVector a = A.row(k).transpose();
        int l0 = -1;
        Integer s0;
        for (size_t i = 0; i < lin.size(); ++i) {
            Integer s = dot(a, lin[i]);
            if (s != 0) {
                l0 = static_cast<int>(i);
                s0 = s;
                break;
            }
        }
        if (l0 >= 0) {
            IntVector p = lin[l0];
            if (s0 < 0) {
                p = -p;
                s0 = -s0;
            }
            std::vector<IntVector> nlin;
            for (size_t i = 0; i < lin.size(); ++i) {
                if (static_cast<int>(i) == l0)
                    continue;
                Integer s = dot(a, lin[i]);
                nlin.push_back(s == 0 ? lin[i] : combine(s0, lin[i], s, p));
            }
            lin = std::move(nlin);
            for (DDRay& r : rays) {
                Integer s = dot(a, r.v);
                if (s != 0)
                    r.v = combine(s0, r.v, s, p);
                r.zero.push_back(true);
            }
            DDRay np;
            np.v = p;
            np.zero.assign(k, true);
            np.zero.push_back(false);
            rays.push_back(std::move(np));
            continue;
        }
        std::vector<Integer> val(rays.size());
        std::vector<int> pos, neg, zer;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] > 0)
                pos.push_back(static_cast<int>(i));
            else if (val[i] < 0)
                neg.push_back(static_cast<int>(i));
            else
                zer.push_back(static_cast<int>(i));
        }
        std::vector<DDRay> next;
        for (int i : pos) {
            DDRay r = rays[i];
            r.zero.push_back(false);
            next.push_back(std::move(r));
        }
        for (int i : zer) {
            DDRay r = rays[i];
            r.zero.push_back(true);
            next.push_back(std::move(r));
        }
        for (int i : pos)
            for (int j : neg) {
                std::vector<bool> z(k);
                for (int c = 0; c < k; ++c)
                    z[c] = rays[i].zero[c] && rays[j].zero[c];
                bool adjacent = true;
                for (size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (static_cast<int>(t) == i || static_cast<int>(t) == j)
                        continue;
                    bool contains = true;
                    for (int c = 0; c < k; ++c)
                        if (z[c] && !rays[t].zero[c]) {
                            contains = false;
                            break;
                        }
                    if (contains)
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                DDRay r;
                r.v = combine(val[i], rays[j].v, val[j], rays[i].v);
                r.zero = std::move(z);
                r.zero.push_back(true);
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }
    DoubleDescription out;
    out.lineality = lin.empty() ? IntMatrix(n, 0)
                                : saturated_span_basis(from_columns(lin, n));
    std::set<IntVector, LexLess> seen;
    for (const DDRay& r : rays) {
        IntVector v = project_out(r.v, out.lineality);
        if (!is_zero(v) && seen.insert(v).second)
            out.rays.push_back(v);
    }
    return out;
}

namespace {

/** Orders facets by incidence with the rays, earliest ray first. */
IntMatrix order_facets(const std::vector<IntVector>& facets, const IntMatrix& rays, int n)
{
    std::vector<std::pair<std::vector<bool>, IntVector>> keyed;
    for (const IntVector& f : facets) {
        std::vector<bool> inc(rays.cols());
        for (int j = 0; j < rays.cols(); ++j)
            inc[j] = dot(f, rays.col(j)) == 0;
        keyed.emplace_back(std::move(inc), f);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return lex_less(a.second, b.second);
    });
    IntMatrix F(n, static_cast<int>(keyed.size()));
    for (size_t j = 0; j < keyed.size(); ++j)
        F.col(j) = keyed[j].second;
    return F;
}

} // namespace

Cone Cone::from_generators(const IntMatrix& gens, int ambient)
{
    if (gens.rows() != ambient && gens.cols() > 0)
        throw DomainError("cone: generator dimension differs from ambient dimension");
    Cone c;
    c.n_ = ambient;
    std::vector<IntVector> g;
    for (int j = 0; j < gens.cols(); ++j)
        if (!is_zero(gens.col(j)))
            g.push_back(gens.col(j));
    if (g.empty()) {
        c.rays_ = IntMatrix(ambient, 0);
        c.lineality_ = IntMatrix(ambient, 0);
        c.facets_ = IntMatrix(ambient, 0);
        c.equations_ = IntMatrix::Identity(ambient, ambient);
        return c;
    }
    DoubleDescription h = double_description(stack_rows(g, ambient));
    c.equations_ = h.lineality;
    std::vector<IntVector> rows = h.rays;
    for (int j = 0; j < h.lineality.cols(); ++j) {
        rows.push_back(h.lineality.col(j));
        rows.push_back(-h.lineality.col(j));
    }
    DoubleDescription v = double_description(stack_rows(rows, ambient));
    c.lineality_ = v.lineality;
    std::vector<IntVector> ordered;
    std::set<IntVector, LexLess> dd_rays(v.rays.begin(), v.rays.end()), used;
    for (const IntVector& x : g) {
        IntVector r = project_out(x, c.lineality_);
        if (dd_rays.count(r) && used.insert(r).second)
            ordered.push_back(r);
    }
    c.rays_ = from_columns(ordered, ambient);
    c.facets_ = order_facets(h.rays, c.rays_, ambient);
    return c;
}

Cone Cone::from_inequalities(const IntMatrix& ineqs, const IntMatrix& eqs, int ambient)
{
    std::vector<IntVector> rows;
    for (int j = 0; j < ineqs.cols(); ++j)
        rows.push_back(ineqs.col(j));
    for (int j = 0; j < eqs.cols(); ++j) {
        rows.push_back(eqs.col(j));
        rows.push_back(-eqs.col(j));
    }
    DoubleDescription v = double_description(stack_rows(rows, ambient));
    std::sort(v.rays.begin(), v.rays.end(), LexLess());
    IntMatrix gens(ambient, static_cast<int>(v.rays.size() + 2 * v.lineality.cols()));
    int j = 0;
    for (const IntVector& r : v.rays)
        gens.col(j++) = r;
    for (int i = 0; i < v.lineality.cols(); ++i) {
        gens.col(j++) = v.lineality.col(i);
        gens.col(j++) = -v.lineality.col(i);
    }
    return from_generators(gens, ambient);
}

bool Cone::is_simplicial() const
{
    return is_pointed() && rank(rays_) == rays_.cols();
}

bool Cone::is_smooth() const
{
    if (!is_simplicial())
        return false;
    for (const Integer& d : snf(rays_).diagonal())
        if (d != 1)
            return false;
    return true;
}

bool Cone::contains(const IntVector& x) const
{
    if (x.size() != n_)
        throw DomainError("cone: vector dimension differs from ambient dimension");
    for (int j = 0; j < equations_.cols(); ++j)
        if (dot(equations_.col(j), x) != 0)
            return false;
    for (int j = 0; j < facets_.cols(); ++j)
        if (dot(facets_.col(j), x) < 0)
            return false;
    return true;
}

bool Cone::contains(const Cone& other) const
{
    for (int j = 0; j < other.rays_.cols(); ++j)
        if (!contains(IntVector(other.rays_.col(j))))
            return false;
    for (int j = 0; j < other.lineality_.cols(); ++j)
        if (!contains(IntVector(other.lineality_.col(j))) ||
            !contains(IntVector(-other.lineality_.col(j))))
            return false;
    return true;
}

bool Cone::in_relative_interior(const IntVector& x) const
{
    if (!contains(x))
        return false;
    for (int j = 0; j < facets_.cols(); ++j)
        if (dot(facets_.col(j), x) == 0)
            return false;
    return true;
}

bool Cone::operator==(const Cone& other) const
{
    return n_ == other.n_ && contains(other) && other.contains(*this);
}

std::vector<int> Cone::tight_rays(int f) const
{
    std::vector<int> out;
    for (int j = 0; j < rays_.cols(); ++j)
        if (dot(facets_.col(f), rays_.col(j)) == 0)
            out.push_back(j);
    return out;
}

IntVector Cone::interior_point() const
{
    IntVector s = IntVector::Zero(n_);
    for (int j = 0; j < rays_.cols(); ++j)
        s += rays_.col(j);
    return s;
}

Cone cone(const IntMatrix& gens, int ambient)
{
    return Cone::from_generators(gens, ambient);
}

Cone dual(const Cone& sigma)
{
    const int n = sigma.ambient_dim();
    const IntMatrix& F = sigma.facets();
    const IntMatrix& E = sigma.equations();
    IntMatrix gens(n, F.cols() + 2 * E.cols());
    gens.leftCols(F.cols()) = F;
    for (int j = 0; j < E.cols(); ++j) {
        gens.col(F.cols() + 2 * j) = E.col(j);
        gens.col(F.cols() + 2 * j + 1) = -E.col(j);
    }
    return Cone::from_generators(gens, n);
}

Cone intersect(const Cone& a, const Cone& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw DomainError("intersect: ambient dimensions differ");
    IntMatrix F(a.ambient_dim(), a.facets().cols() + b.facets().cols());
    F << a.facets(), b.facets();
    IntMatrix E(a.ambient_dim(), a.equations().cols() + b.equations().cols());
    E << a.equations(), b.equations();
    return Cone::from_inequalities(F, E, a.ambient_dim());
}

std::vector<std::vector<int>> face_ray_sets(const Cone& sigma)
{
    std::vector<int> all(sigma.num_rays());
    for (int j = 0; j < sigma.num_rays(); ++j)
        all[j] = j;
    std::vector<std::vector<int>> tight;
    for (int f = 0; f < sigma.facets().cols(); ++f)
        tight.push_back(sigma.tight_rays(f));
    std::set<std::vector<int>> seen{all};
    std::vector<std::vector<int>> queue{all};
    for (size_t q = 0; q < queue.size(); ++q)
        for (const auto& t : tight) {
            std::vector<int> s;
            std::set_intersection(queue[q].begin(), queue[q].end(), t.begin(), t.end(),
                                  std::back_inserter(s));
            if (seen.insert(s).second)
                queue.push_back(s);
        }
    std::vector<std::pair<int, std::vector<int>>> keyed;
    for (const auto& s : queue) {
        IntMatrix R(sigma.ambient_dim(), static_cast<int>(s.size()) + sigma.lineality().cols());
        for (size_t i = 0; i < s.size(); ++i)
            R.col(i) = sigma.rays().col(s[i]);
        R.rightCols(sigma.lineality().cols()) = sigma.lineality();
        keyed.emplace_back(rank(R), s);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<int>> out;
    for (auto& k : keyed)
        out.push_back(std::move(k.second));
    return out;
}

Cone subcone(const Cone& sigma, const std::vector<int>& idx)
{
    const int n = sigma.ambient_dim();
    const IntMatrix& L = sigma.lineality();
    IntMatrix gens(n, static_cast<int>(idx.size()) + 2 * L.cols());
    for (size_t i = 0; i < idx.size(); ++i)
        gens.col(i) = sigma.rays().col(idx[i]);
    for (int j = 0; j < L.cols(); ++j) {
        gens.col(idx.size() + 2 * j) = L.col(j);
        gens.col(idx.size() + 2 * j + 1) = -L.col(j);
    }
    return Cone::from_generators(gens, n);
}

std::vector<Cone> faces(const Cone& sigma)
{
    std::vector<Cone> out;
    for (const auto& s : face_ray_sets(sigma))
        out.push_back(subcone(sigma, s));
    return out;
}

Cone face_from_character(const Cone& sigma, const IntVector& m)
{
    if (!dual(sigma).contains(m))
        throw DomainError("face_from_character: m is not in the dual cone");
    std::vector<int> idx;
    for (int j = 0; j < sigma.num_rays(); ++j)
        if (dot(m, sigma.rays().col(j)) == 0)
            idx.push_back(j);
    return subcone(sigma, idx);
}

IntMatrix rays(const Cone& sigma)
{
    if (!sigma.is_pointed())
        throw DomainError("rays: cone is not pointed");
    return sigma.rays();
}

std::vector<std::vector<int>> triangulate(const Cone& sigma)
{
    if (!sigma.is_pointed())
        throw DomainError("triangulate: cone is not pointed");
    const IntMatrix& R = sigma.rays();
    const int n = sigma.ambient_dim();
    std::vector<std::vector<int>> simplices;
    if (R.cols() == 0)
        return {{}};
    simplices.push_back({0});
    std::vector<int> used{0};
    for (int k = 1; k < R.cols(); ++k) {
        IntMatrix cur(n, static_cast<int>(used.size()) + 1);
        for (size_t i = 0; i < used.size(); ++i)
            cur.col(i) = R.col(used[i]);
        cur.col(used.size()) = R.col(k);
        const int d = static_cast<int>(simplices.front().size());
        if (rank(cur) > d) {
            for (auto& s : simplices)
                s.push_back(k);
        } else {
            Cone c = Cone::from_generators(cur.leftCols(used.size()), n);
            std::set<std::vector<int>> added;
            std::vector<std::vector<int>> fresh;
            for (int f = 0; f < c.facets().cols(); ++f) {
                if (dot(c.facets().col(f), R.col(k)) >= 0)
                    continue;
                for (const auto& s : simplices) {
                    std::vector<int> t;
                    for (int i : s)
                        if (dot(c.facets().col(f), R.col(i)) == 0)
                            t.push_back(i);
                    if (static_cast<int>(t.size()) != d - 1)
                        continue;
                    t.push_back(k);
                    if (added.insert(t).second)
                        fresh.push_back(t);
                }
            }
            simplices.insert(simplices.end(), fresh.begin(), fresh.end());
        }
        used.push_back(k);
    }
    return simplices;
}

namespace {

/** Nonzero lattice points of the half-open parallelepiped spanned by the square matrix G. */
std::vector<IntVector> parallelepiped_points(const IntMatrix& G)
{
    const int d = static_cast<int>(G.rows());
    SmithForm s = snf(G);
    IntMatrix Pinv = inverse_unimodular(s.P);
    RatMatrix A(d, 2 * d);
    A.leftCols(d) = to_rational(G);
    A.rightCols(d) = RatMatrix::Identity(d, d);
    rref(A);
    RatMatrix Ginv = A.rightCols(d);
    RatMatrix Gq = to_rational(G);
    std::vector<Integer> mod = s.diagonal();
    std::vector<Integer> y(d, 0);
    std::vector<IntVector> out;
    while (true) {
        IntVector x = IntVector::Zero(d);
        for (int i = 0; i < d; ++i)
            if (y[i] != 0)
                x += Pinv.col(i) * y[i];
        RatVector lam = Ginv * to_rational(x);
        for (int i = 0; i < d; ++i)
            lam(i) -= Rational(floor_q(lam(i)));
        RatVector p = Gq * lam;
        IntVector v(d);
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
            v(i) = numerator(p(i));
            nonzero = nonzero || v(i) != 0;
        }
        if (nonzero)
            out.push_back(v);
        int i = 0;
        for (; i < d; ++i) {
            if (++y[i] < mod[i])
                break;
            y[i] = 0;
        }
        if (i == d)
            break;
    }
    return out;
}

IntMatrix hilbert_basis_full(const Cone& sigma)
{
    const int d = sigma.ambient_dim();
    const IntMatrix& R = sigma.rays();
    const IntMatrix& F = sigma.facets();
    std::set<IntVector, LexLess> cand;
    for (int j = 0; j < R.cols(); ++j)
        cand.insert(R.col(j));
    for (const auto& s : triangulate(sigma)) {
        IntMatrix G(d, d);
        for (int i = 0; i < d; ++i)
            G.col(i) = R.col(s[i]);
        for (IntVector& p : parallelepiped_points(G))
            cand.insert(p);
    }
    IntVector w = IntVector::Zero(d);
    for (int j = 0; j < F.cols(); ++j)
        w += F.col(j);
    std::vector<std::pair<Integer, IntVector>> byw;
    for (const IntVector& c : cand)
        byw.emplace_back(dot(w, c), c);
    std::stable_sort(byw.begin(), byw.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::set<IntVector, LexLess> irreducible;
    for (size_t i = 0; i < byw.size(); ++i) {
        bool reducible = false;
        for (size_t j = 0; j < byw.size() && !reducible; ++j) {
            if (byw[j].first >= byw[i].first)
                break;
            IntVector diff = byw[i].second - byw[j].second;
            bool inside = true;
            for (int f = 0; f < F.cols(); ++f)
                if (dot(F.col(f), diff) < 0) {
                    inside = false;
                    break;
                }
            reducible = inside;
        }
        if (!reducible)
            irreducible.insert(byw[i].second);
    }
    std::vector<IntVector> out;
    for (int j = 0; j < R.cols(); ++j) {
        out.push_back(R.col(j));
        irreducible.erase(R.col(j));
    }
    out.insert(out.end(), irreducible.begin(), irreducible.end());
    return from_columns(out, d);
}

} // namespace

IntMatrix hilbert_basis(const Cone& sigma)
{
    if (!sigma.is_pointed())
        throw DomainError("hilbert_basis: cone is not pointed");
    const int n = sigma.ambient_dim();
    if (sigma.num_rays() == 0)
        return IntMatrix(n, 0);
    if (sigma.is_full_dim())
        return hilbert_basis_full(sigma);
    IntMatrix B = saturated_span_basis(sigma.rays());
    IntMatrix C(B.cols(), sigma.num_rays());
    for (int j = 0; j < sigma.num_rays(); ++j)
        C.col(j) = *solve_integer(B, sigma.rays().col(j));
    IntMatrix H = hilbert_basis_full(Cone::from_generators(C, static_cast<int>(B.cols())));
    return B * H;
}

IntMatrix semigroup_generators(const Cone& sigma)
{
    if (sigma.is_pointed())
        return hilbert_basis(sigma);
    const int n = sigma.ambient_dim();
    const IntMatrix& L = sigma.lineality();
    const int k = static_cast<int>(L.cols());
    LatticeSplit sp = split_lattice(L);
    IntMatrix q = sp.Uinv.bottomRows(n - k);
    IntMatrix lift = sp.U.rightCols(n - k);
    IntMatrix H(n - k, 0);
    if (n > k) {
        IntMatrix img = q * sigma.rays();
        H = hilbert_basis(Cone::from_generators(img, n - k));
    }
    IntMatrix out(n, H.cols() + 2 * k);
    out.leftCols(H.cols()) = lift * H;
    for (int j = 0; j < k; ++j) {
        out.col(H.cols() + 2 * j) = L.col(j);
        out.col(H.cols() + 2 * j + 1) = -L.col(j);
    }
    return out;
}

std::optional<IntVector> semigroup_member(const IntMatrix& gens, const IntVector& target)
{
    const int n = static_cast<int>(target.size());
    const int k = static_cast<int>(gens.cols());
    IntVector coeffs = IntVector::Zero(k);
    if (is_zero(target))
        return coeffs;
    std::vector<int> idx;
    for (int j = 0; j < k; ++j)
        if (!is_zero(gens.col(j)))
            idx.push_back(j);
    if (idx.empty())
        return std::nullopt;
    Cone c = Cone::from_generators(gens, n);
    if (!c.is_pointed())
        throw DomainError("semigroup_member: generators span a non-pointed cone");
    if (!c.contains(target))
        return std::nullopt;
    IntVector w = IntVector::Zero(n);
    for (int j = 0; j < c.facets().cols(); ++j)
        w += c.facets().col(j);
    std::vector<Integer> wg;
    for (int j : idx)
        wg.push_back(dot(w, gens.col(j)));
    std::unordered_set<std::string> failed;
    std::function<bool(size_t, const IntVector&)> dfs = [&](size_t pos, const IntVector& rem) {
        if (is_zero(rem))
            return true;
        if (pos == idx.size())
            return false;
        std::string key = std::to_string(pos);
        for (int i = 0; i < n; ++i)
            key += "," + rem(i).str();
        if (failed.count(key))
            return false;
        Integer budget = dot(w, rem);
        Integer cmax = budget / wg[pos];
        IntVector g = gens.col(idx[pos]);
        for (Integer cnum = cmax; cnum >= 0; --cnum) {
            IntVector r = rem - g * cnum;
            if (dfs(pos + 1, r)) {
                coeffs(idx[pos]) = cnum;
                return true;
            }
        }
        failed.insert(key);
        return false;
    };
    if (!dfs(0, target))
        return std::nullopt;
    return coeffs;
}

DistinguishedPoint distinguished_point(const Cone& sigma)
{
    DistinguishedPoint dp;
    dp.generators = semigroup_generators(dual(sigma));
    for (int j = 0; j < dp.generators.cols(); ++j) {
        bool perp = true;
        for (int r = 0; r < sigma.num_rays() && perp; ++r)
            perp = dot(dp.generators.col(j), sigma.rays().col(r)) == 0;
        for (int r = 0; r < sigma.lineality().cols() && perp; ++r)
            perp = dot(dp.generators.col(j), sigma.lineality().col(r)) == 0;
        dp.values.push_back(perp ? 1 : 0);
    }
    return dp;
}

bool is_fixed_point(const Cone& sigma)
{
    return sigma.dim() == sigma.ambient_dim();
}

IntVector separating_character(const Cone& a, const Cone& b)
{
    const int n = a.ambient_dim();
    if (b.ambient_dim() != n)
        throw DomainError("separating_character: ambient dimensions differ");
    std::vector<IntVector> g;
    for (int j = 0; j < a.num_rays(); ++j)
        g.push_back(a.rays().col(j));
    for (int j = 0; j < b.num_rays(); ++j)
        g.push_back(-b.rays().col(j));
    for (const IntMatrix* L : {&a.lineality(), &b.lineality()})
        for (int j = 0; j < L->cols(); ++j) {
            g.push_back(L->col(j));
            g.push_back(-L->col(j));
        }
    Cone d = dual(Cone::from_generators(from_columns(g, n), n));
    IntVector m = primitive(d.interior_point());
    Cone tau = intersect(a, b);
    bool ok = dual(a).contains(m) && dual(b).contains(IntVector(-m));
    if (ok) {
        Cone ma = intersect(a, Cone::from_inequalities(IntMatrix(n, 0), m, n));
        Cone mb = intersect(b, Cone::from_inequalities(IntMatrix(n, 0), m, n));
        ok = ma == tau && mb == tau;
    }
    if (!ok)
        throw DomainError("separating_character: intersection is not a common face");
    return m;
}

} // namespace toric
