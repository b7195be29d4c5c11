#include "toric/io.hpp"

#include <functional>
#include <map>

namespace toric::io {

namespace {

const Integer kSafe = Integer(1) << 53;

/** A JSON value together with its pointer, for error reporting. */
struct Node
{
    const Json& j;
    std::string ptr;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw SchemaError(ptr.empty() ? "/" : ptr, what);
    }

    static std::string escape(const std::string& key)
    {
        std::string out;
        for (char c : key) {
            if (c == '~')
                out += "~0";
            else if (c == '/')
                out += "~1";
            else
                out += c;
        }
        return out;
    }

    std::optional<Node> find(const std::string& key) const
    {
        if (!j.is_object())
            fail("expected an object");
        auto it = j.find(key);
        if (it == j.end() || it->is_null())
            return std::nullopt;
        return Node{*it, ptr + "/" + escape(key)};
    }

    Node at(const std::string& key) const
    {
        auto n = find(key);
        if (!n)
            throw SchemaError(ptr + "/" + escape(key), "missing required field '" + key + "'");
        return *n;
    }

    size_t size() const
    {
        if (!j.is_array())
            fail("expected an array");
        return j.size();
    }

    Node operator[](size_t i) const { return Node{j[i], ptr + "/" + std::to_string(i)}; }

    Integer integer() const
    {
        if (j.is_number_unsigned())
            return Integer(j.get<unsigned long long>());
        if (j.is_number_integer())
            return Integer(j.get<long long>());
        if (j.is_string()) {
            const std::string& s = j.get_ref<const std::string&>();
            size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
            if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
                fail("expected an integer, got \"" + s + "\"");
            return Integer(s);
        }
        fail("expected an integer");
    }

    long small(long lo, long hi) const
    {
        Integer x = integer();
        if (x < lo || x > hi)
            fail("integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return x.convert_to<long>();
    }

    Rational rational() const
    {
        if (j.is_string()) {
            const std::string& s = j.get_ref<const std::string&>();
            auto slash = s.find('/');
            std::string p = s.substr(0, slash);
            std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
            auto ok = [](const std::string& t, bool sign) {
                size_t start = (sign && !t.empty() && t[0] == '-') ? 1 : 0;
                return t.size() > start && t.find_first_not_of("0123456789", start) == std::string::npos;
            };
            if (!ok(p, true) || !ok(q, false) || Integer(q) == 0)
                fail("expected a rational \"p/q\", got \"" + s + "\"");
            return Rational(Integer(p), Integer(q));
        }
        return Rational(integer());
    }

    bool boolean() const
    {
        if (!j.is_boolean())
            fail("expected a boolean");
        return j.get<bool>();
    }

    std::string str() const
    {
        if (!j.is_string())
            fail("expected a string");
        return j.get<std::string>();
    }

    IntVector vector(int len = -1) const
    {
        const size_t n = size();
        if (len >= 0 && static_cast<int>(n) != len)
            fail("expected " + std::to_string(len) + " entries, got " + std::to_string(n));
        IntVector v(static_cast<int>(n));
        for (size_t i = 0; i < n; ++i)
            v(i) = (*this)[i].integer();
        return v;
    }

    /** Array of vectors, returned as the columns of a matrix. */
    IntMatrix columns(int len = -1) const
    {
        const size_t n = size();
        if (n == 0 && len < 0)
            fail("empty list; give \"ambient\" to fix the dimension");
        if (len < 0)
            len = static_cast<int>((*this)[0].size());
        IntMatrix M(len, static_cast<int>(n));
        for (size_t i = 0; i < n; ++i)
            M.col(i) = (*this)[i].vector(len);
        return M;
    }

    IntMatrix rows() const
    {
        const size_t n = size();
        if (n == 0)
            fail("expected a nonempty matrix");
        const int c = static_cast<int>((*this)[0].size());
        IntMatrix M(static_cast<int>(n), c);
        for (size_t i = 0; i < n; ++i)
            M.row(i) = (*this)[i].vector(c).transpose();
        return M;
    }

    /** 1-based index list, returned 0-based. */
    std::vector<int> indices(int count) const
    {
        std::vector<int> out;
        for (size_t i = 0; i < size(); ++i)
            out.push_back(static_cast<int>((*this)[i].small(1, count)) - 1);
        return out;
    }
};

int ambient_of(const Node& p)
{
    auto a = p.find("ambient");
    return a ? static_cast<int>(a->small(0, 64)) : -1;
}

std::vector<int> one_based(const std::vector<int>& s)
{
    std::vector<int> out;
    for (int i : s)
        out.push_back(i + 1);
    return out;
}

Json json_list(const std::vector<IntVector>& vs)
{
    Json out = Json::array();
    for (const IntVector& v : vs)
        out.push_back(to_json(v));
    return out;
}

Json rational_columns(const RatMatrix& M)
{
    Json out = Json::array();
    for (int j = 0; j < M.cols(); ++j) {
        Json c = Json::array();
        for (int i = 0; i < M.rows(); ++i)
            c.push_back(to_json(M(i, j)));
        out.push_back(c);
    }
    return out;
}

Json rows_to_json(const IntMatrix& M)
{
    return columns_to_json(M.transpose());
}

std::string monomial_text(const Monomial& m)
{
    return Polynomial::monomial(m, 1, MonomialOrder::grevlex()).to_string();
}

Json polynomial_json(const Polynomial& f)
{
    Json terms = Json::array();
    for (const Term& t : f.terms()) {
        Json e = Json::array();
        for (int x : t.m)
            e.push_back(x);
        terms.push_back({{"exp", e}, {"coeff", to_json(t.c)}});
    }
    return {{"text", f.to_string()}, {"terms", terms}};
}

// ---------------------------------------------------------------- readers

Node sub_or_self(const Node& p, const std::string& key)
{
    auto n = p.find(key);
    return n ? *n : p;
}

Cone read_cone_primal(const Node& p)
{
    int n = ambient_of(p);
    if (auto r = p.find("rays")) {
        IntMatrix G = r->columns(n);
        return cone(G, static_cast<int>(G.rows()));
    }
    if (auto f = p.find("inequalities")) {
        IntMatrix I = f->columns(n);
        const int d = static_cast<int>(I.rows());
        IntMatrix E(d, 0);
        if (auto e = p.find("equations"))
            E = e->columns(d);
        return Cone::from_inequalities(I, E, d);
    }
    p.fail("a cone needs \"rays\" or \"inequalities\"");
}

/** With "dual": true the payload describes the dual of the cone given. */
Cone read_cone(const Node& p)
{
    Cone c = read_cone_primal(p);
    auto d = p.find("dual");
    return d && d->boolean() ? dual(c) : c;
}

LatticePolytope read_polytope(const Node& p)
{
    Node q = sub_or_self(p, "polytope");
    Node pts = q.at("points");
    if (pts.size() == 0)
        pts.fail("a polytope needs at least one point");
    return hull(pts.columns(ambient_of(q)));
}

Fan read_fan(const Node& p)
{
    Node f = sub_or_self(p, "fan");
    Node r = f.at("rays");
    IntMatrix rays = r.columns(ambient_of(f));
    Node mc = f.at("max_cones");
    std::vector<RaySet> cones;
    for (size_t i = 0; i < mc.size(); ++i)
        cones.push_back(mc[i].indices(static_cast<int>(rays.cols())));
    return Fan::make(rays, cones, static_cast<int>(rays.rows()));
}

TorusInvariantDivisor read_divisor(const Node& p, const FanPtr& fan, const std::string& key = "divisor")
{
    return divisor(fan, p.at(key).vector(fan->num_rays()));
}

LaurentPolynomial read_laurent(const Node& p, int n)
{
    Node terms = p.at("terms");
    LaurentPolynomial f;
    for (size_t i = 0; i < terms.size(); ++i) {
        Node t = terms[i];
        auto c = t.find("coeff");
        f.add_term(t.at("exp").vector(n), c ? c->rational() : Rational(1));
    }
    return f;
}

Polynomial read_polynomial(const Node& p, int nvars)
{
    if (p.j.is_string()) {
        try {
            return Polynomial::parse(p.str(), nvars);
        } catch (const std::exception& e) {
            p.fail(e.what());
        }
    }
    Polynomial f(nvars);
    Node terms = p.at("terms");
    for (size_t i = 0; i < terms.size(); ++i) {
        Node t = terms[i];
        Node e = t.at("exp");
        Monomial m;
        for (size_t k = 0; k < e.size(); ++k)
            m.push_back(static_cast<int>(e[k].small(0, 1 << 20)));
        if (static_cast<int>(m.size()) != nvars)
            e.fail("expected " + std::to_string(nvars) + " exponents");
        auto c = t.find("coeff");
        f.add_term(m, c ? c->rational() : Rational(1));
    }
    return f;
}

/** Point configuration: "points" as a list, or "matrix" with points as columns. */
IntMatrix read_configuration(const Node& p)
{
    if (auto m = p.find("matrix"))
        return m->rows();
    return p.at("points").columns(ambient_of(p));
}

Json value(bool b)
{
    return {{"value", b}};
}

// ---------------------------------------------------------------- commands

typedef std::function<Json(const Node&)> Handler;

const std::map<std::string, Handler>& table()
{
    static const std::map<std::string, Handler> t = {
        // cones
        {"cone dual", [](const Node& p) { return Json{{"cone", to_json(dual(read_cone(p)))}}; }},
        {"cone rays", [](const Node& p) {
             Cone c = read_cone(p);
             return Json{{"rays", columns_to_json(c.rays())},
                         {"lineality", columns_to_json(c.lineality())}};
         }},
        {"cone hilbert-basis", [](const Node& p) {
             Cone c = read_cone(p);
             if (!c.is_pointed())
                 return Json{{"generators", columns_to_json(semigroup_generators(c))}};
             return Json{{"elements", columns_to_json(hilbert_basis(c))}};
         }},
        {"cone is-smooth", [](const Node& p) { return value(read_cone(p).is_smooth()); }},
        {"cone is-simplicial", [](const Node& p) { return value(read_cone(p).is_simplicial()); }},
        {"cone faces", [](const Node& p) {
             Cone c = read_cone(p);
             Json out = Json::array();
             for (const auto& s : face_ray_sets(c))
                 out.push_back({{"rays", one_based(s)}, {"dim", subcone(c, s).dim()}});
             return Json{{"faces", out}};
         }},

        // polytopes
        {"polytope facets", [](const Node& p) {
             LatticePolytope P = read_polytope(p);
             return Json{{"dim", P.dim()},
                         {"vertices", columns_to_json(P.vertices())},
                         {"normals", columns_to_json(P.facet_normals())},
                         {"offsets", to_json(IntVector(Eigen::Map<const IntVector>(
                                         P.facet_offsets().data(), P.num_facets())))},
                         {"equation_normals", columns_to_json(P.equation_normals())},
                         {"equation_offsets",
                          to_json(IntVector(Eigen::Map<const IntVector>(
                              P.equation_offsets().data(),
                              static_cast<int>(P.equation_offsets().size()))))}};
         }},
        {"polytope lattice-points", [](const Node& p) {
             IntMatrix pts = lattice_points(read_polytope(p));
             return Json{{"points", columns_to_json(pts)}, {"count", pts.cols()}};
         }},
        {"polytope volume", [](const Node& p) { return Json{{"volume", to_json(volume(read_polytope(p)))}}; }},
        {"polytope normalized-volume", [](const Node& p) {
             return Json{{"normalized_volume", to_json(normalized_volume(read_polytope(p)))}};
         }},
        {"polytope ehrhart", [](const Node& p) {
             RationalPolynomial E = ehrhart(read_polytope(p));
             Json c = Json::array();
             for (const Rational& q : E.coeffs)
                 c.push_back(to_json(q));
             return Json{{"coeffs", c}, {"text", E.to_string()}};
         }},
        {"polytope minkowski", [](const Node& p) {
             Node ps = p.at("polytopes");
             if (ps.size() == 0)
                 ps.fail("expected at least one polytope");
             LatticePolytope S = read_polytope(ps[0]);
             for (size_t i = 1; i < ps.size(); ++i)
                 S = minkowski_sum(S, read_polytope(ps[i]));
             return Json{{"vertices", columns_to_json(S.vertices())}};
         }},
        {"polytope mixed-volume", [](const Node& p) {
             Node ps = p.at("polytopes");
             std::vector<LatticePolytope> v;
             for (size_t i = 0; i < ps.size(); ++i)
                 v.push_back(read_polytope(ps[i]));
             return Json{{"mixed_volume", to_json(mixed_volume(v))}};
         }},
        {"polytope is-normal", [](const Node& p) { return value(is_normal(read_polytope(p))); }},
        {"polytope is-very-ample", [](const Node& p) { return value(is_very_ample(read_polytope(p))); }},
        {"polytope project-full", [](const Node& p) {
             ProjectedPolytope q = project_full(read_polytope(p));
             return Json{{"origin", to_json(q.origin)},
                         {"basis", columns_to_json(q.basis)},
                         {"vertices", columns_to_json(q.polytope.vertices())}};
         }},

        // fans
        {"fan validate", [](const Node& p) {
             try {
                 Fan f = read_fan(p);
                 return Json{{"valid", true}, {"fan", to_json(f)}};
             } catch (const DomainError& e) {
                 return Json{{"valid", false}, {"reason", e.what()}};
             }
         }},
        {"fan normal-fan", [](const Node& p) { return Json{{"fan", to_json(normal_fan(read_polytope(p)))}}; }},
        {"fan is-complete", [](const Node& p) { return value(is_complete(read_fan(p))); }},
        {"fan is-smooth", [](const Node& p) { return value(is_smooth(read_fan(p))); }},
        {"fan is-simplicial", [](const Node& p) { return value(is_simplicial(read_fan(p))); }},
        {"fan star-subdivide", [](const Node& p) {
             Fan f = read_fan(p);
             int c = static_cast<int>(p.at("cone").small(1, f.num_maximal_cones())) - 1;
             return Json{{"fan", to_json(star_subdivision(f, c))}};
         }},
        {"fan product", [](const Node& p) {
             Node fs = p.at("fans");
             if (fs.size() != 2)
                 fs.fail("expected two fans");
             return Json{{"fan", to_json(product_fan(read_fan(fs[0]), read_fan(fs[1])))}};
         }},
        {"fan limit-cone", [](const Node& p) {
             Fan f = read_fan(p);
             auto c = cone_containing_relint(f, p.at("u").vector(f.ambient_dim()));
             return Json{{"cone", c ? Json(one_based(*c)) : Json()}};
         }},
        {"fan star-quotient", [](const Node& p) {
             Fan f = read_fan(p);
             StarQuotient q = star_quotient_fan(f, p.at("tau").indices(f.num_rays()));
             return Json{{"fan", to_json(q.fan)}, {"projection", rows_to_json(q.projection.matrix)}};
         }},
        {"fan orbits", [](const Node& p) {
             Json out = Json::array();
             for (const OrbitEntry& e : orbit_table(read_fan(p)))
                 out.push_back({{"cone", one_based(e.cone)},
                                {"orbit_dim", e.orbit_dim},
                                {"closure", one_based(e.closure)}});
             return Json{{"orbits", out}};
         }},
        {"fan compatible", [](const Node& p) {
             Fan a = read_fan(p.at("source"));
             Fan b = read_fan(p.at("target"));
             Node m = p.at("map");
             IntMatrix F = m.rows();
             if (F.rows() != b.ambient_dim() || F.cols() != a.ambient_dim())
                 m.fail("map must be a (target dim) x (source dim) matrix");
             return value(is_compatible(LatticeMap{F}, a, b));
         }},

        // ideals
        {"ideal toric", [](const Node& p) {
             IntMatrix A = read_configuration(p);
             auto m = p.find("minimal");
             bool minimal = m && m->boolean();
             std::vector<Polynomial> G = minimal ? toric_minimal_generators(A) : toric_ideal(A);
             Json out = Json::array();
             for (const Polynomial& g : G)
                 out.push_back(g.to_string());
             return Json{{"generators", out}, {"count", G.size()}};
         }},
        {"ideal member", [](const Node& p) {
             int n = static_cast<int>(p.at("nvars").small(1, 1000));
             Node gs = p.at("generators");
             std::vector<Polynomial> G;
             for (size_t i = 0; i < gs.size(); ++i)
                 G.push_back(read_polynomial(gs[i], n));
             Polynomial f = read_polynomial(p.at("polynomial"), n);
             MonomialOrder order = MonomialOrder::grevlex();
             if (auto o = p.find("order")) {
                 std::string s = o->str();
                 if (s == "lex")
                     order = MonomialOrder::lex();
                 else if (s != "grevlex")
                     o->fail("order must be \"lex\" or \"grevlex\"");
             }
             return value(membership(f, G, order));
         }},
        {"ideal hilbert-function", [](const Node& p) {
             IntMatrix A = read_configuration(p);
             Node d = p.at("d");
             if (d.j.is_array()) {
                 Json out = Json::array();
                 for (size_t i = 0; i < d.size(); ++i)
                     out.push_back(to_json(hilbert_function(A, static_cast<int>(d[i].small(0, 1000)))));
                 return Json{{"values", out}};
             }
             return Json{{"value", to_json(hilbert_function(A, static_cast<int>(d.small(0, 1000))))}};
         }},

        // divisors
        {"divisor class-group", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             ClassGroup cg = class_group(*f);
             std::vector<IntVector> classes;
             for (int i = 0; i < f->num_rays(); ++i)
                 classes.push_back(cg.class_of(prime_divisor(f, i)));
             Json out{{"group", to_json(cg.group())},
                      {"torus_factor", cg.torus_factor},
                      {"ray_classes", json_list(classes)}};
             if (p.find("divisor"))
                 out["class"] = to_json(cg.class_of(read_divisor(p, f)));
             return out;
         }},
        {"divisor picard-group", [](const Node& p) { return Json{{"group", to_json(picard_group(read_fan(p)))}}; }},
        {"divisor is-cartier", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             CartierCheck c = is_cartier(read_divisor(p, f));
             if (c.is_cartier())
                 return Json{{"cartier", true}, {"characters", json_list(c.data->characters)}};
             return Json{{"cartier", false}, {"failing_cone", c.failing_cone + 1}};
         }},
        {"divisor min-cartier-multiple", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             auto l = minimal_cartier_multiple(read_divisor(p, f));
             return Json{{"multiple", l ? to_json(*l) : Json("infinity")}};
         }},
        {"divisor sections", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             IntMatrix S = global_sections(read_divisor(p, f));
             return Json{{"exponents", columns_to_json(S)}, {"count", S.cols()}};
         }},
        {"divisor from-polytope", [](const Node& p) {
             LatticePolytope P = read_polytope(p);
             bool given = p.find("fan").has_value();
             FanPtr f = share(given ? read_fan(p.at("fan")) : normal_fan(P));
             TorusInvariantDivisor D = polytope_divisor(P, f);
             Json out{{"divisor", to_json(D.coeffs)}, {"text", D.to_string()}};
             if (!given)
                 out["fan"] = to_json(*f);
             return out;
         }},
        {"divisor polyhedron", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             DivisorPolyhedron P = divisor_polyhedron(read_divisor(p, f));
             Json out{{"normals", columns_to_json(P.normals)},
                      {"offsets", to_json(P.offsets)},
                      {"bounded", P.bounded},
                      {"empty", P.empty}};
             if (P.bounded) {
                 out["vertices"] = rational_columns(P.vertices);
                 out["lattice_points"] = columns_to_json(P.lattice_points);
             }
             return out;
         }},
        {"divisor lin-equiv", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             auto m = linearly_equivalent(read_divisor(p, f), read_divisor(p, f, "other"));
             return Json{{"equivalent", m.has_value()}, {"character", m ? to_json(*m) : Json()}};
         }},

        // cox
        {"cox data", [](const Node& p) {
             CoxData c = cox_data(share(read_fan(p)));
             Json irr = Json::array();
             for (const Monomial& m : c.irrelevant)
                 irr.push_back(monomial_text(m));
             Json prim = Json::array();
             for (const RaySet& s : c.primitive_collections)
                 prim.push_back(one_based(s));
             Json ns = Json::array();
             for (const RaySet& s : non_simplicial_cones(*c.fan))
                 ns.push_back(one_based(s));
             return Json{{"class_group", to_json(c.class_group.group())},
                         {"weights", columns_to_json(c.weights)},
                         {"irrelevant", irr},
                         {"primitive_collections", prim},
                         {"non_simplicial_cones", ns}};
         }},
        {"cox irrelevant", [](const Node& p) {
             Json irr = Json::array();
             for (const Monomial& m : irrelevant_ideal(read_fan(p)))
                 irr.push_back(monomial_text(m));
             return Json{{"generators", irr}};
         }},
        {"cox primitive-collections", [](const Node& p) {
             Json prim = Json::array();
             for (const RaySet& s : primitive_collections(read_fan(p)))
                 prim.push_back(one_based(s));
             return Json{{"collections", prim}};
         }},
        {"cox degree", [](const Node& p) {
             CoxData c = cox_data(share(read_fan(p)));
             IntVector a = p.at("exponents").vector(c.fan->num_rays());
             Monomial m;
             for (int i = 0; i < a.size(); ++i)
                 m.push_back(a(i).convert_to<int>());
             return Json{{"class", to_json(degree(c, m))}};
         }},
        {"cox homogenize", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             TorusInvariantDivisor D = read_divisor(p, f);
             return polynomial_json(homogenize(read_laurent(p.at("polynomial"), f->ambient_dim()), D));
         }},
        {"cox dehomogenize", [](const Node& p) {
             FanPtr f = share(read_fan(p));
             TorusInvariantDivisor D = read_divisor(p, f);
             Polynomial g = read_polynomial(p.at("polynomial"), f->num_rays());
             int c = static_cast<int>(p.at("cone").small(1, f->num_maximal_cones())) - 1;
             return Json{{"polynomial", to_json(dehomogenize(g, D, c))}};
         }},

        // counting
        {"count kushnirenko", [](const Node& p) {
             KushnirenkoCount k = kushnirenko_count(read_configuration(p));
             return Json{{"degree", to_json(k.degree)},
                         {"normalized_volume", to_json(k.normalized_volume)},
                         {"index", to_json(k.index)}};
         }},
        {"count bkk", [](const Node& p) {
             Node eqs = p.at("equations");
             SparseSystem s;
             s.n = static_cast<int>(eqs.size());
             for (size_t i = 0; i < eqs.size(); ++i)
                 s.equations.push_back(read_laurent(eqs[i], s.n));
             FanPtr fan;
             if (p.find("fan"))
                 fan = share(read_fan(p.at("fan")));
             std::vector<std::vector<Rational>> pts;
             if (auto v = p.find("verify"))
                 for (size_t i = 0; i < v->size(); ++i) {
                     Node z = (*v)[i];
                     std::vector<Rational> x;
                     for (size_t k = 0; k < z.size(); ++k)
                         x.push_back(z[k].rational());
                     pts.push_back(x);
                 }
             CountReport r = bkk_count(s, fan, pts);
             Json divs = Json::array();
             Json hom = Json::array();
             for (size_t i = 0; i < r.divisors.size(); ++i) {
                 divs.push_back({{"coeffs", to_json(r.divisors[i].coeffs)}, {"text", r.divisors[i].to_string()}});
                 hom.push_back(r.homogenized[i].to_string());
             }
             Json out{{"bkk", to_json(r.bkk)},
                      {"bezout", r.bezout ? to_json(*r.bezout) : Json()},
                      {"kushnirenko", r.kushnirenko ? to_json(*r.kushnirenko) : Json()},
                      {"lattice_index", to_json(r.lattice_index)},
                      {"rays", columns_to_json(r.fan->rays())},
                      {"divisors", divs},
                      {"homogenized", hom}};
             if (!pts.empty())
                 out["verified"] = r.verified;
             return out;
         }},
        {"count bezout", [](const Node& p) {
             Node d = p.at("degrees");
             std::vector<Integer> ds;
             for (size_t i = 0; i < d.size(); ++i)
                 ds.push_back(d[i].integer());
             return Json{{"bezout", to_json(bezout_count(ds))}};
         }},
    };
    return t;
}

} // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& kv : table())
            v.push_back(kv.first);
        return v;
    }();
    return names;
}

Json execute(const std::string& command, const Json& payload, const std::string& base)
{
    auto it = table().find(command);
    if (it == table().end())
        throw SchemaError(base.empty() ? "/" : base, "unknown command '" + command + "'");
    Node root{payload, base};
    if (!payload.is_object())
        root.fail("payload must be an object");
    if (auto s = root.find("schema"); s && s->integer() != kSchemaVersion)
        s->fail("unsupported schema version");
    Json out = it->second(root);
    out["schema"] = kSchemaVersion;
    return out;
}

Json execute_request(const Json& request)
{
    Node root{request, ""};
    if (!request.is_object())
        root.fail("request must be an object");
    Node s = root.at("schema");
    if (s.integer() != kSchemaVersion)
        s.fail("unsupported schema version");
    std::string command = root.at("command").str();
    Node p = root.at("payload");
    if (table().find(command) == table().end())
        throw SchemaError("/command", "unknown command '" + command + "'");
    return execute(command, p.j, "/payload");
}

Json to_json(const Integer& x)
{
    if (abs(x) < kSafe)
        return Json(x.convert_to<long long>());
    return Json(x.str());
}

Json to_json(const Rational& q)
{
    return Json(toric::to_string(q));
}

Json to_json(const IntVector& v)
{
    Json out = Json::array();
    for (int i = 0; i < v.size(); ++i)
        out.push_back(to_json(v(i)));
    return out;
}

Json columns_to_json(const IntMatrix& M)
{
    Json out = Json::array();
    for (int j = 0; j < M.cols(); ++j)
        out.push_back(to_json(IntVector(M.col(j))));
    return out;
}

Json to_json(const AbelianGroup& G)
{
    Json t = Json::array();
    for (const Integer& d : G.invariant_factors)
        t.push_back(to_json(d));
    return {{"free_rank", G.free_rank}, {"torsion", t}, {"text", G.to_string()}};
}

Json to_json(const Fan& fan)
{
    Json cones = Json::array();
    for (const RaySet& s : fan.maximal_cones())
        cones.push_back(one_based(s));
    return {{"ambient", fan.ambient_dim()}, {"rays", columns_to_json(fan.rays())}, {"max_cones", cones}};
}

Json to_json(const Cone& sigma)
{
    return {{"ambient", sigma.ambient_dim()},
            {"dim", sigma.dim()},
            {"rays", columns_to_json(sigma.rays())},
            {"lineality", columns_to_json(sigma.lineality())},
            {"facets", columns_to_json(sigma.facets())},
            {"equations", columns_to_json(sigma.equations())}};
}

Json to_json(const LaurentPolynomial& f)
{
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms)
        terms.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
    return {{"text", f.to_string()}, {"terms", terms}};
}

} // namespace toric::io
