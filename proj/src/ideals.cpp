#include "toric/ideals.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace toric {

namespace {

int grevlex_compare(const Monomial& a, const Monomial& b, int from, int to)
{
    int da = 0, db = 0;
    for (int i = from; i < to; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return da < db ? -1 : 1;
    for (int i = to - 1; i >= from; --i)
        if (a[i] != b[i])
            return a[i] > b[i] ? -1 : 1;
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    const int n = static_cast<int>(a.size());
    switch (kind) {
    case Lex:
        for (int i = 0; i < n; ++i)
            if (a[i] != b[i])
                return a[i] < b[i] ? -1 : 1;
        return 0;
    case GRevLex:
        return grevlex_compare(a, b, 0, n);
    case Elimination: {
        int c = grevlex_compare(a, b, 0, block);
        return c != 0 ? c : grevlex_compare(a, b, block, n);
    }
    }
    return 0;
}

bool divides(const Monomial& a, const Monomial& b)
{
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

int total_degree(const Monomial& m)
{
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, MonomialOrder order)
{
    Polynomial p(static_cast<int>(m.size()), order);
    if (c != 0)
        p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::binomial(const Monomial& a, const Monomial& b, MonomialOrder order)
{
    Polynomial p(static_cast<int>(a.size()), order);
    p.terms_.push_back({a, Rational(1)});
    p.terms_.push_back({b, Rational(-1)});
    p.normalize();
    return p;
}

void Polynomial::normalize()
{
    std::sort(terms_.begin(), terms_.end(), [this](const Term& x, const Term& y) {
        return order_.compare(x.m, y.m) > 0;
    });
    std::vector<Term> out;
    for (Term& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (out.back().c == 0)
            out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::with_order(MonomialOrder order) const
{
    Polynomial p = *this;
    p.order_ = order;
    p.normalize();
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (static_cast<int>(m.size()) != nvars_)
        throw DomainError("polynomial: monomial length differs from variable count");
    terms_.push_back({m, c});
    normalize();
}

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& shift, const Polynomial& g) const
{
    Polynomial r(nvars_, order_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    Monomial m(nvars_);
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size())
            for (int k = 0; k < nvars_; ++k)
                m[k] = g.terms_[j].m[k] + shift[k];
        int cmp = i == terms_.size() ? -1 : j == g.terms_.size() ? 1 : order_.compare(terms_[i].m, m);
        if (cmp > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
            r.terms_.push_back({m, -c * g.terms_[j++].c});
        } else {
            Rational v = terms_[i].c - c * g.terms_[j].c;
            if (v != 0)
                r.terms_.push_back({m, v});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const
{
    return sub_mul(Rational(-1), Monomial(nvars_, 0), g);
}

Polynomial Polynomial::operator-(const Polynomial& g) const
{
    return sub_mul(Rational(1), Monomial(nvars_, 0), g);
}

Polynomial Polynomial::operator*(const Polynomial& g) const
{
    Polynomial r(nvars_, order_);
    for (const Term& t : terms_)
        r = r.sub_mul(-t.c, t.m, g);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial r(nvars_, order_);
    if (c == 0)
        return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_)
        t.c *= c;
    return r;
}

Polynomial Polynomial::monic() const
{
    return is_zero() ? *this : scaled(1 / leading().c);
}

bool Polynomial::operator==(const Polynomial& g) const
{
    if (nvars_ != g.nvars_ || terms_.size() != g.terms_.size())
        return false;
    Polynomial h = g.with_order(order_);
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != h.terms_[i].m || terms_[i].c != h.terms_[i].c)
            return false;
    return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const
{
    Rational s = 0;
    for (const Term& t : terms_) {
        Rational v = t.c;
        for (int k = 0; k < nvars_; ++k)
            for (int e = 0; e < t.m[k]; ++e)
                v *= x[k];
        s += v;
    }
    return s;
}

bool Polynomial::is_homogeneous() const
{
    for (const Term& t : terms_)
        if (total_degree(t.m) != total_degree(terms_.front().m))
            return false;
    return true;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational a = abs(t.c);
        if (first)
            os << (t.c < 0 ? "-" : "");
        else
            os << (t.c < 0 ? " - " : " + ");
        first = false;
        bool constant = total_degree(t.m) == 0;
        bool need_star = false;
        if (a != 1 || constant) {
            os << a.str();
            need_star = true;
        }
        for (int k = 0; k < nvars_; ++k) {
            if (t.m[k] == 0)
                continue;
            os << (need_star ? "*" : "") << "x" << k + 1;
            if (t.m[k] > 1)
                os << "^" << t.m[k];
            need_star = true;
        }
    }
    return os.str();
}

Polynomial Polynomial::parse(const std::string& text, int nvars, MonomialOrder order)
{
    Polynomial p(nvars, order);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty() || s == "0")
        return p;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    };
    auto read_uint = [&]() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            fail("expected a number");
        return s.substr(start, pos - start);
    };
    while (pos < s.size()) {
        Rational sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!p.terms_.empty() || pos != 0) {
            fail("expected + or -");
        }
        Rational c = 1;
        Monomial m(nvars, 0);
        bool have_factor = false;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (have_factor) {
                if (s[pos] != '*')
                    fail("expected *");
                ++pos;
            }
            if (pos < s.size() && s[pos] == 'x') {
                ++pos;
                int v = std::stoi(read_uint());
                if (v < 1 || v > nvars)
                    fail("variable index out of range");
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    e = std::stoi(read_uint());
                }
                m[v - 1] += e;
            } else {
                std::string num = read_uint();
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    num += "/" + read_uint();
                }
                c *= Rational(num);
            }
            have_factor = true;
        }
        if (!have_factor)
            fail("empty term");
        p.terms_.push_back({m, sign * c});
    }
    p.normalize();
    return p;
}

namespace {

unsigned long long support_mask(const Monomial& m)
{
    unsigned long long b = 0;
    for (size_t i = 0; i < m.size() && i < 64; ++i)
        if (m[i] > 0)
            b |= 1ull << i;
    return b;
}

struct Reducer
{
    std::vector<const Polynomial*> polys;
    std::vector<unsigned long long> masks;

    void add(const Polynomial* p)
    {
        polys.push_back(p);
        masks.push_back(support_mask(p->leading().m));
    }

    const Polynomial* find(const Monomial& m) const
    {
        unsigned long long mm = support_mask(m);
        for (size_t i = 0; i < polys.size(); ++i)
            if ((masks[i] & ~mm) == 0 && divides(polys[i]->leading().m, m))
                return polys[i];
        return nullptr;
    }

    Polynomial reduce(const Polynomial& f) const
    {
        Polynomial p = f;
        Polynomial r(f.nvars(), f.order());
        std::vector<Term> rest;
        Monomial shift(f.nvars());
        while (!p.is_zero()) {
            const Term& lt = p.leading();
            const Polynomial* g = find(lt.m);
            if (!g) {
                rest.push_back(lt);
                p = p.sub_mul(Rational(1), Monomial(f.nvars(), 0), Polynomial::monomial(lt.m, lt.c, f.order()));
                continue;
            }
            for (int k = 0; k < f.nvars(); ++k)
                shift[k] = lt.m[k] - g->leading().m[k];
            p = p.sub_mul(lt.c / g->leading().c, shift, *g);
        }
        for (const Term& t : rest)
            r = r.sub_mul(Rational(-1), Monomial(f.nvars(), 0), Polynomial::monomial(t.m, t.c, f.order()));
        return r;
    }
};

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G)
{
    Reducer red;
    std::vector<Polynomial> H;
    H.reserve(G.size());
    for (const Polynomial& g : G)
        if (!g.is_zero())
            H.push_back(g.with_order(f.order()));
    for (const Polynomial& h : H)
        red.add(&h);
    return red.reduce(f);
}

namespace {

struct PairEntry
{
    int i, j;
    Monomial lcm;
    int deg;
};

Polynomial spoly(const Polynomial& f, const Polynomial& g, const Monomial& l)
{
    const int n = f.nvars();
    Monomial sf(n), sg(n);
    for (int k = 0; k < n; ++k) {
        sf[k] = l[k] - f.leading().m[k];
        sg[k] = l[k] - g.leading().m[k];
    }
    Polynomial a = Polynomial(n, f.order()).sub_mul(Rational(-1) / f.leading().c, sf, f);
    return a.sub_mul(Rational(1) / g.leading().c, sg, g);
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0 && b[k] > 0)
            return false;
    return true;
}

} // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, MonomialOrder order)
{
    std::vector<Polynomial> G;
    std::vector<bool> active;
    if (gens.empty())
        return {};
    const int n = gens.front().nvars();
    auto cmp = [&order](const PairEntry& a, const PairEntry& b) {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        int c = order.compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    };
    std::set<PairEntry, decltype(cmp)> B(cmp);

    auto update = [&](int h) {
        const Monomial& lh = G[h].leading().m;
        std::vector<PairEntry> C, D;
        for (int g = 0; g < h; ++g)
            if (active[g]) {
                Monomial l = lcm(lh, G[g].leading().m);
                C.push_back({g, h, l, total_degree(l)});
            }
        for (size_t a = 0; a < C.size(); ++a) {
            const PairEntry& p = C[a];
            bool keep = coprime(lh, G[p.i].leading().m);
            if (!keep) {
                keep = true;
                for (size_t b = a + 1; b < C.size() && keep; ++b)
                    if (divides(C[b].lcm, p.lcm))
                        keep = false;
                for (size_t b = 0; b < D.size() && keep; ++b)
                    if (divides(D[b].lcm, p.lcm))
                        keep = false;
            }
            if (keep)
                D.push_back(p);
        }
        for (auto it = B.begin(); it != B.end();) {
            const PairEntry& p = *it;
            if (divides(lh, p.lcm) && lcm(G[p.i].leading().m, lh) != p.lcm &&
                lcm(G[p.j].leading().m, lh) != p.lcm)
                it = B.erase(it);
            else
                ++it;
        }
        for (const PairEntry& p : D)
            if (!coprime(lh, G[p.i].leading().m))
                B.insert(p);
        for (int g = 0; g < h; ++g)
            if (active[g] && divides(lh, G[g].leading().m))
                active[g] = false;
    };

    Reducer red;
    auto rebuild = [&]() {
        red = Reducer();
        for (size_t g = 0; g < G.size(); ++g)
            if (active[g])
                red.add(&G[g]);
    };

    G.reserve(1024);
    for (const Polynomial& f : gens) {
        Polynomial p = f.with_order(order);
        rebuild();
        p = red.reduce(p);
        if (p.is_zero())
            continue;
        if (G.size() == G.capacity()) {
            G.reserve(G.size() * 2);
        }
        G.push_back(p.monic());
        active.push_back(true);
        update(static_cast<int>(G.size()) - 1);
    }
    rebuild();
    while (!B.empty()) {
        PairEntry p = *B.begin();
        B.erase(B.begin());
        Polynomial s = spoly(G[p.i], G[p.j], p.lcm);
        Polynomial r = red.reduce(s);
        if (r.is_zero())
            continue;
        if (G.size() == G.capacity())
            G.reserve(G.size() * 2);
        G.push_back(r.monic());
        active.push_back(true);
        update(static_cast<int>(G.size()) - 1);
        rebuild();
    }

    std::vector<Polynomial> minimal;
    for (size_t g = 0; g < G.size(); ++g)
        if (active[g])
            minimal.push_back(G[g]);
    std::vector<Polynomial> reduced;
    for (size_t a = 0; a < minimal.size(); ++a) {
        Reducer others;
        for (size_t b = 0; b < minimal.size(); ++b)
            if (b != a)
                others.add(&minimal[b]);
        Polynomial tail = Polynomial::monomial(minimal[a].leading().m, minimal[a].leading().c, order);
        Polynomial rest = minimal[a] - tail;
        reduced.push_back((tail + others.reduce(rest)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& x, const Polynomial& y) {
        return order.compare(x.leading().m, y.leading().m) < 0;
    });
    (void)n;
    return reduced;
}

std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const std::vector<int>& varset)
{
    if (gens.empty())
        return {};
    const int n = gens.front().nvars();
    const MonomialOrder elim = MonomialOrder::elimination(1);
    std::vector<Polynomial> lifted;
    for (const Polynomial& f : gens) {
        Polynomial p(n + 1, elim);
        for (const Term& t : f.terms()) {
            Monomial m(n + 1, 0);
            std::copy(t.m.begin(), t.m.end(), m.begin() + 1);
            p.add_term(m, t.c);
        }
        lifted.push_back(p);
    }
    Monomial tx(n + 1, 0);
    tx[0] = 1;
    for (int v : varset) {
        if (v < 0 || v >= n)
            throw DomainError("saturate: variable index out of range");
        tx[v + 1] += 1;
    }
    lifted.push_back(Polynomial::binomial(tx, Monomial(n + 1, 0), elim));
    std::vector<Polynomial> out;
    for (const Polynomial& g : buchberger(lifted, elim)) {
        bool free_of_t = true;
        for (const Term& t : g.terms())
            free_of_t = free_of_t && t.m[0] == 0;
        if (!free_of_t)
            continue;
        Polynomial p(n);
        for (const Term& t : g.terms())
            p.add_term(Monomial(t.m.begin() + 1, t.m.end()), t.c);
        out.push_back(p);
    }
    return buchberger(out, MonomialOrder::grevlex());
}

std::vector<Polynomial> toric_ideal(const IntMatrix& A)
{
    const int s = static_cast<int>(A.cols());
    if (s == 0)
        throw DomainError("toric_ideal: empty configuration");
    IntMatrix K = kernel_basis(A);
    if (K.cols() == 0)
        return {};
    std::vector<Polynomial> gens;
    for (int j = 0; j < K.cols(); ++j) {
        Monomial plus(s, 0), minus(s, 0);
        for (int i = 0; i < s; ++i) {
            int e = K(i, j).convert_to<int>();
            (e > 0 ? plus[i] : minus[i]) = std::abs(e);
        }
        gens.push_back(Polynomial::binomial(plus, minus));
    }
    std::vector<int> all(s);
    for (int i = 0; i < s; ++i)
        all[i] = i;
    return saturate(gens, all);
}

namespace {

Integer weighted_degree(const Monomial& m, const std::vector<Integer>& w)
{
    Integer d = 0;
    for (size_t i = 0; i < m.size(); ++i)
        d += w[i] * m[i];
    return d;
}

} // namespace

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens,
                                           const std::vector<Integer>& weights)
{
    std::vector<std::pair<Integer, Polynomial>> byd;
    for (const Polynomial& f : gens) {
        if (f.is_zero())
            continue;
        Integer d = weighted_degree(f.leading().m, weights);
        for (const Term& t : f.terms())
            if (weighted_degree(t.m, weights) != d)
                throw DomainError("minimal_generators: generator is not homogeneous");
        byd.emplace_back(d, f.with_order(MonomialOrder::grevlex()));
    }
    std::stable_sort(byd.begin(), byd.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Polynomial> chosen;
    size_t i = 0;
    while (i < byd.size()) {
        size_t j = i;
        while (j < byd.size() && byd[j].first == byd[i].first)
            ++j;
        std::vector<Polynomial> G = chosen.empty() ? chosen : buchberger(chosen, MonomialOrder::grevlex());
        // echelon rows: normal forms reduced against each other by leading monomial
        std::vector<Polynomial> echelon;
        for (size_t k = i; k < j; ++k) {
            Polynomial r = normal_form(byd[k].second, G);
            bool changed = true;
            while (!r.is_zero() && changed) {
                changed = false;
                for (const Polynomial& e : echelon)
                    if (e.leading().m == r.leading().m) {
                        r = r.sub_mul(r.leading().c / e.leading().c, Monomial(r.nvars(), 0), e);
                        changed = true;
                        break;
                    }
            }
            if (r.is_zero())
                continue;
            echelon.push_back(r);
            chosen.push_back(byd[k].second);
        }
        i = j;
    }
    return chosen;
}

std::vector<Integer> toric_grading(const IntMatrix& A)
{
    Cone c = Cone::from_generators(A, static_cast<int>(A.rows()));
    if (!c.is_pointed())
        throw DomainError("toric_grading: configuration spans a non-pointed cone");
    IntVector w = IntVector::Zero(A.rows());
    for (int j = 0; j < c.facets().cols(); ++j)
        w += c.facets().col(j);
    std::vector<Integer> out;
    for (int j = 0; j < A.cols(); ++j) {
        out.push_back(dot(w, A.col(j)));
        if (out.back() <= 0)
            throw DomainError("toric_grading: configuration contains the zero vector");
    }
    return out;
}

std::vector<Polynomial> toric_minimal_generators(const IntMatrix& A)
{
    return minimal_generators(toric_ideal(A), toric_grading(A));
}

bool membership(const Polynomial& f, const std::vector<Polynomial>& gens, MonomialOrder order)
{
    if (f.is_zero())
        return true;
    if (gens.empty())
        return false;
    return normal_form(f.with_order(order), buchberger(gens, order)).is_zero();
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b)
{
    MonomialOrder o = MonomialOrder::grevlex();
    std::vector<Polynomial> ga = a.empty() ? a : buchberger(a, o);
    std::vector<Polynomial> gb = b.empty() ? b : buchberger(b, o);
    for (const Polynomial& f : b)
        if (!normal_form(f.with_order(o), ga).is_zero())
            return false;
    for (const Polynomial& f : a)
        if (!normal_form(f.with_order(o), gb).is_zero())
            return false;
    return true;
}

std::optional<HomogeneityWitness> is_homogeneous_config(const IntMatrix& A)
{
    RatMatrix At = to_rational(A).transpose();
    RatVector ones = RatVector::Constant(A.cols(), Rational(1));
    auto u = solve_rational(At, ones);
    if (!u)
        return std::nullopt;
    Integer L = 1;
    for (int i = 0; i < u->size(); ++i)
        L = lcm_int(L, denominator((*u)(i)));
    HomogeneityWitness w;
    w.u.resize(u->size());
    for (int i = 0; i < u->size(); ++i)
        w.u(i) = numerator((*u)(i) * Rational(L));
    Integer g = gcd(content(w.u), L);
    if (g > 1) {
        for (int i = 0; i < w.u.size(); ++i)
            w.u(i) /= g;
        L /= g;
    }
    w.c = L;
    return w;
}

Integer hilbert_function(const IntMatrix& A, int d)
{
    if (d < 0)
        throw DomainError("hilbert_function: negative degree");
    std::set<IntVector, LexLess> cur{IntVector::Zero(A.rows())};
    for (int k = 0; k < d; ++k) {
        std::set<IntVector, LexLess> next;
        for (const IntVector& v : cur)
            for (int j = 0; j < A.cols(); ++j)
                next.insert(IntVector(v + A.col(j)));
        cur = std::move(next);
    }
    return Integer(cur.size());
}

IntMatrix chart_config(const IntMatrix& A, int i)
{
    if (i < 0 || i >= A.cols())
        throw DomainError("chart_config: column index out of range");
    IntMatrix B = A;
    for (int j = 0; j < A.cols(); ++j)
        B.col(j) -= A.col(i);
    return B;
}

void LaurentPolynomial::add_term(const IntVector& e, const Rational& c)
{
    auto it = std::lower_bound(terms.begin(), terms.end(), e,
                               [](const auto& t, const IntVector& x) { return lex_less(t.first, x); });
    if (it != terms.end() && equal(it->first, e)) {
        it->second += c;
        if (it->second == 0)
            terms.erase(it);
    } else if (c != 0) {
        terms.insert(it, {e, c});
    }
}

std::string LaurentPolynomial::to_string() const
{
    if (terms.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool star = false;
        bool constant = true;
        for (int k = 0; k < e.size(); ++k)
            constant = constant && e(k) == 0;
        if (a != 1 || constant) {
            os << a.str();
            star = true;
        }
        for (int k = 0; k < e.size(); ++k) {
            if (e(k) == 0)
                continue;
            os << (star ? "*" : "") << "t" << k + 1;
            if (e(k) != 1)
                os << "^" << (e(k) < 0 ? "(" + e(k).str() + ")" : e(k).str());
            star = true;
        }
    }
    return os.str();
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& other) const
{
    if (terms.size() != other.terms.size())
        return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (!equal(terms[i].first, other.terms[i].first) || terms[i].second != other.terms[i].second)
            return false;
    return true;
}

} // namespace toric
