#include "toric/zlattice.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    IntMatrix M(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("ragged matrix literal");
        int j = 0;
        for (long x : row)
            M(i, j++) = x;
        ++i;
    }
    return M;
}

IntMatrix columns(const std::vector<std::vector<long>>& cols, int rows)
{
    if (rows < 0)
        rows = cols.empty() ? 0 : static_cast<int>(cols.front().size());
    IntMatrix M(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < rows; ++i)
            M(i, j) = cols[j][i];
    }
    return M;
}

IntVector int_vector(std::initializer_list<long> entries)
{
    IntVector v(static_cast<int>(entries.size()));
    int i = 0;
    for (long x : entries)
        v(i++) = x;
    return v;
}

std::vector<IntVector> column_list(const IntMatrix& M)
{
    std::vector<IntVector> out;
    out.reserve(M.cols());
    for (int j = 0; j < M.cols(); ++j)
        out.push_back(M.col(j));
    return out;
}

IntMatrix from_columns(const std::vector<IntVector>& cols, int rows)
{
    IntMatrix M(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        M.col(j) = cols[j];
    return M;
}

IntVector primitive(const IntVector& v)
{
    Integer g = content(v);
    if (g == 0 || g == 1)
        return v;
    IntVector w(v.size());
    for (int i = 0; i < v.size(); ++i)
        w(i) = v(i) / g;
    return w;
}

Integer dot(const IntVector& a, const IntVector& b)
{
    Integer s = 0;
    for (int i = 0; i < a.size(); ++i)
        s += a(i) * b(i);
    return s;
}

bool lex_less(const IntVector& a, const IntVector& b)
{
    const int n = static_cast<int>(std::min(a.size(), b.size()));
    for (int i = 0; i < n; ++i) {
        if (a(i) < b(i))
            return true;
        if (b(i) < a(i))
            return false;
    }
    return a.size() < b.size();
}

bool equal(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size())
        return false;
    for (int i = 0; i < a.size(); ++i)
        if (a(i) != b(i))
            return false;
    return true;
}

Integer lcm_int(const Integer& a, const Integer& b)
{
    if (a == 0 || b == 0)
        return 0;
    return abs(a / gcd(a, b) * b);
}

Integer floor_q(const Rational& q)
{
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;
    if (n % d != 0 && n < 0)
        f -= 1;
    return f;
}

Integer ceil_q(const Rational& q)
{
    return -floor_q(-q);
}

RatMatrix to_rational(const IntMatrix& M)
{
    RatMatrix R(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            R(i, j) = Rational(M(i, j));
    return R;
}

std::vector<int> rref(RatMatrix& M)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols() && row < M.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < M.rows(); ++i)
            if (M(i, col) != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        if (sel != row)
            M.row(sel).swap(M.row(row));
        Rational inv = 1 / M(row, col);
        for (int j = col; j < M.cols(); ++j)
            M(row, j) *= inv;
        for (int i = 0; i < M.rows(); ++i) {
            if (i == row || M(i, col) == 0)
                continue;
            Rational f = M(i, col);
            for (int j = col; j < M.cols(); ++j)
                M(i, j) -= f * M(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename Scalar>
int rank(const Mat<Scalar>& M)
{
    RatMatrix R(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            R(i, j) = Rational(M(i, j));
    return static_cast<int>(rref(R).size());
}

template int rank<Integer>(const Mat<Integer>&);
template int rank<Rational>(const Mat<Rational>&);

Integer determinant(const IntMatrix& M)
{
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const int n = static_cast<int>(M.rows());
    if (n == 0)
        return 1;
    IntMatrix A = M;
    Integer sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A(k, k) == 0) {
            int sel = -1;
            for (int i = k + 1; i < n; ++i)
                if (A(i, k) != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0)
                return 0;
            A.row(sel).swap(A.row(k));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
        prev = A(k, k);
    }
    return sign * A(n - 1, n - 1);
}

IntVector clear_denominators(const RatVector& v)
{
    Integer l = 1;
    for (int i = 0; i < v.size(); ++i)
        l = lcm_int(l, denominator(v(i)));
    IntVector w(v.size());
    for (int i = 0; i < v.size(); ++i)
        w(i) = numerator(v(i) * l);
    return primitive(w);
}

std::string to_string(const Rational& q)
{
    return q.str();
}

namespace {

void col_axpy(IntMatrix& A, int dst, const Integer& q, int src)
{
    for (int i = 0; i < A.rows(); ++i)
        A(i, dst) -= q * A(i, src);
}

void row_axpy(IntMatrix& A, int dst, const Integer& q, int src)
{
    for (int j = 0; j < A.cols(); ++j)
        A(dst, j) -= q * A(src, j);
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

} // namespace

HermiteForm hnf(const IntMatrix& M)
{
    HermiteForm out;
    out.H = M;
    out.U = IntMatrix::Identity(M.cols(), M.cols());
    IntMatrix& H = out.H;
    IntMatrix& U = out.U;
    const int n = static_cast<int>(M.cols());
    int p = 0;
    for (int r = 0; r < M.rows() && p < n; ++r) {
        while (true) {
            int sel = -1;
            for (int c = p; c < n; ++c)
                if (H(r, c) != 0 && (sel < 0 || abs(H(r, c)) < abs(H(r, sel))))
                    sel = c;
            if (sel < 0)
                break;
            if (sel != p) {
                H.col(sel).swap(H.col(p));
                U.col(sel).swap(U.col(p));
            }
            bool done = true;
            for (int c = p + 1; c < n; ++c) {
                if (H(r, c) == 0)
                    continue;
                Integer q = floor_div(H(r, c), H(r, p));
                col_axpy(H, c, q, p);
                col_axpy(U, c, q, p);
                if (H(r, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (H(r, p) == 0)
            continue;
        if (H(r, p) < 0) {
            H.col(p) = -H.col(p);
            U.col(p) = -U.col(p);
        }
        for (int c = 0; c < p; ++c) {
            Integer q = floor_div(H(r, c), H(r, p));
            if (q != 0) {
                col_axpy(H, c, q, p);
                col_axpy(U, c, q, p);
            }
        }
        ++p;
    }
    out.rank = p;
    return out;
}

std::vector<Integer> SmithForm::diagonal() const
{
    std::vector<Integer> d;
    for (int i = 0; i < rank; ++i)
        d.push_back(S(i, i));
    return d;
}

SmithForm snf(const IntMatrix& M)
{
    SmithForm out;
    const int m = static_cast<int>(M.rows()), n = static_cast<int>(M.cols());
    out.S = M;
    out.P = IntMatrix::Identity(m, m);
    out.Q = IntMatrix::Identity(n, n);
    IntMatrix& S = out.S;
    IntMatrix& P = out.P;
    IntMatrix& Q = out.Q;
    int t = 0;
    for (; t < std::min(m, n); ++t) {
        bool empty = false;
        while (true) {
            int bi = -1, bj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (S(i, j) != 0 && (bi < 0 || abs(S(i, j)) < abs(S(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) {
                empty = true;
                break;
            }
            if (bi != t) {
                S.row(bi).swap(S.row(t));
                P.row(bi).swap(P.row(t));
            }
            if (bj != t) {
                S.col(bj).swap(S.col(t));
                Q.col(bj).swap(Q.col(t));
            }
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (S(i, t) == 0)
                    continue;
                Integer q = S(i, t) / S(t, t);
                row_axpy(S, i, q, t);
                row_axpy(P, i, q, t);
                if (S(i, t) != 0)
                    clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (S(t, j) == 0)
                    continue;
                Integer q = S(t, j) / S(t, t);
                col_axpy(S, j, q, t);
                col_axpy(Q, j, q, t);
                if (S(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            row_axpy(S, t, Integer(-1), bad);
            row_axpy(P, t, Integer(-1), bad);
        }
        if (empty)
            break;
        if (S(t, t) < 0) {
            S.row(t) = -S.row(t);
            P.row(t) = -P.row(t);
        }
    }
    out.rank = t;
    return out;
}

IntMatrix kernel_basis(const IntMatrix& M)
{
    SmithForm s = snf(M);
    const int n = static_cast<int>(M.cols());
    IntMatrix K = s.Q.rightCols(n - s.rank);
    return lll_reduce(K);
}

std::string AbelianGroup::to_string() const
{
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1)
            os << "^" << free_rank;
        first = false;
    }
    for (const Integer& d : invariant_factors) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

IntVector Cokernel::coordinates(const IntVector& v) const
{
    IntVector c = proj * v;
    for (int i = 0; i < c.size(); ++i)
        if (moduli[i] != 0) {
            c(i) %= moduli[i];
            if (c(i) < 0)
                c(i) += moduli[i];
        }
    return c;
}

Cokernel cokernel(const IntMatrix& M)
{
    SmithForm s = snf(M);
    const int m = static_cast<int>(M.rows());
    Cokernel out;
    std::vector<int> rows;
    for (int i = s.rank; i < m; ++i) {
        rows.push_back(i);
        out.moduli.push_back(0);
    }
    out.group.free_rank = m - s.rank;
    for (int i = 0; i < s.rank; ++i)
        if (s.S(i, i) != 1) {
            rows.push_back(i);
            out.moduli.push_back(s.S(i, i));
            out.group.invariant_factors.push_back(s.S(i, i));
        }
    out.proj.resize(static_cast<int>(rows.size()), m);
    for (size_t k = 0; k < rows.size(); ++k)
        out.proj.row(k) = s.P.row(rows[k]);
    return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& M, const IntVector& b)
{
    if (b.size() != M.rows())
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithForm s = snf(M);
    IntVector c = s.P * b;
    IntVector y = IntVector::Zero(M.cols());
    for (int i = 0; i < c.size(); ++i) {
        if (i < s.rank) {
            if (c(i) % s.S(i, i) != 0)
                return std::nullopt;
            y(i) = c(i) / s.S(i, i);
        } else if (c(i) != 0) {
            return std::nullopt;
        }
    }
    return IntVector(s.Q * y);
}

std::optional<RatVector> solve_rational(const RatMatrix& M, const RatVector& b)
{
    RatMatrix A(M.rows(), M.cols() + 1);
    A.leftCols(M.cols()) = M;
    A.col(M.cols()) = b;
    std::vector<int> piv = rref(A);
    if (!piv.empty() && piv.back() == M.cols())
        return std::nullopt;
    RatVector x = RatVector::Zero(M.cols());
    for (size_t i = 0; i < piv.size(); ++i)
        x(piv[i]) = A(i, M.cols());
    return x;
}

IntMatrix lattice_basis(const IntMatrix& M)
{
    HermiteForm h = hnf(M);
    return h.H.leftCols(h.rank);
}

std::optional<Integer> lattice_index(const IntMatrix& Msub, const IntMatrix& Msup)
{
    IntMatrix B = lattice_basis(Msup);
    if (rank(Msub) != B.cols())
        return std::nullopt;
    IntMatrix C(B.cols(), Msub.cols());
    for (int j = 0; j < Msub.cols(); ++j) {
        auto x = solve_integer(B, Msub.col(j));
        if (!x)
            throw DomainError("lattice_index: generator outside the superlattice");
        C.col(j) = *x;
    }
    Integer idx = 1;
    for (const Integer& d : snf(C).diagonal())
        idx *= d;
    return idx;
}

IntMatrix affine_lattice_gens(const IntMatrix& A)
{
    if (A.cols() == 0)
        throw DomainError("affine_lattice_gens: empty configuration");
    IntMatrix D(A.rows(), A.cols() - 1);
    for (int j = 1; j < A.cols(); ++j)
        D.col(j - 1) = A.col(j) - A.col(0);
    return D;
}

IntMatrix saturated_span_basis(const IntMatrix& M)
{
    const int n = static_cast<int>(M.rows());
    if (M.cols() == 0)
        return IntMatrix(n, 0);
    IntMatrix K = kernel_basis(M.transpose());
    IntMatrix S = K.cols() == 0 ? IntMatrix(IntMatrix::Identity(n, n))
                                : kernel_basis(K.transpose());
    return lattice_basis(S);
}

IntMatrix inverse_unimodular(const IntMatrix& U)
{
    const int n = static_cast<int>(U.rows());
    RatMatrix A(n, 2 * n);
    A.leftCols(n) = to_rational(U);
    A.rightCols(n) = RatMatrix::Identity(n, n);
    rref(A);
    IntMatrix V(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& q = A(i, n + j);
            if (denominator(q) != 1)
                throw std::logic_error("inverse_unimodular: not unimodular");
            V(i, j) = numerator(q);
        }
    return V;
}

LatticeSplit split_lattice(const IntMatrix& B)
{
    SmithForm s = snf(B);
    for (const Integer& d : s.diagonal())
        if (d != 1)
            throw DomainError("split_lattice: basis is not saturated");
    LatticeSplit out;
    out.k = s.rank;
    out.Uinv = s.P;
    out.U = inverse_unimodular(s.P);
    return out;
}

IntMatrix lll_reduce(const IntMatrix& B0)
{
    const int k = static_cast<int>(B0.cols());
    if (k <= 1)
        return B0;
    IntMatrix B = B0;
    const int n = static_cast<int>(B.rows());
    RatMatrix mu(k, k);
    std::vector<Rational> bstar(k);
    std::vector<RatVector> gs(k);
    auto recompute = [&]() {
        for (int i = 0; i < k; ++i) {
            RatVector v(n);
            for (int r = 0; r < n; ++r)
                v(r) = Rational(B(r, i));
            for (int j = 0; j < i; ++j) {
                Rational num = 0;
                for (int r = 0; r < n; ++r)
                    num += Rational(B(r, i)) * gs[j](r);
                mu(i, j) = num / bstar[j];
                for (int r = 0; r < n; ++r)
                    v(r) -= mu(i, j) * gs[j](r);
            }
            gs[i] = v;
            Rational s = 0;
            for (int r = 0; r < n; ++r)
                s += v(r) * v(r);
            bstar[i] = s;
        }
    };
    recompute();
    int i = 1;
    const Rational delta(3, 4);
    while (i < k) {
        for (int j = i - 1; j >= 0; --j) {
            Integer q = floor_q(mu(i, j) + Rational(1, 2));
            if (q != 0) {
                col_axpy(B, i, q, j);
                for (int l = 0; l <= j; ++l)
                    mu(i, l) -= Rational(q) * (l == j ? Rational(1) : mu(j, l));
            }
        }
        if (bstar[i] >= (delta - mu(i, i - 1) * mu(i, i - 1)) * bstar[i - 1]) {
            ++i;
        } else {
            B.col(i).swap(B.col(i - 1));
            recompute();
            i = std::max(i - 1, 1);
        }
    }
    return B;
}

Rational RationalPolynomial::operator()(const Rational& x) const
{
    Rational r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = r * x + *it;
    return r;
}

std::string RationalPolynomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs[i];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        if (a != 1 || i == 0)
            os << a.str();
        if (i > 0)
            os << (a != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    if (first)
        os << "0";
    return os.str();
}

RationalPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points)
{
    const int m = static_cast<int>(points.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw DomainError("interpolate: duplicate abscissae");
    RatMatrix V(m, m);
    RatVector y(m);
    for (int i = 0; i < m; ++i) {
        Rational p = 1;
        for (int j = 0; j < m; ++j) {
            V(i, j) = p;
            p *= Rational(points[i].first);
        }
        y(i) = points[i].second;
    }
    RatVector c = *solve_rational(V, y);
    RationalPolynomial out;
    out.coeffs.assign(c.data(), c.data() + m);
    while (out.coeffs.size() > 1 && out.coeffs.back() == 0)
        out.coeffs.pop_back();
    if (out.coeffs.empty())
        out.coeffs.push_back(0);
    return out;
}

} // namespace toric
