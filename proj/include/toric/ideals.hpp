#ifndef TORIC_IDEALS_HPP
#define TORIC_IDEALS_HPP

#include <optional>

#include "toric/cones.hpp"

namespace toric {

typedef std::vector<int> Monomial;

struct MonomialOrder
{
    enum Kind { Lex, GRevLex, Elimination };
    Kind kind = GRevLex;
    /** For Elimination: the first `block` variables are eliminated. */
    int block = 0;

    static MonomialOrder lex() { return {Lex, 0}; }
    static MonomialOrder grevlex() { return {GRevLex, 0}; }
    static MonomialOrder elimination(int k) { return {Elimination, k}; }

    /** Negative, zero or positive as a < b, a = b, a > b. */
    int compare(const Monomial& a, const Monomial& b) const;
};

struct Term
{
    Monomial m;
    Rational c;
};

/** Sparse polynomial; terms kept in decreasing order under `order`. */
class Polynomial
{
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars, MonomialOrder order = MonomialOrder::grevlex())
        : nvars_(nvars), order_(order)
    {
    }

    static Polynomial monomial(const Monomial& m, const Rational& c,
                               MonomialOrder order = MonomialOrder::grevlex());
    /** x^a - x^b */
    static Polynomial binomial(const Monomial& a, const Monomial& b,
                               MonomialOrder order = MonomialOrder::grevlex());
    /** Parses text such as "x1^2*x4 - 3/2*x2"; variables are x1..x<nvars>. */
    static Polynomial parse(const std::string& text, int nvars,
                            MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const { return nvars_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const { return terms_.front(); }

    Polynomial with_order(MonomialOrder order) const;
    void add_term(const Monomial& m, const Rational& c);
    /** this - c * x^shift * g */
    Polynomial sub_mul(const Rational& c, const Monomial& shift, const Polynomial& g) const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial monic() const;
    bool operator==(const Polynomial& g) const;

    Rational evaluate(const std::vector<Rational>& x) const;
    bool is_homogeneous() const;
    std::string to_string() const;

  private:
    int nvars_ = 0;
    MonomialOrder order_;
    std::vector<Term> terms_;
    void normalize();
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
int total_degree(const Monomial& m);

/** Normal form of f modulo G (full reduction). */
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/** Reduced Groebner basis, monic, sorted by increasing leading monomial. */
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, MonomialOrder order);

/** Generators of I : (prod of variables in varset)^infinity (varset 0-based). */
std::vector<Polynomial> saturate(const std::vector<Polynomial>& gens, const std::vector<int>& varset);

/** Reduced grevlex Groebner basis of the toric ideal of the columns of A. */
std::vector<Polynomial> toric_ideal(const IntMatrix& A);

/**
 * Minimal generating set of the ideal generated by gens, which must be
 * homogeneous for the positive variable weights. Processed degree by degree.
 */
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens,
                                           const std::vector<Integer>& weights);

/** Positive weights making the toric ideal of A homogeneous; throws if none exist. */
std::vector<Integer> toric_grading(const IntMatrix& A);

/** Minimal binomial generators of the toric ideal of A. */
std::vector<Polynomial> toric_minimal_generators(const IntMatrix& A);

bool membership(const Polynomial& f, const std::vector<Polynomial>& gens, MonomialOrder order);
/** Mutual membership. */
bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);

struct HomogeneityWitness
{
    IntVector u;
    Integer c;
};
std::optional<HomogeneityWitness> is_homogeneous_config(const IntMatrix& A);

Integer hilbert_function(const IntMatrix& A, int d);

/** Columns of A minus column i. */
IntMatrix chart_config(const IntMatrix& A, int i);

/** Laurent polynomial: terms sorted by exponent (lexicographic), no zero coefficients. */
struct LaurentPolynomial
{
    std::vector<std::pair<IntVector, Rational>> terms;

    void add_term(const IntVector& e, const Rational& c);
    std::string to_string() const;
    bool operator==(const LaurentPolynomial& other) const;
};

} // namespace toric

#endif
