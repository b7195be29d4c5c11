#ifndef TORIC_SCALAR_HPP
#define TORIC_SCALAR_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace toric {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

typedef Mat<Integer> IntMatrix;
typedef Vec<Integer> IntVector;
typedef Mat<Rational> RatMatrix;
typedef Vec<Rational> RatVector;

/** Raised when an input violates a mathematical precondition. */
class DomainError : public std::runtime_error
{
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/** Build an integer matrix from nested initializer rows. */
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);

/** Build an integer matrix whose columns are the given vectors. */
IntMatrix columns(const std::vector<std::vector<long>>& cols, int rows = -1);

IntVector int_vector(std::initializer_list<long> entries);

std::vector<IntVector> column_list(const IntMatrix& M);
IntMatrix from_columns(const std::vector<IntVector>& cols, int rows);

/** gcd of all entries; zero for the zero vector. */
template <typename Derived>
Integer content(const Eigen::MatrixBase<Derived>& v)
{
    Integer g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = gcd(g, Integer(abs(v(i))));
    return g;
}

/** Divide by the content. */
IntVector primitive(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);

/** Lexicographic comparison of integer vectors. */
bool lex_less(const IntVector& a, const IntVector& b);

struct LexLess
{
    bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

bool equal(const IntVector& a, const IntVector& b);

/** Least common multiple, with lcm(0, x) = 0. */
Integer lcm_int(const Integer& a, const Integer& b);

/** Floor and ceiling of a rational. */
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

/** Rank over the rationals. */
template <typename Scalar>
int rank(const Mat<Scalar>& M);

/** Determinant of a square matrix, computed by fraction-free elimination. */
Integer determinant(const IntMatrix& M);

/** Reduced row echelon form over the rationals; returns pivot columns. */
std::vector<int> rref(RatMatrix& M);

RatMatrix to_rational(const IntMatrix& M);

/** Scale a rational vector to the primitive integer vector on the same ray. */
IntVector clear_denominators(const RatVector& v);

std::string to_string(const Rational& q);

} // namespace toric

#endif
