#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <string>

namespace cathei {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor, std::int64_t>;

using QMatrix = DenseMatrix<Rational>;
using QSparse = SparseMatrix<Rational>;

inline Rational frac(long long num, long long den) { return Rational(num) / Rational(den); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(const std::string& s) { return Rational(s); }

}  // namespace cathei
