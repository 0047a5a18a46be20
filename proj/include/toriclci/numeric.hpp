#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

// Eigen adapters for the GMP scalar types, following the custom-scalar
// recipe from the Eigen manual.  All matrix arithmetic in this library is
// exact: integers are mpz_class, rationals mpq_class.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace toriclci {

using Int = mpz_class;
using Rat = mpq_class;

using ZMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using ZVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using ZCovector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// <covector, point> pairing.
inline Int pairing(const ZCovector& w, const ZVector& x) { return (w * x).value(); }

// k-th dual unit covector e_k (1-based), ambient dimension d.
inline ZCovector unit_covector(int d, int k) {
  ZCovector e = ZCovector::Zero(d);
  e(k - 1) = 1;
  return e;
}

// mpq_class(num, den) does not canonicalize on its own.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Lexicographic order (shorter first), for covector sets and maps.
struct CovectorLess {
  bool operator()(const ZCovector& a, const ZCovector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      int c = cmp(a(i), b(i));
      if (c != 0) return c < 0;
    }
    return false;
  }
};

// "(a,b,c)" rendering shared by the CLI and the test witnesses.
inline std::string covector_str(const ZCovector& w) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w(i).get_str();
  }
  s += ")";
  return s;
}

inline std::string point_str(const ZVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).get_str();
  }
  s += ")";
  return s;
}

}  // namespace toriclci
