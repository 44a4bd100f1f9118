#ifndef MGDIAG_FROBENIUS_HPP
#define MGDIAG_FROBENIUS_HPP

// Characteristic-p tests on explicit hypersurfaces A/fA.
//
// F-purity is Fedder's criterion for a hypersurface: f^(p-1) must avoid the
// Frobenius power of the homogeneous maximal ideal.
//
// F-regularity is certified positively. For f of degree d < m in
// A = K[x_1..x_m] with A/fA F-pure and regular after inverting x_1, x_1 is a
// test element and x_1^(d-1) generates the socle modulo x_2..x_m, so A/fA
// is F-regular iff
//
//   x_1^((d-1)q+1) not in (x_2^q, ..., x_m^q, f)   for some q = p^e.
//
// The bigraded analogue uses the parameters x_1-y_1, x_2..x_m, y_2..y_n and
// the socle x_1^(d+e-1):
//
//   x_1^((d+e-1)q+1) not in (x_1^q - y_1^q, x_2^q..x_m^q, y_2^q..y_n^q, f).
//
// Only the membership is computed; regularity off V(x_1) (resp. V(x_1 y_1))
// is recorded as an assumption on the certificate.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mgdiag/exactalg/polynomial.hpp"

namespace mgdiag::frobenius {

using exactalg::MultiPoly;

enum class Verdict {
  f_regular,
  inconclusive,
  not_f_pure,
  /// a-invariant is nonnegative, so the ring cannot be F-regular
  not_f_regular,
};

std::string_view to_string(Verdict v);

struct FrobeniusCertificate {
  Verdict verdict = Verdict::inconclusive;
  std::uint32_t p = 0;
  std::string polynomial;
  bool f_pure = false;
  std::optional<std::uint64_t> q_used;
  std::vector<std::uint64_t> tested_powers;
  /// Parameter ideal, socle element and its normal form at q_used, or at
  /// the last tested power when inconclusive.
  std::vector<std::string> ideal_generators;
  std::string socle;
  std::string normal_form;
  std::vector<std::string> assumptions;
  std::string reason;
};

nlohmann::json to_json(const FrobeniusCertificate& cert);

/// Fedder: f^(p-1) not in (v^p : v a variable). f must be a nonzero
/// homogeneous polynomial over F_p.
bool fedder_is_f_pure(const MultiPoly& f, std::uint32_t p);

/// Ideal, socle and normal form of one graded socle-membership test at q.
struct SocleTest {
  std::vector<MultiPoly> ideal;
  MultiPoly socle;
  MultiPoly normal_form;

  bool member() const { return normal_form.is_zero(); }
};

SocleTest graded_socle_test(const MultiPoly& f, int d, std::uint64_t q);
SocleTest bigraded_socle_test(const MultiPoly& f, int d, int e, std::uint64_t q);

/// f homogeneous of degree d in the m variables of its ring (y-block empty).
/// Tries q = p, p^2, ..., p^e_max.
FrobeniusCertificate f_regular_certificate_graded(const MultiPoly& f, int d, int m, std::uint32_t p,
                                                  int e_max = 4);

/// f of bidegree (d, e) in K[x_1..x_m, y_1..y_n].
FrobeniusCertificate f_regular_certificate_bigraded(const MultiPoly& f, int d, int e, int m, int n,
                                                    std::uint32_t p, int e_max = 4);

/// x1^d + x2*...*x_{d+1}; needs m >= d+1.
MultiPoly witness_graded(int d, int m, std::uint32_t p);
/// x1^d*y1^e + x2*...*x_{d+1}*y2*...*y_{e+1}; needs m >= d+1, n >= e+1.
MultiPoly witness_bigraded(int d, int e, int m, int n, std::uint32_t p);
/// x1*(x1+x2)*...*(x1+x_d), monic in x1^d; needs m >= d.
MultiPoly witness_fpure(int d, int m, std::uint32_t p);
/// x1*...*x_d*y1*...*y_e; needs m >= d, n >= e.
MultiPoly witness_fpure_bigraded(int d, int e, int m, int n, std::uint32_t p);

/// Dense form of bidegree (d, e) in K[x_1..x_m, y_1..y_n], coefficients
/// uniform in F_p^x, with x1^d*y1^e having coefficient 1.
MultiPoly random_biform(int m, int n, int d, int e, std::uint32_t p, std::uint64_t seed);

}  // namespace mgdiag::frobenius

#endif  // MGDIAG_FROBENIUS_HPP
