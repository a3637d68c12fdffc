#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "umbral/cmatrix.hpp"
#include "umbral/report.hpp"

namespace umbral {

/// Symmetric q-number [x]_q = (q^x - q^{-x}) / (q - q^{-1}) with principal
/// powers. Throws std::domain_error("degenerate deformation") for q in {0, 1, -1}.
Complex q_bracket(double x, Complex q);

/// A half-integer spin j stored as 2j.
class Spin {
 public:
  /// Throws std::invalid_argument unless twice_j >= 1.
  static Spin from_twice(int twice_j);
  /// Accepts "1/2", "3/2", "1", "2.5", ...
  static Spin parse(const std::string& text);

  int twice() const { return twice_; }
  double value() const { return twice_ / 2.0; }
  std::size_t dim() const { return static_cast<std::size_t>(twice_) + 1; }
  std::string to_string() const;

 private:
  explicit Spin(int twice) : twice_(twice) {}
  int twice_;
};

/// Representation matrices in the basis m = j, j-1, ..., -j (row 0 is m = j).
/// An empty q selects the undeformed brackets [x] = x.
struct SpinRep {
  Spin j;
  std::optional<Complex> q;
  ComplexMatrix j3;
  ComplexMatrix jplus;
  ComplexMatrix jminus;
};

SpinRep su2_build(Spin j, std::optional<Complex> q);

/// Entrywise [.]_q of a diagonal matrix (plain values when q is empty).
ComplexMatrix diagonal_bracket(const ComplexMatrix& d, std::optional<Complex> q);

struct Su2Residuals {
  double j3_jplus = 0.0;      // ||[J3,J+] - J+||
  double j3_jminus = 0.0;     // ||[J3,J-] + J-||
  double jplus_jminus = 0.0;  // ||[J+,J-] - [2 J3]_q||
  double max() const;
};
Su2Residuals su2_commutator_check(const SpinRep& rep);
CheckReport su2_report(const SpinRep& rep, double tolerance);

/// The n x n cyclic shift with ones at (r, r+1 mod n).
ComplexMatrix cyclic_shift(std::size_t n);

/// Polar decomposition J+ = M U^{-1} = U^{-1} N, J- = U M = N U with
/// M = sqrt(J+J-), N = sqrt(J-J+) and U a cyclic shift.
struct PolarDecomposition {
  ComplexMatrix modulus;        // sqrt(J+J-)
  ComplexMatrix modulus_minus;  // sqrt(J-J+)
  ComplexMatrix unitary;        // U
  bool unitary_is_adjoint_shift = false;  // U = cyclic_shift^dagger
  double jplus_left = 0.0;      // ||J+ - M U^{-1}||
  double jplus_right = 0.0;     // ||J+ - U^{-1} N||
  double jminus_left = 0.0;     // ||J- - U M||
  double jminus_right = 0.0;    // ||J- - N U||
  // Same J- identities with the moduli in the other order (M U and U N);
  // informational, these do not hold in general.
  double jminus_swapped_left = 0.0;
  double jminus_swapped_right = 0.0;
  double max() const;
};

/// Requires [k]_q real and positive for k = 1 .. 2j. Throws
/// std::domain_error("degenerate representation: ...") when some [k]_q
/// vanishes (q a root of unity) and std::domain_error("modulus not PSD for
/// this q") when one is negative or non-real.
PolarDecomposition polar_decompose(const SpinRep& rep);
CheckReport polar_report(const SpinRep& rep, const PolarDecomposition& pd, double tolerance);

/// Clock and shift generators of the generalized Pauli algebra.
struct WeylPair {
  std::size_t n;
  Complex omega;  // exp(2 pi i / n)
  ComplexMatrix sigma1;   // cyclic shift V
  ComplexMatrix sigma2;   // clock U = omega^Q
  ComplexMatrix qmat;     // diag(0, 1, ..., n-1)
  ComplexMatrix smat;     // Sylvester matrix omega^{kl}/sqrt(n)
  ComplexMatrix pmat;     // S^dagger Q S
  ComplexMatrix omega_p;  // S^dagger U S
};

/// Throws std::invalid_argument for n < 2.
WeylPair weyl_build(std::size_t n);

struct WeylCheck {
  double sigma1_power = 0.0;     // ||sigma1^n - I||
  double sigma2_power = 0.0;     // ||sigma2^n - I||
  int sign = 0;                  // sigma1 sigma2 = omega^sign sigma2 sigma1
  double weyl_relation = 0.0;
  double group_commutator = 0.0; // ||s1 s2 s1^-1 s2^-1 - omega^sign I||
  double s_unitary = 0.0;        // ||S^dagger S - I||
  bool omega_p_is_adjoint = false;  // omega^P = sigma1^dagger (else sigma1)
  double omega_p = 0.0;
  double p_offdiag = 0.0;        // max |P_ak - 1/(conj(omega)^{a-k} - 1)|
  double p_diag = 0.0;           // max |P_aa - (n-1)/2|
  double p_printed_zero_diag = 0.0;  // max |P_aa - 0|
  double spectrum = 0.0;         // max_k |det(omega^k I - sigma1)|
};
WeylCheck weyl_check(const WeylPair& pair);
CheckReport weyl_report(const WeylPair& pair, const WeylCheck& c, double tolerance);

/// Fixed thresholds for the Weyl checks that are not governed by the caller's tolerance.
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kOmegaPTolerance = 1e-8;
inline constexpr double kSpectrumTolerance = 1e-8;

}  // namespace umbral
