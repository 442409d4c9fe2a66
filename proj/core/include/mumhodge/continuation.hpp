#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mumhodge/lmhs.hpp"
#include "mumhodge/matrix.hpp"
#include "mumhodge/picard_fuchs.hpp"

namespace mumhodge {

// Polyline through waypoints. Closed paths end where they start.
struct PathSpec {
  std::vector<BigComplex> waypoints;
  bool closed = false;
  double clearance = 1e-12;  // minimum distance to any singular point

  const BigComplex& start() const { return waypoints.front(); }
  const BigComplex& end() const { return waypoints.back(); }
  PathSpec reversed() const;
  // This path followed by `next`, which must start where this one ends.
  PathSpec then(const PathSpec& next) const;
};

struct TransportMatrix {
  ComplexMatrix matrix;
  Precision precision = 0;
  BigFloat error_estimate;
};

// Taylor-step integrator for sum_k R_k(z) y^(k) = 0. Jet matrices hold
// y_k^(d)(z) / d! in row d, column k.
class Continuator {
 public:
  Continuator(const PFOperator& op, Precision precision);

  Precision precision() const { return prec_; }
  const std::vector<BigComplex>& singularities() const { return sing_; }
  double distance_to_singularities(const BigComplex& z) const;

  // Fundamental jet matrix: jets at the path end of the solutions whose jets
  // at the start form the identity.
  TransportMatrix fundamental(const PathSpec& path) const;

  // Step-size factor relative to the distance to the nearest singular point.
  static constexpr double eta = 0.5;

 private:
  void check_clearance(const PathSpec& path) const;
  // One Taylor step from c to c + h; updates jets in place and returns the
  // tail estimate.
  BigFloat step(ComplexMatrix& jets, const BigComplex& c, const BigComplex& h) const;

  Precision prec_;
  std::array<Polynomial, 5> dz_;
  std::vector<BigComplex> sing_;
  std::vector<std::complex<double>> sing_d_;
};

// Frobenius frame (omega_3, .., omega_0) at a MUM point at z = 0 or z = infinity.
// At infinity the local coordinate is w = 1/z and the solutions carry the
// factor w^rho for the MUM exponent rho.
class MUMFrame {
 public:
  enum class Location { origin, infinity };

  MUMFrame(const PFOperator& op, Location location);

  Location location() const { return location_; }
  const Rational& exponent() const { return exponent_; }
  // Radius of convergence of the Frobenius series in the local coordinate.
  double radius() const { return radius_; }
  // Local coordinate of a point z.
  BigComplex local_coordinate(const BigComplex& z) const;

  // Jet matrix of the frame at z (principal branch of log of the local
  // coordinate). The series order is chosen from |u| / radius.
  ComplexMatrix jets(const BigComplex& z, Precision prec) const;

  const FrobeniusBasis& basis(std::size_t order) const;

 private:
  PFOperator local_;
  Location location_;
  Rational exponent_;
  double radius_;
  mutable std::optional<FrobeniusBasis> cache_;
};

// M with (continued start frame) = M (end frame), given the fundamental jet
// matrix along the path: M^T = W_end^-1 Phi W_start.
ComplexMatrix relate_frames(const ComplexMatrix& w_start, const ComplexMatrix& phi, const ComplexMatrix& w_end);

TransportMatrix transport(const Continuator& c, const ComplexMatrix& w_start, const ComplexMatrix& w_end,
                          const PathSpec& path);

// Loop around one singular point: spoke from the base point, counterclockwise
// circle, spoke back.
PathSpec loop_around(const BigComplex& base, const BigComplex& center, double radius, int points = 16);

struct LoopSystem {
  BigComplex base;
  std::vector<SingularLocation> points;  // finite points in product order, then infinity
  std::vector<PathSpec> loops;
};

// Generators ordered so that T_1 T_2 ... T_n T_inf = I for the convention
// that composition of paths multiplies left to right.
LoopSystem standard_loops(const PFOperator& op, const BigComplex& base, Precision precision);

// Default base point: on the imaginary axis at a quarter of the distance
// from 0 to the nearest other singular point.
BigComplex default_base_point(const PFOperator& op, Precision precision);

// Monodromy matrices of the loops in the frame with jet matrix `frame` at
// the base point: continued frame = T frame.
std::vector<TransportMatrix> monodromy_representation(const Continuator& c, const ComplexMatrix& frame,
                                                      const std::vector<PathSpec>& loops);

struct UnipotencyReport {
  unsigned k = 0;
  BigFloat norm;  // max entry of (T - I)^k
  bool passed = false;
  std::optional<ComplexMatrix> log;
};

UnipotencyReport verify_unipotent_log(const ComplexMatrix& t, unsigned k);

struct RecognizedMatrix {
  KappaMatrix value;
  BigFloat residual;
};

// Each entry as p + q kappa with p, q rational of denominator <= bound.
std::optional<RecognizedMatrix> recognize_matrix(const ComplexMatrix& t, const BigInt& denominator_bound);

struct MUMPointResult {
  SingularLocation location;
  Rational exponent;
  std::optional<RecognizedMatrix> monodromy;  // in the integral frame
  std::optional<NormalFormResult> normal_form;
  std::optional<NormalFormInvariants> invariants;
  std::optional<LMHSPoint> point;
  std::optional<MirrorInvariants> mirror;  // when the point reduces to mirror gauge
  std::vector<std::string> notes;
};

struct LoopCheck {
  SingularLocation location;
  std::optional<RecognizedMatrix> recognized;  // in the integral frame
  bool integral = false;
  bool symplectic = false;
};

struct CrossMUMReport {
  std::optional<MirrorInvariants> frame_invariants;
  bool frame_supplied = false;
  Precision precision = 0;
  BigComplex base_point;
  BigFloat loop_product_residual;
  std::vector<LoopCheck> loops;
  MUMPointResult first;
  std::optional<MUMPointResult> second;  // unset when infinity is not MUM
  std::optional<TorelliEvidence> torelli;
  std::vector<std::string> notes;
};

// Mirror invariants whose mirror_frame, with the kappa entry as printed, makes
// every loop matrix integral and symplectic. The ratios c2H/deg and chi/deg
// come from a conifold loop whose vanishing cycle is B^0; the degree is the
// smallest multiple consistent with integrality. Conjectural by nature.
std::optional<MirrorInvariants> discover_mirror_frame(const std::vector<TransportMatrix>& loops,
                                                      const BigInt& denominator_bound);

// Recognized loop matrices conjugated into the frame S.
std::vector<LoopCheck> check_frame(const KappaMatrix& s, const LoopSystem& system,
                                   const std::vector<TransportMatrix>& loops, const BigInt& denominator_bound);

// Compares the MUM points at z = 0 and z = infinity in one integral frame.
// With precision_cap > precision the precision is doubled until the
// recognized monodromy at infinity agrees across two successive levels.
CrossMUMReport cross_mum_invariants(const PFOperator& op, const std::optional<MirrorInvariants>& at_origin,
                                    Precision precision, const BigInt& denominator_bound,
                                    Precision precision_cap = 0,
                                    const std::optional<BigComplex>& base_point = std::nullopt);

}  // namespace mumhodge
