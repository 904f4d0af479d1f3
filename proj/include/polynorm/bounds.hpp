#pragma once

// Upper bounds on k_P and the regularity, the regularity itself, and the
// InvariantReport that gathers every computed quantity for one polytope.

#include "polynorm/invariants.hpp"
#include "polynorm/semigroup.hpp"

#include <json.hpp>

namespace polynorm {

Integer theorem_bound(int m_P, int d_P, std::size_t n);
/// Only meaningful for non-normal polytopes.
Integer refined_bound(int m_P, int d_P, int nu_P, std::size_t n);

struct SmoothBounds {
  Integer gamma_branch;   ///< d_P (gamma - 1) n + 1
  Integer volume_branch;  ///< (d d_P^d Vol - d_P) n + 1
  Integer minimum() const { return std::min(gamma_branch, volume_branch); }
};
SmoothBounds smooth_bounds(int d, int d_P, const Integer& gamma, const Integer& volume, std::size_t n);

/// max(k_P, deg) + 1; throws KPUndefined without k_P.
int regularity(std::optional<int> k_P, int deg);

/// Bounds in terms of the toric embedding: degree Vol, codimension
/// |P cap M| - d - 1.
struct ClassicalBounds {
  Integer codim;
  Integer mumford_general;  ///< (d+1)(Vol-2)+2, on reg
  Integer mumford_table;    ///< (d+1)(Vol-2)+1, on k_P
  Integer sturmfels;        ///< d Vol codim, on reg
  Integer sturmfels_kp;     ///< |P cap M| Vol codim - 1, on k_P
  Integer sturmfels_table;  ///< d! Vol codim
  Integer eg_rhs;           ///< Vol - codim + 1
  bool degenerate = false;  ///< codim <= 0
};
ClassicalBounds classical_bounds(int d, const Integer& volume, std::size_t lattice_points);

struct EGCheck {
  bool holds = false;
  Integer lhs;  ///< k_P
  Integer rhs;  ///< Vol - |P cap M| + d + 1
};
EGCheck eg_check(int k_P, const Integer& volume, std::size_t lattice_points, int d);

struct DPChecks {
  std::optional<bool> below_degree;  ///< empty for unimodular simplices
  bool below_volume = false;         ///< d_P <= Vol + d + 1 - |P cap M|
};
DPChecks d_P_bound_checks(int d_P, int deg, const Integer& volume, std::size_t lattice_points, int d,
                          bool unimodular_simplex);

enum class BoundTarget { k_P, regularity, none };

struct BoundEntry {
  std::string name;
  std::optional<Integer> value;  ///< empty when not applicable
  BoundTarget target = BoundTarget::none;
  bool proven = true;
};

struct HoleWitness {
  int k = 0;
  IntVector point;
};

struct InvariantReport {
  std::string name;
  std::vector<IntVector> vertices;
  int dim = 0;
  std::size_t num_vertices = 0;
  std::size_t num_lattice_points = 0;
  Integer volume;
  int degree = 0;
  int d_P = 1;
  int nu_P = 1;
  std::optional<int> m_P;
  std::optional<int> k_P;
  bool very_ample = false;
  bool smooth = false;
  bool normal = false;
  std::optional<Integer> gamma;
  std::optional<Integer> m_prime;
  std::optional<int> regularity;
  std::vector<BoundEntry> bounds;
  bool classical_degenerate = false;
  Integer eg_rhs;
  std::optional<bool> eg_holds;
  DPChecks d_P_checks;
  std::optional<HoleWitness> hole;
  std::optional<SigmaWitness> sigma_max;
  std::optional<NonSaturationWitness> non_saturation;

  const BoundEntry* bound(std::string_view name) const;
};

/// A failure inside full_report, tagged with the pipeline stage.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

InvariantReport full_report(const Polytope& p, std::string name = {}, int max_k = 64);

enum class Verdict { pass, fail, skip };

struct PropertyVerdict {
  std::string name;
  Verdict verdict = Verdict::skip;
  bool proven = true;  ///< false for conjectural inequalities
  std::string detail;
};

/// The invariant suite: order relations among the invariants, bound
/// dominance, the normality equivalences and the Eisenbud-Goto inequality.
std::vector<PropertyVerdict> check_properties(const Polytope& p, const InvariantReport& report);

nlohmann::ordered_json to_json(const InvariantReport& report);
/// Exact integer in JSON: a number inside the 53-bit safe range, otherwise a decimal string.
nlohmann::ordered_json json_integer(const Integer& x);
nlohmann::ordered_json json_point(const IntVector& x);
const char* to_string(BoundTarget target);
const char* to_string(Verdict verdict);

}  // namespace polynorm
