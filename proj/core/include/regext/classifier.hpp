#pragma once

// Wide / narrow decisions for regular subalgebras s_{T,t}.
//
// Only T matters: t is assumed to contain [g_a, g_{-a}] for every a in the
// symmetric part of T, and both criteria used here are independent of t.
//
//   wide             <=>  closure(T u -T) = Phi
//   lambda-wide      <=>  [T u -T] . lambda = V(lambda)
//   not wide         =>   narrow, with an explicit witness weight per lambda

#include "regext/character.hpp"
#include "regext/chevalley.hpp"
#include "regext/closed_sets.hpp"
#include "regext/dynkin.hpp"
#include "regext/module.hpp"
#include "regext/oracle.hpp"
#include "regext/root_system.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace regext {

struct Caps {
  std::int64_t oracle_dim = kDefaultOracleCap;        // module builds, spans and commutants
  std::int64_t character_dim = kDefaultCharacterCap;  // Freudenthal tables
  int enumeration_roots = kDefaultEnumerationCap;     // max |Phi| for closed-subset enumeration
  std::int64_t orbit_budget = kDefaultOrbitBudget;
};

/// Root system plus derived structure, with thread-safe caches of modules and
/// characters keyed by highest weight. Not copyable: the members refer to each other.
class LieContext {
 public:
  explicit LieContext(const LieType& type);
  LieContext(const LieContext&) = delete;
  LieContext& operator=(const LieContext&) = delete;

  const RootSystem& system() const { return *sys_; }
  const ChevalleyBasis& chevalley() const { return *chevalley_; }
  const DynkinDiagram& diagram() const { return *diagram_; }

  std::shared_ptr<const ModuleRealization> module(const Weight& lambda, std::int64_t cap);
  std::shared_ptr<const Character> character(const Weight& lambda, std::int64_t cap);
  /// Weyl dimension, cached.
  std::int64_t dimension(const Weight& lambda);

 private:
  std::unique_ptr<RootSystem> sys_;
  std::unique_ptr<ChevalleyBasis> chevalley_;
  std::unique_ptr<DynkinDiagram> diagram_;
  std::mutex mutex_;
  std::map<Weight, std::shared_ptr<const ModuleRealization>> modules_;
  std::map<Weight, std::shared_ptr<const Character>> characters_;
  std::map<Weight, std::int64_t> dims_;
};

/// closure(T u -T).
RootSubset symmetrize(const RootSubset& T);

struct WideResult {
  bool wide;
  RootSubset symmetrized;
};

/// Throws std::invalid_argument for non-closed T.
WideResult is_wide(const RootSubset& T);

/// Compares dim [T u -T].lambda with dim V(lambda). Throws BudgetExceeded when
/// dim V(lambda) > cap.
bool lambda_wide(LieContext& ctx, const RootSubset& T, const Weight& lambda, std::int64_t cap = kDefaultOracleCap);

enum class CertificateKind { wide, narrow_case1, narrow_case2 };
std::string to_string(CertificateKind kind);

struct WitnessCertificate {
  CertificateKind kind;
  RootSubset subset;
  RootSubset symmetrized;
  std::optional<Weight> lambda;
  std::optional<int> chosen_simple;  // l with m_l > 0
  std::optional<SimpleRootPath> path;
  std::optional<Weight> witness_weight;
};

/// Wideness certificate; throws std::invalid_argument unless T is wide.
WitnessCertificate wide_certificate(const RootSubset& T);

/// Narrowness witness for V(lambda): l is the least index with m_l > 0. If
/// a_l lies outside [T u -T] the witness is lambda - a_l, otherwise it is
/// lambda minus the sum of the escape path from a_l.
///
/// Throws std::invalid_argument when T is not closed, T is wide, or lambda is
/// zero or not dominant.
WitnessCertificate narrow_witness(const DynkinDiagram& d, const RootSubset& T, const Weight& lambda);

enum class ValidationMethod { module, criterion };
std::string to_string(ValidationMethod m);

struct CertificateValidation {
  bool structure_ok = false;        // recomputed symmetrization, index rule, path shape
  bool witness_is_weight = false;   // witness in Pi(V(lambda))
  bool witness_outside_span = false;  // witness not in Pi([T u -T].lambda)
  ValidationMethod method = ValidationMethod::criterion;
  std::string detail;

  bool valid() const { return structure_ok && witness_is_weight && witness_outside_span; }
};

/// Re-derives everything in the certificate from scratch. Non-membership is
/// checked on the built module when dim V(lambda) <= caps.oracle_dim, and
/// otherwise by showing lambda - witness is not a sum of positive roots of
/// [T u -T] (which every weight of the span would need).
CertificateValidation validate_certificate(LieContext& ctx, const WitnessCertificate& cert, const Caps& caps);

/// True iff sigma (root coordinates) is a sum of roots from `generators`, all
/// of them positive.
bool in_positive_cone(const Root& sigma, const std::vector<Root>& generators);

struct OracleCheck {
  Weight lambda;
  int module_dim = 0;
  int span_dim = 0;
  bool lambda_wide = false;
  CommutantData commutant;
  bool agree() const { return lambda_wide == commutant.indecomposable(); }
};

OracleCheck oracle_check(LieContext& ctx, const RootSubset& T, const Weight& lambda, std::int64_t cap);

enum class Verdict { wide, narrow, violation };
std::string to_string(Verdict v);

struct SubsetVerdict {
  RootSubset subset;
  SubalgebraKind kind;
  Verdict verdict;
  std::vector<WitnessCertificate> certificates;
  std::vector<CertificateValidation> validations;  // parallel to certificates
  std::vector<OracleCheck> oracle_checks;
  std::vector<std::string> problems;  // empty unless verdict is violation
};

/// Full decision for one closed subset over a weight grid, with certificates
/// and oracle cross-checks for every grid weight within caps.oracle_dim.
SubsetVerdict classify_subset(LieContext& ctx, const RootSubset& T, const std::vector<Weight>& grid, const Caps& caps);

enum class EnumerationMode { full, conjugacy_reduced };
std::string to_string(EnumerationMode m);

struct VerifyOptions {
  Caps caps;
  EnumerationMode mode = EnumerationMode::full;
  int threads = 1;
};

struct ClassificationReport {
  std::string system;
  int coeff_bound = 0;
  std::vector<Weight> grid;
  Caps caps;
  EnumerationMode mode = EnumerationMode::full;
  bool incomplete = false;
  std::string incomplete_reason;
  std::vector<SubsetVerdict> verdicts;
  std::vector<int> orbit_sizes;  // parallel to verdicts in conjugacy-reduced mode
  double seconds = 0;            // wall time; kept out of serialized data

  int count(Verdict v) const;
  int oracle_checks() const;
  int oracle_disagreements() const;
  bool dichotomy_holds() const;
};

/// Runs every closed subset (or one per Weyl orbit) against the grid of
/// nonzero dominant weights with coordinates <= coeff_bound.
ClassificationReport verify_regular_extreme(LieContext& ctx, int coeff_bound, const VerifyOptions& options);

struct NonsimpleReport {
  std::vector<LieType> types;
  Weight lambda;  // on the first factor
  Weight eta;     // on the second factor
  int dim_v = 0;  // V = V1(lambda) (x) V2(0) (x) ...
  int dim_w = 0;  // W = V1(0) (x) V2(eta) (x) ...
  CommutantData v_commutant;
  CommutantData w_commutant;
  bool factors_commute = false;        // g^1 and g^2 actions commute on V and W
  bool w_first_factor_acts_trivially = false;
  int w_trivial_summands = 0;          // lines of W, each a trivial g^1-submodule
  bool not_narrow() const { return v_commutant.indecomposable(); }
  bool not_wide() const {
    return w_first_factor_acts_trivially && w_trivial_summands == dim_w && dim_w > 1 &&
           w_commutant.semisimple_dim() == dim_w * dim_w;
  }
  bool neither_narrow_nor_wide() const { return not_narrow() && not_wide(); }
};

/// Shows the first simple factor of g = g^1 + ... + g^k (k >= 2) is neither
/// narrow nor wide. Throws std::invalid_argument for fewer than two factors
/// or a zero lambda / eta.
NonsimpleReport nonsimple_demo(const std::vector<LieType>& types, const Weight& lambda, const Weight& eta,
                               std::int64_t cap = kDefaultOracleCap);

}  // namespace regext
