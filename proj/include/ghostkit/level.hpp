#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghostkit/koszul.hpp"

namespace ghostkit {

struct GhostCheck {
  int degree = 0;
  /// Induced map on H_degree(Hom(G, -)) is zero.
  bool zero = true;

  bool operator==(const GhostCheck&) const = default;
};

/// Degreewise verdicts over the degrees where Hom(G, source) is nonzero.
std::vector<GhostCheck> ghost_checks(const FreeComplex& g, const ChainMap& f);
bool is_ghost(const FreeComplex& g, const ChainMap& f);

enum class FailureKind { NotGhost, CompositionZero };

const char* to_string(FailureKind kind);

struct Failure {
  FailureKind kind;
  /// 1-based index of the offending factor for NotGhost.
  std::size_t factor = 0;

  std::string describe() const;
  bool operator==(const Failure&) const = default;
};

/// Ghost-lemma record for a Koszul tower. Valid iff `failure` is empty, in
/// which case level^G(tower top) >= length + 1.
struct GhostCertificate {
  FreeComplex generator;
  KoszulTower tower;
  std::vector<std::vector<GhostCheck>> ghost_evidence;
  ChainMap composition;
  bool composition_nullhomotopic = false;
  std::optional<Failure> failure;

  bool valid() const { return !failure.has_value(); }
  std::size_t implied_bound() const { return tower.length(); }
  std::size_t implied_level_lower_bound() const { return tower.length() + 1; }
};

/// Builds the tower with auto exponents (overridable per position) and
/// records every verdict. Throws InvalidInput for an empty sequence.
GhostCertificate ghost_certificate(const FreeComplex& g, const FreeComplex& m, const std::vector<AlgebraElement>& xs,
                                   const std::vector<std::optional<unsigned>>& overrides = {});

/// Rebuilds the tower from (base, sequence, exponents), recomputes every
/// verdict and compares with the record. On mismatch `why` says where.
bool replay_certificate(const GhostCertificate& cert, std::string* why = nullptr);

enum class PlanOp { TakeG, Shift, Sum, ConeWith, Summand };

const char* to_string(PlanOp op);
PlanOp parse_plan_op(const std::string& tag);

/// Operands refer to earlier steps by index.
///   take-G     -> G
///   shift      -> Σ^shift operand0
///   sum        -> operand0 ⊕ operand1 ⊕ ... (the zero object when empty)
///   cone-with  -> cone(map), map : operand0 -> operand1
///   summand    -> map.source(), where map : X -> operand0 and
///                 section : operand0 -> X with section∘map ≃ id and
///                 map∘section ≃ id
struct PlanStep {
  PlanOp op = PlanOp::TakeG;
  std::vector<std::size_t> operands;
  int shift = 0;
  std::optional<ChainMap> map;
  std::optional<ChainMap> section;
};

struct BuildPlan {
  FreeComplex generator;
  std::vector<PlanStep> steps;
  std::size_t cone_count = 0;
};

/// Replays every step, checking operand shapes and the summand homotopies;
/// returns the last result. Throws InvalidInput on an inconsistent plan.
FreeComplex replay_plan(const BuildPlan& plan);

struct Minimized {
  FreeComplex complex;
  ChainMap to_min;    // X -> X'
  ChainMap from_min;  // X' -> X, to_min ∘ from_min = id
  std::size_t cancellations = 0;
};

/// Cancels unit entries of the differentials until none remain.
Minimized minimize(const FreeComplex& x);

struct LevelBound {
  std::size_t level = 0;
  BuildPlan plan;
  FreeComplex minimized;
};

/// Constructive upper bound on level^A(X). Throws UnsupportedGenerator unless
/// G is A in degree 0.
LevelBound level_upper_bound(const FreeComplex& g, const FreeComplex& x);

struct DepthGentimeReport {
  Depth depth;
  std::vector<AlgebraElement> sequence;
  std::optional<GhostCertificate> certificate;
  /// Level upper bound of the tower top, when G = A.
  std::optional<std::size_t> tower_top_level_upper;
  bool holds = false;
};

/// depth(a, Hom*(M,M)) <= gentime(G), witnessed by a ghost certificate of
/// length depth. Throws PreconditionFailed when a·Hom*(M,M) = Hom*(M,M).
DepthGentimeReport verify_depth_leq_gentime(const FreeComplex& g, const FreeComplex& m, const IdealGens& a,
                                            std::uint64_t seed = 1);

struct RdimOptions {
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  std::vector<FreeComplex> generators;
};

struct BatteryEntry {
  FreeComplex complex;
  LevelBound bound;
};

struct RdimReport {
  RingSpec ring;
  std::size_t dim = 0;
  std::optional<GhostCertificate> certificate;
  std::vector<GhostCertificate> generator_certificates;
  std::optional<LevelBound> koszul_bound;
  std::optional<LevelBound> tower_top_bound;
  /// The certificate's tower top is Σ^{-n} of the Koszul complex up to signs,
  /// so its level lower bound applies to the Koszul complex.
  bool koszul_is_tower_top = false;
  std::vector<BatteryEntry> battery;
  std::size_t rdim_lower_bound = 0;
  std::size_t max_battery_level = 0;
  bool verified = false;
};

RdimReport rdim_report(const RingSpec& ring, const RdimOptions& options = {});

}  // namespace ghostkit
