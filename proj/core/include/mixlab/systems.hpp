#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mixlab/exact.hpp"
#include "mixlab/group.hpp"

namespace mixlab {

/// Event fixing finitely many coordinates of a shift space. The empty pattern
/// is the whole space X.
class CylinderPattern {
 public:
  CylinderPattern() = default;

  /// Rejects repeated coordinates, negative symbols and elements outside the
  /// coordinate group.
  static CylinderPattern from_constraints(const GroupCtx& coords,
                                          const std::vector<std::pair<GroupElement, int>>& items);
  static CylinderPattern from_map(const GroupCtx& coords, std::map<GroupElement, int> items);

  const std::map<GroupElement, int>& constraints() const noexcept { return constraints_; }
  bool is_full_space() const noexcept { return constraints_.empty(); }
  std::size_t size() const noexcept { return constraints_.size(); }

  friend bool operator==(const CylinderPattern&, const CylinderPattern&) = default;

 private:
  std::map<GroupElement, int> constraints_;
};

enum class SystemKind { Bernoulli, Ledrappier, PulledBack };

/// A measure preserving action whose cylinder measures are exact.
///
/// Bernoulli(G, p): i.i.d. symbols on G with distribution p.
/// Ledrappier: Haar measure on {x in GF(2)^{Z^2} : x(n,m)+x(n+1,m)+x(n,m+1)=0}.
/// PulledBack(base, phi): the action g -> T_{phi(g)} of the base system.
///
/// Translation convention: T_g A is the event {x : x(s + g) = a for each
/// constraint x(s) = a of A}, i.e. pattern coordinates move by +g. This is the
/// preimage of A under the left shift (S_g x)(h) = x(h + g).
class SystemHandle {
 public:
  static SystemHandle bernoulli(const GroupCtx& group, std::vector<Rational> probs);
  static SystemHandle fair_coin(const GroupCtx& group);
  static SystemHandle ledrappier();
  static SystemHandle pulled_back(const SystemHandle& base, const Homomorphism& phi);

  SystemKind kind() const noexcept { return kind_; }
  /// The group acting on the system.
  const GroupCtx& acting_group() const noexcept { return acting_; }
  /// The group indexing coordinates of the shift space (where patterns live).
  const GroupCtx& coordinate_group() const noexcept { return coords_; }

  const std::vector<Rational>& probs() const noexcept { return probs_; }
  std::size_t alphabet_size() const noexcept;
  const SystemHandle& base() const { return *base_; }
  const Homomorphism& phi() const { return *phi_; }

  std::string describe() const;

 private:
  SystemHandle() = default;

  SystemKind kind_ = SystemKind::Bernoulli;
  GroupCtx acting_;
  GroupCtx coords_;
  std::vector<Rational> probs_;
  std::shared_ptr<const SystemHandle> base_;
  std::shared_ptr<const Homomorphism> phi_;
};

/// Builds a pattern on the system's coordinate group; validates symbols.
CylinderPattern make_pattern(const SystemHandle& sys,
                             const std::vector<std::pair<GroupElement, int>>& items);

CylinderPattern translate_cylinder(const SystemHandle& sys, const GroupElement& g,
                                   const CylinderPattern& a);

Rational cylinder_measure(const SystemHandle& sys, const CylinderPattern& a);

struct CorrelationTerm {
  GroupElement shift;
  CylinderPattern pattern;
};

/// mu(T_{g_0} A_0 ∩ ... ∩ T_{g_l} A_l).
Rational correlate(const SystemHandle& sys, const std::vector<CorrelationTerm>& terms);

/// |correlate(terms) - prod_j mu(A_j)|.
Rational mixing_gap(const SystemHandle& sys, const std::vector<CorrelationTerm>& terms);

struct MixingRow {
  GroupElement g;
  Rational gap;
};

struct MixingEvidence {
  std::vector<MixingRow> rows;
  std::size_t below_epsilon = 0;
  std::optional<MixingRow> worst;  // largest gap, first in input order on ties
  Rational epsilon;

  bool all_below() const noexcept { return below_epsilon == rows.size(); }
};

/// Gap table for mu(A_0 ∩ T_g A_1) - mu(A_0)mu(A_1) over the given shifts.
MixingEvidence mixing_evidence(const SystemHandle& sys, const CylinderPattern& a0,
                               const CylinderPattern& a1, const std::vector<GroupElement>& gs,
                               const Rational& epsilon);

// ---------------------------------------------------------------------------
// Ledrappier internals, exposed for tests and certificates.

struct LedrappierAnalysis {
  std::size_t support_size = 0;
  std::size_t rank = 0;  // |S| - dim K
  bool consistent = true;
};

LedrappierAnalysis analyze_ledrappier(const CylinderPattern& a);

/// True iff sum of u^{e_1} v^{e_2} over the given exponent pairs lies in the
/// ideal generated by 1+u+v in the Laurent ring GF(2)[u^±1, v^±1].
bool in_ledrappier_ideal(const std::vector<std::pair<BigInt, BigInt>>& monomials);

}  // namespace mixlab
