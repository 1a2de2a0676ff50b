#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordvec/majorize.hpp"

namespace ordvec {

/// Outcome of a coherency decision together with the certificate that proves it.
///
/// Incoherent: `witness` t with sum_j t_j m_j in K and sum_j t_j < 0.
/// Coherent: covector `phi` with phi . m_j = 1 for all j and phi >= 0 on the
/// cone. For halfspace cones `multipliers` holds lambda >= 0 with
/// phi = A^T lambda, which lets a third party check positivity without an LP.
struct CoherenceVerdict {
  bool coherent = false;
  RVector witness;
  RVector phi;
  RVector multipliers;

  friend bool operator==(const CoherenceVerdict&, const CoherenceVerdict&) = default;
};

/// Decides coherency: an LP for the incoherence witness, and on infeasibility
/// the Farkas multipliers give phi. The lexicographic plane is decided by
/// case analysis on first coordinates.
CoherenceVerdict check_coherent(const MajorizedSpace& s);

bool verify_incoherence_witness(const MajorizedSpace& s, const RVector& t);

/// phi . m_j = 1 for every j and phi is positive on the cone (for the
/// lexicographic plane: positive on the cone restricted to E_M).
bool verify_coherence_certificate(const MajorizedSpace& s, const RVector& phi);

/// Same, but positivity is checked through phi = A^T lambda, lambda >= 0
/// directly. Only meaningful for halfspace cones.
bool verify_coherence_certificate(const MajorizedSpace& s, const RVector& phi, const RVector& multipliers);

/// Verifies whichever certificate the verdict carries.
bool verify_verdict(const MajorizedSpace& s, const CoherenceVerdict& v);

struct AdditivityRow {
  RVector t;
  Rational pm;   // p_M(sum t_j m_j)
  Rational sum;  // sum t_j
  bool from_witness = false;
  [[nodiscard]] bool additive() const { return pm == sum; }
};

/// Probes p_M(sum t_j m_j) = sum t_j. For incoherent M the negative part of
/// the incoherence witness is appended as an extra probe; it always breaks
/// additivity.
struct AdditivityReport {
  bool coherent = false;
  std::vector<AdditivityRow> rows;
  /// Coherent: every probe additive. Incoherent: at least one strict p_M < sum.
  [[nodiscard]] bool pass() const;
};

AdditivityReport additivity_check(const MajorizedSpace& s, const std::vector<RVector>& samples);

struct EmbeddingRow {
  bool images_equal = false;
  bool sums_equal = false;
  bool isometric = false;  // p_M of both images equals their l1 coefficient norms
  [[nodiscard]] bool ok() const { return (!images_equal || sums_equal) && isometric; }
};

struct EmbeddingReport {
  RVector phi;
  std::vector<EmbeddingRow> rows;
  [[nodiscard]] bool pass() const;
};

/// For coherent M: the map t -> sum t_j m_j on nonnegative coefficient
/// vectors identifies equal images only with equal coefficient sums, and is
/// an isometry from l1 onto (C_M, p_M). Throws PreconditionViolation when M
/// is incoherent.
EmbeddingReport embedding_check(const MajorizedSpace& s, const std::vector<std::pair<RVector, RVector>>& pairs);

struct PairScanReport {
  bool archimedean = true;  // ambient cone is closed polyhedral
  std::vector<CoherenceVerdict> verdicts;
  std::vector<std::size_t> incoherent;
  /// Closed cones: every pair coherent.
  [[nodiscard]] bool pass() const { return !archimedean || incoherent.empty(); }
};

/// Coherency of every two-element set {v, w}. With `normalize` each pair is
/// first rescaled to ||v||_u = ||w||_u = 1 for u = v + w (closed cones only).
PairScanReport pair_coherence_scan(const Cone& k, const std::vector<std::pair<RVector, RVector>>& pairs,
                                   bool normalize = false);

}  // namespace ordvec
