#pragma once

// Degree-by-degree normal forms in T(V)/I for a homogeneous ideal I.
//
// Degree n of the quotient is computed from degree n-1: candidate columns are
// (normal word of degree n-1)·letter, and the ideal contributes the rows u·r
// for relations r of degree d and normal words u of degree n-d. Row reduction
// picks the deglex-largest column of each row as pivot (x0 < x1 < x2 < x3), so
// the surviving columns are the standard monomials.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "sklyanin/presentation.hpp"

namespace sklyanin {

inline constexpr std::size_t kDefaultDegreeBound = 6;
/// Largest degree for which ideal_membership also produces a certificate.
inline constexpr std::size_t kCertificateDegree = 4;

class GradedQuotient {
 public:
  using SparseVector = std::vector<std::pair<std::uint32_t, TowerScalar>>;

  explicit GradedQuotient(Presentation p, std::size_t bound = kDefaultDegreeBound);
  ~GradedQuotient();

  const Presentation& presentation() const { return p_; }
  std::size_t bound() const { return bound_; }

  /// Throws DegreeBound for n > bound().
  std::size_t dimension(std::size_t n) const;
  const std::vector<Word>& normal_words(std::size_t n) const;

  /// Coordinates of f over normal_words(n), where n is the degree of f.
  /// Throws Inhomogeneous and DegreeBound.
  std::vector<TowerScalar> coordinates(const NcPoly& f) const;
  NcPoly normal_form(const NcPoly& f) const;
  bool contains(const NcPoly& f) const;

 private:
  struct Slice;
  const Slice& slice(std::size_t n) const;
  void build(std::size_t n) const;

  Presentation p_;
  std::size_t bound_;
  bool rational_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Slice>> slices_;
};

/// dim of the degree-n component.
std::size_t homogeneous_dimension(const Presentation& p, std::size_t n, std::size_t bound = kDefaultDegreeBound);

/// Dimensions for n = 0..bound.
std::vector<std::size_t> hilbert_function(const Presentation& p, std::size_t bound = kDefaultDegreeBound);

/// One term u·r·w of an ideal-membership certificate.
struct CertificateTerm {
  Word left;
  std::size_t relation = 0;
  Word right;
  TowerScalar coeff;
};

struct Membership {
  bool member = false;
  /// Present for members of degree ≤ kCertificateDegree; sums to f exactly.
  std::optional<std::vector<CertificateTerm>> certificate;
};

Membership ideal_membership(const Presentation& p, const NcPoly& f, std::size_t bound = kDefaultDegreeBound);

/// Σ coeff · left · relation · right.
NcPoly evaluate_certificate(const Presentation& p, const std::vector<CertificateTerm>& certificate);

/// z·x_i − x_i·z lies in the ideal for every generator.
bool is_central(const GradedQuotient& q, const NcPoly& z);
bool is_central(const Presentation& p, const NcPoly& z, std::size_t bound = kDefaultDegreeBound);

/// Basis (in normal form) of the degree-d elements commuting with every generator.
std::vector<NcPoly> central_subspace(const GradedQuotient& q, std::size_t d);
std::vector<NcPoly> central_subspace(const Presentation& p, std::size_t d, std::size_t bound = kDefaultDegreeBound);

struct RegularSequenceResult {
  bool ok = true;
  std::optional<std::size_t> first_failure;  // smallest n where a Hilbert identity fails
  std::vector<std::size_t> dims;             // H_p
  std::vector<std::size_t> dims_z1;          // H_{p/(z1)}
  std::vector<std::size_t> dims_z1_z2;       // H_{p/(z1,z2)}
};

/// Hilbert-series test for z1, z2 (degree 2) being a regular sequence up to `bound`.
/// Throws NotCentral when either element is not central in p.
RegularSequenceResult regular_sequence_check(const Presentation& p, const NcPoly& z1, const NcPoly& z2,
                                             std::size_t bound = kDefaultDegreeBound);

}  // namespace sklyanin
