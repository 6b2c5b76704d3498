#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "spq/classify.hpp"

namespace spq {

inline constexpr int kMaxExhaustivePrime = 7;
inline constexpr int kExhaustiveN = 2;

/// Streams every validated, free (R, Q) for (p, n) exactly once, in
/// lexicographic (R, Q) order (or the reverse). Exhaustive mode is limited to
/// p <= 7 and n = 2; beyond that CapacityError is thrown.
void enumerate_free(Prime p, int n, const std::function<void(const RotationData&)>& visit, bool reverse = false);

struct CensusOptions {
  unsigned workers = 1;
  /// Sampling mode: examine this many uniformly drawn candidates (duplicates
  /// collapsed) instead of the whole space. Required beyond the exhaustive
  /// guard.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 1;
  bool reverse_order = false;
};

/// The least space of one homeomorphism class.
struct CensusRepresentative {
  RotationData space;
  KInvariant canonical_k;
  TotalClass fingerprint;
  std::size_t homotopy_class = 0;
  std::size_t homeomorphism_class = 0;
  std::uint64_t members = 0;
};

struct CensusRecord {
  int p = 0;
  int n = 0;
  bool exhaustive = true;
  /// p <= 3 or p <= n + 1: the classification theorems do not apply and the
  /// partition is reported for reference only.
  bool outside_hypotheses = false;
  std::uint64_t candidates = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t free_count = 0;
  std::size_t homotopy_classes = 0;
  std::size_t homeomorphism_classes = 0;
  /// One per homeomorphism class, ordered by (homotopy class, homeomorphism
  /// class); classes are numbered by their least member.
  std::vector<CensusRepresentative> representatives;
};

/// Partitions the free spaces into homotopy classes (canonical k-invariant
/// pairs) and homeomorphism classes (canonical pair plus Pontrjagin
/// fingerprint). Results do not depend on the worker count or order.
CensusRecord run_census(Prime p, int n, const CensusOptions& options = {});

/// Homotopy and homeomorphism class keys of one space.
struct SpaceClass {
  KInvariant canonical_k;
  TotalClass fingerprint;
  friend bool operator==(const SpaceClass&, const SpaceClass&) = default;
};
SpaceClass classify_space(OrbitCache& cache, const RotationData& X);

/// Writes census_p{p}_n{n}.ndjson (one representative per line) and merges
/// the record's row into summary.csv. Output is byte-stable.
void write_census_files(const CensusRecord& record, const std::filesystem::path& dir);

std::string census_ndjson(const CensusRecord& record);

struct ApplicationCase {
  int r1, r2, q1, q2;
  bool criterion;
  bool homeomorphic;
};

struct ApplicationReport {
  int p = 0;
  std::uint64_t quadruples = 0;
  std::uint64_t criterion_holds = 0;
  std::uint64_t homeomorphic_count = 0;
  /// Criterion holds but the classifier finds no homeomorphism.
  std::vector<ApplicationCase> sufficiency_failures;
  /// Classifier finds a homeomorphism the criterion does not predict.
  std::vector<ApplicationCase> necessity_failures;

  std::uint64_t discrepancies() const { return sufficiency_failures.size() + necessity_failures.size(); }
};

inline constexpr int kMaxApplicationPrime = 11;

/// For every (r1, r2, q1, q2) in ((Z/p)^x)^4 compares
///   +-(r1 r2)/(q1 q2) is a quadratic residue
/// with homeomorphic(L(p;r1) x L(p;r2), L(p;q1) x L(p;q2)), where L(p;r) has
/// rotation numbers (1, r).
ApplicationReport verify_application_theorem(Prime p);

}  // namespace spq
