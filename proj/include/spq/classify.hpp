#pragma once

// Homotopy, simple-homotopy and homeomorphism classification of the
// quotients L(p,p; R, Q), plus the classical lens-space criteria.
//
// Two quotients X, Y with k-invariants k_X, k_Y are related by a pair (A, B):
//   A in GL_2(F_p)           substitution on (a, b), a change of the
//                            identification of pi_1 with (Z/p)^2;
//   B with det B = +-1       automorphism of the coefficient group Z^2,
//                            reduced mod p;
// and (A, B) is a k-witness when  B . substitute(k_X, A) == k_Y.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "spq/cohomology.hpp"
#include "spq/pontrjagin.hpp"

namespace spq {

enum class Level { homotopy, simple_homotopy, homeomorphism };

std::string to_string(Level level);

/// `marked` fixes the identification of pi_1 (A = I only); `unmarked`
/// allows any A.
enum class Marking { unmarked, marked };

/// Acts on k-invariant pairs by k -> B . substitute(k, A).
struct Transform {
  Mat2 A;
  Mat2 B;

  static Transform identity(Prime p) { return {Mat2::identity(p), Mat2::identity(p)}; }
  friend bool operator==(const Transform&, const Transform&) = default;
};

KInvariant apply(const Transform& t, const KInvariant& k);
/// The transform "first `first`, then `then`".
Transform compose(const Transform& first, const Transform& then);
Transform inverse(const Transform& t);

class EquivalenceWitness {
 public:
  /// Throws DomainError unless det A != 0, det B = +-1 and (A, B) carries
  /// `source` to `target`.
  EquivalenceWitness(const Mat2& A, const Mat2& B, Level level, const KInvariant& source,
                     const KInvariant& target);

  const Mat2& A() const { return A_; }
  const Mat2& B() const { return B_; }
  Level level() const { return level_; }

 private:
  Mat2 A_;
  Mat2 B_;
  Level level_;
};

struct Verdict {
  bool equivalent = false;
  Level level = Level::homotopy;
  std::optional<EquivalenceWitness> witness;
  /// Number of (A, B) pairs covered by the search, counted in enumeration
  /// order up to and including the reported witness.
  std::uint64_t checked_pairs = 0;
  /// Homeomorphism level only: whether the Pontrjagin class transported by
  /// the reported witness matches. Empty when no k-witness exists.
  std::optional<bool> pontrjagin_match;
};

struct ClassifyOptions {
  Marking marking = Marking::unmarked;
};

/// Throws HypothesisViolation unless p > 3 and p > n + 1.
void require_classification_hypotheses(int p, int n);

/// All B with det B = +-1 and B . source == target, in enumeration order.
std::vector<Mat2> coefficient_maps(const KInvariant& source, const KInvariant& target);

/// Exhaustive search over A in GL_2(F_p) (outer, Gl2Elements order) and
/// B in the det +-1 subgroup (inner). The substituted source pairs are
/// computed once, so one search object can be matched against many targets.
class WitnessSearch {
 public:
  WitnessSearch(const KInvariant& source, Marking marking = Marking::unmarked);

  /// Calls `visit(A, B, ordinal)` for every k-witness in enumeration order,
  /// where ordinal = index(A) * |B group| + index(B). Stops early when
  /// `visit` returns false.
  void for_each_witness(const KInvariant& target,
                        const std::function<bool(const Mat2&, const Mat2&, std::uint64_t)>& visit) const;

  /// Total number of (A, B) pairs in the search space.
  std::uint64_t size() const;

  const KInvariant& source() const { return source_; }

 private:
  KInvariant source_;
  const std::vector<Mat2>* a_list_;
  std::vector<Mat2> marked_list_;
  std::vector<KInvariant> transported_;
  std::uint64_t b_count_;
};

/// Both spaces must be free (DomainError otherwise).
Verdict homotopy_equivalent(const RotationData& X, const RotationData& Y, ClassifyOptions options = {});

/// Same verdict as homotopy_equivalent: for these even-dimensional
/// quotients homotopy equivalence is automatically simple.
Verdict simple_homotopy_equivalent(const RotationData& X, const RotationData& Y, ClassifyOptions options = {});

/// Homeomorphic iff some k-witness (A, B) also carries the total Pontrjagin
/// class of X onto that of Y in the quotient model of Y:
///   reduce_Y(substitute(p(X), A)) == p(Y).
/// Every k-witness is tried, not just the first.
Verdict homeomorphic(const RotationData& X, const RotationData& Y, ClassifyOptions options = {});

/// The homeomorphism search of homeomorphic() on precomputed inputs: `px` is
/// any representative of the total class of X, `py` the reduced total class
/// of Y in `model_y`. Lets one source be compared against many targets.
Verdict decide_homeomorphism(const WitnessSearch& search_x, const TotalClass& px, const KInvariant& ky,
                             const CohomRingModel& model_y, const TotalClass& py);

/// Memoized orbits of k-invariant pairs under the (A, B) action, found by
/// breadth-first search from generators. Not thread-safe.
/// breadth_first stores whole orbits and suits small (p, n); direct finds
/// the least element by scanning substitutions, with no orbit storage.
enum class OrbitStrategy { automatic, breadth_first, direct };

class OrbitCache {
 public:
  OrbitCache(Prime p, int n, OrbitStrategy strategy = OrbitStrategy::automatic);

  int prime() const { return p_; }
  int n() const { return n_; }
  OrbitStrategy strategy() const { return strategy_; }

  /// Lexicographically least element of the orbit of k.
  KInvariant canonical(const KInvariant& k);
  /// A transform t with apply(t, k) == canonical(k).
  Transform to_canonical(const KInvariant& k);
  /// Index of the orbit of k, assigned in order of first discovery.
  std::size_t orbit_id(const KInvariant& k);
  std::size_t orbit_count() const { return orbits_.size(); }

  /// Substitutions A for which some B makes (A, B) fix `canonical`.
  const std::vector<Mat2>& stabilizer_substitutions(const KInvariant& canonical);
  const CohomRingModel& canonical_model(const KInvariant& canonical);

  /// Homeomorphism invariant inside a homotopy class: the least reduced
  /// class obtained by transporting `pontrjagin` (any representative in the
  /// model of k) to the canonical pair by every k-witness.
  TotalClass fingerprint(const KInvariant& k, const TotalClass& pontrjagin);

 private:
  struct Member {
    std::uint32_t orbit;
    Transform from_root;
  };
  struct Orbit {
    Transform root_to_canonical;
    KInvariant canonical;
    std::optional<std::vector<Mat2>> stabilizer;
    std::optional<CohomRingModel> model;
  };

  std::uint64_t key(const KInvariant& k) const;
  const Member& member(const KInvariant& k);
  const Member& member_direct(const KInvariant& k);
  Orbit& orbit_of_canonical(const KInvariant& canonical);

  int p_;
  int n_;
  OrbitStrategy strategy_;
  std::vector<Transform> generators_;
  std::unordered_map<std::uint64_t, std::uint32_t> orbit_by_canonical_;
  std::unordered_map<std::uint64_t, Member> members_;
  std::vector<Orbit> orbits_;
  std::map<std::pair<std::uint32_t, TotalClass>, TotalClass> fingerprints_;
};

/// Least element of the (A, B)-orbit of k_invariant(X). Equal keys exactly
/// when the spaces are homotopy equivalent. Checks freeness and the
/// classification hypotheses.
KInvariant canonical_form(const RotationData& X);

/// t^n r_1...r_n == +- r'_1...r'_n (mod p) for some unit t.
bool lens_homotopy_equivalent(Prime p, int n, std::span<const std::int64_t> r, std::span<const std::int64_t> r_prime);

inline constexpr int kMaxLensPermutationSize = 8;

/// r_i == k r'_{sigma(i)} for some unit k and permutation sigma.
bool lens_simple_homotopy_equivalent(Prime p, int n, std::span<const std::int64_t> r,
                                     std::span<const std::int64_t> r_prime);

}  // namespace spq
