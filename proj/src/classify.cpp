#include "spq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>

namespace spq {

std::string to_string(Level level) {
  switch (level) {
    case Level::homotopy: return "homotopy";
    case Level::simple_homotopy: return "simple_homotopy";
    case Level::homeomorphism: return "homeomorphism";
  }
  return "unknown";
}

KInvariant apply(const Transform& t, const KInvariant& k) { return apply_coefficient_map(t.B, substitute(k, t.A)); }

Transform compose(const Transform& first, const Transform& then) {
  // then.B . subst(first.B . subst(k, first.A), then.A)
  //   = (then.B first.B) . subst(k, first.A then.A)
  return {first.A * then.A, then.B * first.B};
}

Transform inverse(const Transform& t) { return {t.A.inverse(), t.B.inverse()}; }

namespace {

bool det_is_unit_sign(const Mat2& m) {
  const int d = m.det().value();
  return d == 1 || d == m.prime() - 1;
}

// Position of m in Gl2Elements order: base-p digits of the entries of m - I.
std::uint32_t enumeration_code(const Mat2& m) {
  const int p = m.prime();
  const auto& e = m.entries();
  const std::array<int, 4> offset{detail::sub(e[0], 1, p), e[1], e[2], detail::sub(e[3], 1, p)};
  std::uint32_t code = 0;
  for (int d : offset) code = code * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(d);
  return code;
}

const std::vector<std::uint32_t>& det_pm1_codes(Prime p) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p.value());
  if (it == cache.end()) {
    std::vector<std::uint32_t> codes;
    for (const Mat2& m : gl2_list(p, Gl2Filter::det_pm1)) codes.push_back(enumeration_code(m));
    it = cache.emplace(p.value(), std::move(codes)).first;
  }
  return it->second;
}

// All (x, y) with x f + y g == t.
std::vector<std::pair<int, int>> combination_solutions(const HomogeneousForm& f, const HomogeneousForm& g,
                                                       const HomogeneousForm& t) {
  const int p = f.prime();
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  const auto& tc = t.coeffs();
  const std::size_t len = fc.size();
  auto satisfies = [&](int x, int y) {
    for (std::size_t c = 0; c < len; ++c) {
      if (detail::add(detail::mul(x, fc[c], p), detail::mul(y, gc[c], p), p) != tc[c]) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const int minor = detail::sub(detail::mul(fc[i], gc[j], p), detail::mul(fc[j], gc[i], p), p);
      if (minor == 0) continue;
      // f, g independent: the 2x2 system on coordinates i, j has one solution.
      const int mi = detail::inv(minor, p);
      const int x = detail::mul(detail::sub(detail::mul(tc[i], gc[j], p), detail::mul(tc[j], gc[i], p), p), mi, p);
      const int y = detail::mul(detail::sub(detail::mul(fc[i], tc[j], p), detail::mul(fc[j], tc[i], p), p), mi, p);
      if (satisfies(x, y)) return {{x, y}};
      return {};
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      if (satisfies(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

EquivalenceWitness::EquivalenceWitness(const Mat2& A, const Mat2& B, Level level, const KInvariant& source,
                                       const KInvariant& target)
    : A_(A), B_(B), level_(level) {
  if (!A.invertible()) throw DomainError("witness substitution A is singular");
  if (!det_is_unit_sign(B)) throw DomainError("witness coefficient map B must have det +-1");
  if (apply({A, B}, source) != target) throw DomainError("(A, B) does not carry the source k-invariant to the target");
}

void require_classification_hypotheses(int p, int n) {
  if (!(p > 3 && p > n + 1))
    throw HypothesisViolation("classification requires p > 3 and p > n + 1 (p = " + std::to_string(p) +
                              ", n = " + std::to_string(n) + ")");
}

std::vector<Mat2> coefficient_maps(const KInvariant& source, const KInvariant& target) {
  if (source.prime() != target.prime() || source.degree() != target.degree()) return {};
  const int p = source.prime();
  const auto first_rows = combination_solutions(source.first, source.second, target.first);
  if (first_rows.empty()) return {};
  const auto second_rows = combination_solutions(source.first, source.second, target.second);
  std::vector<Mat2> out;
  for (const auto& [b11, b12] : first_rows) {
    for (const auto& [b21, b22] : second_rows) {
      auto m = Mat2::raw(p, {b11, b12, b21, b22});
      if (det_is_unit_sign(m)) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Mat2& x, const Mat2& y) { return enumeration_code(x) < enumeration_code(y); });
  return out;
}

// --- WitnessSearch ------------------------------------------------------------

WitnessSearch::WitnessSearch(const KInvariant& source, Marking marking)
    : source_(source), a_list_(nullptr), b_count_(0) {
  const Prime p(source.prime());
  if (marking == Marking::marked) {
    marked_list_.push_back(Mat2::identity(p));
  } else {
    a_list_ = &gl2_list(p, Gl2Filter::all);
  }
  b_count_ = gl2_list(p, Gl2Filter::det_pm1).size();
  const auto& as = a_list_ ? *a_list_ : marked_list_;
  transported_.reserve(as.size());
  for (const Mat2& A : as) transported_.push_back(substitute(source_, A));
}

std::uint64_t WitnessSearch::size() const { return transported_.size() * b_count_; }

void WitnessSearch::for_each_witness(
    const KInvariant& target, const std::function<bool(const Mat2&, const Mat2&, std::uint64_t)>& visit) const {
  if (target.prime() != source_.prime() || target.degree() != source_.degree()) return;
  const auto& as = a_list_ ? *a_list_ : marked_list_;
  const auto& codes = det_pm1_codes(Prime(source_.prime()));
  for (std::size_t i = 0; i < transported_.size(); ++i) {
    for (const Mat2& B : coefficient_maps(transported_[i], target)) {
      const auto pos = std::lower_bound(codes.begin(), codes.end(), enumeration_code(B)) - codes.begin();
      const std::uint64_t ordinal = i * b_count_ + static_cast<std::uint64_t>(pos);
      if (!visit(as[i], B, ordinal)) return;
    }
  }
}

// --- decision procedures ------------------------------------------------------

namespace {

bool same_shape(const RotationData& X, const RotationData& Y) {
  return X.prime().value() == Y.prime().value() && X.n() == Y.n();
}

void require_free(const RotationData& X) {
  if (!is_free(X).free) throw DomainError("the classifier only applies to free actions");
}

Verdict k_verdict(const RotationData& X, const RotationData& Y, Level level, ClassifyOptions options) {
  require_free(X);
  require_free(Y);
  Verdict verdict;
  verdict.level = level;
  if (!same_shape(X, Y)) return verdict;
  require_classification_hypotheses(X.prime(), X.n());
  const KInvariant kx = k_invariant(X);
  const KInvariant ky = k_invariant(Y);
  const WitnessSearch search(kx, options.marking);
  verdict.checked_pairs = search.size();
  search.for_each_witness(ky, [&](const Mat2& A, const Mat2& B, std::uint64_t ordinal) {
    verdict.equivalent = true;
    verdict.witness.emplace(A, B, level, kx, ky);
    verdict.checked_pairs = ordinal + 1;
    return false;
  });
  return verdict;
}

}  // namespace

Verdict homotopy_equivalent(const RotationData& X, const RotationData& Y, ClassifyOptions options) {
  return k_verdict(X, Y, Level::homotopy, options);
}

Verdict simple_homotopy_equivalent(const RotationData& X, const RotationData& Y, ClassifyOptions options) {
  return k_verdict(X, Y, Level::simple_homotopy, options);
}

Verdict decide_homeomorphism(const WitnessSearch& search_x, const TotalClass& px, const KInvariant& ky,
                             const CohomRingModel& model_y, const TotalClass& py) {
  Verdict verdict;
  verdict.level = Level::homeomorphism;
  verdict.checked_pairs = search_x.size();
  search_x.for_each_witness(ky, [&](const Mat2& A, const Mat2& B, std::uint64_t ordinal) {
    verdict.pontrjagin_match = false;
    if (!equal_in_quotient(model_y, substitute(px, A), py)) return true;
    verdict.pontrjagin_match = true;
    verdict.equivalent = true;
    verdict.witness.emplace(A, B, Level::homeomorphism, search_x.source(), ky);
    verdict.checked_pairs = ordinal + 1;
    return false;
  });
  return verdict;
}

Verdict homeomorphic(const RotationData& X, const RotationData& Y, ClassifyOptions options) {
  require_free(X);
  require_free(Y);
  if (!same_shape(X, Y)) {
    Verdict verdict;
    verdict.level = Level::homeomorphism;
    return verdict;
  }
  require_classification_hypotheses(X.prime(), X.n());
  const KInvariant ky = k_invariant(Y);
  const CohomRingModel model_y = build_model(ky, Y.prime(), Y.n());
  return decide_homeomorphism(WitnessSearch(k_invariant(X), options.marking), unreduced_total_pontrjagin(X), ky,
                              model_y, total_pontrjagin(Y, model_y));
}

// --- OrbitCache ---------------------------------------------------------------

namespace {

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    bool generates = true;
    int x = 1;
    for (int e = 1; e < p - 1; ++e) {
      x = detail::mul(x, g, p);
      if (x == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  return 1;  // unreachable for odd primes
}

// Least B.k over det +-1 coefficient maps B, and that B. When the forms are
// independent the least first component is the second echelon row u of
// span{f, g}, and the second runs over +-w + t u for a fixed complement w.
std::pair<KInvariant, Mat2> least_coefficient_image(const KInvariant& k) {
  const int p = k.prime();
  const Prime prime(p);
  std::array<std::vector<int>, 2> row{k.first.coeffs(), k.second.coeffs()};
  std::array<std::array<int, 2>, 2> comb{{{1, 0}, {0, 1}}};
  const std::size_t len = row[0].size();
  auto pivot = [&](const std::vector<int>& v) {
    std::size_t j = 0;
    while (j < len && v[j] == 0) ++j;
    return j;
  };
  auto axpy = [&](int s, int which, int into) {
    for (std::size_t c = 0; c < len; ++c) row[into][c] = detail::add(row[into][c], detail::mul(s, row[which][c], p), p);
    for (int c = 0; c < 2; ++c) comb[into][c] = detail::add(comb[into][c], detail::mul(s, comb[which][c], p), p);
  };
  auto scale = [&](int s, int which) {
    for (int& x : row[which]) x = detail::mul(s, x, p);
    for (int& x : comb[which]) x = detail::mul(s, x, p);
  };

  const std::size_t j1 = std::min(pivot(row[0]), pivot(row[1]));
  if (j1 == len) return {k, Mat2::identity(prime)};
  if (row[0][j1] == 0) {
    std::swap(row[0], row[1]);
    std::swap(comb[0], comb[1]);
  }
  scale(detail::inv(row[0][j1], p), 0);
  axpy(detail::sub(0, row[1][j1], p), 0, 1);
  const std::size_t j2 = pivot(row[1]);

  if (j2 == len) {
    // f = x v, g = y v with v monic: the least image is (0, v).
    const int x = k.first.coeffs()[j1];
    const int y = k.second.coeffs()[j1];
    const Mat2 B = x != 0 ? Mat2(prime, y, detail::sub(0, x, p), detail::inv(x, p), 0)
                          : Mat2(prime, y, detail::sub(0, x, p), 0, detail::inv(y, p));
    return {KInvariant{HomogeneousForm::zero(prime, k.degree()), HomogeneousForm::from_residues(p, row[0])}, B};
  }

  scale(detail::inv(row[1][j2], p), 1);
  const auto [alpha, beta] = comb[1];
  const int gamma0 = alpha != 0 ? 0 : detail::sub(0, detail::inv(beta, p), p);
  const int delta0 = alpha != 0 ? detail::inv(alpha, p) : 0;
  std::vector<int> w(len);
  for (std::size_t c = 0; c < len; ++c)
    w[c] = detail::add(detail::mul(gamma0, k.first.coeffs()[c], p), detail::mul(delta0, k.second.coeffs()[c], p), p);
  // w is nonzero somewhere before j2, which fixes the sign; t then clears
  // position j2.
  const int lead = w[pivot(w)];
  const int d = lead < p - lead ? 1 : p - 1;
  const int t = detail::sub(0, detail::mul(d, w[j2], p), p);
  std::vector<int> second(len);
  for (std::size_t c = 0; c < len; ++c) second[c] = detail::add(detail::mul(d, w[c], p), detail::mul(t, row[1][c], p), p);
  const Mat2 B(prime, alpha, beta, detail::add(detail::mul(d, gamma0, p), detail::mul(t, alpha, p), p),
               detail::add(detail::mul(d, delta0, p), detail::mul(t, beta, p), p));
  return {KInvariant{HomogeneousForm::from_residues(p, row[1]), HomogeneousForm::from_residues(p, std::move(second))},
          B};
}

}  // namespace

OrbitCache::OrbitCache(Prime p, int n, OrbitStrategy strategy) : p_(p), n_(n), strategy_(strategy) {
  if (p.value() > kMaxGl2Prime)
    throw CapacityError("orbit enumeration is limited to p <= " + std::to_string(kMaxGl2Prime));
  const auto digits = static_cast<unsigned>(2 * (n + 1));
  const double bits = digits * std::log2(static_cast<double>(p.value()));
  if (bits >= 63.0) throw CapacityError("k-invariant pairs for this (p, n) do not fit the orbit key");
  // Orbits live inside the p^(2n+2) pairs of forms; past a few hundred
  // thousand the breadth-first tables cost more than direct scans.
  if (strategy_ == OrbitStrategy::automatic)
    strategy_ = bits <= std::log2(200000.0) ? OrbitStrategy::breadth_first : OrbitStrategy::direct;

  const int g = primitive_root(p);
  const Mat2 I = Mat2::identity(p);
  // SL_2 is generated by the two elementary matrices; diag(g, 1) and
  // diag(-1, 1) extend to GL_2 and to the det +-1 subgroup.
  const std::array<Mat2, 3> a_gens{Mat2(p, 1, 1, 0, 1), Mat2(p, 1, 0, 1, 1), Mat2::diagonal(p, g, 1)};
  const std::array<Mat2, 3> b_gens{Mat2(p, 1, 1, 0, 1), Mat2(p, 1, 0, 1, 1), Mat2::diagonal(p, -1, 1)};
  for (const auto& A : a_gens) generators_.push_back({A, I});
  for (const auto& B : b_gens) generators_.push_back({I, B});
}

std::uint64_t OrbitCache::key(const KInvariant& k) const {
  if (k.prime() != p_ || k.degree() != n_) throw DomainError("k-invariant does not match the orbit cache (p, n)");
  std::uint64_t out = 0;
  for (int c : k.first.coeffs()) out = out * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(c);
  for (int c : k.second.coeffs()) out = out * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(c);
  return out;
}

const OrbitCache::Member& OrbitCache::member(const KInvariant& k) {
  const std::uint64_t root_key = key(k);
  if (auto it = members_.find(root_key); it != members_.end()) return it->second;
  if (strategy_ == OrbitStrategy::direct) return member_direct(k);

  const auto id = static_cast<std::uint32_t>(orbits_.size());
  const Prime p(p_);
  std::deque<std::pair<KInvariant, Transform>> queue;
  queue.emplace_back(k, Transform::identity(p));
  members_.emplace(root_key, Member{id, Transform::identity(p)});
  std::uint64_t best_key = root_key;
  Transform best = Transform::identity(p);
  KInvariant best_k = k;

  while (!queue.empty()) {
    auto [current, from_root] = std::move(queue.front());
    queue.pop_front();
    for (const Transform& gen : generators_) {
      KInvariant next = apply(gen, current);
      const std::uint64_t next_key = key(next);
      if (members_.contains(next_key)) continue;
      Transform t = compose(from_root, gen);
      members_.emplace(next_key, Member{id, t});
      if (next_key < best_key) {
        best_key = next_key;
        best = t;
        best_k = next;
      }
      queue.emplace_back(std::move(next), t);
    }
  }
  orbits_.push_back(Orbit{best, best_k, std::nullopt, std::nullopt});
  return members_.at(root_key);
}

const OrbitCache::Member& OrbitCache::member_direct(const KInvariant& k) {
  const Prime p(p_);
  std::optional<KInvariant> best;
  Transform best_t = Transform::identity(p);
  for (const Mat2& A : gl2_list(p, Gl2Filter::all)) {
    auto [image, B] = least_coefficient_image(substitute(k, A));
    if (!best || image < *best) {
      best = std::move(image);
      best_t = {A, B};
    }
  }
  const std::uint64_t canon_key = key(*best);
  auto [it, inserted] = orbit_by_canonical_.try_emplace(canon_key, static_cast<std::uint32_t>(orbits_.size()));
  if (inserted) orbits_.push_back(Orbit{Transform::identity(p), *best, std::nullopt, std::nullopt});
  // The orbit root is the canonical pair itself.
  return members_.emplace(key(k), Member{it->second, inverse(best_t)}).first->second;
}

KInvariant OrbitCache::canonical(const KInvariant& k) { return orbits_[member(k).orbit].canonical; }

std::size_t OrbitCache::orbit_id(const KInvariant& k) { return member(k).orbit; }

Transform OrbitCache::to_canonical(const KInvariant& k) {
  const Member& m = member(k);
  return compose(inverse(m.from_root), orbits_[m.orbit].root_to_canonical);
}

OrbitCache::Orbit& OrbitCache::orbit_of_canonical(const KInvariant& canonical) {
  return orbits_[member(canonical).orbit];
}

const std::vector<Mat2>& OrbitCache::stabilizer_substitutions(const KInvariant& canonical) {
  Orbit& orbit = orbit_of_canonical(canonical);
  if (!orbit.stabilizer) {
    std::vector<Mat2> out;
    for (const Mat2& A : gl2_list(Prime(p_), Gl2Filter::all)) {
      if (!coefficient_maps(substitute(orbit.canonical, A), orbit.canonical).empty()) out.push_back(A);
    }
    orbit.stabilizer = std::move(out);
  }
  return *orbit.stabilizer;
}

const CohomRingModel& OrbitCache::canonical_model(const KInvariant& canonical) {
  Orbit& orbit = orbit_of_canonical(canonical);
  if (!orbit.model) orbit.model = build_model(orbit.canonical, Prime(p_), n_);
  return *orbit.model;
}

TotalClass OrbitCache::fingerprint(const KInvariant& k, const TotalClass& pontrjagin) {
  const Transform t = to_canonical(k);
  const std::uint32_t id = member(k).orbit;
  const KInvariant canon = orbits_[id].canonical;
  const CohomRingModel& model = canonical_model(canon);
  const TotalClass base = reduce(model, substitute(pontrjagin, t.A));
  auto memo_key = std::pair{id, base};
  if (auto it = fingerprints_.find(memo_key); it != fingerprints_.end()) return it->second;

  TotalClass best = base;
  for (const Mat2& S : stabilizer_substitutions(canon)) {
    TotalClass candidate = reduce(model, substitute(base, S));
    if (candidate < best) best = std::move(candidate);
  }
  fingerprints_.emplace(std::move(memo_key), best);
  return best;
}

KInvariant canonical_form(const RotationData& X) {
  require_free(X);
  require_classification_hypotheses(X.prime(), X.n());
  static std::mutex mutex;
  static std::map<std::pair<int, int>, OrbitCache> caches;
  const KInvariant k = k_invariant(X);
  std::lock_guard lock(mutex);
  auto it = caches.find({X.prime().value(), X.n()});
  if (it == caches.end()) it = caches.emplace(std::pair{X.prime().value(), X.n()}, OrbitCache(X.prime(), X.n())).first;
  return it->second.canonical(k);
}

// --- lens spaces --------------------------------------------------------------

namespace {

std::vector<int> reduced_rotations(Prime p, int n, std::span<const std::int64_t> r) {
  if (n < 1 || r.size() != static_cast<std::size_t>(n))
    throw InvalidDimension("expected " + std::to_string(n) + " rotation numbers");
  std::vector<int> out;
  for (auto v : r) {
    const int x = detail::reduce(v, p);
    if (x == 0) throw InvalidRotation("rotation number " + std::to_string(v) + " is zero mod p");
    out.push_back(x);
  }
  return out;
}

}  // namespace

bool lens_homotopy_equivalent(Prime p, int n, std::span<const std::int64_t> r, std::span<const std::int64_t> r_prime) {
  const auto x = reduced_rotations(p, n, r);
  const auto y = reduced_rotations(p, n, r_prime);
  auto product = [&](const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 1, [&](int acc, int e) { return detail::mul(acc, e, p); });
  };
  const int lhs = product(x);
  const int rhs = product(y);
  for (int t = 1; t < p; ++t) {
    const int scaled = detail::mul(detail::pow(t, static_cast<std::uint64_t>(n), p), lhs, p);
    if (scaled == rhs || scaled == detail::sub(0, rhs, p)) return true;
  }
  return false;
}

bool lens_simple_homotopy_equivalent(Prime p, int n, std::span<const std::int64_t> r,
                                     std::span<const std::int64_t> r_prime) {
  if (n > kMaxLensPermutationSize)
    throw CapacityError("permutation search is limited to n <= " + std::to_string(kMaxLensPermutationSize));
  const auto x = reduced_rotations(p, n, r);
  const auto y = reduced_rotations(p, n, r_prime);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int k = 1; k < p; ++k) {
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      bool all = true;
      for (std::size_t i = 0; i < sigma.size() && all; ++i)
        all = x[i] == detail::mul(k, y[static_cast<std::size_t>(sigma[i])], p);
      if (all) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return false;
}

}  // namespace spq
