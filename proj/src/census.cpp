#include "spq/census.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "spq/io.hpp"

namespace spq {

namespace {

std::uint64_t candidate_count(int p, int n) {
  std::uint64_t total = 1;
  for (int k = 0; k < 4 * n; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
      throw CapacityError("candidate space p^{4n} does not fit in 64 bits");
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

// Index digits, most significant first, are R_0..R_{2n-1}, Q_0..Q_{2n-1}, so
// index order is lexicographic (R, Q) order.
void decode(std::uint64_t index, int p, int n, std::vector<int>& r, std::vector<int>& q) {
  const auto len = static_cast<std::size_t>(2 * n);
  for (std::size_t k = len; k-- > 0;) {
    q[k] = static_cast<int>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
  for (std::size_t k = len; k-- > 0;) {
    r[k] = static_cast<int>(index % static_cast<std::uint64_t>(p));
    index /= static_cast<std::uint64_t>(p);
  }
}

bool spans_plane(const std::vector<int>& r, const std::vector<int>& q, int p) {
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (std::size_t l = k + 1; l < r.size(); ++l) {
      if (detail::mul(r[k], q[l], p) != detail::mul(r[l], q[k], p)) return true;
    }
  }
  return false;
}

RotationData make_space(int p, int n, const std::vector<int>& r, const std::vector<int>& q) {
  return validate(RawRotationData{p, n, {r.begin(), r.end()}, {q.begin(), q.end()}});
}

void require_exhaustive_range(int p, int n) {
  if (p > kMaxExhaustivePrime || n != kExhaustiveN)
    throw CapacityError("exhaustive enumeration is limited to p <= " + std::to_string(kMaxExhaustivePrime) +
                        " and n = " + std::to_string(kExhaustiveN) + "; use sampling mode");
}

struct Signature {
  KInvariant k;
  TotalClass pontrjagin;  // reduced in the model of k
  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Tally {
  std::uint64_t count = 0;
  std::uint64_t least = std::numeric_limits<std::uint64_t>::max();

  void add(std::uint64_t c, std::uint64_t index) {
    count += c;
    least = std::min(least, index);
  }
};

struct Partial {
  std::uint64_t total_pairs = 0;
  std::uint64_t free_count = 0;
  std::map<Signature, Tally> signatures;
};

// Candidate positions [begin, end) mapped to candidate indices by `index_of`.
Partial scan(int p, int n, std::uint64_t begin, std::uint64_t end,
             const std::function<std::uint64_t(std::uint64_t)>& index_of) {
  Partial out;
  std::map<KInvariant, CohomRingModel> models;
  const auto len = static_cast<std::size_t>(2 * n);
  std::vector<int> r(len), q(len);
  for (std::uint64_t pos = begin; pos < end; ++pos) {
    const std::uint64_t index = index_of(pos);
    decode(index, p, n, r, q);
    if (!spans_plane(r, q, p)) continue;
    ++out.total_pairs;
    const RotationData space = make_space(p, n, r, q);
    if (!is_free(space).free) continue;
    ++out.free_count;
    const KInvariant k = k_invariant(space);
    auto it = models.find(k);
    if (it == models.end()) it = models.emplace(k, build_model(k, Prime(p), n)).first;
    out.signatures[Signature{k, total_pontrjagin(space, it->second)}].add(1, index);
  }
  return out;
}

}  // namespace

void enumerate_free(Prime p, int n, const std::function<void(const RotationData&)>& visit, bool reverse) {
  require_exhaustive_range(p, n);
  const std::uint64_t total = candidate_count(p, n);
  const auto len = static_cast<std::size_t>(2 * n);
  std::vector<int> r(len), q(len);
  for (std::uint64_t pos = 0; pos < total; ++pos) {
    decode(reverse ? total - 1 - pos : pos, p, n, r, q);
    if (!spans_plane(r, q, p)) continue;
    const RotationData space = make_space(p, n, r, q);
    if (is_free(space).free) visit(space);
  }
}

SpaceClass classify_space(OrbitCache& cache, const RotationData& X) {
  const KInvariant k = k_invariant(X);
  return {cache.canonical(k), cache.fingerprint(k, unreduced_total_pontrjagin(X))};
}

CensusRecord run_census(Prime p, int n, const CensusOptions& options) {
  if (n < 2) throw InvalidDimension("n must be at least 2");
  if (p.value() <= n) throw HypothesisViolation("census needs the k-invariant formula, which requires p > n");
  CensusRecord record;
  record.p = p;
  record.n = n;
  record.exhaustive = !options.sample.has_value();
  record.outside_hypotheses = !(p.value() > 3 && p.value() > n + 1);

  const std::uint64_t total = candidate_count(p, n);
  std::vector<std::uint64_t> sample;
  if (record.exhaustive) {
    require_exhaustive_range(p, n);
    record.candidates = total;
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    sample.resize(*options.sample);
    for (auto& s : sample) s = pick(rng);
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    record.candidates = sample.size();
  }
  const std::uint64_t positions = record.candidates;
  std::function<std::uint64_t(std::uint64_t)> index_of = [&](std::uint64_t pos) {
    if (!record.exhaustive) pos = options.reverse_order ? positions - 1 - pos : pos;
    if (!record.exhaustive) return sample[pos];
    return options.reverse_order ? total - 1 - pos : pos;
  };

  const unsigned workers = std::max(1U, options.workers);
  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = positions * w / workers;
      const std::uint64_t end = positions * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          partials[w] = scan(p, n, begin, end, index_of);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::map<Signature, Tally> signatures;
  for (const Partial& part : partials) {
    record.total_pairs += part.total_pairs;
    record.free_count += part.free_count;
    for (const auto& [sig, tally] : part.signatures) signatures[sig].add(tally.count, tally.least);
  }

  // Canonical pairs and fingerprints do not depend on the cache that
  // produced them, so each worker keeps its own.
  std::vector<const std::pair<const Signature, Tally>*> entries;
  for (const auto& entry : signatures) entries.push_back(&entry);
  std::vector<std::optional<SpaceClass>> classes(entries.size());
  {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          OrbitCache cache(p, n);
          for (std::size_t i = w; i < entries.size(); i += workers) {
            const Signature& sig = entries[i]->first;
            classes[i] = SpaceClass{cache.canonical(sig.k), cache.fingerprint(sig.k, sig.pontrjagin)};
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::map<KInvariant, Tally> homotopy;
  std::map<std::pair<KInvariant, TotalClass>, Tally> homeo;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Tally& tally = entries[i]->second;
    homotopy[classes[i]->canonical_k].add(tally.count, tally.least);
    homeo[{classes[i]->canonical_k, classes[i]->fingerprint}].add(tally.count, tally.least);
  }

  // Number classes by least member.
  std::vector<std::pair<std::uint64_t, KInvariant>> homotopy_order;
  for (const auto& [canon, tally] : homotopy) homotopy_order.emplace_back(tally.least, canon);
  std::sort(homotopy_order.begin(), homotopy_order.end());
  std::map<KInvariant, std::size_t> homotopy_id;
  for (std::size_t i = 0; i < homotopy_order.size(); ++i) homotopy_id[homotopy_order[i].second] = i;

  std::vector<std::tuple<std::size_t, std::uint64_t, const std::pair<const std::pair<KInvariant, TotalClass>, Tally>*>>
      homeo_order;
  for (const auto& entry : homeo) homeo_order.emplace_back(homotopy_id.at(entry.first.first), entry.second.least, &entry);
  std::sort(homeo_order.begin(), homeo_order.end(),
            [](const auto& x, const auto& y) { return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y)); });

  record.homotopy_classes = homotopy.size();
  record.homeomorphism_classes = homeo.size();
  const auto len = static_cast<std::size_t>(2 * n);
  std::vector<int> r(len), q(len);
  for (std::size_t i = 0; i < homeo_order.size(); ++i) {
    const auto& [hid, least, entry] = homeo_order[i];
    decode(least, p, n, r, q);
    record.representatives.push_back(CensusRepresentative{make_space(p, n, r, q), entry->first.first,
                                                          entry->first.second, hid, i, entry->second.count});
  }
  return record;
}

std::string census_ndjson(const CensusRecord& record) {
  std::ostringstream out;
  for (const auto& rep : record.representatives) {
    json line = to_json(rep.space);
    line["homotopy_class"] = rep.homotopy_class;
    line["homeomorphism_class"] = rep.homeomorphism_class;
    line["members"] = rep.members;
    line["canonical_k"] = to_json(rep.canonical_k);
    line["pontrjagin_fingerprint"] = to_json(rep.fingerprint);
    out << line.dump() << '\n';
  }
  return out.str();
}

void write_census_files(const CensusRecord& record, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto name = "census_p" + std::to_string(record.p) + "_n" + std::to_string(record.n) + ".ndjson";
  {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << census_ndjson(record);
    if (!out) throw Error("failed to write " + (dir / name).string());
  }

  const std::string header = "p,n,free_count,homotopy_classes,homeomorphism_classes";
  std::map<std::pair<long, long>, std::string> rows;
  const auto summary = dir / "summary.csv";
  if (std::ifstream in(summary); in) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line == header) continue;
      std::istringstream fields(line);
      long p = 0, n = 0;
      char comma = 0;
      if (fields >> p >> comma >> n) rows[{p, n}] = line;
    }
  }
  rows[{record.p, record.n}] = std::to_string(record.p) + "," + std::to_string(record.n) + "," +
                               std::to_string(record.free_count) + "," + std::to_string(record.homotopy_classes) +
                               "," + std::to_string(record.homeomorphism_classes);
  std::ofstream out(summary, std::ios::binary | std::ios::trunc);
  out << header << '\n';
  for (const auto& [key, line] : rows) out << line << '\n';
  if (!out) throw Error("failed to write " + summary.string());
}

ApplicationReport verify_application_theorem(Prime p) {
  require_classification_hypotheses(p, 2);
  if (p.value() > kMaxApplicationPrime)
    throw CapacityError("application check is limited to p <= " + std::to_string(kMaxApplicationPrime));

  struct Target {
    int q1, q2;
    KInvariant k;
    CohomRingModel model;
    TotalClass pontrjagin;
  };
  auto lens_product = [&](int x, int y) {
    const std::array<std::int64_t, 2> first{1, x}, second{1, y};
    return product_of_lens_spaces(p, first, second);
  };

  std::vector<Target> targets;
  for (int q1 = 1; q1 < p; ++q1) {
    for (int q2 = 1; q2 < p; ++q2) {
      const RotationData Y = lens_product(q1, q2);
      KInvariant k = k_invariant(Y);
      CohomRingModel model = build_model(k, p, 2);
      TotalClass py = total_pontrjagin(Y, model);
      targets.push_back(Target{q1, q2, std::move(k), std::move(model), std::move(py)});
    }
  }

  ApplicationReport report;
  report.p = p;
  for (int r1 = 1; r1 < p; ++r1) {
    for (int r2 = 1; r2 < p; ++r2) {
      const RotationData X = lens_product(r1, r2);
      const WitnessSearch search(k_invariant(X));
      const TotalClass px = unreduced_total_pontrjagin(X);
      for (const Target& t : targets) {
        const Fp ratio = Fp(r1 * r2, p) * inv(Fp(t.q1 * t.q2, p));
        const bool criterion = is_quadratic_residue(ratio) || is_quadratic_residue(-ratio);
        const bool homeo = decide_homeomorphism(search, px, t.k, t.model, t.pontrjagin).equivalent;
        ++report.quadruples;
        report.criterion_holds += criterion ? 1 : 0;
        report.homeomorphic_count += homeo ? 1 : 0;
        const ApplicationCase c{r1, r2, t.q1, t.q2, criterion, homeo};
        if (criterion && !homeo) report.sufficiency_failures.push_back(c);
        if (!criterion && homeo) report.necessity_failures.push_back(c);
      }
    }
  }
  return report;
}

}  // namespace spq
