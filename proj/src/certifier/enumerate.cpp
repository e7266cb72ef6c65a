#include "ratiocert/certifier/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "ratiocert/errors.hpp"
#include "ratiocert/exact_linalg/linalg.hpp"

namespace ratiocert {
namespace {

// Runs fn(i) for i in [0, count) on up to `jobs` threads; rethrows the first failure.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < count && !stop; i = next++) {
      try {
        fn(i);
      } catch (...) {
        stop = true;
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// C scaled to integers: z = C y is 0/1 iff every entry of D C y is 0 or D.
struct ScaledColumns {
  std::size_t rows = 0;
  std::vector<std::vector<std::int64_t>> cols;
  std::int64_t d = 1;
};

std::optional<ScaledColumns> scale_columns(const ExactMatrix& c) {
  auto [ints, d] = c.common_denominator_form();
  if (!d.is_small() || ints.max_bits() > 40 || d.bit_length() > 40) return std::nullopt;
  ScaledColumns s;
  s.rows = c.rows();
  s.d = d.small_value();
  s.cols.assign(c.cols(), std::vector<std::int64_t>(c.rows()));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) s.cols[j][i] = ints(i, j).small_value();
  return s;
}

struct SweepHit {
  std::uint64_t y;
  VertexSet set;
};

struct ChunkResult {
  std::uint64_t zero_one = 0;
  std::vector<SweepHit> hits;
};

bool zero_one(const std::vector<std::int64_t>& z, std::int64_t d) {
  for (auto e : z)
    if (e != 0 && e != d) return false;
  return true;
}

}  // namespace

EnumerationReport colspace_enumerate(const Graph& g, const ExactMatrix& m, const VertexSet& seeds, std::size_t target_size,
                                     const EnumerateOptions& options) {
  const std::size_t v = g.order();
  if (m.rows() != v) throw Error(ErrorKind::kDimension, "M must have one row per vertex");
  if (!is_independent(g, seeds)) throw Error(ErrorKind::kDimension, "seed set is not independent");
  EnumerationReport report;
  {
    std::string d = "{";
    for (const auto& l : g.labels_of(seeds)) d += (d.size() > 1 ? ", " : "") + l;
    report.seed_description = d + "}";
  }

  Bitset adjacent(v);
  for (std::size_t a = seeds.first(); a != Bitset::npos; a = seeds.next(a + 1)) adjacent |= g.neighbors(a);
  const auto rows = adjacent.indices();
  const ExactMatrix n = rows.empty() ? ExactMatrix::identity(m.cols()) : linalg::nullspace_basis(m.select_rows(rows));
  const linalg::RowEchelon e = linalg::rref((m * n).transpose());
  const std::size_t r = e.rank();
  report.rank_C = r;
  if (r > options.rank_cap) {
    throw Error(ErrorKind::kRankTooLarge,
                "rank(C) = " + std::to_string(r) + " exceeds the cap " + std::to_string(options.rank_cap));
  }
  const ExactMatrix c = e.reduced.transpose();
  report.candidates_tested = std::uint64_t{1} << r;

  auto accept = [&](const VertexSet& s) {
    return s.count() == target_size && seeds.is_subset_of(s) && is_independent(g, s);
  };

  std::vector<SweepHit> hits;
  std::vector<std::uint64_t> bad;  // only collected for the C_0 pass
  const bool want_bad = options.minimize_c0 && r <= 16;
  auto scaled = scale_columns(c);
  if (scaled) {
    const std::size_t top_bits = std::min<std::size_t>(r, 6);
    const std::size_t low_bits = r - top_bits;
    std::vector<ChunkResult> chunks(std::size_t{1} << top_bits);
    std::vector<std::vector<std::uint64_t>> chunk_bad(chunks.size());
    parallel_for(chunks.size(), options.jobs, [&](std::size_t chunk) {
      const auto& cols = scaled->cols;
      std::vector<std::int64_t> z(v, 0);
      const std::uint64_t high = static_cast<std::uint64_t>(chunk) << low_bits;
      for (std::size_t b = low_bits; b < r; ++b)
        if (high >> b & 1u)
          for (std::size_t i = 0; i < v; ++i) z[i] += cols[b][i];
      std::uint64_t gray = 0;
      for (std::uint64_t step = 0; step < (std::uint64_t{1} << low_bits); ++step) {
        if (step) {
          const auto b = static_cast<std::size_t>(std::countr_zero(step));
          const bool on = !(gray >> b & 1u);
          gray ^= std::uint64_t{1} << b;
          if (on) for (std::size_t i = 0; i < v; ++i) z[i] += cols[b][i];
          else for (std::size_t i = 0; i < v; ++i) z[i] -= cols[b][i];
        }
        const std::uint64_t y = high | gray;
        if (!zero_one(z, scaled->d)) {
          if (want_bad) chunk_bad[chunk].push_back(y);
          continue;
        }
        ++chunks[chunk].zero_one;
        VertexSet s(v);
        for (std::size_t i = 0; i < v; ++i)
          if (z[i]) s.set(i);
        if (accept(s)) chunks[chunk].hits.push_back({y, std::move(s)});
      }
    });
    for (std::size_t k = 0; k < chunks.size(); ++k) {
      report.zero_one_candidates += chunks[k].zero_one;
      for (auto& h : chunks[k].hits) hits.push_back(std::move(h));
      bad.insert(bad.end(), chunk_bad[k].begin(), chunk_bad[k].end());
    }
  } else {
    for (std::uint64_t y = 0; y < report.candidates_tested; ++y) {
      VertexSet s(v);
      bool ok = true;
      for (std::size_t i = 0; i < v && ok; ++i) {
        Rational zi;
        for (std::size_t b = 0; b < r; ++b)
          if (y >> b & 1u) zi += c(i, b);
        if (zi.is_one()) s.set(i);
        else ok = zi.is_zero();
      }
      if (!ok) {
        if (want_bad) bad.push_back(y);
        continue;
      }
      ++report.zero_one_candidates;
      if (accept(s)) hits.push_back({y, std::move(s)});
    }
  }

  std::sort(hits.begin(), hits.end(), [](const SweepHit& a, const SweepHit& b) { return a.set < b.set; });
  for (auto& h : hits) {
    if (options.compute_h) {
      RationalVector z(v);
      for (std::size_t i = h.set.first(); i != Bitset::npos; i = h.set.next(i + 1)) z[i] = Rational(1);
      auto sol = linalg::solve(m, z);
      if (!sol) throw Error(ErrorKind::kConstructionFailed, "enumerated set is not in the column space of M");
      report.h_vectors.push_back(std::move(*sol));
    }
    report.valid_sets.push_back(std::move(h.set));
  }

  if (want_bad) {
    std::sort(bad.begin(), bad.end());
    std::vector<bool> pivot_row(v, false);
    for (auto p : e.pivots) pivot_row[p] = true;
    auto value = [&](std::size_t row, std::uint64_t y) {
      Rational t;
      for (std::size_t b = 0; b < r; ++b)
        if (y >> b & 1u) t += c(row, b);
      return t;
    };
    while (!bad.empty()) {
      std::size_t best_row = v, best_kill = 0;
      for (std::size_t row = 0; row < v; ++row) {
        if (pivot_row[row]) continue;
        std::size_t kill = 0;
        for (auto y : bad) {
          const Rational t = value(row, y);
          kill += !(t.is_zero() || t.is_one());
        }
        if (kill > best_kill) {
          best_kill = kill;
          best_row = row;
        }
      }
      if (best_row == v) break;
      report.c0_rows.push_back(best_row);
      std::erase_if(bad, [&](std::uint64_t y) {
        const Rational t = value(best_row, y);
        return !(t.is_zero() || t.is_one());
      });
    }
  }
  return report;
}

std::string SeedStrategy::to_string() const {
  return kind == Kind::kSingletons ? "singletons" : "pairs:A" + std::to_string(cls);
}

SeedStrategy SeedStrategy::parse(const std::string& text) {
  if (text == "singletons") return {};
  const std::string prefix = "pairs:";
  if (text.rfind(prefix, 0) == 0) {
    std::string rest = text.substr(prefix.size());
    if (!rest.empty() && (rest[0] == 'A' || rest[0] == 'a')) rest.erase(0, 1);
    if (!rest.empty() && std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) && rest.size() < 4) {
      const std::size_t c = std::stoul(rest);
      if (c >= 1) return {Kind::kPairsInClass, c};
    }
  }
  throw Error(ErrorKind::kParse, "unknown seed strategy '" + text + "' (expected singletons or pairs:A<c>)");
}

DriverReport enumerate_all_max_independent(const Graph& g, const ExactMatrix& m, std::size_t target_size,
                                           const SeedStrategy& strategy, const AssociationScheme* scheme,
                                           const EnumerateOptions& options) {
  const std::size_t v = g.order();
  std::vector<VertexSet> seeds;
  if (strategy.kind == SeedStrategy::Kind::kSingletons) {
    for (std::size_t a = 0; a < v; ++a) seeds.push_back(Bitset::from_indices(v, {a}));
  } else {
    if (!scheme) throw Error(ErrorKind::kDimension, "pair seeds need an association scheme");
    if (strategy.cls > scheme->class_count() || scheme->vertex_count() != v)
      throw Error(ErrorKind::kDimension, "seed class does not exist in the scheme");
    for (std::size_t a = 0; a < v; ++a) {
      const auto& row = scheme->class_row(strategy.cls, a);
      for (std::size_t b = row.next(a + 1); b != Bitset::npos; b = row.next(b + 1))
        seeds.push_back(Bitset::from_indices(v, {a, b}));
    }
  }

  EnumerateOptions inner = options;
  inner.jobs = 1;
  inner.compute_h = false;
  inner.minimize_c0 = false;
  std::vector<EnumerationReport> reports(seeds.size());
  parallel_for(seeds.size(), options.jobs, [&](std::size_t i) {
    if (!is_independent(g, seeds[i])) return;
    reports[i] = colspace_enumerate(g, m, seeds[i], target_size, inner);
  });

  DriverReport out;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!is_independent(g, seeds[i])) continue;
    auto& r = reports[i];
    ++out.seeds;
    out.max_rank_C = std::max(out.max_rank_C, r.rank_C);
    out.candidates_tested += r.candidates_tested;
    out.zero_one_candidates += r.zero_one_candidates;
    out.valid_hits += r.valid_sets.size();
    for (auto& s : r.valid_sets) out.sets.push_back(std::move(s));
  }
  std::sort(out.sets.begin(), out.sets.end());
  out.sets.erase(std::unique(out.sets.begin(), out.sets.end()), out.sets.end());
  return out;
}

bool verify_inner_distribution(const AssociationScheme& scheme, const VertexSet& s, const std::vector<Rational>& expected) {
  const std::size_t n = scheme.class_count() + 1;
  if (expected.size() != n) return false;
  for (std::size_t a = s.first(); a != Bitset::npos; a = s.next(a + 1))
    for (std::size_t i = 0; i < n; ++i)
      if (Rational(static_cast<std::int64_t>(scheme.class_row(i, a).intersection_count(s))) != expected[i]) return false;
  return true;
}

std::vector<Rational> predicted_tight_inner_distribution(const AssociationScheme& scheme, const Eigenmatrix& em,
                                                         const IdempotentBasis& basis, std::size_t tau_space,
                                                         const Rational& size) {
  const std::size_t n = scheme.class_count() + 1;
  const Rational v(static_cast<std::int64_t>(scheme.vertex_count()));
  std::vector<Rational> w(n);
  w[0] = size * size / v;
  w[tau_space] = (size - size * size / v) / Rational(static_cast<std::int64_t>(em.multiplicities[tau_space]));
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational coeff;
    for (std::size_t j = 0; j < n; ++j) coeff += w[j] * basis.coefficients[j][i];
    out[i] = coeff * v * Rational(static_cast<std::int64_t>(scheme.valencies()[i])) / size;
  }
  return out;
}

}  // namespace ratiocert
