#include "ratiocert/graph_core/independence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "ratiocert/errors.hpp"

namespace ratiocert {
namespace {

class Search {
 public:
  Search(const Graph& g, const BruteForceOptions& options) : options_(options), n_(g.order()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> pos(n_);
    for (std::size_t p = 0; p < n_; ++p) pos[order_[p]] = p;
    nbr_.assign(n_, Bitset(n_));
    non_nbr_.assign(n_, Bitset(n_));
    for (std::size_t p = 0; p < n_; ++p) {
      const auto& row = g.neighbors(order_[p]);
      for (std::size_t j = row.first(); j != Bitset::npos; j = row.next(j + 1)) nbr_[p].set(pos[j]);
      non_nbr_[p].set_all();
      non_nbr_[p].subtract(nbr_[p]);
      non_nbr_[p].reset(p);
    }
  }

  BruteForceResult run() {
    Bitset all(n_);
    all.set_all();
    std::vector<std::size_t> verts, colors;
    color(all, verts, colors);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      try {
        Bitset r(n_);
        for (std::size_t t = next++; t < verts.size() && !abort_.load(); t = next++) {
          const std::size_t i = verts.size() - 1 - t;
          if (pruned(0, colors[i])) continue;
          Bitset p(n_);
          for (std::size_t q = 0; q < i; ++q) p.set(verts[q]);
          p &= non_nbr_[verts[i]];
          r.set(verts[i]);
          expand(r, 1, std::move(p));
          r.reset(verts[i]);
        }
      } catch (...) {
        abort_ = true;
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    };
    const unsigned jobs = std::max(1u, options_.jobs);
    if (jobs == 1 || n_ < 2) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    BruteForceResult result;
    result.size = best_state_.load() >> 1;
    result.count = n_ == 0 ? 1 : count_;
    result.nodes = nodes_.load();
    result.truncated = options_.stop_at && result.count > *options_.stop_at;
    if (n_ == 0) {
      if (!result.truncated) result.witnesses.emplace_back(0);
      return result;
    }
    if (!result.truncated) {
      for (const auto& w : witnesses_) {
        Bitset s(n_);
        for (std::size_t p = w.first(); p != Bitset::npos; p = w.next(p + 1)) s.set(order_[p]);
        result.witnesses.push_back(std::move(s));
      }
      std::sort(result.witnesses.begin(), result.witnesses.end());
    }
    return result;
  }

 private:
  // Greedy partition of P into cliques of G; colors[i] is the class number of
  // verts[i] and is nondecreasing.
  void color(Bitset q, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    std::size_t c = 0;
    while (q.any()) {
      ++c;
      Bitset cls = q;
      for (std::size_t v = cls.first(); v != Bitset::npos; v = cls.first()) {
        q.reset(v);
        cls &= nbr_[v];
        verts.push_back(v);
        colors.push_back(c);
      }
    }
  }

  // Packed (best << 1 | over_cap) so both are read together.
  bool pruned(std::size_t current, std::size_t bound) const {
    const std::uint64_t state = best_state_.load();
    const std::size_t best = state >> 1;
    const bool over_cap = state & 1;
    return current + bound < best || (over_cap && current + bound == best);
  }

  void expand(Bitset& r, std::size_t size, Bitset p) {
    if (++nodes_ > options_.node_budget) {
      throw Error(ErrorKind::kBudgetExceeded,
                  "max_independent_brute: node budget " + std::to_string(options_.node_budget) + " exhausted");
    }
    if (abort_.load()) return;
    if (p.none()) {
      record(r, size);
      return;
    }
    std::vector<std::size_t> verts, colors;
    color(p, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (pruned(size, colors[i])) return;
      const std::size_t v = verts[i];
      r.set(v);
      expand(r, size + 1, p & non_nbr_[v]);
      r.reset(v);
      p.reset(v);
    }
  }

  void record(const Bitset& r, std::size_t size) {
    std::lock_guard lock(mu_);
    std::size_t best = best_state_.load() >> 1;
    bool over_cap = best_state_.load() & 1;
    if (size < best) return;
    if (size > best) {
      best = size;
      count_ = 0;
      witnesses_.clear();
      over_cap = false;
    }
    ++count_;
    if (!options_.stop_at || count_ <= *options_.stop_at) witnesses_.push_back(r);
    else over_cap = true;
    best_state_ = (static_cast<std::uint64_t>(best) << 1) | (over_cap ? 1u : 0u);
  }

  const BruteForceOptions& options_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> nbr_;
  std::vector<Bitset> non_nbr_;

  std::mutex mu_;
  std::atomic<std::uint64_t> best_state_{0};
  std::size_t count_ = 0;
  std::vector<Bitset> witnesses_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> abort_{false};
};

}  // namespace

BruteForceResult max_independent_brute(const Graph& g, const BruteForceOptions& options) {
  Search search(g, options);
  return search.run();
}

}  // namespace ratiocert
