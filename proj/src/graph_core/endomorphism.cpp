#include "ratiocert/graph_core/endomorphism.hpp"

#include "ratiocert/errors.hpp"

namespace ratiocert {
namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

class EndoSearch {
 public:
  EndoSearch(const Graph& g, EndomorphismMode mode, std::uint64_t budget)
      : g_(g), mode_(mode), budget_(budget), n_(g.order()), image_(n_, kUnassigned), image_count_(n_, 0) {}

  EndomorphismReport run() {
    if (n_ == 0) {
      report_.automorphisms = 1;
      return report_;
    }
    Bitset all(n_);
    all.set_all();
    std::vector<Bitset> domains(n_, all);
    search(domains, 0);
    return report_;
  }

 private:
  // Returns false once the search should stop.
  bool search(std::vector<Bitset>& domains, std::size_t assigned) {
    if (assigned == n_) {
      if (distinct_images_ == n_) {
        ++report_.automorphisms;
      } else {
        ++report_.proper_endomorphisms;
        if (!report_.proper_witness) report_.proper_witness = image_;
        if (mode_ == EndomorphismMode::kFindProper) return false;
      }
      return true;
    }
    const std::size_t u = pick(domains);
    const Bitset dom = domains[u];
    for (std::size_t c = dom.first(); c != Bitset::npos; c = dom.next(c + 1)) {
      if (++report_.nodes > budget_) {
        throw Error(ErrorKind::kBudgetExceeded,
                    "endomorphism_search: node budget " + std::to_string(budget_) + " exhausted");
      }
      std::vector<std::pair<std::size_t, Bitset>> saved;
      bool wiped = false;
      const auto& nu = g_.neighbors(u);
      for (std::size_t w = nu.first(); w != Bitset::npos; w = nu.next(w + 1)) {
        if (image_[w] != kUnassigned) continue;
        saved.emplace_back(w, domains[w]);
        domains[w] &= g_.neighbors(c);
        if (domains[w].none()) {
          wiped = true;
          break;
        }
      }
      bool keep_going = true;
      if (!wiped) {
        image_[u] = c;
        if (image_count_[c]++ == 0) ++distinct_images_;
        keep_going = search(domains, assigned + 1);
        if (--image_count_[c] == 0) --distinct_images_;
        image_[u] = kUnassigned;
      }
      for (auto& [w, d] : saved) domains[w] = std::move(d);
      if (!keep_going) return false;
    }
    return true;
  }

  std::size_t pick(const std::vector<Bitset>& domains) const {
    std::size_t best = kUnassigned, best_size = 0, best_links = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      if (image_[u] != kUnassigned) continue;
      const std::size_t size = domains[u].count();
      std::size_t links = 0;
      const auto& nu = g_.neighbors(u);
      for (std::size_t w = nu.first(); w != Bitset::npos; w = nu.next(w + 1)) links += image_[w] != kUnassigned;
      if (best == kUnassigned || size < best_size || (size == best_size && links > best_links)) {
        best = u;
        best_size = size;
        best_links = links;
      }
    }
    return best;
  }

  const Graph& g_;
  EndomorphismMode mode_;
  std::uint64_t budget_;
  std::size_t n_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> image_count_;
  std::size_t distinct_images_ = 0;
  EndomorphismReport report_;
};

}  // namespace

EndomorphismReport endomorphism_search(const Graph& g, EndomorphismMode mode, std::uint64_t node_budget) {
  EndoSearch search(g, mode, node_budget);
  return search.run();
}

}  // namespace ratiocert
