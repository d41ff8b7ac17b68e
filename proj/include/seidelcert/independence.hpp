#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace seidelcert {

inline constexpr std::size_t kDefaultSearchLimit = 50;

namespace detail {

// Branch and bound for a maximum clique on at most 64 vertices, bounding each
// branch by a greedy colouring of the candidate set.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : adj_(g.order(), 0) {
    for (auto [u, v] : g.edges()) {
      adj_[u] |= bit(v);
      adj_[v] |= bit(u);
    }
  }

  std::size_t run() {
    const std::size_t n = adj_.size();
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (n > 0) expand(0, all);
    return best_;
  }

 private:
  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

  void colour_sort(std::uint64_t p, std::vector<int>& order, std::vector<std::size_t>& colour) const {
    std::size_t k = 0;
    while (p) {
      ++k;
      std::uint64_t q = p;
      while (q) {
        int v = std::countr_zero(q);
        q &= ~adj_[v] & ~bit(v);
        p &= ~bit(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  void expand(std::size_t size, std::uint64_t p) {
    std::vector<int> order;
    std::vector<std::size_t> colour;
    colour_sort(p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best_) return;
      int v = order[i];
      std::uint64_t next = p & adj_[v];
      if (next == 0) {
        if (size + 1 > best_) best_ = size + 1;
      } else {
        expand(size + 1, next);
      }
      p &= ~bit(v);
    }
  }

  std::vector<std::uint64_t> adj_;
  std::size_t best_ = 0;
};

inline void check_limit(const Graph& g, std::size_t limit) {
  if (limit > 64) throw ParameterError("search limit cannot exceed 64 vertices");
  if (g.order() > limit)
    throw CapacityError("exact search limited to " + std::to_string(limit) + " vertices, got " +
                        std::to_string(g.order()));
}

}  // namespace detail

inline std::size_t clique_number(const Graph& g, std::size_t limit = kDefaultSearchLimit) {
  detail::check_limit(g, limit);
  return detail::CliqueSearch(g).run();
}

inline std::size_t independence_number(const Graph& g, std::size_t limit = kDefaultSearchLimit) {
  detail::check_limit(g, limit);
  return detail::CliqueSearch(complement(g)).run();
}

}  // namespace seidelcert
