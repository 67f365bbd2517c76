#include "satex/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "satex/errors.hpp"

namespace satex {

namespace {

// Pattern vertices in matching order: each vertex after the first is preferably
// adjacent to many earlier ones so candidate sets shrink fast.
struct EmbeddingPlan {
  std::vector<int> order;                   // position -> pattern vertex
  std::vector<std::vector<int>> back;       // position -> earlier adjacent positions
};

EmbeddingPlan make_plan(const Graph& pattern) {
  const int k = pattern.order();
  EmbeddingPlan plan;
  std::vector<int> position(k, -1);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    int best_links = -1;
    int best_degree = -1;
    for (int v = 0; v < k; ++v) {
      if (position[v] >= 0) continue;
      int links = 0;
      for (int u = 0; u < k; ++u)
        if (position[u] >= 0 && pattern.adjacent(u, v)) ++links;
      const int deg = pattern.degree(v);
      if (links > best_links || (links == best_links && deg > best_degree)) {
        best = v;
        best_links = links;
        best_degree = deg;
      }
    }
    position[best] = step;
    plan.order.push_back(best);
  }
  plan.back.resize(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j)
      if (pattern.adjacent(plan.order[i], plan.order[j])) plan.back[i].push_back(j);
  return plan;
}

std::uint64_t low_mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Single-word kernel: host order <= 64. The last level is a popcount.
class WordEmbeddingCounter {
 public:
  WordEmbeddingCounter(const EmbeddingPlan& plan, const Graph& host)
      : plan_(plan), host_(host), image_(plan.order.size()), all_(low_mask(host.order())) {}

  unsigned __int128 run() {
    if (plan_.order.empty()) return 1;
    total_ = 0;
    extend(0, 0);
    return total_;
  }

 private:
  void extend(std::size_t depth, std::uint64_t used) {
    std::uint64_t cand = all_ & ~used;
    for (int j : plan_.back[depth]) cand &= host_.row64(image_[j]);
    if (depth + 1 == plan_.order.size()) {
      total_ += static_cast<unsigned>(popcount(cand));
      return;
    }
    while (cand != 0) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      image_[depth] = v;
      extend(depth + 1, used | (std::uint64_t{1} << v));
    }
  }

  const EmbeddingPlan& plan_;
  const Graph& host_;
  std::vector<int> image_;
  std::uint64_t all_;
  unsigned __int128 total_ = 0;
};

// Multi-word kernel for any host order; optional leaf visitor.
class WideEmbeddingWalker {
 public:
  WideEmbeddingWalker(const EmbeddingPlan& plan, const Graph& host)
      : plan_(plan),
        host_(host),
        words_(host.words()),
        image_(plan.order.size()),
        scratch_((plan.order.size() + 1) * static_cast<std::size_t>(host.words())),
        used_(static_cast<std::size_t>(host.words()), 0) {}

  unsigned __int128 count() {
    if (plan_.order.empty()) return 1;
    counting_ = true;
    total_ = 0;
    extend(0);
    return total_;
  }

  void visit(const std::function<bool(std::span<const int>)>& f) {
    counting_ = false;
    visitor_ = &f;
    stop_ = false;
    mapped_.assign(plan_.order.size(), 0);
    if (plan_.order.empty()) {
      f(mapped_);
      return;
    }
    extend(0);
  }

 private:
  void extend(std::size_t depth) {
    std::uint64_t* cand = scratch_.data() + depth * words_;
    const int n = host_.order();
    for (int w = 0; w < words_; ++w) {
      const int live = std::min(64, n - 64 * w);
      cand[w] = low_mask(live) & ~used_[w];
    }
    for (int j : plan_.back[depth]) {
      const auto row = host_.row(image_[j]);
      for (int w = 0; w < words_; ++w) cand[w] &= row[w];
    }
    const bool last = depth + 1 == plan_.order.size();
    if (last && counting_) {
      for (int w = 0; w < words_; ++w) total_ += static_cast<unsigned>(popcount(cand[w]));
      return;
    }
    for (int w = 0; w < words_ && !stop_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits != 0 && !stop_) {
        const int v = 64 * w + std::countr_zero(bits);
        bits &= bits - 1;
        image_[depth] = v;
        if (last) {
          for (std::size_t i = 0; i < plan_.order.size(); ++i) mapped_[plan_.order[i]] = image_[i];
          if (!(*visitor_)(mapped_)) stop_ = true;
          continue;
        }
        used_[v >> 6] |= std::uint64_t{1} << (v & 63);
        extend(depth + 1);
        used_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      }
    }
  }

  const EmbeddingPlan& plan_;
  const Graph& host_;
  int words_;
  std::vector<int> image_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> used_;
  std::vector<int> mapped_;
  bool counting_ = true;
  bool stop_ = false;
  const std::function<bool(std::span<const int>)>* visitor_ = nullptr;
  unsigned __int128 total_ = 0;
};

// Number of k-cliques, each counted once (increasing vertex order).
BigCount count_cliques(const Graph& host, int k) {
  const int n = host.order();
  if (k == 1) return n;
  if (k == 2) return host.edge_count();
  if (host.fits_word()) {
    unsigned __int128 total = 0;
    auto rec = [&](auto&& self, int left, std::uint64_t cand) -> void {
      if (left == 1) {
        total += static_cast<unsigned>(popcount(cand));
        return;
      }
      while (cand != 0) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        // Only higher-numbered neighbours, so each clique is produced once.
        self(self, left - 1, cand & host.row64(v));
      }
    };
    rec(rec, k, low_mask(n));
    return from_u128(total);
  }
  // Wide hosts: count embeddings of K_k and divide by k!.
  const Graph pattern = Graph::complete(k);
  const EmbeddingPlan plan = make_plan(pattern);
  WideEmbeddingWalker walker(plan, host);
  return from_u128(walker.count()) / factorial(k);
}

BigCount count_stars(const Graph& host, int s) {
  const int n = host.order();
  if (s == 0) return n;
  if (s == 1) return host.edge_count();
  BigCount total = 0;
  for (int v = 0; v < n; ++v) total += binomial(host.degree(v), s);
  return total;
}

// Sum over `small`-subsets A of C(d(A), large); each K_{small,large} is seen
// once from its small side, twice when the sides are equal.
BigCount codegree_binomial_sum(const Graph& host, int small, int large) {
  const int n = host.order();
  std::vector<BigCount> choose(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) choose[d] = binomial(d, large);

  BigCount total = 0;
  if (host.fits_word()) {
    auto rec = [&](auto&& self, int start, int depth, std::uint64_t common) -> void {
      if (depth == small) {
        total += choose[popcount(common)];
        return;
      }
      for (int v = start; v < n; ++v) {
        const std::uint64_t next = common & host.row64(v);
        if (popcount(next) < large) continue;
        self(self, v + 1, depth + 1, next);
      }
    };
    rec(rec, 0, 0, low_mask(n));
    return total;
  }
  const int words = host.words();
  std::vector<std::uint64_t> stack(static_cast<std::size_t>(small + 1) * words);
  for (int w = 0; w < words; ++w) stack[w] = low_mask(std::min(64, n - 64 * w));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    const std::uint64_t* common = stack.data() + static_cast<std::size_t>(depth) * words;
    if (depth == small) {
      int d = 0;
      for (int w = 0; w < words; ++w) d += popcount(common[w]);
      total += choose[d];
      return;
    }
    std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * words;
    for (int v = start; v < n; ++v) {
      const auto row = host.row(v);
      int d = 0;
      for (int w = 0; w < words; ++w) {
        next[w] = common[w] & row[w];
        d += popcount(next[w]);
      }
      if (d < large) continue;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

BigCount count_embeddings(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order()) return 0;
  const EmbeddingPlan plan = make_plan(pattern);
  if (host.fits_word()) {
    WordEmbeddingCounter counter(plan, host);
    return from_u128(counter.run());
  }
  WideEmbeddingWalker walker(plan, host);
  return from_u128(walker.count());
}

void for_each_embedding(const Graph& pattern, const Graph& host,
                        const std::function<bool(std::span<const int>)>& visit) {
  if (pattern.order() > host.order()) return;
  const EmbeddingPlan plan = make_plan(pattern);
  WideEmbeddingWalker walker(plan, host);
  walker.visit(visit);
}

BigCount count_subgraphs(const PatternSpec& pattern, const Graph& host) {
  const int k = pattern.vertex_count();
  const int n = host.order();
  if (k == 0) return 1;
  if (k > n) return 0;
  if (host.is_complete()) return falling_factorial(n, k) / pattern.automorphisms();

  return std::visit(Overloaded{
                        [&](const Clique& c) { return count_cliques(host, c.k); },
                        [&](const Star& s) { return count_stars(host, s.s); },
                        [&](const CompleteBipartite& c) -> BigCount {
                          if (c.a == 0 || c.b == 0) return binomial(n, c.a + c.b);
                          if (c.a == 1) return count_stars(host, c.b);
                          if (c.b == 1) return count_stars(host, c.a);
                          const int small = std::min(c.a, c.b);
                          const int large = std::max(c.a, c.b);
                          BigCount sum = codegree_binomial_sum(host, small, large);
                          return c.a == c.b ? BigCount(sum / 2) : sum;
                        },
                        [&](const auto&) { return count_embeddings(pattern.graph(), host) / pattern.automorphisms(); },
                    },
                    pattern.shape());
}

EdgeWeighting::EdgeWeighting(const Graph& host, double initial)
    : n_(host.order()),
      w_(static_cast<std::size_t>(n_) * n_, 0.0),
      edge_(static_cast<std::size_t>(n_) * n_, false) {
  if (!(initial >= 0.0) || !std::isfinite(initial)) throw ParameterError("edge weights must be finite and >= 0");
  for (auto [u, v] : host.edges()) {
    edge_[static_cast<std::size_t>(u) * n_ + v] = edge_[static_cast<std::size_t>(v) * n_ + u] = true;
    w_[static_cast<std::size_t>(u) * n_ + v] = w_[static_cast<std::size_t>(v) * n_ + u] = initial;
  }
}

void EdgeWeighting::set(int u, int v, double w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !edge_[static_cast<std::size_t>(u) * n_ + v])
    throw ParameterError("weight on a non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  if (!(w >= 0.0) || !std::isfinite(w)) throw ParameterError("edge weights must be finite and >= 0");
  w_[static_cast<std::size_t>(u) * n_ + v] = w_[static_cast<std::size_t>(v) * n_ + u] = w;
}

double EdgeWeighting::get(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || !edge_[static_cast<std::size_t>(u) * n_ + v])
    throw ParameterError("weight on a non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return w_[static_cast<std::size_t>(u) * n_ + v];
}

double count_weighted_subgraphs(const PatternSpec& pattern, const Graph& host, const EdgeWeighting& w) {
  if (w.order() != host.order()) throw ParameterError("weighting belongs to a different host");
  const int k = pattern.vertex_count();
  if (k == 0) return 1.0;
  if (k > host.order()) return 0.0;
  const auto pattern_edges = pattern.graph().edges();
  double total = 0.0;
  for_each_embedding(pattern.graph(), host, [&](std::span<const int> map) {
    double product = 1.0;
    for (auto [a, b] : pattern_edges) product *= w.get(map[a], map[b]);
    total += product;
    return true;
  });
  return total / to_double(pattern.automorphisms());
}

int codegree(const Graph& host, std::span<const int> vertices) {
  int d = 0;
  for (int v = 0; v < host.order(); ++v) {
    bool all = true;
    for (int a : vertices) {
      if (!host.adjacent(a, v)) {
        all = false;
        break;
      }
    }
    if (all) ++d;
  }
  return d;
}

std::vector<CodegreeEntry> codegree_vector(const Graph& host, int set_size) {
  const int n = host.order();
  if (set_size < 1 || set_size > n)
    throw ParameterError("co-degree set size must lie in [1, n], got " + std::to_string(set_size));
  std::vector<CodegreeEntry> out;
  std::vector<int> current;
  const int words = host.words();
  std::vector<std::uint64_t> stack(static_cast<std::size_t>(set_size + 1) * words);
  for (int w = 0; w < words; ++w) stack[w] = low_mask(std::min(64, n - 64 * w));
  auto rec = [&](auto&& self, int start, int depth) -> void {
    const std::uint64_t* common = stack.data() + static_cast<std::size_t>(depth) * words;
    if (depth == set_size) {
      int d = 0;
      for (int w = 0; w < words; ++w) d += popcount(common[w]);
      out.push_back({current, BigCount(d)});
      return;
    }
    std::uint64_t* next = stack.data() + static_cast<std::size_t>(depth + 1) * words;
    for (int v = start; v < n; ++v) {
      const auto row = host.row(v);
      for (int w = 0; w < words; ++w) next[w] = common[w] & row[w];
      current.push_back(v);
      self(self, v + 1, depth + 1);
      current.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace satex
