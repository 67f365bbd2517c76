#include "satex/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "satex/errors.hpp"

namespace satex {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

long long mod(long long x, long long p) { return ((x % p) + p) % p; }

long long power_mod(long long base, long long e, long long p) {
  long long r = 1;
  base = mod(base, p);
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// The subgroup of Z_p^* of order r.
std::vector<long long> subgroup_of_order(long long p, long long r) {
  long long g = 0;
  for (long long c = 2; c < p && g == 0; ++c) {
    bool primitive = true;
    for (long long f = 2; f * f <= p - 1 && primitive; ++f) {
      if ((p - 1) % f != 0) continue;
      if (power_mod(c, (p - 1) / f, p) == 1 || power_mod(c, f, p) == 1) primitive = false;
    }
    if (primitive) g = c;
  }
  if (p == 2) g = 1;
  const long long h = power_mod(g, (p - 1) / r, p);
  std::vector<long long> out;
  long long x = 1;
  for (long long i = 0; i < r; ++i) {
    out.push_back(x);
    x = x * h % p;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices: pairs (a,b) over Z_p with b != 0, modulo scaling by the order-r
// subgroup H. (a,b) ~ (x,y) iff ay + bx lies in H. The 2ab in H classes would be
// loops and end up with degree p-2; every other class has degree p-1.
Graph furedi_graph(int p, int r) {
  const auto sub = subgroup_of_order(p, r);
  std::set<long long> in_sub(sub.begin(), sub.end());
  std::map<std::pair<long long, long long>, int> index;
  std::vector<std::pair<long long, long long>> reps;
  for (long long a = 0; a < p; ++a) {
    for (long long b = 1; b < p; ++b) {
      std::pair<long long, long long> key{p, p};
      for (long long h : sub) key = std::min(key, {h * a % p, h * b % p});
      if (index.emplace(key, static_cast<int>(reps.size())).second) reps.push_back(key);
    }
  }
  Graph g(static_cast<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const auto [a, b] = reps[i];
      const auto [x, y] = reps[j];
      if (in_sub.count(mod(a * y + b * x, p))) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

Graph polarity_graph(int q) {
  std::vector<std::array<int, 3>> points;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) points.push_back({1, x, y});
  for (int y = 0; y < q; ++y) points.push_back({0, 1, y});
  points.push_back({0, 0, 1});
  const int n = static_cast<int>(points.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& u = points[i];
      const auto& v = points[j];
      if ((u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % q == 0) g.add_edge(i, j);
    }
  }
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

int param(const nlohmann::json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw ParameterError(std::string("family parameter \"") + key + "\" missing or not an integer");
  return params[key].get<int>();
}

}  // namespace

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::vector<int> turan_part_sizes(int q, int n) {
  require(q >= 1, "Turan graph needs q >= 1");
  std::vector<int> sizes(static_cast<std::size_t>(q), n / q);
  for (int i = 0; i < n % q; ++i) ++sizes[i];
  return sizes;
}

BigCount turan_clique_count(int q, int n, int k) {
  require(q >= 1 && k >= 0 && n >= 0, "turan_clique_count needs q >= 1, k >= 0, n >= 0");
  if (k > q) return 0;
  // e[j] = elementary symmetric polynomial of degree j over the parts seen so far.
  std::vector<BigCount> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (int size : turan_part_sizes(q, n))
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * size;
  return e[k];
}

int forced_order(const FamilySpec& spec) {
  return std::visit(Overloaded{
                        [](const family::Furedi& f) { return f.r > 0 ? f.p * (f.p - 1) / f.r : -1; },
                        [](const family::Polarity& f) { return f.q * f.q + f.q + 1; },
                        [](const auto&) { return -1; },
                    },
                    spec);
}

Graph build_family(const FamilySpec& spec, int n) {
  require(n >= 0, "vertex count must be >= 0");
  return std::visit(
      Overloaded{
          [&](const family::QuasiClique& f) {
            require(f.t >= 0 && f.t <= n, "quasi-clique needs 0 <= t <= n");
            Graph g(n);
            for (int u = 0; u < f.t; ++u)
              for (int v = u + 1; v < f.t; ++v) g.add_edge(u, v);
            return g;
          },
          [&](const family::QuasiStar& f) {
            require(f.t >= 0 && f.t <= n, "quasi-star needs 0 <= t <= n");
            return build_family(family::QuasiClique{f.t}, n).complement();
          },
          [&](const family::Turan& f) {
            require(f.q >= 1 && f.q <= std::max(n, 1), "Turan graph needs 1 <= q <= n");
            const auto sizes = turan_part_sizes(f.q, n);
            std::vector<int> part;
            for (int i = 0; i < f.q; ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), i);
            Graph g(n);
            for (int u = 0; u < n; ++u)
              for (int v = u + 1; v < n; ++v)
                if (part[u] != part[v]) g.add_edge(u, v);
            return g;
          },
          [&](const family::CompleteBipartite& f) {
            require(f.a >= 0 && f.a <= n, "complete bipartite needs 0 <= a <= n");
            Graph g(n);
            for (int u = 0; u < f.a; ++u)
              for (int v = f.a; v < n; ++v) g.add_edge(u, v);
            return g;
          },
          [&](const family::Furedi& f) {
            require(is_prime(f.p), "Furedi graph needs p prime");
            require(f.r >= 1 && (f.p - 1) % f.r == 0, "Furedi graph needs r | p-1");
            require(n == f.p * (f.p - 1) / f.r, "Furedi graph H(p,r) has exactly p(p-1)/r vertices");
            return furedi_graph(f.p, f.r);
          },
          [&](const family::Polarity& f) {
            // TODO: prime powers need GF(q) arithmetic; only prime q for now.
            require(is_prime(f.q), "polarity graph currently needs q prime");
            require(n == f.q * f.q + f.q + 1, "polarity graph has exactly q^2+q+1 vertices");
            return polarity_graph(f.q);
          },
      },
      spec);
}

nlohmann::ordered_json family_to_json(const FamilySpec& spec) {
  nlohmann::ordered_json j;
  std::visit(Overloaded{
                 [&](const family::QuasiClique& f) {
                   j["family"] = "quasi-clique";
                   j["params"] = {{"t", f.t}};
                 },
                 [&](const family::QuasiStar& f) {
                   j["family"] = "quasi-star";
                   j["params"] = {{"t", f.t}};
                 },
                 [&](const family::Turan& f) {
                   j["family"] = "turan";
                   j["params"] = {{"q", f.q}};
                 },
                 [&](const family::CompleteBipartite& f) {
                   j["family"] = "complete-bipartite";
                   j["params"] = {{"a", f.a}};
                 },
                 [&](const family::Furedi& f) {
                   j["family"] = "furedi";
                   j["params"] = {{"p", f.p}, {"r", f.r}};
                 },
                 [&](const family::Polarity& f) {
                   j["family"] = "polarity";
                   j["params"] = {{"q", f.q}};
                 },
             },
             spec);
  return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw ParameterError("family JSON needs a string \"family\" tag");
  const auto tag = j["family"].get<std::string>();
  const nlohmann::json params = j.contains("params") ? j["params"] : nlohmann::json::object();
  if (tag == "quasi-clique") return family::QuasiClique{param(params, "t")};
  if (tag == "quasi-star") return family::QuasiStar{param(params, "t")};
  if (tag == "turan") return family::Turan{param(params, "q")};
  if (tag == "complete-bipartite") return family::CompleteBipartite{param(params, "a")};
  if (tag == "furedi") return family::Furedi{param(params, "p"), param(params, "r")};
  if (tag == "polarity") return family::Polarity{param(params, "q")};
  throw ParameterError("unknown family tag '" + tag + "'");
}

namespace {

double path_main_term(MainTermFamily fam, MainTermRow row, int k, double lambda, double n) {
  const double nk = std::pow(n, k);
  const bool even = k % 2 == 0;
  switch (fam) {
    case MainTermFamily::Clique:
      return 0.5 * std::pow(lambda * n, k);
    case MainTermFamily::QuasiStar:
      switch (row) {
        case MainTermRow::General: {
          // t = number of path vertices in the independent side; no two adjacent.
          double sum = 0.0;
          for (int t = 0; t <= (k + 1) / 2; ++t)
            sum += std::pow(lambda, k - t) * std::pow(1.0 - lambda, t) * to_double(binomial(k - t + 1, t));
          return 0.5 * sum * nk;
        }
        case MainTermRow::SmallLambda:
          return even ? 0.5 * (k / 2.0 + 1.0) * std::pow(lambda, k / 2) * nk
                      : 0.5 * std::pow(lambda, (k - 1) / 2) * nk;
        case MainTermRow::LambdaNearOne:
          return 0.5 * std::pow(lambda * n, k);
      }
      break;
    case MainTermFamily::Bipartite:
      switch (row) {
        case MainTermRow::General: {
          const double p = lambda * (1.0 - lambda);
          return even ? std::pow(p, k / 2) * nk : 0.5 * std::pow(p, (k - 1) / 2) * nk;
        }
        case MainTermRow::SmallLambda:
          return even ? std::pow(lambda, k / 2) * nk : 0.5 * std::pow(lambda, (k - 1) / 2) * nk;
        case MainTermRow::LambdaNearOne:
          throw NotImplementedError("no bipartite main term for 1 - lambda = o(1)");
      }
      break;
  }
  throw NotImplementedError("unknown main-term cell");
}

double star_main_term(MainTermFamily fam, MainTermRow row, int k, double lambda, double n) {
  if (row != MainTermRow::General) throw NotImplementedError("star main terms exist only for the general row");
  const double scale = std::pow(n, k + 1) / to_double(factorial(k));
  switch (fam) {
    case MainTermFamily::Clique:
      return std::pow(lambda, k + 1) * scale;
    case MainTermFamily::QuasiStar:
      // Centres among the lambda n universal vertices, or in the independent side.
      return (lambda + (1.0 - lambda) * std::pow(lambda, k)) * scale;
    case MainTermFamily::Bipartite:
      return (lambda * std::pow(1.0 - lambda, k) + (1.0 - lambda) * std::pow(lambda, k)) * scale;
  }
  throw NotImplementedError("unknown main-term cell");
}

}  // namespace

double closed_form_main_term(const MainTermQuery& query, double n) {
  if (!(query.lambda > 0.0 && query.lambda <= 1.0)) throw ParameterError("main term needs lambda in (0, 1]");
  if (n < 0) throw ParameterError("main term needs n >= 0");
  if (const auto* p = std::get_if<Path>(&query.pattern.shape())) {
    if (p->k < 2) throw ParameterError("main term needs k >= 2");
    return path_main_term(query.family, query.row, p->k, query.lambda, n);
  }
  if (const auto* s = std::get_if<Star>(&query.pattern.shape())) {
    if (s->s < 2) throw ParameterError("main term needs k >= 2");
    return star_main_term(query.family, query.row, s->s, query.lambda, n);
  }
  throw NotImplementedError("main terms are tabulated for paths and stars only, not " + query.pattern.label());
}

}  // namespace satex
