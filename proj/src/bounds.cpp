#include "satex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "satex/counting.hpp"
#include "satex/csv.hpp"
#include "satex/errors.hpp"
#include "satex/families.hpp"

namespace satex {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

// Generalized binomial polynomial x(x-1)...(x-k+1)/k!, no truncation.
double real_binomial(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

double factorial_d(int k) { return to_double(factorial(k)); }

BoundReport make_report(std::string evaluator, BoundKind kind) {
  BoundReport r;
  r.evaluator = std::move(evaluator);
  r.kind = kind;
  return r;
}

std::string regime_note(double m, double threshold, const std::string& expr) {
  return "m = " + format_double(m) + " is below the growth regime " + expr + " = " + format_double(threshold) +
         "; main term may be far from the truth";
}

}  // namespace

const char* to_string(BoundKind kind) { return kind == BoundKind::Certified ? "certified" : "asymptotic"; }

nlohmann::ordered_json to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["evaluator"] = report.evaluator;
  if (std::isfinite(report.value)) {
    j["value"] = report.value;
  } else {
    j["value"] = nullptr;
  }
  if (report.exact) j["exact"] = to_string(*report.exact);
  j["kind"] = to_string(report.kind);
  j["params"] = report.params;
  j["notes"] = report.notes;
  return j;
}

std::string bound_csv_header() { return csv_row({"evaluator", "kind", "value", "exact", "params", "notes"}); }

std::string to_csv_row(const BoundReport& report) {
  std::string notes;
  for (const auto& n : report.notes) {
    if (!notes.empty()) notes += "; ";
    notes += n;
  }
  return csv_row({report.evaluator, to_string(report.kind), format_double(report.value),
                  report.exact ? to_string(*report.exact) : std::string(), report.params.dump(), notes});
}

double truncated_binomial(double x, int b) {
  if (b < 0) return 0.0;
  if (b == 0) return 1.0;
  if (x < b - 1) return 0.0;
  return real_binomial(x, b);
}

PowerMeanCheck lemma_powermean_check(std::span<const std::int64_t> d, int a, int s) {
  require(s >= 1 && a >= s, "power-mean lemma needs a >= s >= 1");
  require(!d.empty(), "power-mean lemma needs a nonempty vector");
  double sum_d = 0.0;
  for (auto x : d) {
    require(x >= 0, "power-mean lemma needs nonnegative entries");
    sum_d += static_cast<double>(x);
  }
  const double n = static_cast<double>(d.size());
  require(sum_d / n >= a, "power-mean lemma proviso: the average entry must be at least a");

  double sum_a = 0.0;
  double sum_s = 0.0;
  for (auto x : d) {
    sum_a += to_double(binomial(x, a));
    sum_s += to_double(binomial(x, s));
  }
  const double lhs = factorial_d(a) * sum_a / n;
  const double root = std::pow(factorial_d(s) * sum_s / n, 1.0 / s);
  const double rhs = std::pow(std::max(0.0, root - a + 1), a);
  const bool holds = lhs >= rhs - 1e-9 * std::max(1.0, std::abs(rhs));
  return {lhs, rhs, holds};
}

BoundReport csillag1_lower_bound(std::int64_t n, double m, int s, int a, int b) {
  require(s >= 1 && a >= s, "csillag1 needs a >= s >= 1");
  require(b >= 1, "csillag1 needs b >= 1");
  require(m >= 0, "csillag1 needs m >= 0");
  require(n >= a, "csillag1 needs n >= a");
  auto r = make_report("csillag1", BoundKind::Certified);
  r.params = {{"n", n}, {"m", m}, {"s", s}, {"a", a}, {"b", b}};

  const double nd = static_cast<double>(n);
  const double root = std::pow(factorial_d(s) * m / nd, 1.0 / s);
  // Lower bound on sum_y C(d(y), a), which equals the co-degree sum over a-sets.
  const double codegree_sum = nd / factorial_d(a) * std::pow(std::max(0.0, root - a + 1), a);
  const double sets = to_double(binomial(n, a));
  double value = sets * truncated_binomial(codegree_sum / sets, b);
  if (a == b) {
    value /= 2;
    r.notes.push_back("halved: with a = b every K_{a,a} is counted from both sides");
  }
  r.value = value;
  return r;
}

BoundReport bollobas_interpolated_bound(int n, int k, int r, const BigCount& m) {
  require(k >= 2 && r > k, "bollobas bound needs r > k >= 2");
  require(n >= 0, "bollobas bound needs n >= 0");
  require(m >= 0, "bollobas bound needs m >= 0");
  if (m > binomial(n, k))
    throw InfeasibleError("m = " + to_string(m) + " exceeds C(n,k) = " + to_string(binomial(n, k)));

  struct Point {
    BigCount x;
    BigCount y;
  };
  std::vector<Point> pts;
  for (int q = k - 1; q <= n; ++q) {
    Point p{turan_clique_count(q, n, k), turan_clique_count(q, n, r)};
    if (!pts.empty() && pts.back().x == p.x) {
      if (p.y < pts.back().y) pts.back().y = p.y;
      continue;
    }
    pts.push_back(std::move(p));
  }
  // Lower convex hull (x strictly increasing).
  std::vector<Point> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      // Drop a if it lies on or above segment o-p.
      const BigCount cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }

  Rational value = 0;
  if (hull.size() == 1) {
    value = Rational(hull[0].y);
  } else {
    for (std::size_t i = 1; i < hull.size(); ++i) {
      if (m <= hull[i].x) {
        const auto& lo = hull[i - 1];
        const auto& hi = hull[i];
        value = Rational(lo.y) + Rational(hi.y - lo.y) * Rational(m - lo.x) / Rational(hi.x - lo.x);
        break;
      }
    }
  }
  auto rep = make_report("bollobas", BoundKind::Certified);
  rep.params = {{"n", n}, {"k", k}, {"r", r}, {"m", to_string(m)}};
  rep.exact = value;
  rep.value = to_double(value);
  return rep;
}

double kruskal_katona_root(double m, int k) {
  require(k >= 1, "Kruskal-Katona needs k >= 1");
  require(m >= 1, "Kruskal-Katona root needs m >= 1");
  double lo = k;
  double hi = k + 1.0;
  while (real_binomial(hi, k) < m) {
    lo = hi;
    hi *= 2;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (real_binomial(mid, k) < m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // lo keeps C(lo, k) <= m, so the reported shadow never overshoots.
  return lo;
}

BoundReport kruskal_katona_bound(double m, int k, int r) {
  require(r >= 0 && r < k, "Kruskal-Katona bound needs 0 <= r < k");
  require(m >= 0, "Kruskal-Katona bound needs m >= 0");
  auto rep = make_report("kruskal-katona", BoundKind::Certified);
  rep.params = {{"m", m}, {"k", k}, {"r", r}};
  if (m < 1) {
    rep.value = 0.0;
    rep.exact = Rational(0);
    return rep;
  }
  // Exact answer when m is a binomial coefficient C(x, k) with integer x.
  if (m == std::floor(m) && m < 9.0e15) {
    const BigCount target = static_cast<long long>(m);
    std::int64_t x = k;
    while (binomial(x, k) < target) ++x;
    if (binomial(x, k) == target) {
      rep.exact = Rational(binomial(x, r));
      rep.value = to_double(*rep.exact);
      rep.params["x"] = x;
      return rep;
    }
  }
  const double x = kruskal_katona_root(m, k);
  rep.params["x"] = x;
  rep.value = truncated_binomial(x, r);
  return rep;
}

std::optional<int> spanning_tiling(const Graph& host_pattern, const Graph& tile) {
  const int h = host_pattern.order();
  const int f = tile.order();
  if (f == 0 || h == 0 || h % f != 0) return std::nullopt;
  if (h > 64) throw SizeRefusal("tiling search supports patterns with at most 64 vertices");
  std::vector<std::uint64_t> blocks;
  for_each_embedding(tile, host_pattern, [&](std::span<const int> map) {
    std::uint64_t mask = 0;
    for (int v : map) mask |= std::uint64_t{1} << v;
    blocks.push_back(mask);
    return true;
  });
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());

  const std::uint64_t all = h == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h) - 1;
  auto cover = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == all) return true;
    const int v = std::countr_zero(~covered);
    for (auto b : blocks) {
      if ((b >> v & 1) == 0 || (b & covered) != 0) continue;
      if (self(self, covered | b)) return true;
    }
    return false;
  };
  if (!cover(cover, 0)) return std::nullopt;
  return h / f;
}

BoundReport spanning_satex_estimate(int n, const PatternSpec& h, const PatternSpec& f, const BigCount& m) {
  require(n >= 0, "spanning estimate needs n >= 0");
  require(m >= 0, "spanning estimate needs m >= 0");
  const auto tiles = spanning_tiling(h.graph(), f.graph());
  if (!tiles)
    throw HypothesisError("no spanning tiling of " + h.label() + " by disjoint copies of " + f.label());
  const BigCount max_m = count_subgraphs(h, Graph::complete(n));
  if (m > max_m) throw InfeasibleError("m exceeds N(H, K_n) = " + to_string(max_m));

  int q = 0;
  while (count_subgraphs(h, Graph::complete(q)) < m) ++q;
  const BigCount value = count_subgraphs(f, Graph::complete(q));

  auto rep = make_report("spanning", BoundKind::Asymptotic);
  rep.params = {{"n", n}, {"H", h.label()}, {"F", f.label()}, {"m", to_string(m)}, {"q", q}, {"t", *tiles}};
  rep.exact = Rational(value);
  rep.value = to_double(value);
  const double threshold = std::pow(static_cast<double>(n), h.vertex_count() - *tiles);
  if (to_double(m) < threshold) rep.notes.push_back(regime_note(to_double(m), threshold, "n^(|V(H)|-t)"));
  rep.notes.push_back("estimate is N(F, K_q^*) with (1+o(1)) dropped");
  return rep;
}

BlakleyRoyCheck blakley_roy_check(const SymmetricMatrix& s, std::span<const double> u, int q) {
  require(q >= 2, "Blakley-Roy check needs q >= 2");
  require(s.n >= 0 && s.a.size() == static_cast<std::size_t>(s.n) * s.n, "matrix storage does not match n");
  require(u.size() == static_cast<std::size_t>(s.n), "vector length does not match the matrix");
  for (int i = 0; i < s.n; ++i) {
    require(u[i] >= 0, "Blakley-Roy check needs a nonnegative vector");
    for (int j = 0; j < s.n; ++j) {
      require(s(i, j) >= 0, "Blakley-Roy check needs a nonnegative matrix");
      require(s(i, j) == s(j, i), "Blakley-Roy check needs a symmetric matrix");
    }
  }
  auto apply = [&](const std::vector<double>& v) {
    std::vector<double> out(v.size(), 0.0);
    for (int i = 0; i < s.n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < s.n; ++j) acc += s(i, j) * v[j];
      out[i] = acc;
    }
    return out;
  };
  auto dot = [](std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
  };
  const std::vector<double> uu(u.begin(), u.end());
  std::vector<double> v = uu;
  for (int i = 0; i < q; ++i) v = apply(v);
  const double lhs = std::pow(dot(uu, apply(uu)), q);
  const double rhs = std::pow(dot(uu, uu), q - 1) * dot(uu, v);
  const bool holds = lhs <= rhs + 1e-9 * std::max(std::abs(lhs), std::abs(rhs));
  return {lhs, rhs, holds};
}

BoundReport pathpath_main_term(double n, int k, int q, double m) {
  require(q >= 2 && k >= 2, "pathpath needs q >= 2 and k >= 2");
  require(n > 0 && m >= 0, "pathpath needs n > 0 and m >= 0");
  auto rep = make_report("pathpath", BoundKind::Asymptotic);
  const int t = q * (k - 1) + 1;
  rep.params = {{"n", n}, {"k", k}, {"q", q}, {"m", m}, {"t", t}};
  rep.value = 0.5 * std::pow(2.0 * m, q) / std::pow(n, q - 1);
  const double threshold = std::pow(n, k - 1.0 / q);
  if (m > 0 && m < threshold) rep.notes.push_back(regime_note(m, threshold, "n^(k-1/q)"));
  rep.notes.push_back("main term for P_" + std::to_string(t) + "; (1/2 + o(1)) factor reported as 1/2");
  return rep;
}

BoundReport fkr_disjoint_pairs_bound(int n, int k, double set_count) {
  require(k >= 3, "disjoint-pairs bound needs k >= 3");
  require(n >= k - 1, "disjoint-pairs bound needs n >= k-1");
  require(set_count >= 0, "disjoint-pairs bound needs a nonnegative set count");
  auto rep = make_report("fkr", BoundKind::Asymptotic);
  const double unit = factorial_d(k - 1) * to_double(binomial(n - 1, k - 2));
  const double beta = set_count / unit;
  const double fl = std::floor(beta);
  double first = beta * (beta - 1) / 2 + (beta - fl) * fl;
  if (beta <= 1) {
    first = 0.0;
    rep.notes.push_back("beta <= 1: an intersecting family may have no disjoint pairs");
  }
  rep.params = {{"n", n}, {"k", k}, {"set_count", set_count}, {"beta", beta}};
  rep.value = first * unit * unit;
  rep.notes.push_back("o(1) term dropped");
  return rep;
}

BigCount disjoint_pairs(std::span<const std::uint64_t> family) {
  const auto size = static_cast<std::int64_t>(family.size());
  unsigned long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < size; ++i) {
    const std::uint64_t a = family[i];
    for (std::int64_t j = i + 1; j < size; ++j)
      if ((a & family[j]) == 0) ++total;
  }
  return BigCount(total);
}

BigCount disjoint_pairs_serial(std::span<const std::uint64_t> family) {
  unsigned long long total = 0;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if ((family[i] & family[j]) == 0) ++total;
  return BigCount(total);
}

BoundReport pathcycle_lower_bound(double n, int k, double m) {
  require(k >= 2, "pathcycle needs k >= 2");
  require(n > 0 && m >= 0, "pathcycle needs n > 0 and m >= 0");
  auto rep = make_report("pathcycle", BoundKind::Asymptotic);
  rep.params = {{"n", n}, {"k", k}, {"m", m}};
  rep.value = (m / n) * (m / n) / k;
  const double threshold = std::pow(n, k);
  if (m > 0 && m < threshold) rep.notes.push_back(regime_note(m, threshold, "n^k"));
  rep.notes.push_back("lower bound on C_" + std::to_string(2 * k) + " with o(1) dropped");
  return rep;
}

BoundReport pathcycle_corollary_bound(double n, int k, int q, double m) {
  require(k >= 2 && q >= 2, "pathcycle corollary needs k >= 2 and q >= 2");
  require(n > 0 && m >= 0, "pathcycle corollary needs n > 0 and m >= 0");
  auto rep = make_report("pathcycle-corollary", BoundKind::Asymptotic);
  rep.params = {{"n", n}, {"k", k}, {"q", q}, {"m", m}};
  rep.value = std::pow(2.0 * m / n, 2 * q) / (4.0 * k);
  const double threshold = std::pow(n, k + 1 - 1.0 / q);
  if (m > 0 && m < threshold) rep.notes.push_back(regime_note(m, threshold, "n^(k+1-1/q)"));
  rep.notes.push_back("lower bound on C_" + std::to_string(2 * q * k) + " with o(1) dropped");
  return rep;
}

BoundReport pk2t_lower_bound(double n, int k, int t, double m) {
  require(t >= k && k >= 1, "pk2t needs t >= k >= 1");
  require(n >= k + 1 && m >= 0, "pk2t needs n >= k+1 and m >= 0");
  auto rep = make_report("pk2t", BoundKind::Asymptotic);
  rep.params = {{"n", n}, {"k", k}, {"t", t}, {"m", m}};
  const double pairs = real_binomial(n, 2);
  const double tuples = real_binomial(n - 2, k - 1) * factorial_d(k - 1);
  const double base = m / (tuples * pairs);
  const double power_sum = pairs * std::pow(base, static_cast<double>(t) / k);
  rep.value = power_sum / factorial_d(t) / (t == 2 ? 2.0 : 1.0);
  rep.params["codegree_power_sum"] = power_sum;
  rep.notes.push_back(
      "constant derived from the proof chain over unordered pairs: sum d(u,v)^t >= C(n,2)(m/((n-2)_(k-1) C(n,2)))^(t/k)");
  rep.notes.push_back(t == 2 ? "N(C_4) ~ sum d(u,v)^2 / 4, (1+o(1)) dropped"
                             : "N(K_{2,t}) ~ sum d(u,v)^t / t!, (1+o(1)) dropped");
  const double threshold = std::pow(n, k + 1);
  if (m > 0 && m < threshold) rep.notes.push_back(regime_note(m, threshold, "n^(k+1)"));
  return rep;
}

BoundReport kqt_projection_bound(int n, int q, int t, int s, int r, const BigCount& m) {
  require(s >= 0 && s <= t, "kqt projection needs s <= t");
  require(r >= 0 && r <= q, "kqt projection needs r <= q");
  require(q >= 1 && t >= 1, "kqt projection needs q, t >= 1");
  require(t <= n && q <= n, "kqt projection needs t, q <= n");
  require(m >= 0, "kqt projection needs m >= 0");
  auto rep = make_report("kqt", BoundKind::Certified);
  rep.params = {{"n", n}, {"q", q}, {"t", t}, {"s", s}, {"r", r}, {"m", to_string(m)}};
  Rational value = Rational(binomial(n, r) * binomial(n, s)) / Rational(binomial(n, t) * binomial(n, q)) *
                   Rational(m);
  if ((s < t && q == s) || (r < q && r == s)) {
    value /= 2;
    rep.notes.push_back("halved: a projection step lands on a balanced complete bipartite graph");
  }
  rep.exact = value;
  rep.value = to_double(value);
  return rep;
}

ReiherWagnerReport reiher_wagner_max_stars(double n, double m, int k) {
  require(k >= 2, "star count needs k >= 2");
  const double pairs = real_binomial(n, 2);
  require(n >= 2 && m >= 0 && m <= pairs, "star count needs 0 <= m <= C(n,2)");
  const double gamma = m / pairs;
  const double eta = 1.0 - std::sqrt(1.0 - gamma);
  const double clique = std::pow(gamma, (k + 1) / 2.0);
  const double star = eta + (1.0 - eta) * std::pow(eta, k);
  StarBranch branch = StarBranch::Tie;
  if (std::abs(clique - star) > 1e-15 * std::max(clique, star)) {
    branch = clique > star ? StarBranch::QuasiClique : StarBranch::QuasiStar;
  }
  auto rep = make_report("reiher-wagner", BoundKind::Asymptotic);
  rep.params = {{"n", n}, {"m", m}, {"k", k}, {"gamma", gamma}, {"eta", eta}};
  rep.value = std::max(clique, star) * std::pow(n, k + 1) / factorial_d(k);
  rep.notes.push_back(std::string("maximum attained by the ") +
                      (branch == StarBranch::QuasiClique ? "quasi-clique"
                       : branch == StarBranch::QuasiStar ? "quasi-star"
                                                         : "quasi-clique and quasi-star equally"));
  rep.notes.push_back("O(n^k) term dropped");
  return {rep, branch};
}

double reiher_wagner_crossing_density(int k) {
  require(k >= 2, "star count needs k >= 2");
  auto diff = [k](double gamma) {
    const double eta = 1.0 - std::sqrt(1.0 - gamma);
    return std::pow(gamma, (k + 1) / 2.0) - (eta + (1.0 - eta) * std::pow(eta, k));
  };
  // Quasi-star wins for sparse graphs; find the first grid cell where that flips.
  constexpr int kGrid = 4096;
  double lo = 1.0 / kGrid;
  double hi = lo;
  bool found = false;
  for (int i = 1; i < kGrid; ++i) {
    const double a = static_cast<double>(i) / kGrid;
    const double b = static_cast<double>(i + 1) / kGrid;
    if (diff(a) < 0 && diff(b) >= 0) {
      lo = a;
      hi = b;
      found = true;
      break;
    }
  }
  if (!found) throw InfeasibleError("no branch crossing found");
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (diff(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BoundReport c2k_k2t_reference(double n, int k, int t) {
  require(k >= 2 && t >= 1, "C_2k reference needs k >= 2 and t >= 1");
  auto rep = make_report("c2k-k2t", BoundKind::Asymptotic);
  rep.params = {{"n", n}, {"k", k}, {"t", t}};
  rep.value = real_binomial(k - 1, 2) * real_binomial(n, t);
  rep.notes.push_back("lower-bound construction K_{k-1,n-k+1}; (1+o(1)) dropped");
  return rep;
}

}  // namespace satex
