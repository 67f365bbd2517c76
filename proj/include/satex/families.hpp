#pragma once

#include <variant>

#include <json.hpp>

#include "satex/bigcount.hpp"
#include "satex/graph.hpp"
#include "satex/pattern.hpp"

namespace satex {

namespace family {

/// K_t^*(n): a clique on vertices 0..t-1 and n-t isolated vertices.
struct QuasiClique {
  int t;
};
/// Complement of K_t^*(n): independent set 0..t-1 joined to a clique on t..n-1.
struct QuasiStar {
  int t;
};
/// Balanced complete q-partite graph; parts are contiguous blocks, larger first.
struct Turan {
  int q;
};
/// K_{a,n-a} with side {0..a-1}.
struct CompleteBipartite {
  int a;
};
/// K_{2,r+1}-free graph on p(p-1)/r vertices (p prime, r | p-1).
struct Furedi {
  int p;
  int r;
};
/// Orthogonal-polarity graph of PG(2,q), loops dropped; q prime.
struct Polarity {
  int q;
};

}  // namespace family

using FamilySpec = std::variant<family::QuasiClique, family::QuasiStar, family::Turan, family::CompleteBipartite,
                                family::Furedi, family::Polarity>;

/// Builds the family member on n vertices. Furedi and Polarity have a forced
/// order (p(p-1)/r and q^2+q+1); any other n is a ParameterError, as are
/// out-of-range parameters.
Graph build_family(const FamilySpec& spec, int n);

/// The order a family forces regardless of n, or -1 if it takes any n.
int forced_order(const FamilySpec& spec);

/// {"family": tag, "params": {...}}; tags quasi-clique, quasi-star, turan,
/// complete-bipartite, furedi, polarity.
nlohmann::ordered_json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

/// Part sizes of the n-vertex Turan graph with q parts.
std::vector<int> turan_part_sizes(int q, int n);

/// t(q,n,k): copies of K_k in the q-partite Turan graph on n vertices, i.e. the
/// k-th elementary symmetric polynomial of the part sizes.
BigCount turan_clique_count(int q, int n, int k);

bool is_prime(long long p);

/// Column families of the path/star main-term table.
enum class MainTermFamily {
  Clique,     ///< K_{lambda n}
  QuasiStar,  ///< complement of K^*_{(1-lambda) n}: lambda n universal vertices
  Bipartite,  ///< K_{lambda n, (1-lambda) n}
};

/// General rows hold for fixed lambda; SmallLambda is lambda = o(1);
/// LambdaNearOne is 1 - lambda = o(1).
enum class MainTermRow { General, SmallLambda, LambdaNearOne };

struct MainTermQuery {
  double lambda;
  PatternSpec pattern;  ///< Path(k) or Star(k), k >= 2
  MainTermFamily family;
  MainTermRow row = MainTermRow::General;
};

/// Leading-order number of copies of the pattern in the family member on n
/// vertices. Unsupported patterns or empty table cells throw NotImplementedError.
double closed_form_main_term(const MainTermQuery& query, double n);

}  // namespace satex
