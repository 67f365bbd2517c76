#include "satex/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "satex/berge.hpp"
#include "satex/bounds.hpp"
#include "satex/counting.hpp"
#include "satex/csv.hpp"
#include "satex/errors.hpp"
#include "satex/families.hpp"
#include "satex/graph_io.hpp"
#include "satex/json_util.hpp"
#include "satex/search.hpp"

namespace satex {

namespace {

constexpr int kExactGuard = 9;
constexpr int kHeuristicGuard = 32;

using Params = std::map<std::string, std::string>;
using Json = nlohmann::ordered_json;

/// Result of one operation: the JSON object plus a CSV table, a headline
/// number for sweeps, and the exit code it asks for.
struct OpOutput {
  Json json;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string value;
  std::string kind;
  int exit = kExitOk;
};

struct Context {
  bool force = false;
  std::uint64_t seed = 1;
};

bool has(const Params& p, const std::string& key) {
  auto it = p.find(key);
  return it != p.end() && !it->second.empty();
}

const std::string& text(const Params& p, const std::string& key) {
  if (!has(p, key)) throw ParameterError("missing --" + key);
  return p.at(key);
}

long long integer(const Params& p, const std::string& key) {
  const auto& s = text(p, key);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParameterError("--" + key + " must be an integer");
  return v;
}

int small_int(const Params& p, const std::string& key) {
  const long long v = integer(p, key);
  if (v < -1'000'000'000 || v > 1'000'000'000) throw ParameterError("--" + key + " is out of range");
  return static_cast<int>(v);
}

double real(const Params& p, const std::string& key) {
  const auto& s = text(p, key);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParameterError("--" + key + " must be a number");
  return v;
}

BigCount big(const Params& p, const std::string& key) { return parse_bigcount(text(p, key)); }

PatternSpec pattern(const Params& p, const std::string& key) { return PatternSpec::parse(text(p, key)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON in " + what, e.byte > 0 ? e.byte - 1 : 0);
  }
}

Graph read_host(const Params& p) {
  if (has(p, "host")) return decode_graph6(p.at("host"));
  const std::string body = read_file(text(p, "host-file"));
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && body[first] == '{') return graph_from_json(parse_json(body, "host file"));
  return decode_graph6(body.substr(first == std::string::npos ? 0 : first));
}

void guard(int n, int limit, const Context& ctx, const std::string& what) {
  if (n > limit && !ctx.force)
    throw SizeRefusal(what + " is limited to n <= " + std::to_string(limit) + " (use --force to override)");
}

void exact_guard(int n) {
  if (n > kExactGuard)
    throw SizeRefusal("exact search is limited to n <= " + std::to_string(kExactGuard) +
                      " (--force does not apply; use satex --heuristic)");
}

OpOutput from_report(const BoundReport& report) {
  OpOutput o;
  o.json = to_json(report);
  o.header = {"evaluator", "kind", "value", "exact", "params", "notes"};
  std::string notes;
  for (const auto& n : report.notes) notes += (notes.empty() ? "" : "; ") + n;
  o.rows.push_back({report.evaluator, to_string(report.kind), format_double(report.value),
                    report.exact ? to_string(*report.exact) : "", report.params.dump(), notes});
  o.value = format_double(report.value);
  o.kind = to_string(report.kind);
  return o;
}

OpOutput inequality_output(const std::string& name, double lhs, double rhs, bool holds) {
  OpOutput o;
  o.json = {{"evaluator", name}, {"lhs", lhs}, {"rhs", rhs}, {"holds", holds}, {"kind", "certified"}};
  o.header = {"evaluator", "lhs", "rhs", "holds"};
  o.rows.push_back({name, format_double(lhs), format_double(rhs), holds ? "true" : "false"});
  o.value = holds ? "1" : "0";
  o.kind = "certified";
  if (!holds) o.exit = kExitSoundnessAlarm;
  return o;
}

OpOutput op_count(const Params& p, const Context& ctx) {
  const PatternSpec f = pattern(p, "pattern");
  const Graph host = read_host(p);
  guard(host.order(), kHeuristicGuard, ctx, "counting");
  const BigCount c = count_subgraphs(f, host);
  OpOutput o;
  o.json = {{"pattern", f.label()}, {"n", host.order()}, {"count", bigcount_to_json(c)}};
  o.header = {"pattern", "n", "count"};
  o.rows.push_back({f.label(), std::to_string(host.order()), to_string(c)});
  o.value = to_string(c);
  return o;
}

FamilySpec read_family(const Params& p) {
  if (has(p, "family-json")) return family_from_json(parse_json(p.at("family-json"), "--family-json"));
  const auto& tag = text(p, "family");
  nlohmann::json params = nlohmann::json::object();
  for (const char* key : {"t", "q", "a", "p", "r"})
    if (has(p, key)) params[key] = small_int(p, key);
  return family_from_json({{"family", tag}, {"params", params}});
}

OpOutput op_build(const Params& p, const Context& ctx) {
  const FamilySpec spec = read_family(p);
  const int forced = forced_order(spec);
  const int n = has(p, "n") ? small_int(p, "n") : forced;
  if (n < 0) throw ParameterError("missing --n");
  guard(n, 4096, ctx, "building");
  const Graph g = build_family(spec, n);
  const std::string g6 = encode_graph6(g);
  OpOutput o;
  o.json = {{"family", family_to_json(spec)}, {"n", n}, {"edges", g.edge_count()}, {"graph6", g6}};
  o.header = {"family", "n", "edges", "graph6"};
  o.rows.push_back({family_to_json(spec).dump(), std::to_string(n), std::to_string(g.edge_count()), g6});
  o.value = g6;
  return o;
}

std::vector<double> reals(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split(s, ',')) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw ParameterError("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

MainTermFamily main_family(const std::string& s) {
  if (s == "clique") return MainTermFamily::Clique;
  if (s == "quasi-star") return MainTermFamily::QuasiStar;
  if (s == "bipartite") return MainTermFamily::Bipartite;
  throw ParameterError("--main-family must be clique, quasi-star or bipartite");
}

MainTermRow main_row(const std::string& s) {
  if (s == "general") return MainTermRow::General;
  if (s == "small-lambda") return MainTermRow::SmallLambda;
  if (s == "lambda-near-one") return MainTermRow::LambdaNearOne;
  throw ParameterError("--row must be general, small-lambda or lambda-near-one");
}

OpOutput op_bound(const Params& p, const Context&) {
  const auto& name = text(p, "name");
  if (name == "csillag1")
    return from_report(csillag1_lower_bound(integer(p, "n"), real(p, "m"), small_int(p, "s"), small_int(p, "a"),
                                            small_int(p, "b")));
  if (name == "bollobas")
    return from_report(bollobas_interpolated_bound(small_int(p, "n"), small_int(p, "k"), small_int(p, "r"), big(p, "m")));
  if (name == "kruskal-katona")
    return from_report(kruskal_katona_bound(real(p, "m"), small_int(p, "k"), small_int(p, "r")));
  if (name == "spanning")
    return from_report(spanning_satex_estimate(small_int(p, "n"), pattern(p, "H"), pattern(p, "F"), big(p, "m")));
  if (name == "pathpath")
    return from_report(pathpath_main_term(real(p, "n"), small_int(p, "k"), small_int(p, "q"), real(p, "m")));
  if (name == "fkr")
    return from_report(fkr_disjoint_pairs_bound(small_int(p, "n"), small_int(p, "k"), real(p, "set-count")));
  if (name == "pathcycle") return from_report(pathcycle_lower_bound(real(p, "n"), small_int(p, "k"), real(p, "m")));
  if (name == "pathcycle-corollary")
    return from_report(pathcycle_corollary_bound(real(p, "n"), small_int(p, "k"), small_int(p, "q"), real(p, "m")));
  if (name == "pk2t")
    return from_report(pk2t_lower_bound(real(p, "n"), small_int(p, "k"), small_int(p, "t"), real(p, "m")));
  if (name == "kqt")
    return from_report(kqt_projection_bound(small_int(p, "n"), small_int(p, "q"), small_int(p, "t"), small_int(p, "s"),
                                            small_int(p, "r"), big(p, "m")));
  if (name == "reiher-wagner") {
    const auto rw = reiher_wagner_max_stars(real(p, "n"), real(p, "m"), small_int(p, "k"));
    OpOutput o = from_report(rw.report);
    o.json["branch"] = rw.branch == StarBranch::QuasiClique ? "quasi-clique"
                       : rw.branch == StarBranch::QuasiStar ? "quasi-star"
                                                            : "tie";
    return o;
  }
  if (name == "c2k-k2t") return from_report(c2k_k2t_reference(real(p, "n"), small_int(p, "k"), small_int(p, "t")));
  if (name == "powermean") {
    std::vector<std::int64_t> d;
    for (double x : reals(text(p, "d"))) {
      if (x != std::floor(x)) throw ParameterError("--d entries must be integers");
      d.push_back(static_cast<std::int64_t>(x));
    }
    const auto c = lemma_powermean_check(d, small_int(p, "a"), small_int(p, "s"));
    return inequality_output(name, c.lhs, c.rhs, c.holds);
  }
  if (name == "blakley-roy") {
    const auto rows = parse_json(text(p, "matrix"), "--matrix");
    SymmetricMatrix s;
    try {
      s.n = static_cast<int>(rows.size());
      for (const auto& row : rows) {
        if (row.size() != rows.size()) throw ParameterError("--matrix must be square");
        for (const auto& x : row) s.a.push_back(x.get<double>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParameterError(std::string("--matrix: ") + e.what());
    }
    const auto u = reals(text(p, "u"));
    const auto c = blakley_roy_check(s, u, small_int(p, "q"));
    return inequality_output(name, c.lhs, c.rhs, c.holds);
  }
  if (name == "main-term") {
    const MainTermQuery query{real(p, "lambda"), pattern(p, "pattern"), main_family(text(p, "main-family")),
                              has(p, "row") ? main_row(p.at("row")) : MainTermRow::General};
    BoundReport r;
    r.evaluator = "main-term";
    r.kind = BoundKind::Asymptotic;
    r.value = closed_form_main_term(query, real(p, "n"));
    r.params = {{"lambda", query.lambda},
                {"pattern", query.pattern.label()},
                {"main-family", text(p, "main-family")},
                {"row", has(p, "row") ? p.at("row") : "general"},
                {"n", real(p, "n")}};
    r.notes.push_back("leading term only");
    return from_report(r);
  }
  throw ParameterError("unknown bound '" + name + "'");
}

OpOutput search_output(const SearchResult& r, const Json& echo) {
  OpOutput o;
  o.json = echo;
  const Json body = to_json(r);
  for (auto& [k, v] : body.items()) o.json[k] = v;
  o.header = {"n", "F", "m", "G", "feasible", "optimum", "witness", "explored", "exact"};
  o.rows.push_back({echo.value("n", Json()).dump(), echo.value("F", std::string()), echo.value("m", std::string()),
                    echo.value("G", std::string()), r.feasible ? "true" : "false",
                    r.feasible ? to_string(r.optimum) : "", r.feasible ? encode_graph6(r.witness) : "",
                    std::to_string(r.explored), r.exact ? "true" : "false"});
  o.value = r.feasible ? to_string(r.optimum) : "";
  o.kind = r.exact ? "exact" : "heuristic";
  return o;
}

OpOutput op_satex(const Params& p, const Context& ctx) {
  const int n = small_int(p, "n");
  const PatternSpec f = pattern(p, "F");
  const PatternSpec g = pattern(p, "G");
  const BigCount m = big(p, "m");
  const Json echo = {{"n", n}, {"F", f.label()}, {"m", to_string(m)}, {"G", g.label()}};
  if (has(p, "heuristic")) {
    guard(n, kHeuristicGuard, ctx, "local search");
    AnnealingOptions options;
    options.seed = ctx.seed;
    if (has(p, "budget")) options.budget = static_cast<std::uint64_t>(std::max(0LL, integer(p, "budget")));
    if (has(p, "restarts")) options.restarts = small_int(p, "restarts");
    return search_output(local_search_satex(n, f, m, g, options), echo);
  }
  exact_guard(n);
  return search_output(exact_satex(n, f, m, g), echo);
}

OpOutput op_turan(const Params& p, const Context&) {
  const int n = small_int(p, "n");
  const PatternSpec f = pattern(p, "F");
  const PatternSpec g = pattern(p, "G");
  exact_guard(n);
  return search_output(exact_generalized_turan(n, f, g), {{"n", n}, {"F", f.label()}, {"G", g.label()}});
}

OpOutput op_phase(const Params& p, const Context& ctx) {
  const int n = small_int(p, "n");
  const int s = small_int(p, "s");
  guard(n, kHeuristicGuard * 8, ctx, "phase scan");
  std::vector<BigCount> grid;
  if (has(p, "grid")) {
    for (const auto& item : split(p.at("grid"), ',')) grid.push_back(parse_bigcount(item));
  } else {
    const int steps = has(p, "steps") ? small_int(p, "steps") : 10;
    if (steps < 1) throw ParameterError("--steps must be positive");
    const BigCount top = count_subgraphs(PatternSpec::star(s), Graph::complete(n));
    for (int i = 0; i <= steps; ++i) grid.push_back(top * i / steps);
  }
  const auto scan = phase_transition_scan(n, s, small_int(p, "a"), small_int(p, "b"), grid);
  OpOutput o;
  Json points = Json::array();
  for (const auto& pt : scan.points) {
    points.push_back({{"m", bigcount_to_json(pt.m)},
                      {"quasi_clique_value", pt.quasi_clique_value ? bigcount_to_json(*pt.quasi_clique_value) : Json()},
                      {"quasi_star_value", pt.quasi_star_value ? bigcount_to_json(*pt.quasi_star_value) : Json()},
                      {"winner", to_string(pt.winner)}});
  }
  o.header = {"m", "quasi_clique_value", "quasi_star_value", "winner"};
  for (const auto& pt : scan.points) {
    o.rows.push_back({to_string(pt.m), pt.quasi_clique_value ? to_string(*pt.quasi_clique_value) : "",
                      pt.quasi_star_value ? to_string(*pt.quasi_star_value) : "", to_string(pt.winner)});
  }
  o.json = {{"n", n},
            {"s", s},
            {"a", small_int(p, "a")},
            {"b", small_int(p, "b")},
            {"points", points},
            {"zeta_hat", scan.zeta_hat ? Json(*scan.zeta_hat) : Json()},
            {"exploratory", scan.exploratory},
            {"notes", scan.notes}};
  o.value = scan.zeta_hat ? format_double(*scan.zeta_hat) : "";
  return o;
}

Hypergraph named_hypergraph(const std::string& spec) {
  auto parse_suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = spec.substr(prefix.size());
    int v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
    return v;
  };
  if (auto k = parse_suffix("gadget-")) return berge_gadget(*k);
  if (spec.rfind("complete-", 0) == 0) {
    const auto dash = spec.find("-uniform-");
    if (dash != std::string::npos) {
      try {
        const int r = std::stoi(spec.substr(9, dash - 9));
        const int n = std::stoi(spec.substr(dash + 9));
        return complete_uniform_hypergraph(n, r);
      } catch (const std::logic_error&) {
      }
    }
  }
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return hypergraph_from_json(parse_json(spec, "--hyper"));
  std::ifstream probe(spec);
  if (probe) return hypergraph_from_json(parse_json(read_file(spec), spec));
  throw ParameterError("unknown hypergraph '" + spec +
                       "' (expected complete-R-uniform-N, gadget-K, inline JSON or a JSON file)");
}

OpOutput op_berge(const Params& p, const Context&) {
  const PatternSpec f = pattern(p, "pattern");
  OpOutput o;
  if (has(p, "sandwich")) {
    const auto report = berge_sandwich_check(small_int(p, "n"), small_int(p, "r"), small_int(p, "m"), f);
    o.json = to_json(report);
    o.json["pattern"] = f.label();
    o.header = {"n", "r", "m", "pattern", "inequality", "lhs", "rhs", "margin", "holds"};
    for (const auto& q : report.inequalities) {
      o.rows.push_back({std::to_string(report.n), std::to_string(report.r), std::to_string(report.m), f.label(), q.name,
                        to_string(q.lhs), to_string(q.rhs), to_string(q.margin), q.holds ? "true" : "false"});
    }
    o.value = report.all_hold ? "1" : "0";
    o.kind = "certified";
    if (!report.all_hold) o.exit = kExitSoundnessAlarm;
    return o;
  }
  if (has(p, "satex")) {
    const int which = small_int(p, "satex");
    const auto r = brute_satex_berge(small_int(p, "n"), small_int(p, "r"), small_int(p, "m"), f, which);
    o.json = to_json(r);
    o.json["which"] = which;
    o.json["pattern"] = f.label();
    o.header = {"n", "r", "m", "pattern", "which", "feasible", "optimum", "explored"};
    o.rows.push_back({text(p, "n"), text(p, "r"), text(p, "m"), f.label(), std::to_string(which),
                      r.feasible ? "true" : "false", r.feasible ? to_string(r.optimum) : "",
                      std::to_string(r.explored)});
    o.value = r.feasible ? to_string(r.optimum) : "";
    o.kind = "exact";
    return o;
  }
  const Hypergraph h = named_hypergraph(text(p, "hyper"));
  const auto c = berge_counts(h, f);
  o.json = to_json(c);
  o.json["pattern"] = f.label();
  o.json["hypergraph"] = hypergraph_to_json(h);
  o.header = {"pattern", "n1", "n2", "n3"};
  o.rows.push_back({f.label(), to_string(c.n1), to_string(c.n2), to_string(c.n3)});
  o.value = to_string(c.n3);
  return o;
}

OpOutput run_op(const std::string& op, const Params& p, const Context& ctx);

Params job_params(const nlohmann::json& job) {
  Params p;
  for (auto& [key, v] : job.items()) {
    if (key == "op" || key == "against") continue;
    if (v.is_string()) {
      p[key] = v.get<std::string>();
    } else if (v.is_boolean()) {
      p[key] = v.get<bool>() ? "1" : "";
    } else if (v.is_array() && key != "matrix") {
      std::string joined;
      for (const auto& x : v) joined += (joined.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
      p[key] = joined;
    } else {
      p[key] = v.dump();
    }
  }
  return p;
}

OpOutput op_sweep(const Params& p, const Context& ctx) {
  const auto jobs = parse_json(read_file(text(p, "file")), "sweep file");
  if (!jobs.is_array()) throw ParameterError("sweep file must hold a JSON array of job objects");
  OpOutput o;
  o.header = {"job", "op", "name", "value", "kind", "reference", "ratio", "status"};
  Json results = Json::array();
  bool alarm = false;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& job = jobs[i];
    if (!job.is_object() || !job.contains("op") || !job["op"].is_string())
      throw ParameterError("sweep job " + std::to_string(i) + " needs a string \"op\"");
    const std::string op = job["op"].get<std::string>();
    if (op == "sweep") throw ParameterError("sweep jobs cannot nest");
    const Params params = job_params(job);
    const OpOutput r = run_op(op, params, ctx);
    std::string reference;
    std::string ratio;
    std::string status = r.exit == kExitSoundnessAlarm ? "violation" : "ok";
    if (job.contains("against")) {
      const auto& against = job["against"];
      const std::string ref_op = against.value("op", std::string("satex"));
      const OpOutput ref = run_op(ref_op, job_params(against), ctx);
      reference = ref.value;
      if (!ref.value.empty() && !r.value.empty()) {
        const double bound = std::stod(r.value);
        const double exact = std::stod(ref.value);
        if (exact != 0) ratio = format_double(bound / exact);
        if (r.kind == "certified") {
          if (bound > exact + 1e-9 * std::max(1.0, std::abs(exact))) status = "violation";
        } else {
          status = "compared";
        }
      }
    }
    alarm = alarm || status == "violation";
    const std::string name = params.count("name") ? params.at("name") : "";
    o.rows.push_back({std::to_string(i), op, name, r.value, r.kind, reference, ratio, status});
    results.push_back({{"job", i},   {"op", op},           {"name", name},   {"result", r.json},
                       {"reference", reference}, {"ratio", ratio}, {"status", status}});
  }
  o.json = {{"jobs", results}, {"violations", alarm}};
  if (alarm) o.exit = kExitSoundnessAlarm;
  return o;
}

OpOutput run_op(const std::string& op, const Params& p, const Context& ctx) {
  static const std::map<std::string, std::function<OpOutput(const Params&, const Context&)>> ops = {
      {"count", op_count}, {"build", op_build}, {"bound", op_bound}, {"satex", op_satex},
      {"turan", op_turan}, {"phase", op_phase}, {"berge", op_berge}, {"sweep", op_sweep}};
  auto it = ops.find(op);
  if (it == ops.end()) throw ParameterError("unknown operation '" + op + "'");
  return it->second(p, ctx);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Option {
  const char* name;
  const char* help;
};

// Per-subcommand flags; every value is kept as text and parsed by the op.
const std::map<std::string, std::vector<Option>>& option_table() {
  static const std::map<std::string, std::vector<Option>> table = {
      {"count",
       {{"pattern", "pattern: K4, K2,3, S3, P4, C5 or g6:<graph6>"},
        {"host", "host graph as a graph6 string"},
        {"host-file", "host graph file (graph6 or JSON edge list)"}}},
      {"build",
       {{"family", "quasi-clique | quasi-star | turan | complete-bipartite | furedi | polarity"},
        {"family-json", "family as JSON {\"family\": tag, \"params\": {...}}"},
        {"n", "vertex count"},
        {"t", "clique size"},
        {"q", "parts or plane order"},
        {"a", "side size"},
        {"p", "prime"},
        {"r", "subgroup order"}}},
      {"bound",
       {{"name", "csillag1 | bollobas | kruskal-katona | spanning | pathpath | fkr | pathcycle | "
                 "pathcycle-corollary | pk2t | kqt | reiher-wagner | c2k-k2t | powermean | blakley-roy | main-term"},
        {"n", "vertex count"},
        {"m", "copy budget"},
        {"k", "k"},
        {"r", "r"},
        {"q", "q"},
        {"s", "s"},
        {"a", "a"},
        {"b", "b"},
        {"t", "t"},
        {"H", "host pattern (spanning)"},
        {"F", "target pattern (spanning)"},
        {"set-count", "family size (fkr)"},
        {"d", "comma-separated integers (powermean)"},
        {"u", "comma-separated vector (blakley-roy)"},
        {"matrix", "JSON nested array (blakley-roy)"},
        {"lambda", "density parameter (main-term)"},
        {"pattern", "P<k> or S<k> (main-term)"},
        {"main-family", "clique | quasi-star | bipartite (main-term)"},
        {"row", "general | small-lambda | lambda-near-one (main-term)"}}},
      {"satex",
       {{"n", "vertex count"},
        {"F", "required pattern"},
        {"m", "required number of copies of F"},
        {"G", "minimised pattern"},
        {"budget", "annealing steps (with --heuristic)"},
        {"restarts", "annealing restarts (with --heuristic)"}}},
      {"turan", {{"n", "vertex count"}, {"F", "maximised pattern"}, {"G", "forbidden pattern"}}},
      {"phase",
       {{"n", "vertex count"},
        {"s", "star size"},
        {"a", "a"},
        {"b", "b"},
        {"grid", "comma-separated m values"},
        {"steps", "uniform grid steps over [0, N(K_{1,s}, K_n)] (default 10)"}}},
      {"berge",
       {{"hyper", "complete-R-uniform-N, gadget-K, inline JSON or a JSON file"},
        {"pattern", "pattern F"},
        {"n", "vertex count (sandwich, satex)"},
        {"r", "uniformity (sandwich, satex)"},
        {"m", "hyperedge count (sandwich, satex)"},
        {"satex", "brute-force satex_i for i = 1, 2, 3"}}},
      {"sweep", {{"file", "JSON array of job objects"}}},
  };
  return table;
}

const std::map<std::string, std::vector<Option>>& flag_table() {
  static const std::map<std::string, std::vector<Option>> table = {
      {"satex", {{"heuristic", "simulated annealing instead of exhaustive search"}}},
      {"berge", {{"n1n2n3", "Berge counts of --pattern in --hyper (default)"},
                 {"sandwich", "check the three sandwich inequalities"}}},
  };
  return table;
}

const char* subcommand_help(const std::string& name) {
  static const std::map<std::string, const char*> help = {
      {"count", "count copies of a pattern in a host graph"},
      {"build", "build a family member and print it as graph6"},
      {"bound", "evaluate a bound"},
      {"satex", "exact or heuristic satex(n, F: m, G)"},
      {"turan", "exact generalized Turan number ex(n, F, G)"},
      {"phase", "quasi-clique versus quasi-star scan"},
      {"berge", "Berge copy counts, brute-force satex_i and sandwich checks"},
      {"sweep", "run a JSON batch of jobs into one CSV"},
  };
  return help.at(name);
}

void print(const OpOutput& o, const std::string& command, const std::string& format, bool timestamp,
           std::ostream& out) {
  if (format == "csv") {
    out << csv_row(o.header);
    for (const auto& row : o.rows) out << csv_row(row);
    return;
  }
  Json j;
  j["command"] = command;
  j["result"] = o.json;
  if (timestamp) j["timestamp"] = utc_timestamp();
  out << j.dump(2) << '\n';
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supersaturation workbench: exact search, bounds, families and Berge counts", "satex"};
  app.require_subcommand(1);
  std::string format;
  std::uint64_t seed = 1;
  int threads = 0;
  bool force = false;
  bool no_timestamp = false;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--threads", threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--force", force, "lift the size guards");
  app.add_flag("--no-timestamp", no_timestamp, "omit the timestamp field");

  std::map<std::string, Params> params;
  std::map<std::string, std::map<std::string, bool>> flags;
  for (const auto& [name, options] : option_table()) {
    CLI::App* sub = app.add_subcommand(name, subcommand_help(name));
    sub->fallthrough();
    for (const auto& opt : options) sub->add_option(std::string("--") + opt.name, params[name][opt.name], opt.help);
    auto f = flag_table().find(name);
    if (f != flag_table().end())
      for (const auto& opt : f->second) sub->add_flag(std::string("--") + opt.name, flags[name][opt.name], opt.help);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitParameter;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Params p = params[command];
  for (const auto& [name, on] : flags[command])
    if (on) p[name] = "1";
  if (threads > 0) omp_set_num_threads(threads);
  const Context ctx{force, seed};
  if (format.empty()) format = command == "phase" || command == "sweep" ? "csv" : "json";

  try {
    const OpOutput o = run_op(command, p, ctx);
    print(o, command, format, !no_timestamp, out);
    if (o.exit == kExitSoundnessAlarm) err << "soundness alarm: a certified bound was violated\n";
    return o.exit;
  } catch (const SizeRefusal& e) {
    err << "size refusal: " << e.what() << '\n';
    return kExitSizeRefusal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::invalid_argument& e) {
    err << "parameter error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitParameter;
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kExitParameter;
  } catch (const NotImplementedError& e) {
    err << "not implemented: " << e.what() << '\n';
    return kExitParameter;
  }
}

}  // namespace satex
