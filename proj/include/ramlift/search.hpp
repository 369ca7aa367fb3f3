#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ramlift/cover.hpp"
#include "ramlift/errors.hpp"
#include "ramlift/graph.hpp"
#include "ramlift/group.hpp"
#include "ramlift/matching.hpp"
#include "ramlift/perm.hpp"
#include "ramlift/poly.hpp"
#include "ramlift/repgroup.hpp"
#include "ramlift/rho.hpp"

namespace ramlift {

/// A labeling group with its representation and per-edge factorizations.
struct LiftGroup {
  enum class Kind { Symmetric, Cyclic, Monomial };

  std::string descriptor;
  Kind kind = Kind::Symmetric;
  int m = 0;  // root-of-unity order (cyclic, monomial)
  int d = 0;  // representation dimension
  int r = 0;  // symmetric degree (Symmetric only)
  Representation pi;
  std::optional<SymmetricGroup> sym;
  /// Rank-one factors whose product is uniform on the group.
  std::vector<FactorDistribution<int>> exact_factors;
  /// Pseudo-reflection generators for the lazy-walk factorization.
  std::vector<int> generators;

  /// Permutation of the symbols over which element g acts, when Symmetric.
  const Permutation& perm(int g) const { return sym->perm(g); }
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, comma - pos));
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("group descriptor: bad " + std::string(what) + " '" + item + "'");
    out.push_back(std::stoi(item));
    pos = comma + 1;
  }
  return out;
}

inline FactorDistribution<int> to_ids(const FactorDistribution<Permutation>& f,
                                      const std::function<int(const Permutation&)>& id) {
  FactorDistribution<int> out;
  for (const auto& [p, w] : f.support) out.support.emplace_back(id(p), w);
  return out;
}

}  // namespace detail

/// Parses "std:<r>", "cyclic:<m>" or "gm1d:<m>,<d>". "gmkd:<m>,<k>,<d>" is
/// accepted only for k = 1.
inline LiftGroup make_lift_group(std::string_view descriptor) {
  const std::size_t colon = descriptor.find(':');
  if (colon == std::string_view::npos) throw ParseError("group descriptor '" + std::string(descriptor) + "' has no ':'");
  const std::string kind(descriptor.substr(0, colon));
  auto args = detail::parse_int_list(descriptor.substr(colon + 1), "argument");
  LiftGroup lg;
  lg.descriptor = std::string(descriptor);
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("group descriptor '" + lg.descriptor + "' takes " + std::to_string(n) + " argument(s)");
  };
  if (kind == "gmkd") {
    want(3);
    if (args[1] != 1)
      throw PreconditionError("G(m,k,d) with k != 1 has no exact rank-one factorization of the uniform distribution");
    args = {args[0], args[2]};
    lg.descriptor = "gm1d:" + std::to_string(args[0]) + "," + std::to_string(args[1]);
    return make_lift_group(lg.descriptor);
  }
  if (kind == "std") {
    want(1);
    lg.kind = LiftGroup::Kind::Symmetric;
    lg.r = args[0];
    if (lg.r < 2) throw PreconditionError("std: r must be at least 2");
    lg.sym = make_symmetric_group(lg.r);
    lg.pi = build_std(*lg.sym);
    lg.d = lg.r - 1;
    const auto& s = *lg.sym;
    for (const auto& f : swap_factorization(lg.r).factors)
      lg.exact_factors.push_back(detail::to_ids(f, [&](const Permutation& p) { return s.id_of(p); }));
    for (int i = 0; i + 1 < lg.r; ++i) lg.generators.push_back(s.id_of(Permutation::transposition(lg.r, i, i + 1)));
  } else if (kind == "cyclic") {
    want(1);
    lg.kind = LiftGroup::Kind::Cyclic;
    lg.m = args[0];
    if (lg.m < 2) throw PreconditionError("cyclic: m must be at least 2");
    lg.pi = build_cyclic(lg.m);
    lg.d = 1;
    lg.exact_factors = cyclic_uniform(lg.m).factors;
    lg.generators = {1};
  } else if (kind == "gm1d") {
    want(2);
    lg.kind = LiftGroup::Kind::Monomial;
    lg.m = args[0];
    lg.d = args[1];
    lg.pi = build_g_m1d(lg.m, lg.d);
    const auto& grp = *lg.pi.group;
    auto id_of = [&](const CycloMatrix& mat) {
      const auto i = grp.index_of(mat);
      if (!i) throw PreconditionError("gm1d: element outside the group");
      return *i;
    };
    if (lg.d >= 2)
      for (const auto& f : swap_factorization(lg.d).factors)
        lg.exact_factors.push_back(
            detail::to_ids(f, [&](const Permutation& p) { return id_of(p.matrix<CycloInt>()); }));
    for (int i = 0; i < lg.d; ++i) {
      FactorDistribution<int> phase;
      for (int k = 0; k < lg.m; ++k) {
        CycloMatrix mat = CycloMatrix::identity(static_cast<std::size_t>(lg.d));
        mat(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = CycloInt::zeta_power(k * (12 / lg.m));
        phase.support.emplace_back(id_of(mat), frac(1, lg.m));
      }
      lg.exact_factors.push_back(std::move(phase));
    }
    for (int i = 0; i + 1 < lg.d; ++i)
      lg.generators.push_back(id_of(Permutation::transposition(lg.d, i, i + 1).matrix<CycloInt>()));
    CycloMatrix ph = CycloMatrix::identity(static_cast<std::size_t>(lg.d));
    ph(0, 0) = CycloInt::zeta_power(12 / lg.m);
    lg.generators.push_back(id_of(ph));
  } else {
    throw ParseError("unsupported group descriptor '" + lg.descriptor + "' (expected std:, cyclic:, gm1d: or gmkd:)");
  }
  return lg;
}

/// Any lift group descriptor, plus perm:r, sign:r and triv:r for S_r.
inline Representation representation_from_descriptor(std::string_view descriptor) {
  const std::size_t colon = descriptor.find(':');
  const std::string_view kind = descriptor.substr(0, colon);
  if (colon != std::string_view::npos && (kind == "perm" || kind == "sign" || kind == "triv")) {
    const auto args = detail::parse_int_list(descriptor.substr(colon + 1), "argument");
    if (args.size() != 1 || args[0] < 1) throw ParseError("'" + std::string(descriptor) + "' takes one positive r");
    const SymmetricGroup s = make_symmetric_group(args[0]);
    if (kind == "perm") return build_perm(s);
    if (kind == "sign") return build_sign(s);
    return build_trivial(s.group);
  }
  return make_lift_group(descriptor).pi;
}

/// Per-edge factor list: the exact factorization, or `lazy:<steps>` lazy-walk
/// factors over the group's pseudo-reflection generators.
inline EdgeFactorization<int> edge_factorization(const LiftGroup& lg, std::string_view choice) {
  if (choice == "exact" || choice.empty()) return {lg.exact_factors, 0};
  if (choice.substr(0, 5) == "lazy:") {
    const auto steps = detail::parse_int_list(choice.substr(5), "step count");
    if (steps.size() != 1) throw ParseError("factorization: lazy:<steps> takes one number");
    return lazy_walk_factorization(*lg.pi.group, lg.generators, steps[0]);
  }
  throw ParseError("unknown factorization '" + std::string(choice) + "' (expected exact or lazy:<steps>)");
}

/// Whether every pair of distinct support values differs by a pseudo-reflection.
inline bool is_rank_one(const FactorDistribution<int>& f, const Representation& pi) {
  const FiniteGroup& g = *pi.group;
  for (std::size_t i = 0; i < f.support.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const int ratio = g.mul(f.support[i].first, g.inverse(f.support[j].first));
      if (!is_pseudo_reflection(pi(ratio))) return false;
    }
  return true;
}

/// Independent per-edge factors, of which an edge-major prefix is fixed.
struct SearchState {
  OrientedMultigraph graph;
  Representation pi;
  std::vector<std::vector<FactorDistribution<int>>> factors;
  /// Chosen element of each fixed factor, in edge-major order.
  std::vector<int> choices;

  std::size_t total_factors() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.size();
    return n;
  }
  bool complete() const { return choices.size() == total_factors(); }

  /// (edge, factor index) of the next unfixed factor.
  std::pair<std::size_t, std::size_t> next() const {
    std::size_t k = choices.size();
    for (std::size_t e = 0; e < factors.size(); ++e) {
      if (k < factors[e].size()) return {e, k};
      k -= factors[e].size();
    }
    throw PreconditionError("search state: every factor is already fixed");
  }

  /// Distribution of each edge's label given the fixed prefix.
  std::vector<FactorDistribution<int>> marginals() const {
    const FiniteGroup& g = *pi.group;
    auto mul = [&](int a, int b) { return g.mul(a, b); };
    std::vector<FactorDistribution<int>> out;
    std::size_t k = 0;
    for (const auto& edge : factors) {
      FactorDistribution<int> acc{{{g.identity(), Rational(1)}}};
      for (const auto& f : edge) {
        if (k < choices.size()) acc = convolve(acc, FactorDistribution<int>{{{choices[k], Rational(1)}}}, mul);
        else acc = convolve(acc, f, mul);
        ++k;
      }
      out.push_back(std::move(acc));
    }
    return out;
  }

  SearchState with_choice(int element) const {
    SearchState s = *this;
    s.choices.push_back(element);
    return s;
  }
};

/// Builds a state with nothing fixed. With `check_rank_one`, every factor
/// must be rank-one under pi and a valid distribution.
inline SearchState make_search_state(const OrientedMultigraph& g, const Representation& pi,
                                     std::vector<std::vector<FactorDistribution<int>>> factors,
                                     bool check_rank_one = true) {
  if (factors.size() != g.edge_count()) throw PreconditionError("search state: one factor list per edge required");
  for (const auto& edge : factors)
    for (const auto& f : edge) {
      f.validate();
      if (check_rank_one && !is_rank_one(f, pi))
        throw PreconditionError("search state: a factor is not rank-one under " + pi.name);
    }
  return {g, pi, std::move(factors), {}};
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

/// Memoized phi_{gamma,pi} per labeling, for one graph and representation.
class CharPolyCache {
 public:
  const RatPoly& get(const OrientedMultigraph& g, const Representation& pi, const GroupLabeling& gamma) {
    auto it = map_.find(gamma);
    if (it != map_.end()) return it->second;
    return map_.emplace(gamma, char_poly(twisted_adjacency(g, gamma, pi))).first->second;
  }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::vector<int>, RatPoly, VectorHash> map_;
};

struct SearchOptions {
  double cap = kDefaultEnumerationCap;
  Rational tol = default_tolerance();
};

/// Exact E[phi_{gamma,pi}] over the state's residual randomness.
inline RatPoly expected_char_poly(const SearchState& state, CharPolyCache& cache, double cap = kDefaultEnumerationCap) {
  const auto marg = state.marginals();
  double count = 1;
  for (const auto& m : marg) count *= static_cast<double>(m.size());
  if (count > cap)
    throw CapExceeded("expected polynomial: " + std::to_string(static_cast<long long>(count)) +
                      " joint labelings exceed the cap; use a smaller graph or r");
  const std::size_t edges = marg.size();
  std::vector<std::size_t> digit(edges, 0);
  GroupLabeling gamma(edges);
  for (std::size_t e = 0; e < edges; ++e) gamma[e] = marg[e].support[0].first;
  std::vector<Rational> acc;
  for (;;) {
    Rational w = 1;
    for (std::size_t e = 0; e < edges; ++e) w *= marg[e].support[digit[e]].second;
    const RatPoly& phi = cache.get(state.graph, state.pi, gamma);
    if (acc.size() < phi.coeffs().size()) acc.resize(phi.coeffs().size(), 0);
    for (std::size_t i = 0; i < phi.coeffs().size(); ++i) acc[i] += w * phi.coeffs()[i];
    std::size_t e = 0;
    while (e < edges && ++digit[e] == marg[e].size()) {
      digit[e] = 0;
      gamma[e] = marg[e].support[0].first;
      ++e;
    }
    if (e == edges) break;
    gamma[e] = marg[e].support[digit[e]].first;
  }
  return RatPoly(std::move(acc));
}

struct StepRecord {
  std::size_t edge = 0;
  std::size_t factor = 0;
  int chosen = 0;
  RatPoly mixture;
  std::vector<RatPoly> branches;
  RootBracket mixture_root;
  RootBracket chosen_root;
};

/// Fixes the next factor to the support value whose conditional expected
/// polynomial has the smallest largest root (first one on ties). Throws
/// InterlacingViolation if a polynomial is not real-rooted or the chosen
/// branch's root exceeds the mixture's.
inline StepRecord greedy_step(SearchState& state, const RatPoly& mixture, CharPolyCache& cache,
                              const SearchOptions& opt = {}) {
  StepRecord rec;
  std::tie(rec.edge, rec.factor) = state.next();
  rec.mixture = mixture;
  if (!is_real_rooted(mixture))
    throw InterlacingViolation("conditional expected polynomial " + mixture.to_string() + " is not real-rooted");
  const auto& f = state.factors[rec.edge][rec.factor];
  std::size_t best = 0;
  for (std::size_t i = 0; i < f.support.size(); ++i) {
    rec.branches.push_back(expected_char_poly(state.with_choice(f.support[i].first), cache, opt.cap));
    if (!is_real_rooted(rec.branches.back()))
      throw InterlacingViolation("branch polynomial " + rec.branches.back().to_string() + " is not real-rooted");
    if (i > 0 && compare_largest_roots(rec.branches[i], rec.branches[best]) < 0) best = i;
  }
  if (compare_largest_roots(rec.branches[best], mixture) > 0)
    throw InterlacingViolation("no branch has largest root at most the mixture's");
  rec.chosen = f.support[best].first;
  rec.mixture_root = largest_root(mixture, opt.tol);
  rec.chosen_root = largest_root(rec.branches[best], opt.tol);
  state.choices.push_back(rec.chosen);
  return rec;
}

struct GreedyRun {
  GroupLabeling labeling;
  RatPoly initial;
  std::vector<StepRecord> steps;
};

inline GreedyRun run_greedy(SearchState state, const SearchOptions& opt = {}) {
  CharPolyCache cache;
  GreedyRun run;
  RatPoly current = expected_char_poly(state, cache, opt.cap);
  run.initial = current;
  while (!state.complete()) {
    run.steps.push_back(greedy_step(state, current, cache, opt));
    const auto& last = run.steps.back();
    const std::size_t pick = static_cast<std::size_t>(
        std::find_if(state.factors[last.edge][last.factor].support.begin(),
                     state.factors[last.edge][last.factor].support.end(),
                     [&](const auto& p) { return p.first == last.chosen; }) -
        state.factors[last.edge][last.factor].support.begin());
    current = last.branches[pick];
  }
  for (const auto& m : state.marginals()) run.labeling.push_back(m.support.front().first);
  return run;
}

inline const char* const kVerdictRamanujan = "one-sided-ramanujan";
inline const char* const kVerdictDMatching = "one-sided-vs-dmatching";
inline const char* const kVerdictFail = "fail";

struct LiftCertificate {
  OrientedMultigraph graph;
  std::string group;
  std::string route = "direct";
  GroupLabeling labels;
  RatPoly new_poly;
  std::optional<RootBracket> new_root;
  /// Present for bipartite bases: the smallest new eigenvalue.
  std::optional<RootBracket> new_smallest_root;
  int d = 0;
  RatPoly matching_poly;
  RootBracket matching_root;
  RhoBracket rho;
  Rational epsilon = 0;
  std::string verdict;
};

inline std::vector<Permutation> labels_as_permutations(const LiftGroup& lg, const GroupLabeling& labels) {
  if (lg.kind != LiftGroup::Kind::Symmetric) throw PreconditionError("labels are not permutations for " + lg.descriptor);
  std::vector<Permutation> out;
  for (int x : labels) out.push_back(lg.perm(x));
  return out;
}

/// Recomputes every polynomial and bracket of a certificate from the graph
/// and labeling, and issues the verdict.
inline LiftCertificate certify(const OrientedMultigraph& g, const LiftGroup& lg, const GroupLabeling& labels,
                               const Rational& epsilon, const std::string& route, const Rational& tol) {
  LiftCertificate c;
  c.graph = g;
  c.group = lg.descriptor;
  c.route = route;
  c.labels = labels;
  c.epsilon = epsilon;
  c.d = lg.d;
  if (lg.kind == LiftGroup::Kind::Symmetric) c.new_poly = new_char_poly(g, labels_as_permutations(lg, labels));
  else c.new_poly = char_poly(twisted_adjacency(g, labels, lg.pi));
  c.matching_poly = d_matching_poly(g, lg.d);
  c.matching_root = largest_root(c.matching_poly, tol);
  c.rho = rho(g);
  const bool bipartite = classify(g).bipartite;
  if (c.new_poly.degree() < 1) {
    c.verdict = kVerdictRamanujan;
    return c;
  }
  c.new_root = largest_root(c.new_poly, tol);
  if (bipartite) c.new_smallest_root = smallest_root(c.new_poly, tol);
  const bool within_rho = c.rho.poly ? compare_largest_roots(c.new_poly, *c.rho.poly) <= 0
                                     : c.new_root->upper <= c.rho.lower;
  bool lower_ok = true;
  if (bipartite) {
    lower_ok = c.rho.poly ? compare_largest_roots(c.new_poly.reflected(), *c.rho.poly) <= 0
                          : -c.new_smallest_root->lower <= c.rho.lower;
  }
  if (within_rho && lower_ok) c.verdict = kVerdictRamanujan;
  else if (c.new_root->upper <= c.matching_root.upper + tol) c.verdict = kVerdictDMatching;
  else c.verdict = kVerdictFail;
  return c;
}

inline void require_liftable(const OrientedMultigraph& g) {
  if (g.edge_count() == 0) throw PreconditionError("lift: graph has no edges");
  if (!g.connected()) throw PreconditionError("lift: graph is disconnected");
  if (g.has_loops()) throw PreconditionError("lift: graph has loops; use the regular-with-loops route");
}

/// Greedy interlacing-family search for a (Gamma, pi)-covering.
inline LiftCertificate find_lift_group(const OrientedMultigraph& g, const LiftGroup& lg,
                                       std::string_view factorization = "exact", const SearchOptions& opt = {},
                                       GreedyRun* run_out = nullptr) {
  require_liftable(g);
  const EdgeFactorization<int> ef = edge_factorization(lg, factorization);
  std::vector<std::vector<FactorDistribution<int>>> factors(g.edge_count(), ef.factors);
  GreedyRun run = run_greedy(make_search_state(g, lg.pi, std::move(factors)), opt);
  LiftCertificate c = certify(g, lg, run.labeling, ef.epsilon, "direct", opt.tol);
  if (run_out) *run_out = std::move(run);
  return c;
}

inline LiftCertificate find_lift(const OrientedMultigraph& g, int r, const SearchOptions& opt = {},
                                 GreedyRun* run_out = nullptr) {
  return find_lift_group(g, make_lift_group("std:" + std::to_string(r)), "exact", opt, run_out);
}

/// Maps a labeling of subdivide(g) back to g: edge j gets
/// sigma_{2j}^-1 * sigma_{2j+1}.
inline std::vector<Permutation> transport_from_subdivision(const OrientedMultigraph& g,
                                                           const std::vector<Permutation>& sub_sigma) {
  if (sub_sigma.size() != 2 * g.edge_count()) throw PreconditionError("transport: labeling size mismatch");
  std::vector<Permutation> out;
  for (std::size_t j = 0; j < g.edge_count(); ++j) out.push_back(sub_sigma[2 * j].inverse() * sub_sigma[2 * j + 1]);
  return out;
}

/// Only the upper bound 2 sqrt(k-1) transfers through the subdivision.
inline void apply_subdivision_verdict(LiftCertificate& c) {
  const auto rep = classify(c.graph);
  if (!rep.regular_degree) throw PreconditionError("subdivision route on a non-regular graph");
  const long k = *rep.regular_degree;
  const bool ok = !c.new_root || compare_largest_roots(c.new_poly, RatPoly{-4 * (k - 1), 0, 1}) <= 0;
  c.verdict = ok ? kVerdictRamanujan : kVerdictFail;
}

/// Lifts a regular graph, loops allowed, through its bipartite subdivision.
/// The certificate is issued for g itself with route "subdivision".
inline LiftCertificate lift_regular_with_loops(const OrientedMultigraph& g, int r, const SearchOptions& opt = {}) {
  const GraphReport rep = classify(g);
  if (!rep.connected) throw PreconditionError("lift: graph is disconnected");
  if (!rep.regular_degree) throw PreconditionError("lift: the subdivision route needs a regular graph");
  const LiftGroup lg = make_lift_group("std:" + std::to_string(r));
  const OrientedMultigraph sub = subdivide(g);
  std::vector<std::vector<FactorDistribution<int>>> factors(sub.edge_count(), lg.exact_factors);
  const GreedyRun run = run_greedy(make_search_state(sub, lg.pi, std::move(factors)), opt);
  const auto sigma = transport_from_subdivision(g, labels_as_permutations(lg, run.labeling));
  GroupLabeling labels;
  for (const auto& p : sigma) labels.push_back(lg.sym->id_of(p));
  LiftCertificate c = certify(g, lg, labels, 0, "subdivision", opt.tol);
  apply_subdivision_verdict(c);
  return c;
}

/// Re-derives a certificate from its graph, group and labeling.
inline LiftCertificate recertify(const LiftCertificate& c, const Rational& tol = default_tolerance()) {
  const LiftGroup lg = make_lift_group(c.group);
  if (c.route == "subdivision") {
    LiftCertificate out = certify(c.graph, lg, c.labels, c.epsilon, c.route, tol);
    apply_subdivision_verdict(out);
    return out;
  }
  if (c.route != "direct") throw ParseError("certificate: unknown route '" + c.route + "'");
  return certify(c.graph, lg, c.labels, c.epsilon, c.route, tol);
}

}  // namespace ramlift
