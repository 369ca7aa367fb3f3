#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ramlift/corpus.hpp"
#include "ramlift/cover.hpp"
#include "ramlift/matching.hpp"
#include "ramlift/perm.hpp"
#include "ramlift/poly.hpp"
#include "ramlift/repgroup.hpp"
#include "ramlift/search.hpp"

namespace ramlift {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

namespace acceptance {

/// Accumulates failures; the criterion passes when none were recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_) s << ", " << failures_ << " failed; first: " << first_;
    return s.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

inline OrientedMultigraph k4_minus_edge() { return OrientedMultigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

inline std::string a1(const Corpus&, Checker& c) {
  const RatPoly want(std::vector<Rational>{4, 0, frac(-178, 3), 0, 180, 0, -189, 0, 81, 0, -15, 0, 1});
  const RatPoly got = d_matching_poly(k4_minus_edge(), 3);
  c.expect(got == want, "K4 minus an edge, d = 3: got " + got.to_string());
  return got.to_string();
}

inline std::string a2(const Corpus& corpus, Checker& c) {
  long n2 = 0, n3 = 0;
  for (const auto& [name, g] : corpus.generated) {
    if (g.edge_count() <= 4) {
      c.expect(d_matching_poly(g, 2) == d_matching_poly_oracle(g, 2), name + " d=2");
      ++n2;
    }
    if (g.edge_count() <= 3) {
      c.expect(d_matching_poly(g, 3) == d_matching_poly_oracle(g, 3), name + " d=3");
      ++n3;
    }
  }
  return std::to_string(n2) + " graphs at d=2, " + std::to_string(n3) + " at d=3";
}

/// Exact average of phi_{gamma,pi} over every labeling.
inline RatPoly average_char_poly(const OrientedMultigraph& g, const Representation& pi) {
  const std::size_t n = pi.group->size();
  std::vector<FactorDistribution<int>> uniform(1);
  for (std::size_t x = 0; x < n; ++x) uniform[0].support.emplace_back(static_cast<int>(x), frac(1, static_cast<long>(n)));
  std::vector<std::vector<FactorDistribution<int>>> factors(g.edge_count(), uniform);
  const SearchState s = make_search_state(g, pi, std::move(factors), false);
  CharPolyCache cache;
  return expected_char_poly(s, cache);
}

inline std::string a3(const Corpus& corpus, Checker& c) {
  const auto s2 = make_symmetric_group(2), s3 = make_symmetric_group(3);
  const Representation sign = build_sign(s2), std3 = build_std(s3);
  long n2 = 0, n3 = 0;
  for (const auto& [name, g] : corpus.generated) {
    if (g.edge_count() <= 5) {
      c.expect(average_char_poly(g, sign) == d_matching_poly(g, 1), name + " (S2, sign)");
      ++n2;
    }
    if (g.edge_count() <= 3) {
      c.expect(average_char_poly(g, std3) == d_matching_poly(g, 2), name + " (S3, std)");
      ++n3;
    }
  }
  return std::to_string(n2) + " graphs for (S2, sign), " + std::to_string(n3) + " for (S3, std)";
}

inline std::vector<NamedGraph> loopless(const std::vector<NamedGraph>& gs) {
  std::vector<NamedGraph> out;
  for (const auto& g : gs)
    if (!g.graph.has_loops()) out.push_back(g);
  return out;
}

/// Loopless generated graphs plus the named fixtures with at most
/// `max_edges` edges.
inline std::vector<NamedGraph> loopless_with_fixtures(const Corpus& corpus, std::size_t max_edges) {
  std::vector<NamedGraph> out = loopless(corpus.generated);
  for (const auto& g : loopless(corpus.named))
    if (g.graph.edge_count() <= max_edges && g.graph.connected()) out.push_back(g);
  return out;
}

inline std::string a4(const Corpus& corpus, Checker& c) {
  long regular = 0, total = 0;
  for (const auto& [name, g] : loopless_with_fixtures(corpus, 6)) {
    const auto rep = classify(g);
    for (int d = 1; d <= 3; ++d) {
      const RatPoly m = d_matching_poly(g, d);
      ++total;
      c.expect(is_real_rooted(m), name + " d=" + std::to_string(d) + " not real-rooted");
      if (!rep.regular_degree) continue;
      ++regular;
      const long k = *rep.regular_degree;
      // 2 sqrt(k-1) degenerates to 0 for k = 1; the only such graph is K2, a tree with rho = 1
      const RatPoly bound = k >= 2 ? RatPoly{-4 * (k - 1), 0, 1} : RatPoly{-1, 0, 1};
      c.expect(compare_largest_roots(m, bound) <= 0, name + " d=" + std::to_string(d) + " root above the bound");
      c.expect(compare_largest_roots(m.reflected(), bound) <= 0, name + " d=" + std::to_string(d) + " root below the bound");
    }
  }
  return std::to_string(total) + " polynomials, " + std::to_string(regular) + " from regular graphs";
}

inline bool within_rho_upper(const RatPoly& p, const RhoBracket& rho, const RootBracket& root) {
  if (rho.poly) return compare_largest_roots(p, *rho.poly) <= 0;
  return root.upper <= rho.upper;
}

inline std::string a5(const Corpus& corpus, Checker& c) {
  long runs = 0, bipartite = 0;
  for (const auto& [name, g] : loopless_with_fixtures(corpus, 6)) {
    const bool bip = classify(g).bipartite;
    for (int r : {2, 3}) {
      const std::string tag = name + " r=" + std::to_string(r);
      try {
        GreedyRun run;
        const LiftCertificate cert = find_lift(g, r, {}, &run);
        ++runs;
        c.expect(compare_largest_roots(cert.new_poly, cert.matching_poly) <= 0, tag + " new root above M_{r-1,G}");
        c.expect(run.initial == cert.matching_poly, tag + " initial expectation differs from M_{r-1,G}");
        c.expect(cert.verdict != kVerdictFail, tag + " verdict fail");
        if (bip) {
          ++bipartite;
          c.expect(within_rho_upper(cert.new_poly, cert.rho, *cert.new_root), tag + " top new eigenvalue above rho");
          c.expect(within_rho_upper(cert.new_poly.reflected(), cert.rho, smallest_root(cert.new_poly.reflected())),
                   tag + " bottom new eigenvalue below -rho");
        }
      } catch (const InterlacingViolation& e) {
        c.expect(false, tag + ": " + e.what());
      }
    }
  }
  return std::to_string(runs) + " lifts, " + std::to_string(bipartite) + " on bipartite bases";
}

inline std::string a6(const Corpus&, Checker& c) {
  const LiftGroup lg = make_lift_group("std:3");
  const OrientedMultigraph two_cycle(2, {{0, 1}, {0, 1}});
  const int id = lg.sym->id_of(Permutation::identity(3));
  const int cyc = lg.sym->id_of(Permutation::rotation(3, 1));
  std::vector<std::vector<FactorDistribution<int>>> factors{
      {FactorDistribution<int>{{{id, Rational(1)}}}},
      {FactorDistribution<int>{{{id, frac(1, 2)}, {cyc, frac(1, 2)}}}}};
  SearchState s = make_search_state(two_cycle, lg.pi, factors, false);
  CharPolyCache cache;
  const RatPoly e = expected_char_poly(s, cache);
  const RatPoly a{-4, 0, 1}, b{-1, 0, 1};
  c.expect(e == frac(1, 2) * (a * a + b * b), "mixture is " + e.to_string());
  c.expect(!is_real_rooted(e), "mixture flagged real-rooted");
  bool rejected = false;
  try {
    make_search_state(two_cycle, lg.pi, factors, true);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  c.expect(rejected, "rank-one validation accepted the state");
  bool violation = false;
  try {
    greedy_step(s, e, cache);
  } catch (const InterlacingViolation&) {
    violation = true;
  }
  c.expect(violation, "greedy step accepted a non-real-rooted mixture");
  return e.to_string();
}

inline std::string a7(const Corpus&, Checker& c) {
  for (int r = 2; r <= 5; ++r) {
    const auto s = make_symmetric_group(r);
    const auto pi = build_std(s);
    c.expect(check_p1(pi).pass, "std(S" + std::to_string(r) + ") fails P1");
    c.expect(check_p2(pi).pass, "std(S" + std::to_string(r) + ") fails P2");
  }
  c.expect(!check_p1(build_perm(make_symmetric_group(3))).pass, "perm(S3) passes P1");
  CycloMatrix minus = CycloMatrix::identity(2);
  minus(0, 0) = CycloInt(-1);
  minus(1, 1) = CycloInt(-1);
  c.expect(!check_p2(build_from_matrices({CycloMatrix::identity(2), minus}, "+-I")).pass, "{+-I} passes P2");
  std::vector<Representation> pairs;
  for (int r = 2; r <= 5; ++r) pairs.push_back(build_std(make_symmetric_group(r)));
  for (int m : {2, 3, 4, 6}) pairs.push_back(build_cyclic(m));
  for (auto [m, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) pairs.push_back(build_g_m1d(m, d));
  long steinberg = 0;
  for (const auto& pi : pairs) {
    const Character chi = character(pi);
    if (character_inner_product(chi, chi) != 1 || !check_p2(pi).pass) continue;
    ++steinberg;
    c.expect(check_p1(pi).pass, pi.name + " is irreducible with P2 but fails P1");
  }
  return std::to_string(steinberg) + " irreducible reflection representations checked for P1";
}

inline std::string a8(const Corpus&, Checker& c) {
  auto mul = [](const Permutation& a, const Permutation& b) { return a * b; };
  auto same_as_uniform = [&](const EdgeFactorization<Permutation>& f, int r) {
    auto prod = product_distribution(f.factors, Permutation::identity(r), mul);
    const auto uni = uniform_sr(r);
    if (prod.size() != uni.size()) return false;
    for (const auto& [p, w] : prod.support)
      if (w != uni.support.front().second) return false;
    return true;
  };
  auto rank_one_under_std = [](const EdgeFactorization<Permutation>& f) {
    for (const auto& factor : f.factors)
      for (std::size_t i = 0; i < factor.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (!is_pseudo_reflection(std_matrix(factor.support[i].first * factor.support[j].first.inverse())))
            return false;
    return true;
  };
  for (int r = 2; r <= 5; ++r) {
    const auto f = swap_factorization(r);
    c.expect(static_cast<int>(f.factors.size()) == r * (r - 1) / 2, "swap factor count for r=" + std::to_string(r));
    c.expect(same_as_uniform(f, r), "swap factorization not uniform for r=" + std::to_string(r));
    c.expect(rank_one_under_std(f), "swap factor not rank-one for r=" + std::to_string(r));
  }
  c.expect(same_as_uniform(xyz_s3(), 3), "XYZ not uniform");
  c.expect(rank_one_under_std(xyz_s3()), "XYZ factor not rank-one");
  return "r = 2..5 and XYZ";
}

inline std::string a9(const Corpus&, Checker& c) {
  double worst = 0;
  for (int r : {3, 4}) {
    const auto s = make_symmetric_group(r);
    const std::vector<Representation> reps{build_std(s), build_sign(s), build_trivial(s.group)};
    for (const auto& a : reps)
      for (const auto& b : reps) {
        const auto rep = peter_weyl_check(a, b);
        worst = std::max(worst, rep.max_deviation);
        c.expect(rep.pass, a.name + " vs " + b.name + " in S" + std::to_string(r));
      }
  }
  const auto s3 = make_symmetric_group(3);
  const auto std3 = build_std(s3);
  c.expect(peter_weyl_check(std3, std3).expected_diagonal == 0.5, "std(S3) normalization is not 1/2");
  std::ostringstream s;
  s << "max deviation " << worst;
  return s.str();
}

inline std::string a10(const Corpus&, Checker& c) {
  std::mt19937 rng(20240607);
  std::uniform_int_distribution<int> q_dist(1, 3), d_dist(1, 4), entry(-5, 5);
  for (int t = 0; t < 200; ++t) {
    const int q = q_dist(rng), d = d_dist(rng);
    std::vector<Matrix<Integer>> mats;
    Matrix<Integer> sum(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int l = 0; l < q; ++l) {
      Matrix<Integer> a(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(rng);
      sum += a;
      mats.push_back(std::move(a));
    }
    c.expect(det_of_sum(mats).value == determinant(sum), "tuple " + std::to_string(t));
  }
  return "200 tuples";
}

inline std::string a11(const Corpus& corpus, Checker& c) {
  const LiftGroup lg = make_lift_group("cyclic:3");
  long n = 0;
  for (const auto& [name, g] : loopless_with_fixtures(corpus, 6)) {
    const LiftCertificate cert = find_lift_group(g, lg);
    ++n;
    c.expect(cert.verdict == kVerdictRamanujan, name + " verdict " + cert.verdict);
    std::vector<Permutation> sigma;
    GroupLabeling conj;
    for (int k : cert.labels) {
      sigma.push_back(Permutation::rotation(3, k));
      conj.push_back((3 - k) % 3);
    }
    const RatPoly phi1 = char_poly(twisted_adjacency(g, cert.labels, lg.pi));
    const RatPoly phi2 = char_poly(twisted_adjacency(g, conj, lg.pi));
    c.expect(new_char_poly(g, sigma) == phi1 * phi2, name + " permutation covering spectrum differs");
  }
  return std::to_string(n) + " cyclic 3-lifts";
}

inline std::string a12(const Corpus&, Checker& c) {
  const OrientedMultigraph bouquet(1, {{0, 0}, {0, 0}});
  const RatPoly bound{-12, 0, 1};
  for (int r : {2, 3}) {
    const LiftCertificate cert = lift_regular_with_loops(bouquet, r);
    c.expect(cert.verdict == kVerdictRamanujan, "r=" + std::to_string(r) + " verdict " + cert.verdict);
    c.expect(compare_largest_roots(cert.new_poly, bound) <= 0, "r=" + std::to_string(r) + " above 2 sqrt 3");
  }
  const LiftCertificate cert = lift_regular_with_loops(bouquet, 2);
  const LiftGroup lg = make_lift_group("std:2");
  bool found = false;
  long good = 0;
  for_each_sr_labeling(bouquet.edge_count(), 2, kDefaultEnumerationCap, [&](const std::vector<Permutation>& sigma) {
    const RatPoly p = new_char_poly(bouquet, sigma);
    if (compare_largest_roots(p, bound) <= 0) ++good;
    if (labels_as_permutations(lg, cert.labels) == sigma) found = p == cert.new_poly;
  });
  c.expect(found, "certified labeling not reproduced by enumeration");
  return std::to_string(good) + " of 4 loop labelings at r=2 lie below 2 sqrt 3";
}

struct Entry {
  const char* id;
  const char* title;
  double budget;
  std::string (*run)(const Corpus&, Checker&);
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"A1", "d-matching polynomial of K4 minus an edge at d = 3", 1, a1},
      {"A2", "closed-form d-matching polynomial equals the covering average", 120, a2},
      {"A3", "average twisted characteristic polynomial equals M_{d,G}", 300, a3},
      {"A4", "d-matching polynomials are real-rooted and inside the Ramanujan interval", 0, a4},
      {"A5", "greedy lifts stay below the d-matching root", 600, a5},
      {"A6", "non-rank-one mixture is not real-rooted", 0, a6},
      {"A7", "P1 and P2 checkers", 0, a7},
      {"A8", "rank-one factorizations of the uniform distribution", 0, a8},
      {"A9", "matrix coefficient orthogonality", 0, a9},
      {"A10", "determinant of a sum via minors", 0, a10},
      {"A11", "cyclic 3-lifts and conjugate twisted spectra", 0, a11},
      {"A12", "regular graphs with loops through subdivision", 0, a12},
  };
  return e;
}

}  // namespace acceptance

/// Runs every criterion, or only `only` when given. Exceptions count as
/// failures; a criterion over its time budget fails too.
inline std::vector<CriterionResult> run_acceptance(const Corpus& corpus, const std::optional<std::string>& only = {}) {
  std::vector<CriterionResult> out;
  bool matched = false;
  for (const auto& e : acceptance::entries()) {
    if (only && *only != e.id) continue;
    matched = true;
    CriterionResult r{e.id, e.title, false, "", 0, e.budget};
    acceptance::Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = e.run(corpus, c);
      r.pass = c.ok();
      r.detail += "; " + c.summary();
    } catch (const std::exception& ex) {
      r.detail = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget > 0 && r.seconds > e.budget) {
      r.pass = false;
      r.detail += "; over the time budget";
    }
    out.push_back(std::move(r));
  }
  if (only && !matched) throw PreconditionError("unknown criterion '" + *only + "'");
  return out;
}

}  // namespace ramlift
