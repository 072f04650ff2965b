#include "kronbrist/scenarios.hpp"

#include "kronbrist/bristle.hpp"
#include "kronbrist/cover.hpp"
#include "kronbrist/families.hpp"
#include "kronbrist/homology.hpp"
#include "kronbrist/module_io.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

namespace kronbrist {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(std::size_t v) { return std::to_string(v); }

class Recorder {
 public:
  explicit Recorder(std::vector<Check>& out) : out_(out) {}

  void expect(std::string key, std::string name, std::string claim, std::string expected, std::string computed) {
    const CheckStatus status = expected == computed ? CheckStatus::pass : CheckStatus::fail;
    out_.push_back({std::move(key), std::move(name), std::move(claim), std::move(expected), std::move(computed), status});
  }

  void inconclusive(std::string key, std::string name, std::string claim, std::string expected,
                    std::string computed) {
    out_.push_back({std::move(key), std::move(name), std::move(claim), std::move(expected), std::move(computed),
                    CheckStatus::inconclusive});
  }

 private:
  std::vector<Check>& out_;
};

std::string all_equal(std::size_t value, std::size_t count) {
  return str(value) + " for all " + str(count);
}

/// all_equal(v, values.size()) when every value is v; otherwise the
/// distinct values that occurred.
std::string summarize(const std::vector<std::size_t>& values) {
  const std::set<std::size_t> distinct(values.begin(), values.end());
  if (distinct.size() == 1) return all_equal(*distinct.begin(), values.size());
  std::string out = "values {";
  for (std::size_t v : distinct) out += (out.size() > 8 ? "," : "") + str(v);
  return out + "} over " + str(values.size());
}

std::string count_of(std::size_t k, std::size_t total) { return str(k) + " of " + str(total); }

std::string iso_status(const KroneckerModule& a, const KroneckerModule& b, const ScenarioConfig& cfg) {
  return to_string(find_isomorphism(a, b, cfg.attempts, cfg.seed).status);
}

/// Saturation recomputed through projective resolutions, independent of
/// the Euler-form shortcut used by is_saturated.
bool saturated_by_resolution(const std::vector<KroneckerModule>& bristles, const KroneckerModule& m) {
  for (const KroneckerModule& b : bristles)
    if (ext1_dim_via_resolution(b, m) != 0) return false;
  return true;
}

DimensionVector preinjective_dims(std::size_t n, std::size_t t) {
  const DimensionVector base = t % 2 == 0 ? DimensionVector{1, 0} : DimensionVector{static_cast<std::int64_t>(n), 1};
  return coxeter_apply(base, n, static_cast<std::int64_t>(t / 2));
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

/// Calls visit for each k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Generation by a subset, decided from the per-bristle traces.
bool traces_cover(const std::vector<SubmodulePair>& traces, const std::vector<std::size_t>& subset,
                  const KroneckerModule& m) {
  SubmodulePair sum = zero_submodule(m);
  for (std::size_t i : subset) sum = submodule_sum(sum, traces[i]);
  return sum == whole_module(m);
}

std::vector<SubmodulePair> per_bristle_traces(const std::vector<KroneckerModule>& bristles, const KroneckerModule& m) {
  std::vector<SubmodulePair> traces;
  for (const KroneckerModule& b : bristles) traces.push_back(trace_submodule({b}, m));
  return traces;
}

std::vector<KroneckerModule> b0_modules(const ScenarioConfig& cfg) {
  return bristle_modules(canonical_set(CanonicalSet::b0, cfg.n, *cfg.field));
}

// ---------------------------------------------------------------------------

void main_theorem_a(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const auto all = bristle_modules(enumerate_bristles(n, f));
  const auto b0 = b0_modules(cfg);
  for (std::size_t t = 0; t <= cfg.tmax; ++t) {
    const KroneckerModule it = preinjective(n, t, f);
    const std::string ts = str(t);
    rec.expect("dims.t" + ts, "dim I_" + ts, "dim I_t is given by the Coxeter transformation",
               preinjective_dims(n, t).to_string(), it.dims().to_string());
    rec.expect("generated.t" + ts, "I_" + ts + " generated by B0", "every preinjective module is generated by B0",
               str(true), str(is_generated_by(b0, it)));
    rec.expect("saturated.t" + ts, "I_" + ts + " B-saturated", "every preinjective module is B-saturated",
               str(true), str(is_saturated(it)));
    rec.expect("saturated-resolution.t" + ts, "I_" + ts + " B-saturated (resolution)",
               "every preinjective module is B-saturated", str(true), str(saturated_by_resolution(all, it)));
    if (t == 2 || t == 3) {
      std::vector<std::size_t> homs;
      for (const KroneckerModule& b : all) homs.push_back(hom_dim(b, it));
      const std::size_t expected = t == 2 ? n - 1 : n * n - n - 1;
      rec.expect("hom.t" + ts, "dim Hom(B, I_" + ts + ")",
                 t == 2 ? "dim Hom(B, I_2) = n-1 for every bristle B" : "dim Hom(B, I_3) = n^2-n-1 for every bristle B",
                 all_equal(expected, all.size()), summarize(homs));
    }
  }
}

void bristle_orbits(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const auto points = enumerate_bristles(n, f);
  const auto all = bristle_modules(points);
  const auto b0 = b0_modules(cfg);

  if (cfg.module_path) {
    const KroneckerModule m = read_module_path(*cfg.module_path);
    // holds[t]: tau^t M is generated by B0 and B-saturated.
    std::vector<bool> holds;
    for (std::size_t t = 0; t <= cfg.tmax; ++t) {
      const KroneckerModule x = ar_translate_power(m, static_cast<std::int64_t>(t));
      holds.push_back(is_generated_by(b0, x) && is_saturated(x));
    }
    std::optional<std::size_t> minimal;
    for (std::size_t t = cfg.tmax + 1; t-- > 0 && holds[t];) minimal = t;
    const std::string claim = "tau^t M is generated by B0 and B-saturated for all t >= t(M)";
    if (minimal)
      rec.expect("module.minimal-t", "minimal t(M) = " + str(*minimal), claim, "t(M) <= " + str(cfg.tmax),
                 "t(M) <= " + str(cfg.tmax));
    else
      rec.inconclusive("module.minimal-t", "minimal t(M) up to tmax", claim, "t(M) <= " + str(cfg.tmax),
                       "tau^" + str(cfg.tmax) + " M fails; raise --tmax");
    return;
  }

  const KroneckerModule b1 = bristle(bristle_point(n, f, 1));
  const std::size_t top = std::min<std::size_t>(cfg.tmax, 3);
  for (std::size_t t = 1; t <= top; ++t) {
    const KroneckerModule x = ar_translate_power(b1, static_cast<std::int64_t>(t));
    const std::string ts = str(t);
    rec.expect("dims.t" + ts, "dim tau^" + ts + " B(1)", "dim tau^t B = Phi^t(1,1)",
               coxeter_apply({1, 1}, n, static_cast<std::int64_t>(t)).to_string(), x.dims().to_string());
    rec.expect("generated.t" + ts, "tau^" + ts + " B(1) generated by B0", "tau^t B is generated by B0 for t >= 1",
               str(true), str(is_generated_by(b0, x)));
    const std::string sat_claim =
        t == 1 ? "tau B is not B-saturated" : "tau^t B is B-saturated for all t >= 2";
    rec.expect("saturated.t" + ts, "tau^" + ts + " B(1) B-saturated", sat_claim, str(t >= 2), str(is_saturated(x)));
    rec.expect("saturated-resolution.t" + ts, "tau^" + ts + " B(1) B-saturated (resolution)", sat_claim, str(t >= 2),
               str(saturated_by_resolution(all, x)));
    if (t == 1) {
      rec.expect("ext.b1-taub1", "dim Ext^1(B(1), tau B(1))", "Ext^1(B, tau B) is one-dimensional", "1",
                 str(ext1_dim(b1, x)));
      rec.expect("ext-resolution.b1-taub1", "dim Ext^1(B(1), tau B(1)) (resolution)",
                 "Ext^1(B, tau B) is one-dimensional", "1", str(ext1_dim_via_resolution(b1, x)));
    }
  }

  for (std::size_t t = 1; t <= std::min<std::size_t>(cfg.tmax, 2); ++t) {
    const std::string ts = str(t);
    std::size_t generated = 0, saturated = 0;
    std::string missed;
    std::vector<std::size_t> homs;
    for (std::size_t k = 0; k < all.size(); ++k) {
      const KroneckerModule& b = all[k];
      const KroneckerModule x = ar_translate_power(b, static_cast<std::int64_t>(t));
      if (is_generated_by(b0, x))
        ++generated;
      else
        missed += " " + points[k].to_string();
      saturated += is_saturated(x);
      for (const KroneckerModule& c : all) homs.push_back(hom_dim(x, c));
    }
    rec.expect("all-generated.t" + ts, "tau^" + ts + " B generated by B0, all B",
               "tau^t B is generated by B0 for t >= 1", count_of(all.size(), all.size()),
               count_of(generated, all.size()) + (missed.empty() ? "" : "; not for" + missed));
    rec.expect("all-saturated.t" + ts, "tau^" + ts + " B B-saturated, all B",
               t == 1 ? "tau B is not B-saturated" : "tau^t B is B-saturated for all t >= 2",
               count_of(t >= 2 ? all.size() : 0, all.size()), count_of(saturated, all.size()));
    rec.expect("hom-vanishing.t" + ts, "dim Hom(tau^" + ts + " B, B')", "Hom(tau^t B, B') = 0 for bristles B, B'",
               all_equal(0, homs.size()), summarize(homs));
  }
}

void optimality_i3(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const auto all = bristle_modules(enumerate_bristles(n, f));
  const KroneckerModule i3 = preinjective(n, 3, f);
  const std::string claim = "no set of n+1 bristles generates I_3";

  rec.expect("b0-generates", "B0 generates I_3", "I_3 is generated by the n+2 bristles of B0", str(true),
             str(is_generated_by(b0_modules(cfg), i3)));

  const std::uint64_t count = binomial_capped(all.size(), n + 1, cfg.subset_limit);
  if (count > cfg.subset_limit) {
    rec.inconclusive("subsets", "(n+1)-subsets generating I_3", claim, "0 generating subsets",
                     "refused: more than " + str(cfg.subset_limit) + " subsets");
    return;
  }
  const auto traces = per_bristle_traces(all, i3);
  std::size_t generating = 0, total = 0;
  for_each_subset(all.size(), n + 1, [&](const std::vector<std::size_t>& s) {
    ++total;
    generating += traces_cover(traces, s, i3);
  });
  rec.expect("subsets", "(n+1)-subsets generating I_3", claim, count_of(0, count), count_of(generating, total));

  // The subset path must agree with the direct trace for B0 itself.
  const auto points = enumerate_bristles(n, f);
  std::vector<std::size_t> b0_idx;
  for (const BristlePoint& p : canonical_set(CanonicalSet::b0, n, f))
    b0_idx.push_back(static_cast<std::size_t>(std::find(points.begin(), points.end(), p) - points.begin()));
  rec.expect("b0-generates-subset-path", "B0 generates I_3 (sum of traces)",
             "I_3 is generated by the n+2 bristles of B0", str(true), str(traces_cover(traces, b0_idx, i3)));
}

void opt_taub1(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const auto points = enumerate_bristles(n, f);
  const auto all = bristle_modules(points);
  const BristlePoint p1 = bristle_point(n, f, 1);
  const KroneckerModule b1 = bristle(p1);
  const KroneckerModule x = ar_translate(b1, Translate::tau);

  rec.expect("dims", "dim tau B(1)", "dim tau B(1) = Phi(1,1)", coxeter_apply({1, 1}, n, 1).to_string(),
             x.dims().to_string());
  rec.expect("b1-prime-generates", "B1' generates tau B(1)", "tau B(1) is generated by B1'", str(true),
             str(is_generated_by(bristle_modules(canonical_set(CanonicalSet::b1_prime, n, f)), x)));

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!(points[i] == p1)) others.push_back(i);
  const std::string claim = "B(1) has to belong to any set of n+1 bristles generating tau B(1)";
  const std::uint64_t count = binomial_capped(others.size(), n + 1, cfg.subset_limit);
  if (count > cfg.subset_limit) {
    rec.inconclusive("subsets-avoiding-b1", "(n+1)-subsets without B(1) generating tau B(1)", claim,
                     "0 generating subsets", "refused: more than " + str(cfg.subset_limit) + " subsets");
  } else {
    const auto traces = per_bristle_traces(all, x);
    std::size_t generating = 0, total = 0;
    for_each_subset(others.size(), n + 1, [&](const std::vector<std::size_t>& s) {
      std::vector<std::size_t> mapped;
      for (std::size_t i : s) mapped.push_back(others[i]);
      ++total;
      generating += traces_cover(traces, mapped, x);
    });
    rec.expect("subsets-avoiding-b1", "(n+1)-subsets without B(1) generating tau B(1)", claim, count_of(0, count),
               count_of(generating, total));
  }

  rec.expect("hom.b1", "dim Hom(B(1), tau B(1))", "dim Hom(B(1), tau B(1)) = n-1", str(n - 1), str(hom_dim(b1, x)));
  std::vector<std::size_t> homs;
  for (std::size_t i : others) homs.push_back(hom_dim(all[i], x));
  rec.expect("hom.others", "dim Hom(B, tau B(1)), B not B(1)", "dim Hom(B, tau B(1)) = n-2 for B not isomorphic to B(1)",
             all_equal(n - 2, others.size()), summarize(homs));
  rec.expect("ext.b1-b1", "dim Ext^1(B(1), B(1))", "dim Ext^1(B, B) = n-1", str(n - 1), str(ext1_dim(b1, b1)));
}

void n2_generation(const ScenarioConfig& cfg, Recorder& rec) {
  const FieldSpec f = *cfg.field;
  const auto params = n2_parameters(f);
  std::vector<KroneckerModule> bristles;
  for (const auto& c : params) bristles.push_back(bristle(n2_bristle(f, c)));
  const std::size_t masks = std::size_t{1} << params.size();

  for (std::size_t t = 0; t <= cfg.tmax; ++t) {
    const std::string ts = str(t);
    const KroneckerModule it = preinjective(2, t, f);
    const KroneckerModule explicit_it = n2_preinjective(t, f);
    rec.expect("explicit.t" + ts, "explicit I_" + ts + " matrices", "the explicit matrices realize I_t",
               "verified-iso", iso_status(explicit_it, it, cfg));
    if (t >= 1) {
      std::size_t ok = 0;
      for (std::size_t k = 0; k < params.size(); ++k) {
        const Vector m = n2_bristle_generator(t, f, params[k]);
        const KroneckerModule gen = submodule_as_module(explicit_it, generated_submodule(explicit_it, m));
        ok += find_isomorphism(gen, bristles[k], cfg.attempts, cfg.seed).status == IsoResult::Status::verified_iso;
      }
      rec.expect("generators.t" + ts, "m_c generates B_c in I_" + ts, "m_c generates a submodule isomorphic to B_c",
                 count_of(params.size(), params.size()), count_of(ok, params.size()));
    }
    if (masks > cfg.subset_limit) {
      rec.inconclusive("law.t" + ts, "generated iff |J| >= t+1", "I_t is generated by B_J if and only if |J| >= t+1",
                       "0 violations", "refused: more than " + str(cfg.subset_limit) + " subsets");
      continue;
    }
    const auto traces = per_bristle_traces(bristles, it);
    std::size_t violations = 0;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t k = 0; k < params.size(); ++k)
        if (mask >> k & 1) subset.push_back(k);
      violations += traces_cover(traces, subset, it) != (subset.size() >= t + 1);
    }
    rec.expect("law.t" + ts, "generated iff |J| >= t+1", "I_t is generated by B_J if and only if |J| >= t+1",
               "0 violations in " + str(masks) + " subsets", str(violations) + " violations in " + str(masks) + " subsets");
  }
}

void n2_classification(const ScenarioConfig& cfg, Recorder& rec) {
  const FieldSpec f = *cfg.field;
  const std::size_t q = f.cardinality();
  for (std::size_t t = 0; t <= cfg.tmax; ++t) {
    const std::string ts = str(t);
    const KroneckerModule it = preinjective(2, t, f);
    const bool bristled = is_bristled(it);
    rec.expect("bristled.t" + ts, "I_" + ts + " bristled", "I_t is bristled if and only if t <= q", str(t <= q),
               str(bristled));
    if (bristled)
      rec.expect("saturated.t" + ts, "I_" + ts + " B-saturated", "the bristled I_t are B-saturated", str(true),
                 str(is_saturated(it)));
  }
  rec.expect("s2-saturated", "S(2) B-saturated", "S(2) is not B-saturated", str(false),
             str(is_saturated(KroneckerModule::simple2(2, f))));
  std::size_t saturated = 0;
  const auto all = bristle_modules(enumerate_bristles(2, f));
  for (const KroneckerModule& b : all) saturated += is_saturated(b);
  rec.expect("bristles-saturated", "bristles B-saturated", "no bristle is B-saturated", count_of(0, all.size()),
             count_of(saturated, all.size()));
}

void record_cover(const CoverVerification& v, const std::string& claim, Recorder& rec) {
  for (const EqualityCheck& c : v.checks) rec.expect(c.key, c.statement, claim, "holds", c.holds ? "holds" : "fails");
}

void cover_equalities(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const CoverVerification v = verify_cover_equalities(n, f, cfg.attempts);
  record_cover(v, "I_2 is generated by B0, read off the universal cover", rec);

  std::vector<std::size_t> per_type;
  for (const auto& [name, count] : v.bristles_per_type) per_type.push_back(count);
  rec.expect("bookkeeping.counts", "bristles per type", "n-1 bristles of each of the n+1 types",
             all_equal(n - 1, n + 1), summarize(per_type));
  rec.expect("bookkeeping.sum", "bristles in total", "(n+1)(n-1) bristles in total", str((n + 1) * (n - 1)),
             str(v.total_bristles));

  const CoverRep ball = build_ball_rep(n, f);
  const PushDown pd = push_down(ball);
  std::size_t leaves = 0, iso = 0;
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == j) continue;
      ++leaves;
      const SubmodulePair sub = push_down_sub(ball, pd, leaf_projective(ball, j, i));
      iso += find_isomorphism(submodule_as_module(pd.module, sub), bristle(bristle_point(n, f, i)), cfg.attempts,
                              cfg.seed)
                 .status == IsoResult::Status::verified_iso;
    }
  rec.expect("leaves", "pi(P(x(j,i))) = B(i)", "each leaf x(j,i) contributes a copy of B(i)",
             count_of(n * (n - 1), n * (n - 1)), count_of(iso, leaves));
}

void tau_b1_cover(const ScenarioConfig& cfg, Recorder& rec) {
  record_cover(verify_tau_bristle_cover(cfg.n, *cfg.field, cfg.attempts),
               "tau B(1) is generated by B1', read off the universal cover", rec);
}

void mu_ext(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const KroneckerModule b1 = bristle(bristle_point(n, f, 1));
  const KroneckerModule mu = push_down(build_mu_bristle_rep(n, f)).module;

  const DimensionVector tau = coxeter_apply({1, 1}, n, 1);
  rec.expect("dims", "dim mu(B(1))", "dim mu(B) = dim tau B + dim B", DimensionVector{tau.a + 1, tau.b + 1}.to_string(),
             mu.dims().to_string());

  const CoverRep ball = build_ball_rep(n, f);
  const PushDown pd = push_down(ball);
  const SubmodulePair outer = push_down_sub(ball, pd, mu_bristle_sub(ball));
  const SubmodulePair inner = push_down_sub(ball, pd, tau_bristle_sub(ball));
  const bool nested = submodule_contains(outer, inner);
  rec.expect("contains-tau", "pi(X') inside pi(X'')", "mu(B) is an extension of B by tau B", str(true), str(nested));
  if (nested) {
    const Quotient qt = quotient(pd.module, inner);
    const SubmodulePair image{image_of(qt.projection.f1, outer.u1), image_of(qt.projection.f2, outer.u2)};
    rec.expect("factor", "pi(X'')/pi(X') = B(1)", "mu(B) is an extension of B by tau B", "verified-iso",
               iso_status(submodule_as_module(qt.module, image), b1, cfg));
  }

  rec.expect("ext.b1-mu", "dim Ext^1(B(1), mu(B(1)))", "dim Ext^1(B, mu B) = n-1", str(n - 1), str(ext1_dim(b1, mu)));
  rec.expect("ext-resolution.b1-mu", "dim Ext^1(B(1), mu(B(1))) (resolution)", "dim Ext^1(B, mu B) = n-1", str(n - 1),
             str(ext1_dim_via_resolution(b1, mu)));
  rec.expect("mu-bristled", "mu(B(1)) bristled", "mu(B) cannot be bristled", str(false), str(is_bristled(mu)));

  std::vector<std::size_t> self;
  const auto all = bristle_modules(enumerate_bristles(n, f));
  for (const KroneckerModule& b : all) self.push_back(ext1_dim(b, b));
  rec.expect("ext.self", "dim Ext^1(B, B)", "dim Ext^1(B, B) = n-1 for every bristle", all_equal(n - 1, all.size()),
             summarize(self));
}

void saturated_faithful(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const Rng root(cfg.seed);
  std::size_t found = 0, unfaithful = 0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    Rng rng = root.split(k);
    const std::size_t a = rng.between(1, 6), b = rng.between(1, 4);
    const KroneckerModule m = random_module(n, f, a, b, rng);
    if (end_dim(m) != 1 || !is_saturated(m)) continue;
    ++found;
    unfaithful += !is_faithful(m);
  }
  const std::string claim = "a B-saturated brick is simple or faithful";
  const std::string expected = "0 not faithful";
  const std::string computed = str(unfaithful) + " not faithful among " + str(found) + " found in " +
                               str(cfg.samples) + " samples";
  if (found == 0)
    rec.inconclusive("faithful", "saturated non-simple bricks are faithful", claim, expected, computed);
  else
    rec.expect("faithful",
               "saturated non-simple bricks are faithful (" + str(found) + " of " + str(cfg.samples) + " samples)",
               claim, expected, unfaithful == 0 ? expected : computed);
}

void annihilated_lemma(const ScenarioConfig& cfg, Recorder& rec) {
  constexpr std::size_t samples = 100;
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const KroneckerModule b1 = bristle(bristle_point(n, f, 1));
  const Rng root(cfg.seed);
  std::size_t violations = 0, disagreements = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    Rng rng = root.split(k);
    const std::size_t a = rng.between(0, 5), b = rng.between(0, 4);
    std::vector<Matrix> alphas = random_module(n, f, a, b, rng).alphas();
    alphas.back() = Matrix::zeros(f, b, a);
    const KroneckerModule m(n, f, a, b, std::move(alphas));
    const std::size_t e = ext1_dim(b1, m);
    violations += e < m.dim2();
    disagreements += e != ext1_dim_via_resolution(b1, m);
  }
  const std::string claim = "alpha_n M = 0 implies dim Ext^1(B(1), M) >= dim M_2";
  rec.expect("inequality", "dim Ext^1(B(1), M) >= dim M_2", claim, count_of(0, samples) + " violate",
             count_of(violations, samples) + " violate");
  rec.expect("oracle", "Euler-form and resolution Ext agree", claim, count_of(0, samples) + " disagree",
             count_of(disagreements, samples) + " disagree");
}

void cover_not_bristled(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const CoverRep ball = build_ball_rep(n, f);
  std::vector<std::size_t> homs;
  for (std::size_t i = 1; i <= n; ++i) homs.push_back(cover_hom_dim(cover_bristle(n, f, tree_root(), i), ball));
  rec.expect("hom-center", "dim Hom(B_i, X)", "no bristle at the centre maps nonzero into X", all_equal(0, n),
             summarize(homs));
  rec.expect("ball-bristled", "X bristled", "the cover representation X is not bristled", str(false),
             str(cover_sub_equal(ball, cover_max_bristled(ball), cover_whole(ball))));
  rec.expect("pushdown-bristled", "pi(X) bristled", "the push-down pi(X) = I_2 is bristled", str(true),
             str(is_bristled(push_down(ball).module)));
  rec.expect("star-bristled", "injective star bristled", "the injective representation of a sink is bristled",
             str(true), str(cover_is_bristled(injective_star(n, f, tree_y(1)))));
}

void bristled_layers(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  std::vector<std::pair<std::string, KroneckerModule>> fixtures;
  if (n == 3) fixtures.emplace_back("zigzag", zigzag_bristled_fixture(f));
  for (std::size_t t = 0; t <= cfg.tmax; ++t) fixtures.emplace_back("I_" + str(t), preinjective(n, t, f));
  for (const BristlePoint& p : canonical_set(CanonicalSet::b0, n, f)) fixtures.emplace_back("B" + p.to_string(), bristle(p));

  for (const auto& [name, m] : fixtures) {
    const Layers l = layers(m);
    const bool bristled = is_bristled(m);
    const bool brick = end_dim(m) == 1;
    rec.expect("fixture." + name, name + " bristled brick", "the fixture is an indecomposable bristled module",
               "bristled brick", std::string(bristled ? "bristled" : "not bristled") + (brick ? " brick" : " non-brick"));
    if (!bristled) continue;
    const std::int64_t top = l.top_dims.a + l.top_dims.b, soc = l.soc_dims.a + l.soc_dims.b;
    rec.expect("top-soc." + name, "|top " + name + "| >= |soc " + name + "|", "|top M| >= |soc M| for bristled M",
               str(true), str(top >= soc));
    rec.expect("socle." + name, "soc " + name + " homogeneous", "a bristled indecomposable has homogeneous socle",
               str(true), str(l.soc_dims.a == 0 || l.soc_dims.b == 0));
  }
  if (n == 3)
    rec.expect("fixture.star", "star bristled", "the second (3,2) fixture is not bristled", str(false),
               str(is_bristled(star_unbristled_fixture(f))));
}

/// alpha_i = [[lambda_i, c_i], [0, D_i]] on k + k^m, with B(lambda) the
/// submodule and D_i the diagonal of the quotient bristles.
KroneckerModule extension_by_bristles(const BristlePoint& sub, const std::vector<BristlePoint>& quotient_points,
                                      Rng& rng) {
  const FieldSpec f = sub.field();
  const std::size_t n = sub.n(), m = quotient_points.size(), d = m + 1;
  std::vector<Matrix> alphas;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = Matrix::zeros(f, d, d);
    a.set(0, 0, sub.coords()[i]);
    for (std::size_t k = 0; k < m; ++k) {
      a.set(k + 1, k + 1, quotient_points[k].coords()[i]);
      a.set(0, k + 1, rng.scalar(f));
    }
    alphas.push_back(std::move(a));
  }
  return KroneckerModule(n, f, d, d, std::move(alphas));
}

void indecomposable_generator(const ScenarioConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n;
  const FieldSpec f = *cfg.field;
  const BristlePoint p1 = bristle_point(n, f, 1);
  const auto quotient_points = canonical_set(CanonicalSet::b0_prime, n, f);
  const Rng root(cfg.seed);

  std::optional<KroneckerModule> found;
  std::size_t tries = 0;
  for (; tries < cfg.attempts && !found; ++tries) {
    Rng rng = root.split(tries);
    KroneckerModule x = extension_by_bristles(p1, quotient_points, rng);
    if (end_dim(x) == 1) found = std::move(x);
  }
  const std::string claim = "an indecomposable regular module generates all preinjective modules";
  if (!found) {
    rec.inconclusive("brick", "extension with End = k", claim, "found",
                     "none in " + str(cfg.attempts) + " extension classes (not a disproof)");
    return;
  }
  const KroneckerModule& x = *found;
  const auto nn = static_cast<std::int64_t>(n);
  rec.expect("dims", "dim of the extension", claim, DimensionVector{nn + 2, nn + 2}.to_string(), x.dims().to_string());
  rec.expect("brick", "extension with End = k (attempt " + str(tries) + ")", claim, "End dim 1",
             "End dim " + str(end_dim(x)));
  const std::int64_t a = x.dims().a, b = x.dims().b;
  rec.expect("regular", "Tits form of dim <= 0", claim, str(true), str(a * a + b * b - nn * a * b <= 0));

  SubmodulePair sub{Subspace::span(f, x.dim1(), {unit_vector(f, x.dim1(), 0)}),
                    Subspace::span(f, x.dim2(), {unit_vector(f, x.dim2(), 0)})};
  rec.expect("sub-b1", "B(1) is a submodule", claim, "verified-iso",
             is_submodule(x, sub) ? iso_status(submodule_as_module(x, sub), bristle(p1), cfg) : "not a submodule");
  rec.expect("factor", "factor is the sum of B0'", claim, "verified-iso",
             iso_status(quotient(x, sub).module, direct_sum(bristle_modules(quotient_points)), cfg));
  for (std::size_t t = 0; t <= cfg.tmax; ++t)
    rec.expect("generates.t" + str(t), "generates I_" + str(t), claim, str(true),
               str(is_generated_by({x}, preinjective(n, t, f))));
}

// ---------------------------------------------------------------------------

struct Entry {
  ScenarioInfo info;
  void (*run)(const ScenarioConfig&, Recorder&);
  std::size_t default_n;
  std::size_t min_n;
  std::size_t max_n;  // 0: unbounded
  std::uint64_t default_q;
  bool finite_only;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"main-theorem-a", "every preinjective I_t is generated by B0 and is B-saturated"}, main_theorem_a, 3, 3, 0, 5,
       true},
      {{"main-theorem-b-bristle-orbits",
        "tau^t B is generated by B0 for t >= 1 and B-saturated for t >= 2; tau B is not B-saturated"},
       bristle_orbits, 3, 3, 0, 5, true},
      {{"optimality-I3", "no set of n+1 bristles generates I_3"}, optimality_i3, 3, 3, 0, 2, true},
      {{"opt-taub1", "B1' generates tau B(1) and B(1) has to belong to any generating (n+1)-set"}, opt_taub1, 3, 3, 0,
       2, true},
      {{"n2-generation", "for n = 2, I_t is generated by B_J if and only if |J| >= t+1"}, n2_generation, 2, 2, 2, 2,
       true},
      {{"n2-classification", "for n = 2, I_t is bristled iff t <= q; S(2) and the bristles are not B-saturated"},
       n2_classification, 2, 2, 2, 2, true},
      {{"cover-equalities", "I_2 is generated by (n+1)(n-1) bristles, n-1 of each type in B0'"}, cover_equalities, 3, 3,
       0, 5, false},
      {{"tau-b1-cover", "pi(X') is tau B(1) and contains B(1)"}, tau_b1_cover, 3, 3, 0, 5, false},
      {{"mu-ext", "dim Ext^1(B, mu B) = n-1 and mu(B) is not bristled"}, mu_ext, 3, 3, 0, 5, true},
      {{"saturated-faithful", "a B-saturated brick is simple or faithful"}, saturated_faithful, 3, 2, 0, 5, true},
      {{"annihilated-lemma", "alpha_n M = 0 implies dim Ext^1(B(1), M) >= dim M_2"}, annihilated_lemma, 3, 2, 0, 5,
       false},
      {{"cover-not-bristled", "cover preinjectives such as the ball representation are not bristled"},
       cover_not_bristled, 3, 3, 0, 5, true},
      {{"bristled-layers", "a bristled indecomposable has |top| >= |soc| and homogeneous socle"}, bristled_layers, 3, 3,
       0, 5, true},
      {{"indecomposable-generator", "an indecomposable regular module generates all preinjective modules"},
       indecomposable_generator, 3, 3, 0, 5, false},
  };
  return table;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = [] {
    std::vector<ScenarioInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

Report run_scenario(const ScenarioConfig& request) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const Entry& e) { return e.info.name == request.scenario; });
  if (it == table.end()) throw ScenarioError("unknown scenario '" + request.scenario + "'");
  const Entry& entry = *it;

  ScenarioConfig cfg = request;
  if (cfg.module_path) {
    if (entry.run != bristle_orbits) throw ScenarioError("--module is only used by main-theorem-b-bristle-orbits");
    const KroneckerModule m = read_module_path(*cfg.module_path);
    if (cfg.n != 0 && cfg.n != m.n()) throw ScenarioError("--n does not match the module file");
    if (cfg.field && !(*cfg.field == m.field())) throw ScenarioError("the field does not match the module file");
    cfg.n = m.n();
    cfg.field = m.field();
  }
  if (cfg.n == 0) cfg.n = entry.default_n;
  if (!cfg.field) cfg.field = FieldSpec::prime(entry.default_q);
  if (cfg.n < entry.min_n || (entry.max_n != 0 && cfg.n > entry.max_n))
    throw ScenarioError(entry.info.name + " needs n " +
                        (entry.max_n == entry.min_n ? "= " + str(entry.min_n) : ">= " + str(entry.min_n)));
  if (entry.finite_only && !cfg.field->is_finite())
    throw ScenarioError(entry.info.name + " enumerates bristles and needs a finite field");

  Report report;
  report.config = cfg;
  Recorder rec(report.checks);
  const auto start = Clock::now();
  entry.run(cfg, rec);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace kronbrist
