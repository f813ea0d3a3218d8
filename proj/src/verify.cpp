// The sweep driver. One claim, one exhaustive pass over its domain, split
// into shards by topology index (relation code when no topology is in
// play). Shards accumulate independently and merge by summing counters and
// taking the first violations in (n, topology, code, second code) order, so
// the report is byte-identical for any shard count.
#include <algorithm>
#include <chrono>
#include <map>
#include <thread>
#include <utility>

#include "engine.hpp"

namespace topo {

namespace {

using namespace engine;

constexpr std::size_t kViolationCap = 100;

// Keeping exactly the cap per shard loses nothing: a violation inside the
// global first cap is preceded by fewer than cap violations of its own
// shard, hence sits inside that shard's first cap.
struct Acc {
  std::uint64_t instances = 0, hits = 0, lhs_hits = 0, rhs_hits = 0;
  std::uint64_t violation_count = 0;
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_n;
  std::vector<Violation> violations;
  bool timed_out = false;

  void take(Violation v) {
    ++violation_count;
    if (violations.size() < kViolationCap) violations.push_back(std::move(v));
  }
};

struct Deadline {
  bool enabled = false;
  std::chrono::steady_clock::time_point end;

  bool expired() const {
    return enabled && std::chrono::steady_clock::now() >= end;
  }
};

Violation base_violation(int n, std::int64_t topo, std::uint64_t code,
                         bool has_rel) {
  Violation v;
  v.n = n;
  v.topo_index = topo;
  v.rel_code = code;
  v.has_rel = has_rel;
  return v;
}

void eval_conclusion(const ResolvedClaim& rc, Ctx& c, int n,
                     std::int64_t topo, std::uint64_t code, bool has_rel,
                     Acc& a) {
  if (rc.lhs) {
    const bool l = rc.lhs(c), r = rc.rhs(c);
    if (l) ++a.lhs_hits;
    if (r) ++a.rhs_hits;
    if (l == r) return;
    Violation v = base_violation(n, topo, code, has_rel);
    const std::string& holds =
        l ? rc.spec->bicond_lhs : rc.spec->bicond_rhs;
    const std::string& fails =
        l ? rc.spec->bicond_rhs : rc.spec->bicond_lhs;
    std::string why;
    explain_predicate(fails, c, v.witness, why);
    v.note = holds + " holds but " + why;
    a.take(std::move(v));
    return;
  }
  Violation v = base_violation(n, topo, code, has_rel);
  bool ok;
  if (rc.concl_pred) {
    ok = rc.concl_pred(c);
    if (!ok) explain_predicate(rc.concl_pred_name, c, v.witness, v.note);
  } else {
    ok = rc.conclusion(c, v.witness, v.note);
  }
  if (!ok) a.take(std::move(v));
}

// Relation-level hypotheses, then hit bookkeeping, then the conclusion.
void eval_instance(const ResolvedClaim& rc, Ctx& c, int n, std::int64_t topo,
                   std::uint64_t code, bool has_rel, Acc& a,
                   std::uint64_t& hits_n) {
  for (const Pred& p : rc.rel_hyps)
    if (!p.fn(c)) return;
  ++a.hits;
  ++hits_n;
  eval_conclusion(rc, c, n, topo, code, has_rel, a);
}

bool space_hyps_pass(const ResolvedClaim& rc, const SpaceCtx& s) {
  Ctx c;
  c.s = &s;
  for (const Pred& p : rc.space_hyps)
    if (!p.fn(c)) return false;
  return true;
}

void sweep_pair(const ResolvedClaim& rc, int max_n, int shard, int jobs,
                const Deadline& dl, Acc& a) {
  for (int n = 1; n <= max_n && !a.timed_out; ++n) {
    const RelTable& tab = rel_table(n);
    const std::uint64_t ncodes = tab.rows.size();
    const TopologyEnumerator topos(n);
    auto& [inst_n, hits_n] = a.by_n[n];
    for (std::size_t t = shard; t < topos.count(); t += jobs) {
      if (dl.expired()) {
        a.timed_out = true;
        break;
      }
      a.instances += ncodes;
      inst_n += ncodes;
      const SpaceCtx s = make_space_ctx(topos.at(t));
      if (!space_hyps_pass(rc, s)) continue;
      for (std::uint64_t code = 0; code < ncodes; ++code) {
        if ((code & 4095u) == 0 && dl.expired()) {
          a.timed_out = true;
          break;
        }
        Ctx c = make_ctx(s, &tab.rows[code], Relation::from_code(n, code));
        eval_instance(rc, c, n, static_cast<std::int64_t>(t), code, true, a,
                      hits_n);
      }
      if (a.timed_out) break;
    }
  }
}

void sweep_relation_only(const ResolvedClaim& rc, int n, int shard, int jobs,
                         const Deadline& dl, Acc& a) {
  const RelTable& tab = rel_table(n);
  const std::uint64_t ncodes = tab.rows.size();
  auto& [inst_n, hits_n] = a.by_n[n];
  for (std::uint64_t code = shard; code < ncodes;
       code += static_cast<std::uint64_t>(jobs)) {
    if ((code & 1023u) == 0 && dl.expired()) {
      a.timed_out = true;
      return;
    }
    ++a.instances;
    ++inst_n;
    Ctx c;
    c.e = &tab.rows[code];
    c.r = Relation::from_code(n, code);
    eval_instance(rc, c, n, -1, code, true, a, hits_n);
  }
}

void sweep_space_only(const ResolvedClaim& rc, int max_n, int shard, int jobs,
                      const Deadline& dl, Acc& a) {
  for (int n = 1; n <= max_n && !a.timed_out; ++n) {
    const TopologyEnumerator topos(n);
    auto& [inst_n, hits_n] = a.by_n[n];
    for (std::size_t t = shard; t < topos.count(); t += jobs) {
      if (dl.expired()) {
        a.timed_out = true;
        break;
      }
      ++a.instances;
      ++inst_n;
      const SpaceCtx s = make_space_ctx(topos.at(t));
      if (!space_hyps_pass(rc, s)) continue;
      ++a.hits;
      ++hits_n;
      Ctx c;
      c.s = &s;
      Violation v = base_violation(n, static_cast<std::int64_t>(t), 0, false);
      if (!rc.conclusion(c, v.witness, v.note)) a.take(std::move(v));
    }
  }
}

void sweep_pairwise(const ResolvedClaim& rc, int max_n, int shard, int jobs,
                    const Deadline& dl, Acc& a) {
  for (int n = 1; n <= max_n && !a.timed_out; ++n) {
    const RelTable& tab = rel_table(n);
    const std::uint64_t ncodes = tab.rows.size();
    const TopologyEnumerator topos(n);
    auto& [inst_n, hits_n] = a.by_n[n];
    for (std::size_t t = shard; t < topos.count(); t += jobs) {
      if (dl.expired()) {
        a.timed_out = true;
        break;
      }
      a.instances += ncodes * ncodes;
      inst_n += ncodes * ncodes;
      const SpaceCtx s = make_space_ctx(topos.at(t));
      if (!space_hyps_pass(rc, s)) continue;
      std::vector<std::uint64_t> pass;
      for (std::uint64_t code = 0; code < ncodes; ++code) {
        if ((code & 4095u) == 0 && dl.expired()) {
          a.timed_out = true;
          break;
        }
        Ctx c = make_ctx(s, &tab.rows[code], Relation::from_code(n, code));
        bool ok = true;
        for (const Pred& p : rc.pair_filter)
          if (!p.fn(c)) {
            ok = false;
            break;
          }
        if (ok) pass.push_back(code);
      }
      if (a.timed_out) break;
      std::uint64_t step = 0;
      for (std::uint64_t c1 : pass) {
        Ctx c = make_ctx(s, &tab.rows[c1], Relation::from_code(n, c1));
        for (std::uint64_t c2 : pass) {
          if ((++step & 4095u) == 0 && dl.expired()) {
            a.timed_out = true;
            break;
          }
          ++a.hits;
          ++hits_n;
          Violation v = base_violation(n, static_cast<std::int64_t>(t), c1,
                                       true);
          v.rel2_code = c2;
          v.has_rel2 = true;
          if (!rc.pair_conclusion(c, Relation::from_code(n, c2), v.witness,
                                  v.note))
            a.take(std::move(v));
        }
        if (a.timed_out) break;
      }
    }
  }
}

void run_shard(const ResolvedClaim& rc, int max_n, int shard, int jobs,
               const Deadline& dl, Acc& a) {
  switch (rc.spec->domain) {
    case ClaimDomain::pair:
      return sweep_pair(rc, max_n, shard, jobs, dl, a);
    case ClaimDomain::relation_only:
      return sweep_relation_only(rc, max_n, shard, jobs, dl, a);
    case ClaimDomain::space_only:
      return sweep_space_only(rc, max_n, shard, jobs, dl, a);
    case ClaimDomain::pairwise:
      return sweep_pairwise(rc, max_n, shard, jobs, dl, a);
  }
}

bool violation_before(const Violation& x, const Violation& y) {
  if (x.n != y.n) return x.n < y.n;
  if (x.topo_index != y.topo_index) return x.topo_index < y.topo_index;
  if (x.rel_code != y.rel_code) return x.rel_code < y.rel_code;
  return x.rel2_code < y.rel2_code;
}

VerificationOutcome merge(const ClaimSpec& spec, std::vector<Acc>& accs) {
  VerificationOutcome out;
  out.claim = spec.id;
  out.expected_vacuous = spec.expected_vacuous;
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> by_n;
  for (Acc& a : accs) {
    out.instances += a.instances;
    out.hits += a.hits;
    out.lhs_hits += a.lhs_hits;
    out.rhs_hits += a.rhs_hits;
    out.violation_count += a.violation_count;
    out.partial = out.partial || a.timed_out;
    for (const auto& [n, counts] : a.by_n) {
      by_n[n].first += counts.first;
      by_n[n].second += counts.second;
    }
    out.violations.insert(out.violations.end(),
                          std::make_move_iterator(a.violations.begin()),
                          std::make_move_iterator(a.violations.end()));
  }
  for (const auto& [n, counts] : by_n)
    out.by_n.push_back({n, counts.first, counts.second});
  std::sort(out.violations.begin(), out.violations.end(), violation_before);
  if (out.violations.size() > kViolationCap)
    out.violations.resize(kViolationCap);
  out.violations_truncated = out.violation_count > out.violations.size();
  return out;
}

// Domain bounds: relation tables stop at four points, topology enumeration
// at five. A requested bound past the wall is an error, not a clamp.
int bounded_max_n(const ClaimSpec& spec, const VerifyOptions& opt) {
  const int wall = spec.domain == ClaimDomain::space_only ? 5 : 4;
  const int n = opt.max_n > 0 ? opt.max_n : spec.max_n;
  if (n < 1 || n > wall)
    throw SizeLimit("claim " + spec.id + " cannot sweep n = " +
                    std::to_string(n) + "; the domain bound is " +
                    std::to_string(wall));
  return n;
}

void check_relation_only_vocabulary(const ClaimSpec& spec) {
  const auto& preds = engine::predicate_registry();
  std::vector<std::string> names = spec.hypotheses;
  if (!spec.bicond_lhs.empty()) {
    names.push_back(spec.bicond_lhs);
    names.push_back(spec.bicond_rhs);
  } else if (preds.count(spec.conclusion)) {
    names.push_back(spec.conclusion);
  } else {
    throw PreconditionUnmet("claim " + spec.id +
                            " has no topology, so its conclusion must be a "
                            "relation-level predicate");
  }
  for (const std::string& name : names)
    if (preds.at(name).cost != 0)
      throw PreconditionUnmet("claim " + spec.id + " has no topology, but " +
                              name + " needs one");
}

// Warm the per-n caches before shards spawn so threads only read them.
void warm_caches(const ClaimSpec& spec, int max_n) {
  if (spec.domain != ClaimDomain::space_only)
    for (int n = spec.domain == ClaimDomain::relation_only ? max_n : 1;
         n <= max_n; ++n)
      rel_table(n);
  if (spec.domain != ClaimDomain::relation_only)
    for (int n = 1; n <= max_n; ++n) TopologyEnumerator{n};
}

}  // namespace

VerificationOutcome verify(const ClaimSpec& claim, const VerifyOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const ResolvedClaim rc = engine::resolve(claim);
  const int max_n = bounded_max_n(claim, opt);
  if (claim.domain == ClaimDomain::relation_only)
    check_relation_only_vocabulary(claim);
  warm_caches(claim, max_n);

  Deadline dl;
  if (opt.budget_seconds > 0) {
    dl.enabled = true;
    dl.end = start + std::chrono::duration_cast<
                         std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(opt.budget_seconds));
  }

  const int jobs = std::max(1, opt.jobs);
  std::vector<Acc> accs(jobs);
  if (jobs == 1) {
    run_shard(rc, max_n, 0, 1, dl, accs[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int s = 0; s < jobs; ++s)
      pool.emplace_back(run_shard, std::cref(rc), max_n, s, jobs,
                        std::cref(dl), std::ref(accs[s]));
    for (std::thread& th : pool) th.join();
  }

  VerificationOutcome out = merge(claim, accs);
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (out.partial) throw BudgetExceeded(std::move(out));
  return out;
}

std::vector<VerificationOutcome> verify_set(
    const std::vector<ClaimSpec>& claims, const VerifyOptions& opt) {
  std::vector<VerificationOutcome> out;
  out.reserve(claims.size());
  for (const ClaimSpec& c : claims) out.push_back(verify(c, opt));
  return out;
}

}  // namespace topo
