// Counterexample search: the same vocabulary as the claim catalog, aimed
// the other way. Scans the domain in canonical order (n ascending, then
// topology index, then relation code) and stops at the first instance that
// satisfies every hypothesis and fails the conclusion. When nothing turns
// up, the number of enumerated instances is the exhaustion certificate.
#include <algorithm>

#include "engine.hpp"

namespace topo {

namespace {

using namespace engine;

struct SearchPlan {
  std::vector<Pred> space_hyps, rel_hyps;
  PredFn concl_pred = nullptr;
  ConclFn concl_fn = nullptr;
};

SearchPlan plan_for(const std::vector<std::string>& hypotheses,
                    const std::string& conclusion, bool no_topology) {
  const auto& preds = predicate_registry();
  SearchPlan plan;
  for (const std::string& h : hypotheses) {
    auto it = preds.find(h);
    if (it == preds.end()) throw UnknownClaim("unknown predicate: " + h);
    if (no_topology && it->second.cost != 0)
      throw PreconditionUnmet("hypothesis " + h +
                              " needs a topology; drop --no-topology");
    if (it->second.cost == 1)
      plan.space_hyps.push_back(it->second);
    else
      plan.rel_hyps.push_back(it->second);
  }
  std::stable_sort(
      plan.rel_hyps.begin(), plan.rel_hyps.end(),
      [](const Pred& a, const Pred& b) { return a.cost < b.cost; });
  if (auto it = preds.find(conclusion); it != preds.end()) {
    if (no_topology && it->second.cost != 0)
      throw PreconditionUnmet("conclusion " + conclusion +
                              " needs a topology; drop --no-topology");
    plan.concl_pred = it->second.fn;
    return plan;
  }
  if (auto it = conclusion_registry().find(conclusion);
      it != conclusion_registry().end()) {
    if (no_topology)
      throw PreconditionUnmet("conclusion " + conclusion +
                              " needs a topology; drop --no-topology");
    plan.concl_fn = it->second;
    return plan;
  }
  throw UnknownClaim("unknown conclusion: " + conclusion);
}

bool conclusion_fails(const SearchPlan& plan, Ctx& c) {
  if (plan.concl_pred) return !plan.concl_pred(c);
  std::vector<int> wit;
  std::string note;
  return !plan.concl_fn(c, wit, note);
}

bool counterexample_here(const SearchPlan& plan, Ctx& c) {
  for (const Pred& p : plan.rel_hyps)
    if (!p.fn(c)) return false;
  return conclusion_fails(plan, c);
}

}  // namespace

SearchResult search_counterexample(const std::vector<std::string>& hypotheses,
                                   const std::string& conclusion, int max_n,
                                   const SearchDomain& dom) {
  if (dom.connected_only && dom.disconnected_only)
    throw PreconditionUnmet(
        "connected-only and disconnected-only exclude each other");
  if (max_n < 1 || max_n > 4)
    throw SizeLimit("counterexample search covers 1 to 4 points");
  const SearchPlan plan = plan_for(hypotheses, conclusion, dom.no_topology);
  SearchResult res;

  if (dom.no_topology) {
    const int n = max_n;
    const RelTable& tab = rel_table(n);
    for (std::uint64_t code = 0; code < tab.rows.size(); ++code) {
      ++res.enumerated;
      Ctx c;
      c.e = &tab.rows[code];
      c.r = Relation::from_code(n, code);
      if (counterexample_here(plan, c)) {
        res.found = true;
        res.n = n;
        res.rel_code = code;
        res.relation = c.r;
        return res;
      }
    }
    return res;
  }

  for (int n = 1; n <= max_n; ++n) {
    const RelTable& tab = rel_table(n);
    const std::uint64_t ncodes = tab.rows.size();
    const TopologyEnumerator topos(n);
    for (std::size_t t = 0; t < topos.count(); ++t) {
      const SpaceCtx s = make_space_ctx(topos.at(t));
      if (dom.connected_only && !s.connected) continue;
      if (dom.disconnected_only && s.connected) continue;
      res.enumerated += ncodes;
      bool space_ok = true;
      {
        Ctx c;
        c.s = &s;
        for (const Pred& p : plan.space_hyps)
          if (!p.fn(c)) {
            space_ok = false;
            break;
          }
      }
      if (!space_ok) continue;
      for (std::uint64_t code = 0; code < ncodes; ++code) {
        Ctx c = make_ctx(s, &tab.rows[code], Relation::from_code(n, code));
        if (counterexample_here(plan, c)) {
          res.found = true;
          res.n = n;
          res.topo_index = static_cast<std::int64_t>(t);
          res.rel_code = code;
          res.space = topos.at(t);
          res.relation = c.r;
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace topo
