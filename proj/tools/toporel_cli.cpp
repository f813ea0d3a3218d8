// toporel: decision procedures for finite topological spaces and binary
// relations. Six subcommands: check a (space, relation) pair, enumerate
// topologies, verify a catalog claim exhaustively, emit a sharpness
// witness, search for counterexamples, and run the pinned fixtures.
//
// Reports are JSON on standard output with stable key order. The digest
// covers everything except the trailing timing block, so two runs of the
// same command agree on the digest no matter the wall clock or job count.
// Exit codes: 0 success or verified, 1 violation or counterexample found,
// 2 input or usage error.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "topo/json_io.hpp"
#include "topo/theoremlab.hpp"

namespace {

using nlohmann::ordered_json;
using namespace topo;

const auto g_start = std::chrono::steady_clock::now();

double elapsed_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       g_start)
      .count();
}

int emit(ordered_json payload, int exit_code, int jobs = 0) {
  payload["digest"] = hex64(fnv1a64(payload.dump()));
  ordered_json timing;
  timing["wall_seconds"] = elapsed_seconds();
  if (jobs > 0) timing["jobs"] = jobs;
  payload["timing"] = std::move(timing);
  std::cout << payload.dump(2) << "\n";
  return exit_code;
}

// ---- witness rendering ----

ordered_json labels_of(Mask m, const std::vector<std::string>& labels) {
  return ordered_json(mask_labels(m, labels));
}

ordered_json verdict_json(const Verdict& v,
                          const std::vector<std::string>& labels) {
  ordered_json j;
  j["holds"] = v.holds;
  if (v.wlen > 0) {
    ordered_json w = ordered_json::array();
    for (int i = 0; i < v.wlen; ++i) w.push_back(labels[v.w[i]]);
    j["witness"] = std::move(w);
  }
  return j;
}

// For verdicts whose last witness slot selects a section family.
ordered_json kinded_json(const Verdict& v,
                         const std::vector<std::string>& labels,
                         const std::vector<std::string>& kinds) {
  ordered_json j;
  j["holds"] = v.holds;
  if (v.wlen > 0) {
    ordered_json w = ordered_json::array();
    for (int i = 0; i + 1 < v.wlen; ++i) w.push_back(labels[v.w[i]]);
    j["witness"] = std::move(w);
    j["family"] = kinds[v.w[v.wlen - 1]];
  }
  return j;
}

ordered_json pairs_json(const Relation& r,
                        const std::vector<std::string>& labels) {
  ordered_json out = ordered_json::array();
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (r.at(x, y)) out.push_back({labels[x], labels[y]});
  return out;
}

const std::vector<std::string> kContinuityKinds = {
    "closed_upper_r", "closed_lower_r", "open_upper_p", "open_lower_p"};
const std::vector<std::string> kSectionKinds = {"upper", "lower"};
const std::vector<std::string> kCoveringKinds = {
    "covering_lower_upper", "covering_lower_lower", "covering_upper_upper",
    "covering_upper_lower"};

// ---- check ----

ordered_json space_json(const FiniteSpace& sp,
                        const std::vector<std::string>& labels) {
  ordered_json j;
  j["points"] = labels;
  ordered_json opens = ordered_json::array();
  for (Mask m : sp.opens) opens.push_back(labels_of(m, labels));
  j["opens"] = std::move(opens);
  ordered_json nbhd;
  for (int x = 0; x < sp.n; ++x)
    nbhd[labels[x]] = labels_of(sp.min_nbhd[x], labels);
  j["min_neighborhoods"] = std::move(nbhd);
  ordered_json comps = ordered_json::array();
  for (Mask b : components(sp).blocks) comps.push_back(labels_of(b, labels));
  j["components"] = std::move(comps);
  ordered_json pcomps = ordered_json::array();
  for (Mask b : path_components(sp).blocks)
    pcomps.push_back(labels_of(b, labels));
  j["path_components"] = std::move(pcomps);
  j["connected"] = is_connected(sp);
  j["discrete"] = sp.opens.size() == (std::size_t(1) << sp.n);
  j["hausdorff"] = is_hausdorff(sp);
  j["quasi_ordered"] = is_quasi_ordered(sp).yes;
  const PbpResult pbp = has_pbp(sp);
  ordered_json jp;
  jp["holds"] = pbp.holds;
  if (!pbp.holds) {
    jp["separated_pair"] =
        ordered_json::array({labels_of(pbp.a, labels), labels_of(pbp.b, labels)});
    jp["points"] = ordered_json::array({labels[pbp.x], labels[pbp.y]});
  }
  j["pbp"] = std::move(jp);
  return j;
}

ordered_json order_properties_json(const OrderPropertyVector& v,
                                   const std::vector<std::string>& labels) {
  ordered_json j;
  j["reflexive"] = verdict_json(v.reflexive, labels);
  j["complete"] = verdict_json(v.complete, labels);
  j["symmetric"] = verdict_json(v.symmetric, labels);
  j["asymmetric"] = verdict_json(v.asymmetric, labels);
  j["anti_symmetric"] = verdict_json(v.anti_symmetric, labels);
  j["non_trivial"] = verdict_json(v.non_trivial, labels);
  j["transitive"] = verdict_json(v.transitive, labels);
  j["negatively_transitive_p"] =
      verdict_json(v.negatively_transitive_p, labels);
  j["pp"] = verdict_json(v.pp, labels);
  j["ii"] = verdict_json(v.ii, labels);
  j["pi"] = verdict_json(v.pi, labels);
  j["ip"] = verdict_json(v.ip, labels);
  j["semi_transitive"] = verdict_json(v.semi_transitive, labels);
  j["pseudo_transitive_dual"] =
      verdict_json(v.pseudo_transitive_dual, labels);
  return j;
}

int cmd_check(const std::string& space_path, const std::string& rel_path,
              int k) {
  const std::string space_text = [&] {
    std::ifstream in(space_path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + space_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }();
  const std::string rel_text = [&] {
    std::ifstream in(rel_path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + rel_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }();
  const LabeledSpace ls = parse_space_text(space_text);
  const Relation r = parse_relation_text(rel_text, ls.labels);
  const FiniteSpace& sp = ls.space;
  const std::vector<std::string>& labels = ls.labels;

  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "check";
  ordered_json inputs;
  inputs["space"] = space_path;
  inputs["space_digest"] = hex64(fnv1a64(space_text));
  inputs["relation"] = rel_path;
  inputs["relation_digest"] = hex64(fnv1a64(rel_text));
  inputs["k"] = k;
  j["inputs"] = std::move(inputs);

  j["space"] = space_json(sp, labels);
  ordered_json jr;
  jr["pairs"] = pairs_json(r, labels);
  jr["code"] = r.code();
  j["relation"] = std::move(jr);

  const OrderPropertyVector v = order_properties(r);
  j["order_properties"] = order_properties_json(v, labels);

  const DerivedParts parts = derive_parts(r);
  ordered_json jd;
  jd["symmetric"] = pairs_json(parts.sym, labels);
  jd["strict"] = pairs_json(parts.strict, labels);
  jd["transpose"] = pairs_json(parts.transpose, labels);
  jd["complement"] = pairs_json(parts.complement, labels);
  jd["covering_lower"] = pairs_json(parts.covering_lower, labels);
  jd["covering_upper"] = pairs_json(parts.covering_upper, labels);
  if (parts.reflexive_hull)
    jd["reflexive_hull"] = pairs_json(*parts.reflexive_hull, labels);
  else
    jd["reflexive_hull"] = nullptr;
  j["derived_parts"] = std::move(jd);

  const ContinuityReport cont = continuity(sp, r);
  ordered_json jc;
  jc["closed_upper_r"] = verdict_json(cont.closed_upper_r, labels);
  jc["closed_lower_r"] = verdict_json(cont.closed_lower_r, labels);
  jc["open_upper_p"] = verdict_json(cont.open_upper_p, labels);
  jc["open_lower_p"] = verdict_json(cont.open_lower_p, labels);
  jc["closed_sections_r"] =
      kinded_json(cont.closed_sections_r, labels, kContinuityKinds);
  jc["open_sections_p"] =
      kinded_json(cont.open_sections_p, labels, kContinuityKinds);
  jc["continuous"] = kinded_json(cont.continuous, labels, kContinuityKinds);
  j["continuity"] = std::move(jc);

  const SectionConnectivityReport sec = section_connectivity(sp, r);
  ordered_json js;
  js["i_sections_connected"] =
      verdict_json(sec.i_sections_connected, labels);
  js["r_sections_connected"] =
      kinded_json(sec.r_sections_connected, labels, kSectionKinds);
  js["r_upper_path_connected"] =
      verdict_json(sec.r_upper_path_connected, labels);
  js["r_lower_path_connected"] =
      verdict_json(sec.r_lower_path_connected, labels);
  js["r_sections_path_connected"] =
      kinded_json(sec.r_sections_path_connected, labels, kSectionKinds);
  j["section_connectivity"] = std::move(js);

  const Partition comp = components(sp);
  const NontrivialityReport nt = nontriviality(sp, r, k, comp);
  ordered_json jn;
  jn["non_trivial"] = verdict_json(nt.non_trivial, {});
  ordered_json jcw;
  jcw["holds"] = nt.componentwise_non_trivial.holds;
  if (nt.componentwise_non_trivial.wlen > 0) {
    ordered_json cw = ordered_json::array();
    for (int i = 0; i < nt.componentwise_non_trivial.wlen; ++i)
      cw.push_back(
          labels_of(comp.blocks[nt.componentwise_non_trivial.w[i]], labels));
    jcw["components"] = std::move(cw);
  }
  jn["componentwise_non_trivial"] = std::move(jcw);
  jn["k"] = k;
  ordered_json jk;
  jk["holds"] = nt.k_non_trivial.holds;
  if (nt.k_non_trivial.holds && !nt.k_witness_m.empty()) {
    ordered_json m = ordered_json::array(), nn = ordered_json::array();
    for (int i : nt.k_witness_m) m.push_back(labels_of(comp.blocks[i], labels));
    for (int i : nt.k_witness_n)
      nn.push_back(labels_of(comp.blocks[i], labels));
    jk["m"] = std::move(m);
    jk["n"] = std::move(nn);
  }
  jn["k_non_trivial"] = std::move(jk);
  jn["strongly_non_trivial"] = verdict_json(nt.strongly_non_trivial, labels);
  j["nontriviality"] = std::move(jn);

  const RobustnessReport rob = robustness(sp, r);
  ordered_json jrb;
  jrb["fragile"] = verdict_json(rob.fragile, labels);
  jrb["flimsy"] = verdict_json(rob.flimsy, labels);
  j["robustness"] = std::move(jrb);

  j["covering_closed_sections"] =
      kinded_json(covering_closed_sections(sp, r), labels, kCoveringKinds);

  const SeparabilityReport sep = separability(parts.strict);
  ordered_json jsep;
  jsep["on_strict_part"] = true;
  jsep["separable"] = sep.separable;
  jsep["strongly_separable"] = sep.strongly_separable;
  j["separability"] = std::move(jsep);

  const auto dual = dual_representation(sp, parts.strict);
  ordered_json jdual;
  jdual["on_strict_part"] = true;
  jdual["exists"] = dual.has_value();
  if (dual) {
    ordered_json u, vv;
    for (int x = 0; x < sp.n; ++x) {
      u[labels[x]] = dual->u[x];
      vv[labels[x]] = dual->v[x];
    }
    jdual["u"] = std::move(u);
    jdual["v"] = std::move(vv);
  }
  j["dual_representation"] = std::move(jdual);

  ordered_json jq;
  try {
    const Partition part = indifference_partition(r);
    const Relation rhat = quotient_relation(r, part);
    const FiniteSpace qsp = quotient_space(sp, part);
    jq["defined"] = true;
    ordered_json classes = ordered_json::array();
    for (Mask b : part.blocks) classes.push_back(labels_of(b, labels));
    jq["classes"] = std::move(classes);
    ordered_json qpairs = ordered_json::array();
    for (int x = 0; x < rhat.n; ++x)
      for (int y = 0; y < rhat.n; ++y)
        if (rhat.at(x, y)) qpairs.push_back({x, y});
    jq["relation"] = std::move(qpairs);
    ordered_json qopens = ordered_json::array();
    for (Mask m : qsp.opens) {
      ordered_json blockset = ordered_json::array();
      for (int b = 0; b < qsp.n; ++b)
        if ((m >> b) & 1u) blockset.push_back(b);
      qopens.push_back(std::move(blockset));
    }
    jq["opens"] = std::move(qopens);
    jq["hausdorff"] = is_hausdorff(qsp);
  } catch (const InvalidPartition& e) {
    jq["defined"] = false;
    jq["reason"] = e.what();
  }
  j["quotient_by_indifference"] = std::move(jq);

  return emit(std::move(j), 0);
}

// ---- enumerate ----

int cmd_enumerate(int n, bool connected_only, bool count_only) {
  const TopologyEnumerator topos(n);
  const std::vector<std::string> labels = default_labels(n);
  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "enumerate";
  j["n"] = n;
  std::uint64_t count = 0;
  ordered_json list = ordered_json::array();
  for (std::size_t i = 0; i < topos.count(); ++i) {
    const FiniteSpace& sp = topos.at(i);
    const Partition comp = components(sp);
    if (connected_only && comp.blocks.size() != 1) continue;
    ++count;
    if (count_only) continue;
    ordered_json t;
    t["index"] = i;
    ordered_json opens = ordered_json::array();
    for (Mask m : sp.opens) opens.push_back(labels_of(m, labels));
    t["opens"] = std::move(opens);
    t["components"] = comp.blocks.size();
    t["connected"] = comp.blocks.size() == 1;
    list.push_back(std::move(t));
  }
  j["count"] = count;
  if (!count_only) {
    j["points"] = labels;
    j["topologies"] = std::move(list);
  }
  return emit(std::move(j), 0);
}

// ---- verify ----

std::string domain_name(ClaimDomain d) {
  switch (d) {
    case ClaimDomain::pair:
      return "pair";
    case ClaimDomain::relation_only:
      return "relation_only";
    case ClaimDomain::space_only:
      return "space_only";
    case ClaimDomain::pairwise:
      return "pairwise";
  }
  return "";
}

ordered_json claim_json(const ClaimSpec& c) {
  ordered_json j;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["hypotheses"] = c.hypotheses;
  if (!c.bicond_lhs.empty()) {
    j["bicond_lhs"] = c.bicond_lhs;
    j["bicond_rhs"] = c.bicond_rhs;
  } else {
    j["conclusion"] = c.conclusion;
  }
  j["domain"] = domain_name(c.domain);
  j["max_n"] = c.max_n;
  j["expected_vacuous"] = c.expected_vacuous;
  if (!c.vacuity_anchor.empty()) j["vacuity_anchor"] = c.vacuity_anchor;
  return j;
}

int cmd_verify_list() {
  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "verify";
  ordered_json claims = ordered_json::array();
  for (const ClaimSpec& c : claim_catalog()) claims.push_back(claim_json(c));
  j["claims"] = std::move(claims);
  j["predicates"] = predicate_names();
  return emit(std::move(j), 0);
}

int cmd_verify(const std::string& id, int max_n, int jobs, double budget) {
  const ClaimSpec& spec = find_claim(id);
  VerifyOptions opt;
  opt.max_n = max_n;
  opt.jobs = jobs;
  opt.budget_seconds = budget;
  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "verify";
  j["claim"] = claim_json(spec);
  if (max_n > 0) j["max_n"] = max_n;
  VerificationOutcome out;
  try {
    out = verify(spec, opt);
  } catch (const BudgetExceeded& e) {
    j["outcome"] = ordered_json::parse(outcome_canonical(e.outcome));
    return emit(std::move(j), 1, jobs);
  }
  j["outcome"] = ordered_json::parse(outcome_canonical(out));
  return emit(std::move(j), out.passed() ? 0 : 1, jobs);
}

// ---- witness ----

int cmd_witness(const std::string& space_path, const std::string& cname,
                int k) {
  const LabeledSpace ls = parse_space_file(space_path);
  const Construction c = construction_from_name(cname);
  const WitnessResult w = witness(ls.space, c, k);
  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "witness";
  ordered_json inputs;
  inputs["space"] = space_path;
  inputs["construction"] = cname;
  inputs["k"] = w.k;
  j["inputs"] = std::move(inputs);
  j["checked"] = w.checked;
  ordered_json jr;
  jr["pairs"] = pairs_json(w.relation, ls.labels);
  jr["code"] = w.relation.code();
  j["relation"] = std::move(jr);
  return emit(std::move(j), 0);
}

// ---- search ----

int cmd_search(const std::string& hyps_csv, const std::string& conclusion,
               int max_n, bool no_topology, bool connected_only,
               bool disconnected_only) {
  std::vector<std::string> hyps;
  std::stringstream ss(hyps_csv);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) hyps.push_back(item);
  SearchDomain dom;
  dom.no_topology = no_topology;
  dom.connected_only = connected_only;
  dom.disconnected_only = disconnected_only;
  const SearchResult res =
      search_counterexample(hyps, conclusion, max_n, dom);
  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "search";
  j["hypotheses"] = hyps;
  j["conclusion"] = conclusion;
  j["max_n"] = max_n;
  ordered_json jd;
  jd["no_topology"] = no_topology;
  jd["connected_only"] = connected_only;
  jd["disconnected_only"] = disconnected_only;
  j["domain"] = std::move(jd);
  j["found"] = res.found;
  j["enumerated"] = res.enumerated;
  if (res.found) {
    const std::vector<std::string> labels = default_labels(res.n);
    j["n"] = res.n;
    if (res.space) {
      j["topo_index"] = res.topo_index;
      ordered_json opens = ordered_json::array();
      for (Mask m : res.space->opens) opens.push_back(labels_of(m, labels));
      ordered_json sj;
      sj["points"] = labels;
      sj["opens"] = std::move(opens);
      j["space"] = std::move(sj);
    }
    ordered_json jr;
    jr["pairs"] = pairs_json(*res.relation, labels);
    jr["code"] = res.rel_code;
    j["relation"] = std::move(jr);
  }
  return emit(std::move(j), res.found ? 1 : 0);
}

// ---- fixtures ----

int cmd_fixtures() {
  const FixtureReport rep = run_fixtures();
  ordered_json j;
  j["schema"] = "toporel-report/1";
  j["command"] = "fixtures";
  j["passed"] = rep.passed;
  ordered_json fails = ordered_json::array();
  for (const FixtureFailure& f : rep.failures)
    fails.push_back({{"fixture", f.fixture}, {"detail", f.detail}});
  j["failures"] = std::move(fails);
  j["ok"] = rep.ok();
  return emit(std::move(j), rep.ok() ? 0 : 1);
}

int default_jobs() {
  if (const char* env = std::getenv("TOPOREL_JOBS")) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for finite topologies and relations"};
  app.require_subcommand(1);

  std::string space_path, rel_path, claim_id, construction, hyps_csv,
      conclusion;
  int k = 1, n = 1, max_n = 0, jobs = default_jobs();
  double budget = 0;
  bool connected_only = false, count_only = false, no_topology = false,
       disconnected_only = false, list_claims = false;

  CLI::App* c_check = app.add_subcommand("check", "report every property");
  c_check->add_option("--space", space_path)->required();
  c_check->add_option("--relation", rel_path)->required();
  c_check->add_option("--k", k, "bound for k-non-triviality");

  CLI::App* c_enum = app.add_subcommand("enumerate", "list topologies");
  c_enum->add_option("--n", n)->required();
  c_enum->add_flag("--connected-only", connected_only);
  c_enum->add_flag("--count-only", count_only);

  CLI::App* c_verify = app.add_subcommand("verify", "sweep a claim");
  c_verify->add_option("--claim", claim_id);
  c_verify->add_option("--max-n", max_n);
  c_verify->add_option("--jobs", jobs);
  c_verify->add_option("--budget", budget, "seconds before giving up");
  c_verify->add_flag("--list", list_claims, "print the claim manifest");

  CLI::App* c_wit = app.add_subcommand("witness", "emit a proof witness");
  c_wit->add_option("--space", space_path)->required();
  c_wit->add_option("--construction", construction)->required();
  c_wit->add_option("--k", k);

  CLI::App* c_search = app.add_subcommand("search", "hunt a counterexample");
  c_search->add_option("--hypotheses", hyps_csv)->required();
  c_search->add_option("--conclusion", conclusion)->required();
  c_search->add_option("--max-n", max_n)->required();
  c_search->add_flag("--no-topology", no_topology);
  c_search->add_flag("--connected-only", connected_only);
  c_search->add_flag("--disconnected-only", disconnected_only);

  CLI::App* c_fix = app.add_subcommand("fixtures", "run pinned examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_check) return cmd_check(space_path, rel_path, k);
    if (*c_enum) return cmd_enumerate(n, connected_only, count_only);
    if (*c_verify) {
      if (list_claims) return cmd_verify_list();
      if (claim_id.empty()) {
        std::cerr << "error: verify needs --claim or --list\n";
        return 2;
      }
      return cmd_verify(claim_id, max_n, jobs, budget);
    }
    if (*c_wit) return cmd_witness(space_path, construction, k);
    if (*c_search)
      return cmd_search(hyps_csv, conclusion, max_n, no_topology,
                        connected_only, disconnected_only);
    if (*c_fix) return cmd_fixtures();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
