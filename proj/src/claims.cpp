// Claim catalog and predicate vocabulary. Every hypothesis or conclusion a
// claim (or a counterexample search) can mention resolves here to an
// evaluator over the sweep context. Predicates defined on the strict part
// (separability, the dual, the coverings, the pseudo-transitive dual) are
// evaluated on P = R minus R^T, which is the relation itself whenever the
// claim's hypotheses already force asymmetry.
#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "engine.hpp"

namespace topo::engine {

namespace {

std::uint16_t flags_of(const Relation& r, const FiniteSpace& one_comp,
                       const Partition& comp1) {
  const OrderPropertyVector v = order_properties(r);
  std::uint16_t f = 0;
  if (v.reflexive.holds) f |= rb_reflexive;
  if (v.complete.holds) f |= rb_complete;
  if (v.symmetric.holds) f |= rb_symmetric;
  if (v.asymmetric.holds) f |= rb_asymmetric;
  if (v.anti_symmetric.holds) f |= rb_anti_symmetric;
  if (v.non_trivial.holds) f |= rb_non_trivial;
  if (v.transitive.holds) f |= rb_transitive;
  if (v.negatively_transitive_p.holds) f |= rb_np;
  if (v.pp.holds) f |= rb_pp;
  if (v.ii.holds) f |= rb_ii;
  if (v.pi.holds) f |= rb_pi;
  if (v.ip.holds) f |= rb_ip;
  if (v.semi_transitive.holds) f |= rb_semi_transitive;
  if (v.pseudo_transitive_dual.holds) f |= rb_pseudo_transitive_dual;
  // Definition 7 reads off R and P alone; any one-component space will do.
  if (nontriviality(one_comp, r, 1, comp1).strongly_non_trivial.holds)
    f |= rb_strongly_non_trivial;
  return f;
}

}  // namespace

const RelTable& rel_table(int n) {
  if (n < 1 || n > 4) throw SizeLimit("relation tables cover 1 to 4 points");
  static std::map<int, RelTable> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  RelTable t;
  t.n = n;
  t.rows.resize(std::size_t(1) << (n * n));
  const FiniteSpace one_comp = indiscrete_space(n);
  Partition comp1;
  comp1.n = n;
  comp1.blocks = {one_comp.full};
  for (std::uint64_t code = 0; code < t.rows.size(); ++code) {
    const Relation r = Relation::from_code(n, code);
    const DerivedParts d = derive_parts(r);
    RelEntry& e = t.rows[code];
    e.flags = flags_of(r, one_comp, comp1);
    for (int x = 0; x < n; ++x) {
      e.prow[x] = static_cast<std::uint8_t>(d.strict.row[x]);
      e.irow[x] = static_cast<std::uint8_t>(d.sym.row[x]);
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

bool SpaceCtx::quasi_ordered() const {
  if (quasi < 0) quasi = is_quasi_ordered(*sp).yes ? 1 : 0;
  return quasi == 1;
}

bool SpaceCtx::pbp_holds() const {
  if (pbp < 0) pbp = has_pbp(*sp).holds ? 1 : 0;
  return pbp == 1;
}

SpaceCtx make_space_ctx(const FiniteSpace& sp) {
  SpaceCtx s;
  s.sp = &sp;
  s.comp = components(sp);
  s.ncomp = static_cast<int>(s.comp.size());
  s.connected = s.ncomp <= 1;
  s.discrete = s.sp->opens.size() == (std::size_t(1) << sp.n);
  return s;
}

Ctx make_ctx(const SpaceCtx& s, const RelEntry* e, const Relation& r) {
  Ctx c;
  c.s = &s;
  c.e = e;
  c.r = r;
  return c;
}

namespace {

Mask prow(const Ctx& c, int x) { return c.e->prow[x]; }
Mask irow(const Ctx& c, int x) { return c.e->irow[x]; }

Mask pcol(const Ctx& c, int y) {
  Mask m = 0;
  for (int a = 0; a < c.r.n; ++a) m |= ((prow(c, a) >> y) & 1u) << a;
  return m;
}

Relation strict_of(const Ctx& c) {
  Relation p;
  p.n = c.r.n;
  for (int x = 0; x < p.n; ++x) p.row[x] = prow(c, x);
  return p;
}

void set_pair(Ctx& c, PairBit b, bool val) {
  c.computed |= 1u << b;
  if (val) c.value |= 1u << b;
}

// The four continuity families share one pass over the points.
void fill_continuity(Ctx& c) {
  if (c.computed & (1u << pb_closed_upper_r)) return;
  const FiniteSpace& sp = *c.s->sp;
  bool cu = true, cl = true, ou = true, ol = true;
  for (int x = 0; x < sp.n; ++x) {
    if (!sp.is_closed(c.r.upper(x))) cu = false;
    if (!sp.is_closed(c.r.lower(x))) cl = false;
    if (!sp.is_open(prow(c, x))) ou = false;
    if (!sp.is_open(pcol(c, x))) ol = false;
  }
  set_pair(c, pb_closed_upper_r, cu);
  set_pair(c, pb_closed_lower_r, cl);
  set_pair(c, pb_open_upper_p, ou);
  set_pair(c, pb_open_lower_p, ol);
  set_pair(c, pb_closed_sections_r, cu && cl);
  set_pair(c, pb_open_sections_p, ou && ol);
  set_pair(c, pb_continuous, cu && cl && ou && ol);
}

bool via_continuity(Ctx& c, PairBit b) {
  fill_continuity(c);
  return (c.value >> b) & 1u;
}

void fill_nontriviality(Ctx& c) {
  if (c.computed & (1u << pb_componentwise_non_trivial)) return;
  const NontrivialityReport rep =
      nontriviality(*c.s->sp, c.r, c.s->ncomp, c.s->comp);
  set_pair(c, pb_componentwise_non_trivial,
           rep.componentwise_non_trivial.holds);
  set_pair(c, pb_k_non_trivial_comps, rep.k_non_trivial.holds);
}

void fill_robustness(Ctx& c) {
  if (c.computed & (1u << pb_fragile)) return;
  const RobustnessReport rep = robustness(*c.s->sp, c.r);
  set_pair(c, pb_fragile, rep.fragile.holds);
  set_pair(c, pb_flimsy, rep.flimsy.holds);
}

void fill_separability(Ctx& c) {
  if (c.computed & (1u << pb_separable)) return;
  const SeparabilityReport rep = separability(strict_of(c));
  set_pair(c, pb_separable, rep.separable);
  set_pair(c, pb_strongly_separable, rep.strongly_separable);
}

bool all_i_sections_connected(Ctx& c) {
  for (int x = 0; x < c.r.n; ++x)
    if (!subspace_connected(*c.s->sp, irow(c, x))) return false;
  return true;
}

bool all_r_sections_connected(Ctx& c) {
  for (int x = 0; x < c.r.n; ++x)
    if (!subspace_connected(*c.s->sp, c.r.upper(x)) ||
        !subspace_connected(*c.s->sp, c.r.lower(x)))
      return false;
  return true;
}

bool all_r_upper_pc(Ctx& c) {
  for (int x = 0; x < c.r.n; ++x)
    if (!subspace_path_connected(*c.s->sp, c.r.upper(x))) return false;
  return true;
}

bool all_r_lower_pc(Ctx& c) {
  for (int x = 0; x < c.r.n; ++x)
    if (!subspace_path_connected(*c.s->sp, c.r.lower(x))) return false;
  return true;
}

const std::map<std::string, Pred>& build_predicates() {
  static const std::map<std::string, Pred> reg = {
      // Relation-table bits.
      {"reflexive", {0, +[](Ctx& c) { return c.rel_bit(rb_reflexive); }}},
      {"complete", {0, +[](Ctx& c) { return c.rel_bit(rb_complete); }}},
      {"incomplete", {0, +[](Ctx& c) { return !c.rel_bit(rb_complete); }}},
      {"symmetric", {0, +[](Ctx& c) { return c.rel_bit(rb_symmetric); }}},
      {"asymmetric", {0, +[](Ctx& c) { return c.rel_bit(rb_asymmetric); }}},
      {"anti_symmetric",
       {0, +[](Ctx& c) { return c.rel_bit(rb_anti_symmetric); }}},
      {"non_trivial", {0, +[](Ctx& c) { return c.rel_bit(rb_non_trivial); }}},
      {"transitive", {0, +[](Ctx& c) { return c.rel_bit(rb_transitive); }}},
      {"negatively_transitive_p",
       {0, +[](Ctx& c) { return c.rel_bit(rb_np); }}},
      {"pp", {0, +[](Ctx& c) { return c.rel_bit(rb_pp); }}},
      {"ii", {0, +[](Ctx& c) { return c.rel_bit(rb_ii); }}},
      {"pi", {0, +[](Ctx& c) { return c.rel_bit(rb_pi); }}},
      {"ip", {0, +[](Ctx& c) { return c.rel_bit(rb_ip); }}},
      {"semi_transitive",
       {0, +[](Ctx& c) { return c.rel_bit(rb_semi_transitive); }}},
      {"pseudo_transitive_dual",
       {0, +[](Ctx& c) { return c.rel_bit(rb_pseudo_transitive_dual); }}},
      {"strongly_non_trivial",
       {0, +[](Ctx& c) { return c.rel_bit(rb_strongly_non_trivial); }}},
      // Composites over table bits.
      {"pp_pi_ip_ii",
       {0,
        +[](Ctx& c) {
          return c.rel_bit(rb_pp) && c.rel_bit(rb_pi) && c.rel_bit(rb_ip) &&
                 c.rel_bit(rb_ii);
        }}},
      {"pp_pi_ip",
       {0,
        +[](Ctx& c) {
          return c.rel_bit(rb_pp) && c.rel_bit(rb_pi) && c.rel_bit(rb_ip);
        }}},
      {"semi_transitive_and_ii",
       {0,
        +[](Ctx& c) {
          return c.rel_bit(rb_semi_transitive) && c.rel_bit(rb_ii);
        }}},
      {"pp_and_ii",
       {0, +[](Ctx& c) { return c.rel_bit(rb_pp) && c.rel_bit(rb_ii); }}},
      // Space facts.
      {"connected", {1, +[](Ctx& c) { return c.s->connected; }}},
      {"disconnected", {1, +[](Ctx& c) { return !c.s->connected; }}},
      {"comps_le_2", {1, +[](Ctx& c) { return c.s->ncomp <= 2; }}},
      {"n_gt_2", {1, +[](Ctx& c) { return c.s->sp->n > 2; }}},
      {"discrete", {1, +[](Ctx& c) { return c.s->discrete; }}},
      {"quasi_ordered", {1, +[](Ctx& c) { return c.s->quasi_ordered(); }}},
      {"pbp", {1, +[](Ctx& c) { return c.s->pbp_holds(); }}},
      // Pair facts.
      {"continuous", {2, +[](Ctx& c) { return via_continuity(c, pb_continuous); }}},
      {"closed_sections_r",
       {2, +[](Ctx& c) { return via_continuity(c, pb_closed_sections_r); }}},
      {"open_sections_p",
       {2, +[](Ctx& c) { return via_continuity(c, pb_open_sections_p); }}},
      {"closed_upper_r",
       {2, +[](Ctx& c) { return via_continuity(c, pb_closed_upper_r); }}},
      {"closed_lower_r",
       {2, +[](Ctx& c) { return via_continuity(c, pb_closed_lower_r); }}},
      {"open_upper_p",
       {2, +[](Ctx& c) { return via_continuity(c, pb_open_upper_p); }}},
      {"open_lower_p",
       {2, +[](Ctx& c) { return via_continuity(c, pb_open_lower_p); }}},
      {"i_sections_connected",
       {2,
        +[](Ctx& c) {
          return c.pair_bit(pb_i_sections_connected, all_i_sections_connected);
        }}},
      {"r_sections_connected",
       {2,
        +[](Ctx& c) {
          return c.pair_bit(pb_r_sections_connected, all_r_sections_connected);
        }}},
      {"r_upper_path_connected",
       {2,
        +[](Ctx& c) {
          return c.pair_bit(pb_r_upper_path_connected, all_r_upper_pc);
        }}},
      {"r_lower_path_connected",
       {2,
        +[](Ctx& c) {
          return c.pair_bit(pb_r_lower_path_connected, all_r_lower_pc);
        }}},
      {"r_sections_path_connected",
       {2,
        +[](Ctx& c) {
          return c.pair_bit(pb_r_upper_path_connected, all_r_upper_pc) &&
                 c.pair_bit(pb_r_lower_path_connected, all_r_lower_pc);
        }}},
      {"componentwise_non_trivial",
       {2,
        +[](Ctx& c) {
          fill_nontriviality(c);
          return ((c.value >> pb_componentwise_non_trivial) & 1u) != 0;
        }}},
      {"k_non_trivial_comps",
       {2,
        +[](Ctx& c) {
          fill_nontriviality(c);
          return ((c.value >> pb_k_non_trivial_comps) & 1u) != 0;
        }}},
      // Heavy pair facts.
      {"fragile",
       {3,
        +[](Ctx& c) {
          fill_robustness(c);
          return ((c.value >> pb_fragile) & 1u) != 0;
        }}},
      {"flimsy",
       {3,
        +[](Ctx& c) {
          fill_robustness(c);
          return ((c.value >> pb_flimsy) & 1u) != 0;
        }}},
      {"separable",
       {3,
        +[](Ctx& c) {
          fill_separability(c);
          return ((c.value >> pb_separable) & 1u) != 0;
        }}},
      {"strongly_separable",
       {3,
        +[](Ctx& c) {
          fill_separability(c);
          return ((c.value >> pb_strongly_separable) & 1u) != 0;
        }}},
      {"has_dual_representation",
       {3,
        +[](Ctx& c) {
          return c.pair_bit(pb_has_dual_representation, [](Ctx& cc) {
            return dual_representation(*cc.s->sp, strict_of(cc)).has_value();
          });
        }}},
      {"covering_closed_sections",
       {3,
        +[](Ctx& c) {
          return c.pair_bit(pb_covering_closed_sections, [](Ctx& cc) {
            return covering_closed_sections(*cc.s->sp, cc.r).holds;
          });
        }}},
      {"ss_pt_ccs",
       {3,
        +[](Ctx& c) {
          fill_separability(c);
          return ((c.value >> pb_strongly_separable) & 1u) &&
                 c.rel_bit(rb_pseudo_transitive_dual) &&
                 c.pair_bit(pb_covering_closed_sections, [](Ctx& cc) {
                   return covering_closed_sections(*cc.s->sp, cc.r).holds;
                 });
        }}},
  };
  return reg;
}

const Verdict* order_verdict(const OrderPropertyVector& v,
                             const std::string& name) {
  if (name == "reflexive") return &v.reflexive;
  if (name == "complete") return &v.complete;
  if (name == "symmetric") return &v.symmetric;
  if (name == "asymmetric") return &v.asymmetric;
  if (name == "anti_symmetric") return &v.anti_symmetric;
  if (name == "non_trivial") return &v.non_trivial;
  if (name == "transitive") return &v.transitive;
  if (name == "negatively_transitive_p") return &v.negatively_transitive_p;
  if (name == "pp") return &v.pp;
  if (name == "ii") return &v.ii;
  if (name == "pi") return &v.pi;
  if (name == "ip") return &v.ip;
  if (name == "semi_transitive") return &v.semi_transitive;
  if (name == "pseudo_transitive_dual") return &v.pseudo_transitive_dual;
  return nullptr;
}

void witness_from(const Verdict& v, std::vector<int>& wit) {
  wit.assign(v.w.begin(), v.w.begin() + v.wlen);
}

}  // namespace

const std::map<std::string, Pred>& predicate_registry() {
  return build_predicates();
}

void explain_predicate(const std::string& name, Ctx& c,
                       std::vector<int>& wit, std::string& note) {
  wit.clear();
  note = name + " fails";
  if (name == "pp_pi_ip_ii" || name == "pp_pi_ip") {
    for (const char* leg : {"pp", "pi", "ip", "ii"}) {
      if (name == "pp_pi_ip" && std::string(leg) == "ii") break;
      Pred p = predicate_registry().at(leg);
      if (!p.fn(c)) return explain_predicate(leg, c, wit, note);
    }
    return;
  }
  if (name == "semi_transitive_and_ii") {
    for (const char* leg : {"semi_transitive", "ii"})
      if (!predicate_registry().at(leg).fn(c))
        return explain_predicate(leg, c, wit, note);
    return;
  }
  if (name == "pp_and_ii") {
    for (const char* leg : {"pp", "ii"})
      if (!predicate_registry().at(leg).fn(c))
        return explain_predicate(leg, c, wit, note);
    return;
  }
  if (name == "ss_pt_ccs") {
    for (const char* leg :
         {"strongly_separable", "pseudo_transitive_dual",
          "covering_closed_sections"})
      if (!predicate_registry().at(leg).fn(c))
        return explain_predicate(leg, c, wit, note);
    return;
  }

  const OrderPropertyVector v = order_properties(c.r);
  if (const Verdict* ov = order_verdict(v, name)) {
    witness_from(*ov, wit);
    return;
  }
  if (name == "incomplete") {
    note = "relation is complete";
    return;
  }
  if (name == "continuous" || name == "closed_sections_r" ||
      name == "open_sections_p" || name == "closed_upper_r" ||
      name == "closed_lower_r" || name == "open_upper_p" ||
      name == "open_lower_p") {
    const ContinuityReport rep = continuity(*c.s->sp, c.r);
    const Verdict* pick = name == "continuous"        ? &rep.continuous
                          : name == "closed_sections_r" ? &rep.closed_sections_r
                          : name == "open_sections_p" ? &rep.open_sections_p
                          : name == "closed_upper_r"  ? &rep.closed_upper_r
                          : name == "closed_lower_r"  ? &rep.closed_lower_r
                          : name == "open_upper_p"    ? &rep.open_upper_p
                                                      : &rep.open_lower_p;
    witness_from(*pick, wit);
    return;
  }
  if (name == "i_sections_connected" || name == "r_sections_connected" ||
      name == "r_upper_path_connected" || name == "r_lower_path_connected" ||
      name == "r_sections_path_connected") {
    const SectionConnectivityReport rep = section_connectivity(*c.s->sp, c.r);
    const Verdict* pick =
        name == "i_sections_connected"     ? &rep.i_sections_connected
        : name == "r_sections_connected"   ? &rep.r_sections_connected
        : name == "r_upper_path_connected" ? &rep.r_upper_path_connected
        : name == "r_lower_path_connected" ? &rep.r_lower_path_connected
                                           : &rep.r_sections_path_connected;
    witness_from(*pick, wit);
    return;
  }
  if (name == "componentwise_non_trivial" || name == "k_non_trivial_comps") {
    const NontrivialityReport rep =
        nontriviality(*c.s->sp, c.r, c.s->ncomp, c.s->comp);
    witness_from(name == "componentwise_non_trivial"
                     ? rep.componentwise_non_trivial
                     : rep.k_non_trivial,
                 wit);
    return;
  }
  if (name == "covering_closed_sections") {
    witness_from(covering_closed_sections(*c.s->sp, c.r), wit);
    return;
  }
  if (name == "fragile" || name == "flimsy") {
    note = "relation is not " + name;
    return;
  }
  // Space facts, separability and the dual fail without a point witness.
}

namespace {

bool concl_leg(Ctx& c, const char* name, std::vector<int>& wit,
               std::string& note) {
  if (predicate_registry().at(name).fn(c)) return true;
  explain_predicate(name, c, wit, note);
  return false;
}

bool concl_complete_transitive(Ctx& c, std::vector<int>& wit,
                               std::string& note) {
  return concl_leg(c, "complete", wit, note) &&
         concl_leg(c, "transitive", wit, note);
}

bool concl_complete_continuous(Ctx& c, std::vector<int>& wit,
                               std::string& note) {
  return concl_leg(c, "complete", wit, note) &&
         concl_leg(c, "continuous", wit, note);
}

bool concl_p2(Ctx& c, std::vector<int>& wit, std::string& note) {
  if (!concl_leg(c, "complete", wit, note)) return false;
  if (c.s->ncomp <= 2 && !concl_leg(c, "transitive", wit, note)) return false;
  return true;
}

// Lemma 1: every strict pair spanning (or inside) components C, C' has
// C union C' inside P(x) union P^-1(y).
bool concl_lemma1_cover(Ctx& c, std::vector<int>& wit, std::string& note) {
  for (int x = 0; x < c.r.n; ++x) {
    const Mask px = prow(c, x);
    if (!px) continue;
    for (int y = 0; y < c.r.n; ++y) {
      if (!((px >> y) & 1u)) continue;
      const Mask cover = c.s->comp.blocks[c.s->comp.block_of(x)] |
                         c.s->comp.blocks[c.s->comp.block_of(y)];
      const Mask escaped = cover & ~(px | pcol(c, y));
      if (escaped) {
        wit = {x, y, std::countr_zero(escaped)};
        note = "component union escapes P(x) union P^-1(y)";
        return false;
      }
    }
  }
  return true;
}

bool concl_quotient_antisym_continuous(Ctx& c, std::vector<int>& wit,
                                       std::string& note) {
  const Partition part = indifference_partition(c.r);
  const Relation rhat = quotient_relation(c.r, part);
  const FiniteSpace qsp = quotient_space(*c.s->sp, part);
  const Verdict anti = order_properties(rhat).anti_symmetric;
  if (!anti.holds) {
    witness_from(anti, wit);
    note = "induced quotient relation is not anti-symmetric (class indices)";
    return false;
  }
  const Verdict cont = continuity(qsp, rhat).continuous;
  if (!cont.holds) {
    witness_from(cont, wit);
    note = "induced quotient relation is not continuous (class indices)";
    return false;
  }
  return true;
}

bool concl_ii_quotient_hausdorff(Ctx& c, std::vector<int>& wit,
                                 std::string& note) {
  if (!concl_leg(c, "ii", wit, note)) return false;
  const Partition part = indifference_partition(c.r);
  const FiniteSpace qsp = quotient_space(*c.s->sp, part);
  if (!is_hausdorff(qsp)) {
    for (int p = 0; p < qsp.n; ++p)
      for (int q = p + 1; q < qsp.n; ++q)
        if (qsp.min_nbhd[p] & qsp.min_nbhd[q]) {
          wit = {p, q};
          note = "quotient by indifference is not Hausdorff (class indices)";
          return false;
        }
  }
  return true;
}

// Lemma 2, space only: clopen sets are exactly unions of components.
bool concl_clopen_union_of_components(Ctx& c, std::vector<int>& wit,
                                      std::string& note) {
  const FiniteSpace& sp = *c.s->sp;
  for (Mask u : sp.opens) {
    if (!sp.is_clopen(u)) continue;
    for (const Mask block : c.s->comp.blocks) {
      const Mask t = block & u;
      if (t != 0 && t != block) {
        wit = {std::countr_zero(t), std::countr_zero(block & ~u)};
        note = "a clopen set (mask " + std::to_string(u) +
               ") splits a component";
        return false;
      }
    }
  }
  return true;
}

// Lemma 3, space only: a clopen partition of every size up to the
// component count exists and validates.
bool concl_clopen_partition_every_k(Ctx& c, std::vector<int>& wit,
                                    std::string& note) {
  const FiniteSpace& sp = *c.s->sp;
  for (int k = 1; k <= c.s->ncomp; ++k) {
    const std::vector<Mask> blocks = clopen_partition(sp, k);
    Mask seen = 0;
    bool ok = blocks.size() == static_cast<std::size_t>(k);
    for (Mask b : blocks) {
      if (b == 0 || (b & seen) || !sp.is_clopen(b)) ok = false;
      seen |= b;
    }
    if (seen != sp.full) ok = false;
    if (!ok) {
      wit = {k};
      note = "clopen partition of size k fails to validate";
      return false;
    }
  }
  return true;
}

bool concl_fragile(Ctx& c, std::vector<int>& wit, std::string& note) {
  return concl_leg(c, "fragile", wit, note);
}

bool concl_flimsy(Ctx& c, std::vector<int>& wit, std::string& note) {
  return concl_leg(c, "flimsy", wit, note);
}

bool pair_identical_or_inverse(Ctx& c, const Relation& r2,
                               std::vector<int>& wit, std::string& note) {
  if (r2 == c.r) return true;
  if (derive_parts(c.r).transpose == r2) return true;
  wit.clear();
  note = "relations are neither identical nor inverse";
  return false;
}

}  // namespace

const std::map<std::string, ConclFn>& conclusion_registry() {
  static const std::map<std::string, ConclFn> reg = {
      {"complete_and_transitive", concl_complete_transitive},
      {"complete_and_continuous", concl_complete_continuous},
      {"p2_complete_then_transitive", concl_p2},
      {"lemma1_cover", concl_lemma1_cover},
      {"quotient_antisym_continuous", concl_quotient_antisym_continuous},
      {"ii_and_quotient_hausdorff", concl_ii_quotient_hausdorff},
      {"clopen_union_of_components", concl_clopen_union_of_components},
      {"clopen_partition_every_k", concl_clopen_partition_every_k},
      {"fragile", concl_fragile},
      {"flimsy", concl_flimsy},
  };
  return reg;
}

PairConclFn pairwise_conclusion(const std::string& name) {
  if (name == "identical_or_inverse") return pair_identical_or_inverse;
  throw UnknownClaim("unknown pairwise conclusion: " + name);
}

ResolvedClaim resolve(const ClaimSpec& spec) {
  ResolvedClaim rc;
  rc.spec = &spec;
  const auto& preds = predicate_registry();
  std::vector<Pred> rel;
  for (const std::string& h : spec.hypotheses) {
    auto it = preds.find(h);
    if (it == preds.end())
      throw UnknownClaim("unknown hypothesis predicate: " + h);
    if (it->second.cost == 1)
      rc.space_hyps.push_back(it->second);
    else
      rel.push_back(it->second);
  }
  std::stable_sort(rel.begin(), rel.end(),
                   [](const Pred& a, const Pred& b) { return a.cost < b.cost; });
  rc.rel_hyps = std::move(rel);

  if (spec.domain == ClaimDomain::pairwise) {
    rc.pair_conclusion = pairwise_conclusion(spec.conclusion);
    // For pairwise claims the relation-level hypotheses filter each member
    // of the pair; the space hypotheses gate the topology as usual.
    rc.pair_filter = rc.rel_hyps;
    return rc;
  }
  if (!spec.bicond_lhs.empty()) {
    auto l = preds.find(spec.bicond_lhs), r = preds.find(spec.bicond_rhs);
    if (l == preds.end() || r == preds.end())
      throw UnknownClaim("unknown biconditional side in " + spec.id);
    rc.lhs = l->second.fn;
    rc.rhs = r->second.fn;
    return rc;
  }
  const auto& concls = conclusion_registry();
  if (auto it = concls.find(spec.conclusion); it != concls.end()) {
    rc.conclusion = it->second;
    return rc;
  }
  if (auto it = preds.find(spec.conclusion); it != preds.end()) {
    rc.concl_pred = it->second.fn;
    rc.concl_pred_name = spec.conclusion;
    return rc;
  }
  throw UnknownClaim("unknown conclusion: " + spec.conclusion);
}

}  // namespace topo::engine

namespace topo {

namespace {

using engine::Pred;

std::vector<ClaimSpec> build_catalog() {
  const std::string vac_comp =
      "vacuous by design: componentwise strict comparability plus continuity "
      "is impossible on a finite space, the finite corollary of the "
      "Proposition 3 remark (Section 4.4) applied inside each component";
  const std::string vac_quasi =
      "vacuous by design: a finite quasi-ordered space is discrete "
      "(Proposition 3), so no connected quasi-ordered space with more than "
      "two points exists at this scale";

  std::vector<ClaimSpec> cat;
  auto add = [&cat](ClaimSpec c) { cat.push_back(std::move(c)); };

  // Proposition 1 over bare relations on exactly three points.
  add({.id = "P1.a",
       .statement = "T holds iff PP, PI, IP and II all hold",
       .hypotheses = {},
       .conclusion = "",
       .bicond_lhs = "transitive",
       .bicond_rhs = "pp_pi_ip_ii",
       .domain = ClaimDomain::relation_only,
       .max_n = 3});
  add({.id = "P1.b",
       .statement = "NP implies PP, PI and IP",
       .hypotheses = {"negatively_transitive_p"},
       .conclusion = "pp_pi_ip",
       .domain = ClaimDomain::relation_only,
       .max_n = 3});

  add({.id = "L1",
       .statement = "for semi-transitive continuous R, each strict pair "
                    "(x,y) has C(x) union C(y) inside P(x) union P^-1(y)",
       .hypotheses = {"semi_transitive", "continuous"},
       .conclusion = "lemma1_cover"});
  add({.id = "L2",
       .statement = "every clopen set is a union of components",
       .hypotheses = {},
       .conclusion = "clopen_union_of_components",
       .domain = ClaimDomain::space_only});
  add({.id = "L3",
       .statement = "a space with at least k components has a clopen "
                    "partition of size k",
       .hypotheses = {},
       .conclusion = "clopen_partition_every_k",
       .domain = ClaimDomain::space_only});
  add({.id = "L4",
       .statement = "for semi-transitive continuous R with equivalence I, "
                    "the induced quotient relation is anti-symmetric and "
                    "continuous",
       .hypotheses = {"reflexive", "ii", "semi_transitive", "continuous"},
       .conclusion = "quotient_antisym_continuous"});

  add({.id = "P2",
       .statement = "componentwise non-trivial, semi-transitive, continuous "
                    "with transitive I is complete; with at most two "
                    "components also transitive",
       .hypotheses = {"componentwise_non_trivial", "semi_transitive", "ii",
                      "continuous"},
       .conclusion = "p2_complete_then_transitive",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "P3",
       .statement = "complete, semi-transitive, continuous R has transitive "
                    "I and a Hausdorff quotient by indifference",
       .hypotheses = {"complete", "semi_transitive", "continuous"},
       .conclusion = "ii_and_quotient_hausdorff"});

  // Theorem 1 forward directions with k equal to the component count.
  const std::string t1 = "k-non-trivial continuous relation on a k-connected "
                         "space: ";
  add({.id = "T1.a->b",
       .statement = t1 + "any transitive relation is complete",
       .hypotheses = {"k_non_trivial_comps", "continuous", "transitive"},
       .conclusion = "complete",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "T1.a->c",
       .statement = t1 + "any anti-symmetric relation is complete",
       .hypotheses = {"k_non_trivial_comps", "continuous", "anti_symmetric"},
       .conclusion = "complete",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "T1.a->d",
       .statement = t1 + "any relation whose symmetric part is transitive "
                         "with connected sections is complete",
       .hypotheses = {"k_non_trivial_comps", "continuous", "ii",
                      "i_sections_connected"},
       .conclusion = "complete",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "T1.a->e",
       .statement = t1 + "any semi-transitive relation with transitive "
                         "symmetric part is complete",
       .hypotheses = {"k_non_trivial_comps", "continuous", "semi_transitive",
                      "ii"},
       .conclusion = "complete",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});

  // Theorem 2: the same ladder on spaces with at most two components.
  const std::string t2 = "k-non-trivial continuous relation, k at most 2: ";
  add({.id = "T2.a->b",
       .statement = t2 + "any transitive relation is complete",
       .hypotheses = {"comps_le_2", "k_non_trivial_comps", "continuous",
                      "transitive"},
       .conclusion = "complete",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "T2.a->c",
       .statement = t2 + "any anti-symmetric relation is complete and "
                         "transitive",
       .hypotheses = {"comps_le_2", "k_non_trivial_comps", "continuous",
                      "anti_symmetric"},
       .conclusion = "complete_and_transitive",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "T2.a->d",
       .statement = t2 + "any relation whose symmetric part is transitive "
                         "with connected sections is complete and transitive",
       .hypotheses = {"comps_le_2", "k_non_trivial_comps", "continuous", "ii",
                      "i_sections_connected"},
       .conclusion = "complete_and_transitive",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});
  add({.id = "T2.a->e",
       .statement = t2 + "any semi-transitive relation with transitive "
                         "symmetric part is complete and transitive",
       .hypotheses = {"comps_le_2", "k_non_trivial_comps", "continuous",
                      "semi_transitive", "ii"},
       .conclusion = "complete_and_transitive",
       .expected_vacuous = true,
       .vacuity_anchor = vac_comp});

  // Theorem 3 forward directions on 2-connected quasi-ordered spaces.
  const std::string t3 = "complete continuous relation on a 2-connected "
                         "quasi-ordered space: ";
  add({.id = "T3.a->b",
       .statement = t3 + "any anti-symmetric relation is transitive",
       .hypotheses = {"quasi_ordered", "comps_le_2", "complete", "continuous",
                      "anti_symmetric"},
       .conclusion = "transitive"});
  add({.id = "T3.a->c",
       .statement = t3 + "any relation whose symmetric part is transitive "
                         "with connected sections is transitive",
       .hypotheses = {"quasi_ordered", "comps_le_2", "complete", "continuous",
                      "ii", "i_sections_connected"},
       .conclusion = "transitive"});
  add({.id = "T3.a->d",
       .statement = t3 + "any semi-transitive relation is transitive",
       .hypotheses = {"quasi_ordered", "comps_le_2", "complete", "continuous",
                      "semi_transitive"},
       .conclusion = "transitive"});

  // Theorem 4 forward directions on connected quasi-ordered spaces with
  // more than two points; every domain is empty at finite scale.
  const std::vector<std::string> t4dom = {"quasi_ordered", "connected",
                                          "n_gt_2"};
  auto with_dom = [&t4dom](std::vector<std::string> extra) {
    std::vector<std::string> h = t4dom;
    h.insert(h.end(), extra.begin(), extra.end());
    return h;
  };
  add({.id = "T4.a->b",
       .statement = "strongly non-trivial transitive R with closed upper "
                    "sections, NP, and open upper P-sections is complete and "
                    "continuous",
       .hypotheses = with_dom({"strongly_non_trivial", "transitive",
                               "closed_upper_r", "negatively_transitive_p",
                               "open_upper_p"}),
       .conclusion = "complete_and_continuous",
       .expected_vacuous = true,
       .vacuity_anchor = vac_quasi});
  add({.id = "T4.a->c",
       .statement = "any two anti-symmetric non-trivial continuous relations "
                    "are identical or inverse",
       .hypotheses = with_dom({"anti_symmetric", "non_trivial", "continuous"}),
       .conclusion = "identical_or_inverse",
       .domain = ClaimDomain::pairwise,
       .expected_vacuous = true,
       .vacuity_anchor = vac_quasi});
  add({.id = "T4.a->d",
       .statement = "incomplete non-trivial transitive R with closed "
                    "sections is fragile",
       .hypotheses = with_dom({"incomplete", "non_trivial", "transitive",
                               "closed_sections_r"}),
       .conclusion = "fragile",
       .expected_vacuous = true,
       .vacuity_anchor = vac_quasi});
  add({.id = "T4.a->e",
       .statement = "incomplete non-trivial transitive R whose asymmetric "
                    "part has open sections is flimsy",
       .hypotheses = with_dom({"incomplete", "non_trivial", "transitive",
                               "open_sections_p"}),
       .conclusion = "flimsy",
       .expected_vacuous = true,
       .vacuity_anchor = vac_quasi});
  add({.id = "T4.a->f",
       .statement = "an asymmetric relation with a continuous dual "
                    "representation is strongly separable",
       .hypotheses = with_dom({"asymmetric", "has_dual_representation"}),
       .conclusion = "strongly_separable",
       .expected_vacuous = true,
       .vacuity_anchor = vac_quasi});
  add({.id = "T4.a->g",
       .statement = "an asymmetric relation has a continuous dual "
                    "representation iff it is strongly separable, its dual "
                    "is pseudo-transitive, and its covering relations have "
                    "closed sections",
       .hypotheses = with_dom({"asymmetric"}),
       .conclusion = "",
       .bicond_lhs = "has_dual_representation",
       .bicond_rhs = "ss_pt_ccs",
       .expected_vacuous = true,
       .vacuity_anchor = vac_quasi});

  // Theorem 5(a) on connected spaces.
  add({.id = "T5.a.i",
       .statement = "semi-transitivity of R is equivalent to negative "
                    "transitivity of P",
       .hypotheses = {"connected", "continuous"},
       .conclusion = "",
       .bicond_lhs = "semi_transitive",
       .bicond_rhs = "negatively_transitive_p"});
  add({.id = "T5.a.ii",
       .statement = "semi-transitivity of R implies transitivity of P",
       .hypotheses = {"connected", "continuous", "semi_transitive"},
       .conclusion = "pp"});
  add({.id = "T5.a.iii",
       .statement = "transitivity of R implies negative transitivity of P",
       .hypotheses = {"connected", "continuous", "transitive"},
       .conclusion = "negatively_transitive_p"});
  add({.id = "T5.a.iv",
       .statement = "transitivity of R is equivalent to its "
                    "semi-transitivity and transitivity of I",
       .hypotheses = {"connected", "continuous"},
       .conclusion = "",
       .bicond_lhs = "transitive",
       .bicond_rhs = "semi_transitive_and_ii"});

  // Theorem 5(b) under connected indifference sections.
  add({.id = "T5.b.i",
       .statement = "transitivity of I implies semi-transitivity of R",
       .hypotheses = {"continuous", "i_sections_connected", "ii"},
       .conclusion = "semi_transitive"});
  add({.id = "T5.b.ii",
       .statement = "transitivity of R is equivalent to transitivity of P "
                    "and of I",
       .hypotheses = {"continuous", "i_sections_connected"},
       .conclusion = "",
       .bicond_lhs = "transitive",
       .bicond_rhs = "pp_and_ii"});

  // Theorem 6 on spaces with the Phragmen-Brouwer property.
  add({.id = "T6.i",
       .statement = "with path-connected upper sections, transitivity of I "
                    "implies PI",
       .hypotheses = {"pbp", "continuous", "r_upper_path_connected", "ii"},
       .conclusion = "pi"});
  add({.id = "T6.ii",
       .statement = "with path-connected lower sections, transitivity of I "
                    "implies IP",
       .hypotheses = {"pbp", "continuous", "r_lower_path_connected", "ii"},
       .conclusion = "ip"});
  add({.id = "T6.iii",
       .statement = "with path-connected sections, transitivity of R is "
                    "equivalent to transitivity of P and of I",
       .hypotheses = {"pbp", "continuous", "r_sections_path_connected"},
       .conclusion = "",
       .bicond_lhs = "transitive",
       .bicond_rhs = "pp_and_ii"});

  return cat;
}

}  // namespace

const std::vector<ClaimSpec>& claim_catalog() {
  static const std::vector<ClaimSpec> cat = build_catalog();
  return cat;
}

const ClaimSpec& find_claim(const std::string& id) {
  // Accept the typeset arrow as an alias for the ASCII one.
  std::string key = id;
  for (std::string::size_type pos; (pos = key.find("→")) != std::string::npos;)
    key.replace(pos, 3, "->");
  for (const ClaimSpec& c : claim_catalog())
    if (c.id == key) return c;
  throw UnknownClaim("no claim named " + id + " in the catalog");
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, pred] : engine::predicate_registry())
      out.push_back(name);
    return out;
  }();
  return names;
}

bool is_predicate_name(const std::string& name) {
  return engine::predicate_registry().count(name) != 0;
}

}  // namespace topo
