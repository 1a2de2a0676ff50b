#include "ordvec/suite.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "ordvec/coherence.hpp"
#include "ordvec/error.hpp"
#include "ordvec/functionals.hpp"
#include "ordvec/gallery.hpp"
#include "ordvec/serialize.hpp"

namespace ordvec::suite {

using Json = nlohmann::json;
namespace js = ordvec::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

namespace {

struct Counterexample {
  std::string reason;
  Json payload;
};

[[noreturn]] void fail(std::string reason, Json payload) { throw Counterexample{std::move(reason), std::move(payload)}; }

Json instance_json(const MajorizedSpace& s) { return js::to_json(js::Instance{s, {}, {}, std::nullopt}); }

Json opt_json(const std::optional<Rational>& q) { return q ? js::to_json(*q) : Json("infinite"); }

Rational finite_norm(const MajorizedSpace& s, const RVector& v) {
  NormResult r = norm_p(s, v);
  if (!r.finite()) fail("p_M infinite on a vector of E_M", {{"instance", instance_json(s)}, {"v", js::to_json(v)}});
  return *r.value;
}

RVector nonnegative_coefficients(Sampler& rng, std::size_t n) {
  for (;;) {
    RVector t = rng.vector(n, 0, 3, 2);
    if (!t.is_zero()) return t;
  }
}

// Mixed population: arbitrary closed-cone sets, coherent-by-construction
// sets, and lexicographic sets.
struct MixedInstance {
  MajorizedSpace space;
  bool coherent_by_construction = false;
};

MixedInstance mixed_instance(Sampler& rng, const Options& opts, std::size_t i, std::size_t count) {
  const std::size_t lex_from = count - count / 5;
  if (i >= lex_from) return {random_lex_instance(rng), false};
  bool coherent = i % 2 == 1;
  RandomInstance inst = random_instance(rng, opts.bounds, coherent);
  return {inst.space, coherent};
}

CheckResult delta_l1(Sampler& rng, const Options&) {
  CheckResult r;
  for (std::size_t n = 2; n <= 10; ++n) {
    MajorizedSpace s = make_delta_instance(n).space;
    for (int k = 0; k < 100; ++k, ++r.cases) {
      RVector v = rng.vector(n, -4, 4, 5);
      Rational got = finite_norm(s, v);
      if (got != v.l1()) {
        fail("p_M differs from the l1 norm", {{"n", n}, {"v", js::to_json(v)}, {"p_M", js::to_json(got)}});
      }
    }
  }
  return r;
}

CheckResult lex_counterexample(Sampler&, const Options&) {
  CheckResult r;
  NormResult zero = norm_p_lex2(PositiveSet{{RVector{1, 0}}}, RVector{0, 1});
  ++r.cases;
  if (!zero.finite() || !zero.value->is_zero() || zero.attained) {
    fail("p_M((0,1)) for M = {(1,0)} should be an unattained 0",
         {{"result", js::to_json(zero, true)}});
  }
  NormResult one = norm_p_lex2(PositiveSet{{RVector{1, 0}}}, RVector{1, 0});
  ++r.cases;
  if (!one.finite() || *one.value != Rational(1)) fail("p_M((1,0)) should be 1", {{"result", js::to_json(one, true)}});
  MajorizedSpace pair(Cone::lex2(), PositiveSet{{RVector{1, 1}, RVector{0, 1}}});
  CoherenceVerdict v = check_coherent(pair);
  ++r.cases;
  if (v.coherent || !verify_incoherence_witness(pair, v.witness) || !verify_incoherence_witness(pair, RVector{1, -2})) {
    fail("M = {(1,1),(0,1)} should be incoherent with witness (1,-2)", {{"verdict", js::to_json(v, true)}});
  }
  return r;
}

CheckResult f2_incoherence(Sampler&, const Options&) {
  CheckResult r;
  for (std::size_t radius = 2; radius <= 4; ++radius, ++r.cases) {
    GalleryInstance g = make_f2_ball_instance(radius);
    CoherenceVerdict v = check_coherent(g.space);
    if (v.coherent || !verify_incoherence_witness(g.space, f2_witness())) {
      fail("free-group ball instance should be incoherent", {{"radius", radius}, {"verdict", js::to_json(v, true)}});
    }
  }
  return r;
}

CheckResult principal_chain(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 50; ++i) {
    RandomInstance inst = random_instance(rng, opts.bounds);
    std::vector<RVector> samples = inst.space.positive_set().vectors;
    for (int k = 0; k < 4; ++k) samples.push_back(random_in_ideal(rng, inst.space));
    ChainReport rep = principal_ideal_identity_check(inst.space, samples);
    r.cases += samples.size();
    if (!rep.pass()) {
      std::size_t at = rep.first_violation ? *rep.first_violation : *rep.first_outside;
      fail("||v||_u <= p_M(v) <= p_M(u) ||v||_u violated",
           {{"instance", instance_json(inst.space)},
            {"v", js::to_json(samples[at])},
            {"p_M", opt_json(rep.rows[at].pm)},
            {"unit_norm", opt_json(rep.rows[at].unit_norm)},
            {"p_M(u)", js::to_json(rep.pm_unit)}});
    }
  }
  for (int i = 0; i < 20; ++i) {
    RandomInstance inst = random_instance_of_size(rng, 1, opts.bounds);
    const RVector& m = inst.space.positive_set()[0];
    for (int k = 0; k < 4; ++k, ++r.cases) {
      RVector v = random_in_ideal(rng, inst.space);
      Rational pm = finite_norm(inst.space, v);
      auto un = order_unit_norm(inst.space.cone(), m, v);
      if (!un || *un != pm) {
        fail("with |M| = 1, p_M should equal ||.||_m",
             {{"instance", instance_json(inst.space)}, {"v", js::to_json(v)}, {"p_M", js::to_json(pm)},
              {"unit_norm", opt_json(un)}});
      }
    }
  }
  return r;
}

CheckResult coherence_duality(Sampler& rng, const Options& opts) {
  CheckResult r;
  const std::size_t count = 100;
  for (std::size_t i = 0; i < count; ++i, ++r.cases) {
    MixedInstance inst = mixed_instance(rng, opts, i, count);
    CoherenceVerdict v = check_coherent(inst.space);
    bool witness_ok = !v.coherent && verify_incoherence_witness(inst.space, v.witness);
    bool cert_ok = v.coherent && verify_verdict(inst.space, v);
    if (witness_ok == cert_ok) {
      fail("expected exactly one verified certificate",
           {{"instance", instance_json(inst.space)}, {"verdict", js::to_json(v, true)}});
    }
    if (inst.coherent_by_construction && !v.coherent) {
      fail("set normalised by a strictly positive functional reported incoherent",
           {{"instance", instance_json(inst.space)}, {"verdict", js::to_json(v, true)}});
    }
  }
  return r;
}

CheckResult coherence_additivity(Sampler& rng, const Options& opts) {
  CheckResult r;
  const std::size_t count = 20;
  for (std::size_t i = 0; i < count; ++i) {
    MixedInstance inst = mixed_instance(rng, opts, i, count);
    std::vector<RVector> probes;
    for (int k = 0; k < 30; ++k) probes.push_back(nonnegative_coefficients(rng, inst.space.size()));
    AdditivityReport rep = additivity_check(inst.space, probes);
    r.cases += rep.rows.size();
    if (!rep.pass()) {
      Json rows = Json::array();
      for (const auto& row : rep.rows) {
        rows.push_back({{"t", js::to_json(row.t)}, {"p_M", js::to_json(row.pm)}, {"sum", js::to_json(row.sum)}});
      }
      fail(rep.coherent ? "coherent set with a non-additive probe" : "incoherent set additive on every probe",
           {{"instance", instance_json(inst.space)}, {"probes", rows}});
    }
  }
  return r;
}

CheckResult certificate_functional(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 20; ++i, ++r.cases) {
    RandomInstance inst = random_instance(rng, opts.bounds, true);
    const MajorizedSpace& s = inst.space;
    CoherenceVerdict v = check_coherent(s);
    Json payload = {{"instance", instance_json(s)}, {"verdict", js::to_json(v, true)}};
    if (!v.coherent) fail("expected a coherent set", payload);
    if (!is_positive_on_ideal(s, v.phi)) fail("certificate not positive on E_M", payload);
    if (op_norm(s, v.phi) != Rational(1)) fail("certificate operator norm differs from 1", payload);
    for (const auto& m : s.positive_set().vectors) {
      if (finite_norm(s, m) != Rational(1)) fail("p_M(m) differs from 1 on a coherent set", payload);
    }
    RVector w = nonnegative_coefficients(rng, s.size());
    w *= inverse(w.sum());
    if (finite_norm(s, s.combination(w)) > Rational(1)) fail("base element with p_M > 1", payload);
  }
  return r;
}

CheckResult coherence_embedding(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 15; ++i) {
    RandomInstance inst = random_instance(rng, opts.bounds, true);
    const MajorizedSpace& s = inst.space;
    std::vector<std::pair<RVector, RVector>> pairs;
    RMatrix cols = RMatrix::from_columns(s.positive_set().vectors, s.dim());
    for (const auto& n : null_space(cols)) {
      // t and t + n / max|n| share their image; t has entries >= 1.
      Rational scale;
      for (const auto& x : n) scale = std::max(scale, abs(x));
      RVector t = rng.vector(s.size(), 1, 3, 2);
      pairs.emplace_back(t, t + n * inverse(scale));
    }
    for (int k = 0; k < 3; ++k) pairs.emplace_back(nonnegative_coefficients(rng, s.size()), nonnegative_coefficients(rng, s.size()));
    EmbeddingReport rep = embedding_check(s, pairs);
    r.cases += pairs.size();
    if (!rep.pass()) fail("l1 embedding property violated", {{"instance", instance_json(s)}});
  }
  return r;
}

CheckResult coherence_scaling(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 30; ++i, ++r.cases) {
    RandomInstance inst = random_instance(rng, opts.bounds, i % 2 == 0);
    Rational q = rng.rational(1, 4, 3);
    PositiveSet scaled;
    for (const auto& m : inst.space.positive_set().vectors) scaled.vectors.push_back(m * q);
    MajorizedSpace t(inst.space.cone(), scaled);
    CoherenceVerdict a = check_coherent(inst.space);
    CoherenceVerdict b = check_coherent(t);
    bool ok = a.coherent == b.coherent && (!a.coherent || verify_coherence_certificate(t, a.phi * inverse(q)));
    if (!ok) {
      fail("verdict not invariant under scaling of M",
           {{"instance", instance_json(inst.space)}, {"scale", js::to_json(q)}});
    }
  }
  return r;
}

CheckResult continuity(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 20; ++i) {
    RandomInstance inst = random_instance(rng, opts.bounds);
    Functional psi = random_positive_functional(rng, inst);
    std::vector<RVector> samples = inst.space.positive_set().vectors;
    samples.emplace_back(inst.space.dim());
    for (int k = 0; k < 8; ++k) samples.push_back(random_in_ideal(rng, inst.space));
    ContinuityReport rep = continuity_bound_check(inst.space, psi, samples);
    r.cases += samples.size();
    if (!rep.pass()) {
      fail("|psi(v)| <= sup_M psi * p_M(v) violated", {{"instance", instance_json(inst.space)}, {"psi", js::to_json(psi)}});
    }
  }
  return r;
}

CheckResult modulus_bound(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 20; ++i, ++r.cases) {
    auto dim = static_cast<std::size_t>(rng.integer(1, static_cast<long>(opts.bounds.max_dim)));
    auto size = static_cast<std::size_t>(rng.integer(1, static_cast<long>(opts.bounds.max_m)));
    PositiveSet m;
    while (m.size() < size) {
      RVector x = rng.vector(dim, 0, opts.bounds.entry);
      if (!x.is_zero()) m.vectors.push_back(std::move(x));
    }
    MajorizedSpace s(Cone::orthant(dim), m);
    Functional psi = rng.vector(dim, -4, 4, 2);
    auto b = modulus_bound_check(s, psi);
    if (!b) fail("orthant not recognised as a coordinate cone", {{"instance", instance_json(s)}});
    if (!b->holds()) {
      fail("op_norm(psi) exceeds max |psi|(m)",
           {{"instance", instance_json(s)}, {"psi", js::to_json(psi)}, {"op_norm", js::to_json(b->op)}});
    }
  }
  return r;
}

CheckResult opnorm_squeeze(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 50; ++i, r.cases += 2) {
    RandomInstance inst = random_instance(rng, opts.bounds);
    const MajorizedSpace& s = inst.space;
    Functional pos = random_positive_functional(rng, inst);
    Rational op = op_norm(s, pos);
    Rational sup = sup_over_m(pos, s.positive_set());
    if (op != sup) {
      fail("positive functional with op_norm != max_j psi(m_j)",
           {{"instance", instance_json(s)}, {"psi", js::to_json(pos)}, {"op_norm", js::to_json(op)}, {"sup", js::to_json(sup)}});
    }
    Functional any = rng.vector(s.dim(), -4, 4, 2);
    Rational op_any = op_norm(s, any);
    if (sup_over_m(any, s.positive_set()) > op_any) {
      fail("max_j psi(m_j) exceeds op_norm", {{"instance", instance_json(s)}, {"psi", js::to_json(any)}});
    }
    Rational q = rng.rational(-3, 3, 2);
    if (op_norm(s, any * q) != abs(q) * op_any) {
      fail("op_norm not homogeneous", {{"instance", instance_json(s)}, {"psi", js::to_json(any)}, {"q", js::to_json(q)}});
    }
  }
  return r;
}

CheckResult gallery_expectations(Sampler&, const Options&) {
  CheckResult r;
  for (const auto& name : gallery_names()) {
    GalleryInstance g = make_gallery_instance(name);
    r.cases += g.expectations.size();
    auto bad = g.failing();
    if (!bad.empty()) fail("gallery expectation failed", {{"instance", name}, {"claim", g.expectations[bad[0]].claim}});
  }
  return r;
}

CheckResult lp_trust(Sampler& rng, const Options&) {
  CheckResult r;
  for (int i = 0; i < 200; ++i, ++r.cases) {
    lp::LinearProgram prog = random_lp(rng);
    lp::LpSolution sol = lp::solve(prog);
    lp::LpSolution ref = lp::brute_force_solve(prog);
    bool agree = sol.status == ref.status && (sol.status != lp::Status::Optimal || sol.value == ref.value);
    if (!agree || !lp::verify_solution(prog, sol)) {
      Json rows = Json::array();
      for (std::size_t k = 0; k < prog.num_rows(); ++k) rows.push_back(js::to_json(prog.a.row(k)));
      Json bounds = Json::array();
      for (auto b : prog.bounds) bounds.push_back(b == lp::Bound::Free ? "free" : "nonnegative");
      fail(agree ? "certificate failed verification" : "simplex and enumeration disagree",
           {{"objective", js::to_json(prog.objective)}, {"A", rows}, {"b", js::to_json(prog.b)}, {"bounds", bounds},
            {"simplex", lp::to_string(sol.status)}, {"enumeration", lp::to_string(ref.status)}});
    }
  }
  return r;
}

CheckResult norm_axioms(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 20; ++i) {
    RandomInstance inst = random_instance(rng, opts.bounds);
    const MajorizedSpace& s = inst.space;
    const Cone& k = s.cone();
    const bool coherent = check_coherent(s).coherent;
    auto c = domination_constant(s, inst.order_unit);
    if (!c) fail("interior order unit does not dominate M", {{"instance", instance_json(s)}});

    for (const auto& m : s.positive_set().vectors) {
      Rational pm = finite_norm(s, m);
      if (pm > Rational(1) || (coherent && pm != Rational(1))) {
        fail("p_M(m) > 1, or != 1 on a coherent set", {{"instance", instance_json(s)}, {"m", js::to_json(m)}});
      }
    }

    // Closure: adding a sub-convex combination of M leaves p_M unchanged.
    RVector w = nonnegative_coefficients(rng, s.size());
    w *= inverse(w.sum() + Rational(rng.integer(0, 1)));
    PositiveSet bigger = s.positive_set();
    bigger.vectors.push_back(s.combination(w));
    MajorizedSpace closed(k, bigger);

    for (int j = 0; j < 10; ++j, ++r.cases) {
      RVector v = random_in_ideal(rng, s);
      RVector x = random_in_ideal(rng, s);
      Json where = {{"instance", instance_json(s)}, {"v", js::to_json(v)}};
      Rational pv = finite_norm(s, v);
      if (pv.sign() < 0 || (pv.is_zero() && !v.is_zero())) fail("p_M not positive definite", where);
      Rational q = rng.rational(-3, 3, 3);
      if (finite_norm(s, v * q) != abs(q) * pv) fail("p_M not homogeneous", where);
      if (finite_norm(s, v + x) > pv + finite_norm(s, x)) fail("triangle inequality violated", where);

      RVector lo = s.combination(nonnegative_coefficients(rng, s.size()));
      RVector hi = lo + s.combination(nonnegative_coefficients(rng, s.size()));
      if (!leq(k, lo, hi) || finite_norm(s, lo) > finite_norm(s, hi)) fail("p_M not monotone", where);

      auto un = order_unit_norm(k, inst.order_unit, v);
      if (!un || *un > *c * pv) fail("domination ||v||_u <= C p_M(v) violated", where);

      if (finite_norm(closed, v) != pv) fail("p_M changed after closing M under sub-convex combinations", where);

      RVector y = rng.vector(s.dim(), -4, 4);
      if (in_ideal(s, y) != norm_p(s, y).finite()) fail("in_ideal disagrees with finiteness of p_M", where);
    }
  }
  return r;
}

void mutate(RVector& t) {
  for (auto& x : t) {
    if (!x.is_zero()) {
      x = -x;
      return;
    }
  }
  if (!t.empty()) t[0] += 1;
}

CheckResult norm_witness(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 20; ++i) {
    RandomInstance inst = random_instance(rng, opts.bounds);
    for (int j = 0; j < 10; ++j, ++r.cases) {
      RVector v = random_in_ideal(rng, inst.space);
      NormResult n = norm_p(inst.space, v);
      if (opts.mutant == Mutant::FlipWitness) mutate(n.witness);
      if (!verify_norm_witness(inst.space, v, n)) {
        fail("p_M witness failed verification",
             {{"instance", instance_json(inst.space)}, {"v", js::to_json(v)}, {"result", js::to_json(n, true)}});
      }
    }
  }
  return r;
}

CheckResult normalized_pairs(Sampler& rng, const Options& opts) {
  CheckResult r;
  for (int i = 0; i < 100; ++i, ++r.cases) {
    auto dim = static_cast<std::size_t>(rng.integer(1, static_cast<long>(opts.bounds.max_dim)));
    RandomCone k = random_cone(rng, dim, opts.bounds.entry);
    std::pair<RVector, RVector> p{random_cone_element(rng, k), random_cone_element(rng, k)};
    PairScanReport rep = pair_coherence_scan(k.cone, {p}, true);
    if (!rep.pass()) {
      fail("normalised positive pair incoherent in a closed cone",
           {{"cone", js::to_json(k.cone)}, {"v", js::to_json(p.first)}, {"w", js::to_json(p.second)}});
    }
  }
  PairScanReport lex = pair_coherence_scan(Cone::lex2(), {{RVector{1, 1}, RVector{0, 1}}});
  ++r.cases;
  if (lex.incoherent.size() != 1) fail("lexicographic pair {(1,1),(0,1)} should be incoherent", Json::object());
  return r;
}

CheckResult truncation(Sampler& rng, const Options&) {
  CheckResult r;
  auto fail_seq = [](const char* what, const TruncationResult& t) {
    Json values = Json::array();
    for (const auto& x : t.values) values.push_back(opt_json(x));
    fail(what, {{"values", values}});
  };
  for (std::size_t dim = 3; dim <= 6; ++dim) {
    for (int k = 0; k < 5; ++k, ++r.cases) {
      auto support = static_cast<std::size_t>(rng.integer(1, static_cast<long>(dim)));
      RVector v(dim);
      for (std::size_t i = 0; i < support; ++i) v[i] = rng.rational(-4, 4, 3);
      v[support - 1] = rng.rational(1, 4, 3);
      TruncationResult t = truncation_sequence(delta_rule(dim), dim, v);
      if (!t.nonincreasing) fail_seq("delta-rule sequence increases", t);
      for (std::size_t j = 0; j < dim; ++j) {
        bool want_finite = j + 1 >= support;
        if (t.values[j].has_value() != want_finite || (want_finite && *t.values[j] != v.l1())) {
          fail_seq("delta-rule sequence does not stabilise at the l1 norm", t);
        }
      }
      if (t.stable_from != support) fail_seq("delta-rule sequence stabilises at the wrong index", t);
    }
  }
  TruncationResult zero = truncation_sequence(delta_rule(4), 4, RVector(4));
  ++r.cases;
  if (!std::all_of(zero.values.begin(), zero.values.end(), [](const auto& x) { return x && x->is_zero(); })) {
    fail_seq("zero vector should give zeros", zero);
  }
  TruncationResult tilted = truncation_sequence(tilted_rule(), 8, RVector{0, 1});
  ++r.cases;
  if (!tilted.nonincreasing) fail_seq("tilted-rule sequence increases", tilted);
  TruncationResult approach = truncation_sequence(approaching_rule(), 8, RVector{0, 1});
  ++r.cases;
  for (std::size_t k = 1; k <= approach.values.size(); ++k) {
    const auto& x = approach.values[k - 1];
    if (!x || *x != Rational(static_cast<long>(k + 1), static_cast<long>(k))) {
      fail_seq("approaching-rule sequence should be (k+1)/k", approach);
    }
  }
  return r;
}

std::vector<Check> build_checks() {
  std::vector<Check> c = {
      {"archimedean.normalized_pairs", "pairs rescaled to unit ||.||_{v+w} are coherent in closed cones; the lexicographic pair is not",
       normalized_pairs},
      {"coherence.additivity", "coherent iff p_M(sum t m) = sum t on all probes", coherence_additivity},
      {"coherence.certificate_functional", "the coherence functional is positive with operator norm 1 and p_M = 1 on M",
       certificate_functional},
      {"coherence.duality", "exactly one of witness / dual certificate, each verified", coherence_duality},
      {"coherence.embedding", "coherent M embeds l1 isometrically", coherence_embedding},
      {"coherence.scaling", "scaling M preserves the verdict; the certificate rescales", coherence_scaling},
      {"delta_basis.l1_identity", "p_M = l1 norm for M = unit vectors, n = 2..10", delta_l1},
      {"f2.incoherence", "free-group ball instances are incoherent with witness (1,-1,-1)", f2_incoherence},
      {"functionals.continuity", "|psi(v)| <= sup_M psi * p_M(v) for positive psi", continuity},
      {"functionals.modulus_bound", "op_norm(psi) <= max |psi|(m) on coordinate cones", modulus_bound},
      {"functionals.operator_norm_squeeze", "op_norm = max psi(m) for positive psi, >= for any psi", opnorm_squeeze},
      {"gallery.expectations", "every gallery expectation holds", gallery_expectations},
      {"lex.counterexample", "unattained zero infimum and incoherent pair in the lexicographic plane", lex_counterexample},
      {"lp.trustworthiness", "simplex agrees with vertex enumeration and its certificates verify", lp_trust},
      {"p_M.norm_axioms", "norm axioms, monotonicity, domination, closure invariance", norm_axioms},
      {"p_M.witness", "every p_M witness passes substitution", norm_witness},
      {"principal_ideal.chain", "||v||_u <= p_M(v) <= p_M(u) ||v||_u with u = sum M", principal_chain},
      {"truncation.monotone", "truncation sequences are nonincreasing and stabilise", truncation},
  };
  std::sort(c.begin(), c.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return c;
}

std::uint64_t stream_of(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = build_checks();
  return checks;
}

CheckResult run_check(const Check& check, const Options& opts) {
  Sampler rng(opts.seed, stream_of(check.name));
  CheckResult r;
  try {
    r = check.run(rng, opts);
  } catch (const Counterexample& c) {
    r.status = Status::Fail;
    r.reason = c.reason;
    r.counterexample = c.payload;
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.reason = std::string("exception: ") + e.what();
  }
  r.name = check.name;
  return r;
}

bool Report::passed() const {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == Status::Fail; });
}

Report run_suite(const Options& opts, const std::vector<std::string>& names) {
  std::vector<const Check*> selected;
  for (const auto& c : all_checks()) {
    if (names.empty() || std::find(names.begin(), names.end(), c.name) != names.end()) selected.push_back(&c);
  }
  for (const auto& n : names) {
    if (std::none_of(all_checks().begin(), all_checks().end(), [&](const Check& c) { return c.name == n; })) {
      throw InvalidInput("unknown check: " + n);
    }
  }
  Report rep;
  rep.seed = opts.seed;
  rep.results.resize(selected.size());
  unsigned workers = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, selected.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) rep.results[i] = run_check(*selected[i], opts);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  return rep;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.results) {
    Json j = {{"name", c.name}, {"status", to_string(c.status)}, {"cases", c.cases}};
    if (!c.reason.empty()) j["reason"] = c.reason;
    if (!c.counterexample.is_null()) j["counterexample"] = c.counterexample;
    checks.push_back(std::move(j));
  }
  return {{"seed", r.seed}, {"passed", r.passed()}, {"checks", checks}};
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.results) {
    out << (c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP") << "  " << c.name
        << " (" << c.cases << " cases)";
    if (!c.reason.empty()) out << ": " << c.reason;
    out << '\n';
    if (!c.counterexample.is_null()) out << "      counterexample: " << c.counterexample.dump() << '\n';
  }
  out << (r.passed() ? "all checks passed" : "some checks failed") << " (seed " << r.seed << ")\n";
  return out.str();
}

}  // namespace ordvec::suite
