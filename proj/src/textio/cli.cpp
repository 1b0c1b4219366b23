#include "lpi/textio/cli.hpp"

#include <cstdlib>
#include <functional>
#include <random>

#include <CLI11.hpp>

#include "lpi/checkers/annihilator.hpp"
#include "lpi/checkers/bounds.hpp"
#include "lpi/checkers/expansion.hpp"
#include "lpi/checkers/idempotents.hpp"
#include "lpi/checkers/identity.hpp"
#include "lpi/checkers/nilpotency.hpp"
#include "lpi/checkers/quotient_check.hpp"
#include "lpi/textio/descriptors.hpp"
#include "lpi/textio/parser.hpp"
#include "lpi/textio/report.hpp"

namespace lpi::text {

namespace {

struct Common {
  std::optional<std::uint64_t> seed;
  std::string mode = "exhaustive";
  std::uint64_t budget = 1000;
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 1;
};

std::uint64_t env_number(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  std::string s(v);
  if (s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
    throw PreconditionError(std::string(name) + " must be a nonnegative integer, got '" + s + "'");
  return std::stoull(s);
}

class Session {
 public:
  Session(const std::vector<std::string>& args, std::ostream& err) : args_(args), err_(err) {}

  Common common;

  SearchConfig config(bool force_random = false) {
    SearchConfig cfg;
    cfg.mode = force_random ? Mode::random : parse_mode(common.mode);
    cfg.budget = common.budget;
    cfg.cap = common.cap;
    cfg.workers = std::max(1u, common.workers);
    if (cfg.mode == Mode::random) cfg.seed = seed();
    return cfg;
  }

  std::uint64_t seed() {
    if (!common.seed) {
      std::random_device rd;
      common.seed = (std::uint64_t{rd()} << 32) ^ rd();
      err_ << "seed: " << *common.seed << "\n";
    }
    return *common.seed;
  }

  Report report(const std::string& command) const {
    Report r;
    r.command = command;
    r.command_line = quote_command_line(args_);
    return r;
  }

  Json config_snapshot(const SearchConfig& cfg) const {
    Json c = Json::object();
    c["mode"] = to_string(cfg.mode);
    c["budget"] = cfg.budget;
    c["cap"] = cfg.cap;
    c["workers"] = cfg.workers;
    c["seed"] = cfg.mode == Mode::random ? Json(cfg.seed) : Json(nullptr);
    return c;
  }

 private:
  std::vector<std::string> args_;
  std::ostream& err_;
};

template <class F>
auto with_ring(const AnyRing& ring, F&& f) {
  return std::visit([&](const auto& r) { return f(r); }, ring);
}

template <Ring R>
Json tuple_witness(const std::vector<Matrix<R>>& t) {
  return json_matrices(t);
}

// ---- individual commands ----

Report cmd_parse(Session& s, const std::string& expr_text, const std::string& ring_text, const std::string& context) {
  Report r = s.report("parse");
  Expr tree = parse(expr_text);
  std::string ctx = context;
  if (ctx == "auto") ctx = uses_quotient_letters(tree) ? "quotient" : "laurent";
  if (ctx != "laurent" && ctx != "quotient") throw PreconditionError("context must be auto, laurent or quotient");
  r.expression = print(tree);
  r.details["tree"] = print(tree);
  r.details["nodes"] = node_count(tree);
  r.details["context"] = ctx;
  r.details["ring"] = ring_text;
  with_ring(parse_ring(ring_text), [&](const auto& ring) {
    if (ctx == "laurent") {
      auto e = to_laurent(tree, ring);
      r.details["lowered"] = e.str();
      r.details["terms"] = e.size();
    } else {
      auto e = to_quotient(tree, ring);
      r.details["lowered"] = e.str();
      r.details["terms"] = e.size();
    }
    return 0;
  });
  return r;
}

Report cmd_check_lpi(Session& s, const std::string& algebra, const std::string& expr_text) {
  Report r = s.report("check-lpi");
  AlgebraSpec spec = parse_algebra(algebra);
  Expr tree = parse(expr_text);
  r.algebra = algebra_name(spec);
  r.expression = print(tree);
  auto cfg = s.config();
  r.config = s.config_snapshot(cfg);
  with_ring(spec.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    AlgebraHandle<R> h(spec.family, spec.n, ring);
    auto e = to_laurent(tree, ring);
    auto v = check_lpi(h, e, cfg);
    apply_stats(r, v.outcome, v.stats);
    r.details["element"] = e.str();
    r.details["ground"] = v.stats.ground;
    r.details["units_only"] = v.units_only;
    r.details["prefilter"] = v.prefilter;
    if (v.witness) {
      r.witness = tuple_witness(*v.witness);
      r.details["value"] = json_matrix(reverify::lpi_value(e, *v.witness, h.n()));
    }
    return 0;
  });
  return r;
}

Report cmd_check_gi(Session& s, const std::string& algebra, const std::string& word_text) {
  Report r = s.report("check-gi");
  AlgebraSpec spec = parse_algebra(algebra);
  FreeWord w = parse_word(word_text);
  r.algebra = algebra_name(spec);
  r.expression = w.str();
  auto cfg = s.config();
  r.config = s.config_snapshot(cfg);
  with_ring(spec.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    AlgebraHandle<R> h(spec.family, spec.n, ring);
    auto v = check_group_identity(h, w, cfg);
    apply_stats(r, v.outcome, v.stats);
    r.details["ground"] = v.stats.ground;
    r.details["as_lpi"] = w.is_identity() ? Json(nullptr) : Json(gi_to_lpi(ring, w).str());
    if (v.witness) {
      r.witness = tuple_witness(*v.witness);
      r.details["value"] = json_matrix(evaluate(LaurentElement<R>::word(ring, w), std::span<const Matrix<R>>(*v.witness)));
    }
    return 0;
  });
  return r;
}

Report cmd_al_verify(Session& s, int n, const std::string& field_text, int degree) {
  Report r = s.report("al-verify");
  auto ring = parse_ring(field_text);
  const auto* field = std::get_if<PrimeField>(&ring);
  if (!field) throw PreconditionError("al-verify needs a prime field, got " + field_text);
  if (n < 1 || static_cast<std::size_t>(n) > kMaxDimension) throw PreconditionError("n must be in 1..6");
  const int deg = degree > 0 ? degree : 2 * n;
  r.algebra = "M" + std::to_string(n) + "@" + field->name();
  r.expression = "S(" + std::to_string(deg) + ")";
  auto cfg = s.config();
  r.config = s.config_snapshot(cfg);
  auto v = al_verify(n, field->characteristic(), cfg, deg);
  apply_stats(r, v.outcome, v.stats);
  r.details["degree"] = deg;
  r.details["n"] = n;
  if (v.witness) r.witness = tuple_witness(*v.witness);
  return r;
}

Report cmd_witness(Session& s, const std::string& expr_text, const std::string& ring_text) {
  Report r = s.report("witness");
  Expr tree = parse(expr_text);
  r.expression = print(tree);
  with_ring(parse_ring(ring_text), [&](const auto& ring) {
    auto e = to_laurent(tree, ring);
    r.details["element"] = e.str();
    if (!is_admissible(e)) throw PreconditionError("inadmissible LPI " + e.str() + ": some nonconstant word has every exponent sum zero");
    auto norm = normalize(e);
    auto prof = profile(norm.element);
    auto diag = diagonal_specialize(norm.element);
    r.details["l"] = prof.l;
    r.details["r"] = prof.r;
    r.details["d"] = prof.d;
    r.details["normalized"] = norm.element.str();
    r.details["variable"] = norm.variable == 0 ? Json(nullptr) : Json("x" + std::to_string(norm.variable));
    r.details["k"] = norm.k;
    r.details["diagonal"] = diag.diagonal.str();
    r.details["collapsed"] = diag.collapsed();
    r.details["f0"] = diag.f0 ? json_poly(*diag.f0) : Json(nullptr);
    return 0;
  });
  return r;
}

struct NilOptions {
  std::uint64_t m_max = 8;
  std::optional<std::uint64_t> square_zero_d;
  std::optional<std::string> a, b;
};

Report cmd_nilbound(Session& s, const std::string& algebra, const NilOptions& o) {
  Report r = s.report("nilbound");
  AlgebraSpec spec = parse_algebra(algebra);
  r.algebra = algebra_name(spec);
  with_ring(spec.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    AlgebraHandle<R> h(spec.family, spec.n, ring);
    if (o.a || o.b) {
      if (!o.a || !o.b) throw PreconditionError("--a and --b go together");
      Stopwatch clock;
      auto a = matrix_literal(*o.a, h);
      auto b = matrix_literal(*o.b, h);
      auto ba = b * a;
      r.expression = "b*a";
      r.details["ba"] = json_matrix(ba);
      Json powers = Json::array();
      Matrix<R> p = ba;
      for (std::uint64_t k = 1; k <= o.m_max; ++k) {
        powers.push_back(json_matrix(p));
        if (k < o.m_max) p = p * ba;
      }
      r.details["powers"] = std::move(powers);
      auto idx = nilpotency_index(ba, o.m_max);
      r.details["nilpotency_index"] = idx ? Json(*idx) : Json(nullptr);
      r.details["minimal_polynomial"] = minimal_polynomial(ba).str();
      r.details["m_max"] = o.m_max;
      r.evaluations = o.m_max;
      r.outcome = idx ? "holds" : "counterexample";
      if (!idx) {
        Json w = Json::object();
        w["a"] = json_matrix(a);
        w["b"] = json_matrix(b);
        r.witness = std::move(w);
      }
      r.elapsed_ms = clock.elapsed_ms();
      return 0;
    }
    auto cfg = s.config();
    r.config = s.config_snapshot(cfg);
    if (o.square_zero_d) {
      r.expression = "(ab)^" + std::to_string(2 * *o.square_zero_d);
      auto v = square_zero_nilpotency(h, *o.square_zero_d, cfg);
      apply_stats(r, v.outcome, v.stats);
      r.details["d"] = *o.square_zero_d;
      r.details["skipped_not_nilpotent"] = v.stats.skipped;
      if (v.witness) {
        Json w = Json::object();
        w["a"] = json_matrix(v.witness->a);
        w["b"] = json_matrix(v.witness->b);
        r.witness = std::move(w);
      }
      return 0;
    }
    r.expression = "(b*a*c*u)^m";
    auto res = nil_exponent_search(h, o.m_max, cfg);
    apply_stats(r, res.verdict.outcome, res.verdict.stats);
    r.details["m_max"] = o.m_max;
    r.details["minimal_m"] = res.minimal_m ? Json(*res.minimal_m) : Json(nullptr);
    r.details["ground"] = res.verdict.stats.ground;
    if (res.verdict.witness) {
      const auto& q = *res.verdict.witness;
      Json w = Json::object();
      w["a"] = json_matrix(q.a);
      w["b"] = json_matrix(q.b);
      w["c"] = json_matrix(q.c);
      w["u"] = json_matrix(q.u);
      r.witness = std::move(w);
      auto v = q.b * q.a * q.c * q.u;
      r.details["bacu"] = json_matrix(v);
      r.details["power_at_m_max"] = json_matrix(mat_power(v, o.m_max));
    }
    return 0;
  });
  return r;
}

Report cmd_annihilator(Session& s, const std::string& algebra, bool with_duplicates) {
  Report r = s.report("annihilator");
  AlgebraSpec spec = parse_algebra(algebra);
  r.algebra = algebra_name(spec);
  r.expression = "g(ab)";
  Stopwatch clock;
  const auto* field = std::get_if<PrimeField>(&spec.ring);
  if (!field) throw PreconditionError("annihilator needs a finite algebra (Fp coefficients)");
  AlgebraHandle<PrimeField> h(spec.family, spec.n, *field);
  auto ann = finite_annihilator(h, with_duplicates, s.common.cap);
  r.details["g"] = json_poly(ann.g);
  r.details["with_duplicates"] = ann.with_duplicates;
  r.details["elements"] = ann.elements;
  r.details["pairs_verified"] = ann.pairs_verified;
  Json factors = Json::array();
  for (const auto& [cycle, count] : ann.factors) {
    Json f = Json::object();
    f["t"] = cycle.t;
    f["r"] = cycle.r;
    f["elements"] = count;
    f["p"] = UniPoly<PrimeField>::binomial_difference(*field, cycle.r, cycle.t).str();
    factors.push_back(std::move(f));
  }
  r.details["factors"] = std::move(factors);
  r.evaluations = ann.pairs_verified;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Json counterexample_json(const UniPoly<IntegerRing>& g, const InfiniteCounterexample& c) {
  Json j = Json::object();
  j["g"] = json_poly(g);
  j["t"] = json_scalar(c.t);
  j["trials"] = c.trials;
  j["g_ab"] = json_matrix(c.value);
  return j;
}

Report cmd_counterexample(Session& s, const std::optional<std::string>& poly, std::size_t max_degree) {
  Report r = s.report("counterexample");
  r.algebra = "M2@ZZ";
  Stopwatch clock;
  if (poly) {
    auto g = parse_integer_polynomial(*poly);
    r.expression = g.str();
    auto c = infinite_counterexample(g);
    r.details = counterexample_json(g, c);
    Json w = Json::object();
    w["a"] = json_matrix(c.a);
    w["b"] = json_matrix(c.b);
    r.witness = std::move(w);
    r.evaluations = c.trials;
  } else {
    auto cfg = s.config(true);
    r.config = s.config_snapshot(cfg);
    r.config["max_degree"] = max_degree;
    r.mode = "random";
    r.seed = cfg.seed;
    Json cases = Json::array();
    for (std::uint64_t i = 0; i < cfg.budget; ++i) {
      Rng rng = substream(cfg.seed, i);
      auto g = sample_integer_polynomial(rng, max_degree);
      auto c = infinite_counterexample(g);
      if (i == 0) {
        Json w = Json::object();
        w["a"] = json_matrix(c.a);
        w["b"] = json_matrix(c.b);
        r.witness = std::move(w);
      }
      cases.push_back(counterexample_json(g, c));
      r.evaluations += c.trials;
    }
    r.details["cases"] = std::move(cases);
  }
  r.outcome = "counterexample";
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_bounds(Session& s, const std::string& d_text, const std::optional<std::string>& q_text) {
  Report r = s.report("bounds");
  auto parse_positive = [](const std::string& t, const char* what) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw PreconditionError(std::string(what) + " must be a positive integer, got '" + t + "'");
    return Integer::parse(t);
  };
  Integer d = parse_positive(d_text, "--d");
  std::optional<Integer> q;
  if (q_text) q = parse_positive(*q_text, "--q");
  auto b = bounds_from_d(d, q);
  r.expression = "d=" + d.str();
  r.details["d"] = json_scalar(d);
  r.details["q"] = json_scalar(b.q);
  r.details["max_field_size"] = json_scalar(b.max_field_size);
  r.details["max_dimension"] = json_scalar(b.max_dimension);
  r.details["summary"] = "|K| <= " + b.max_field_size.str() + ", n <= " + b.max_dimension.str();
  return r;
}

Report cmd_quotient(Session& s, int n, const std::string& ring_text, std::optional<std::uint64_t> samples) {
  Report r = s.report("quotient");
  if (samples) s.common.budget = *samples;
  auto cfg = s.config(true);
  r.config = s.config_snapshot(cfg);
  r.algebra = "F@" + ring_text;
  r.expression = "S(" + std::to_string(2 * n) + ")";
  with_ring(parse_ring(ring_text), [&](const auto& ring) {
    auto res = quotient_pi_check(ring, n, cfg.budget, cfg.seed, cfg.workers);
    apply_stats(r, res.verdict.outcome, res.verdict.stats);
    r.details["n"] = n;
    r.details["s2_units"] = res.s2_units.str();
    r.details["s2_units_nonzero"] = !res.s2_units.is_zero();
    r.details["s3_units"] = res.s3_units.str();
    r.details["s3_units_nonzero"] = !res.s3_units.is_zero();
    if (res.verdict.witness) {
      Json w = Json::array();
      for (const auto& q : *res.verdict.witness) w.push_back(q.str());
      r.witness = std::move(w);
    }
    return 0;
  });
  return r;
}

template <Ring R>
Json comparison_json(const ExpansionComparison<R>& c) {
  Json j = Json::object();
  j["computed"] = c.computed.str();
  j["computed_xy"] = xy_text(c.computed.str());
  j["stated"] = c.stated.str();
  j["stated_xy"] = xy_text(c.stated.str());
  j["equal"] = c.equal;
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    Json t = Json::object();
    t["word"] = xy_text(row.word.str());
    t["computed"] = json_scalar(row.computed);
    t["stated"] = json_scalar(row.stated);
    t["match"] = row.match;
    rows.push_back(std::move(t));
  }
  j["terms"] = std::move(rows);
  return j;
}

Report cmd_s3_expand(Session& s) {
  Report r = s.report("s3-expand");
  Stopwatch clock;
  auto ex = s3_expand();
  r.expression = "S(3)(X, Y, X*Y)";
  r.details["integers"] = comparison_json(ex.integers);
  r.details["mod2"] = comparison_json(ex.mod2);
  r.details["s2"] = xy_text(ex.s2.str());
  r.details["comparison"] = ex.integers.equal ? "match" : "mismatch";
  r.details["comparison_mod2"] = ex.mod2.equal ? "match" : "mismatch";
  r.evaluations = 6;
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

Report cmd_idempotents(Session& s, const std::string& algebra) {
  Report r = s.report("idempotents");
  AlgebraSpec spec = parse_algebra(algebra);
  r.algebra = algebra_name(spec);
  r.expression = "e*m - m*e";
  Stopwatch clock;
  const auto* field = std::get_if<PrimeField>(&spec.ring);
  if (!field) throw PreconditionError("idempotents needs a finite algebra (Fp coefficients)");
  AlgebraHandle<PrimeField> h(spec.family, spec.n, *field);
  auto rep = idempotent_centrality(h, s.common.cap);
  r.mode = "exhaustive";
  r.evaluations = ElementEnumeration<PrimeField>(h, s.common.cap).size();
  r.details["idempotents"] = rep.idempotents;
  Json list = Json::array();
  for (const auto& v : rep.violators) {
    Json j = Json::object();
    j["e"] = json_matrix(v.e);
    j["m"] = json_matrix(v.m);
    list.push_back(std::move(j));
  }
  r.details["noncentral"] = std::move(list);
  r.outcome = rep.violators.empty() ? "holds" : "counterexample";
  if (!rep.violators.empty()) r.witness = r.details["noncentral"][0];
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

int exit_code(const Report& r) { return r.outcome == "counterexample" ? 1 : 0; }

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Seed for random mode (generated and printed if absent)");
  sub->add_option("--mode", c.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  sub->add_option("--budget", c.budget, "Number of random samples");
  sub->add_option("--cap", c.cap, "Largest exhaustive ground space (env LPI_CAP)");
  sub->add_option("--workers", c.workers, "Worker threads (env LPI_WORKERS)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Session session(args, err);
    session.common.cap = env_number("LPI_CAP", kDefaultCap);
    session.common.workers = static_cast<unsigned>(std::clamp<std::uint64_t>(env_number("LPI_WORKERS", 1), 1, 256));

    CLI::App app{"Laurent polynomial identity workbench", "lpi"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    std::function<Report()> action;

    std::string expr, ring = "ZZ", algebra, word, context = "auto", field = "Fp:2", d_text;
    std::optional<std::string> q_text, poly;
    int n = 2, degree = 0;
    bool duplicates = false;
    std::size_t max_degree = 6;
    std::optional<std::uint64_t> samples;
    NilOptions nil;

    auto* p = app.add_subcommand("parse", "Parse an expression and print its canonical forms");
    p->add_option("--expr", expr, "Expression")->required();
    p->add_option("--ring", ring, "ZZ or Fp:<p>");
    p->add_option("--context", context, "auto, laurent or quotient");
    add_common(p, session.common);
    p->callback([&] { action = [&] { return cmd_parse(session, expr, ring, context); }; });

    auto* cl = app.add_subcommand("check-lpi", "Check a Laurent polynomial identity on an algebra");
    cl->add_option("--algebra", algebra, "Algebra, e.g. M2@Fp:2")->required();
    cl->add_option("--expr", expr, "Laurent polynomial")->required();
    add_common(cl, session.common);
    cl->callback([&] { action = [&] { return cmd_check_lpi(session, algebra, expr); }; });

    auto* gi = app.add_subcommand("check-gi", "Check a group identity w = 1 on the units of an algebra");
    gi->add_option("--algebra", algebra, "Algebra, e.g. M2@Fp:2")->required();
    gi->add_option("--word", word, "Free group word, e.g. x1^2")->required();
    add_common(gi, session.common);
    gi->callback([&] { action = [&] { return cmd_check_gi(session, algebra, word); }; });

    auto* al = app.add_subcommand("al-verify", "Check the standard polynomial S_2n on M_n(F_p)");
    al->add_option("--n", n, "Matrix size");
    al->add_option("--field", field, "Prime field, e.g. Fp:2");
    al->add_option("--degree", degree, "Standard polynomial degree (default 2n)");
    add_common(al, session.common);
    al->callback([&] { action = [&] { return cmd_al_verify(session, n, field, degree); }; });

    auto* wi = app.add_subcommand("witness", "Normalize an LPI and report its profile l, r, d");
    wi->add_option("--expr", expr, "Laurent polynomial")->required();
    wi->add_option("--ring", ring, "ZZ or Fp:<p>");
    add_common(wi, session.common);
    wi->callback([&] { action = [&] { return cmd_witness(session, expr, ring); }; });

    auto* nb = app.add_subcommand("nilbound", "Nil exponent of (bacu) over a^2 = bc = 0");
    nb->add_option("--algebra", algebra, "Algebra, e.g. T2@Fp:2")->required();
    nb->add_option("--m-max", nil.m_max, "Largest exponent tried");
    nb->add_option("--square-zero", nil.square_zero_d, "Check (ab)^(2d) = 0 over a^2 = b^2 = 0 for this d");
    nb->add_option("--a", nil.a, "Matrix a, e.g. [[0,0],[1,0]] (with --b: report powers of ba)");
    nb->add_option("--b", nil.b, "Matrix b");
    add_common(nb, session.common);
    nb->callback([&] { action = [&] { return cmd_nilbound(session, algebra, nil); }; });

    auto* an = app.add_subcommand("annihilator", "Nonzero g with g(ab) = 0 whenever a^2 = b^2 = 0");
    an->add_option("--algebra", algebra, "Finite algebra, e.g. M2@Fp:2")->required();
    an->add_flag("--with-duplicates", duplicates, "Multiply one factor per element");
    add_common(an, session.common);
    an->callback([&] { action = [&] { return cmd_annihilator(session, algebra, duplicates); }; });

    auto* ce = app.add_subcommand("counterexample", "a, b in M2(ZZ) with a^2 = b^2 = 0 and g(ab) != 0");
    ce->add_option("--poly", poly, "Polynomial in x1 over ZZ; omit for --budget seeded random ones");
    ce->add_option("--max-degree", max_degree, "Degree bound for random polynomials");
    add_common(ce, session.common);
    ce->callback([&] { action = [&] { return cmd_counterexample(session, poly, max_degree); }; });

    auto* bo = app.add_subcommand("bounds", "Bounds |K| <= 2d and n <= 2 log_q(2d) + 2");
    bo->add_option("--d", d_text, "Degree bound d >= 1")->required();
    bo->add_option("--q", q_text, "Field size (default 2)");
    add_common(bo, session.common);
    bo->callback([&] { action = [&] { return cmd_bounds(session, d_text, q_text); }; });

    auto* qu = app.add_subcommand("quotient", "S_2n on R<x,y>/(x^2, y^2), plus S_2 and S_3 on units");
    qu->add_option("--n", n, "Half the standard polynomial degree");
    qu->add_option("--ring", ring, "ZZ or Fp:<p>");
    qu->add_option("--samples", samples, "Number of sampled tuples (same as --budget)");
    add_common(qu, session.common);
    qu->callback([&] { action = [&] { return cmd_quotient(session, n, ring, samples); }; });

    auto* s3 = app.add_subcommand("s3-expand", "Expand S_3(X, Y, XY) and compare with the closed form");
    add_common(s3, session.common);
    s3->callback([&] { action = [&] { return cmd_s3_expand(session); }; });

    auto* id = app.add_subcommand("idempotents", "List idempotents that are not central");
    id->add_option("--algebra", algebra, "Finite algebra, e.g. M2@Fp:2")->required();
    add_common(id, session.common);
    id->callback([&] { action = [&] { return cmd_idempotents(session, algebra); }; });

    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
      app.parse(rest);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::CallForVersion&) {
      out << kToolVersion << "\n";
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    Report r = action();
    out << to_json(r).dump(2) << "\n";
    return exit_code(r);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lpi::text
