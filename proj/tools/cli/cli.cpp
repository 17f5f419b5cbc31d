#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dioph/arith_funcs.hpp"
#include "dioph/bernoulli.hpp"
#include "dioph/contfrac.hpp"
#include "dioph/core_arith.hpp"
#include "dioph/dioph_sums.hpp"
#include "dioph/equidist.hpp"
#include "dioph/errors.hpp"
#include "dioph/products.hpp"
#include "dioph/verify.hpp"
#include "output.hpp"

#ifndef DIOPH_DEFAULT_GOLDEN
#define DIOPH_DEFAULT_GOLDEN "data/golden_values.json"
#endif

namespace dioph::cli {

namespace {

struct Global {
  Precision bits = default_precision();
  unsigned jobs = 1;
  int digits = 20;
  std::string out;
  std::string format;
};

struct Result {
  Table table;
  int code = kExitOk;
};

using Handler = std::function<Result()>;

/// "A as B": both sides must denote the same number.
Real parse_x(const std::string& text) {
  const auto pos = text.find(" as ");
  if (pos == std::string::npos) return Real::parse(text);
  const Real a = Real::parse(text.substr(0, pos)), b = Real::parse(text.substr(pos + 4));
  if (!(a == b)) throw ParseError("'" + a.to_string() + "' and '" + b.to_string() + "' differ");
  return a;
}

struct Sweep {
  unsigned long start, stop, step;
};

Sweep parse_sweep(const std::string& s) {
  Sweep w{};
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> w.start >> c1 >> w.stop >> c2 >> w.step) || c1 != ':' || c2 != ':' || !in.eof() || w.step == 0 ||
      w.start == 0 || w.start > w.stop)
    throw ParseError("--sweep wants start:stop:step with 1 <= start <= stop and step >= 1, got '" + s + "'");
  return w;
}

std::vector<unsigned long> points_of(const std::optional<unsigned long>& single, const std::string& sweep,
                                     const char* name) {
  if (!sweep.empty()) {
    const Sweep w = parse_sweep(sweep);
    std::vector<unsigned long> v;
    for (unsigned long m = w.start; m <= w.stop; m += w.step) v.push_back(m);
    return v;
  }
  if (!single) throw ParseError(std::string("give --") + name + " or --sweep");
  return {*single};
}

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return v.get_str(); }
template <class T>
std::string str(T v) {
  return std::to_string(v);
}

class Cli {
 public:
  Cli() : app_("Diophantine approximation sums, series, products and identities", "dioph") {
    app_.require_subcommand(1, 1);
    app_.fallthrough();
    app_.set_help_all_flag("--help-all", "All subcommands' options");
    app_.add_option("--precision", g_.bits, "Working precision in bits (DIOPH_PRECISION_BITS)")
        ->check(CLI::Range(static_cast<Precision>(kMinPrecision), kPrecisionCap));
    app_.add_option("--jobs", g_.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 1024u));
    app_.add_option("--digits", g_.digits, "Significant digits printed per value")->check(CLI::Range(1, 2000));
    app_.add_option("--out", g_.out, "csv, json, or an output path");
    app_.add_option("--format", g_.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    add_cf();
    add_bern();
    add_watson();
    add_sum();
    add_disc();
    add_prod();
    add_radius();
    add_partition();
    add_farey();
    add_reciprocity();
    add_goldbach();
    add_divisor();
    add_verify();
  }

  int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }
    try {
      for (auto& [sub, handler] : handlers_) {
        if (!sub->parsed()) continue;
        Result r = handler();
        emit(r.table, out);
        return r.code;
      }
    } catch (const std::exception& e) {
      err << "dioph: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitUsage;
  }

 private:
  std::string show(const HPFloat& v) const { return v.to_string(g_.digits); }

  Format format() const {
    if (g_.out == "json" || g_.format == "json") return Format::json;
    if (g_.out == "csv" || !g_.format.empty()) return Format::csv;
    return g_.out.size() > 5 && g_.out.ends_with(".json") ? Format::json : Format::csv;
  }

  void emit(const Table& t, std::ostream& out) const {
    if (g_.out.empty() || g_.out == "csv" || g_.out == "json") {
      write(out, t, format());
      return;
    }
    std::ofstream file(g_.out);
    if (!file) throw Error("cannot write " + g_.out);
    write(file, t, format());
  }

  CLI::App* sub(const char* name, const char* about, Handler h) {
    CLI::App* s = app_.add_subcommand(name, about);
    handlers_.emplace_back(s, std::move(h));
    return s;
  }

  sums::SumOptions sum_opt() const { return {g_.bits, g_.jobs}; }
  products::ProductOptions prod_opt() const { return {g_.bits, g_.jobs}; }

  void add_cf() {
    auto* s = sub("cf", "Continued fraction of x: quotients, convergents, error brackets", [this] {
      const Real x = parse_x(cf_.x);
      const auto cf = contfrac::cf_expand(x, cf_.n + 1, g_.bits);
      const Real fx = x - Real(cf.a0);
      Table t{{"k", "a_k", "p_k", "q_k", "error", "lower_bound", "upper_bound"}, {}};
      t.add({"0", str(cf.a0), "0", "1", "", "", ""});
      for (std::size_t k = 1; k <= std::min(cf_.n, cf.size()); ++k) {
        const bool next = k + 1 <= cf.size();
        const mpz_class& q = cf.q[k];
        const HPFloat err = abs(enclose(fx - Real(cf.convergent(k)), g_.bits + 4 * mpz_sizeinbase(q.get_mpz_t(), 2)));
        t.add({str(k), str(cf.quotient(k)), str(cf.p[k]), str(q), show(err),
               next ? str(mpq_class(1, q * (q + cf.q[k + 1]))) : "", next ? str(mpq_class(1, q * cf.q[k + 1])) : ""});
      }
      return Result{std::move(t)};
    });
    s->add_option("--x", cf_.x, "Real input, optionally 'A as B'")->required();
    s->add_option("--n", cf_.n, "Number of partial quotients")->check(CLI::Range(1, 100000));
  }

  void add_bern() {
    auto* s = sub("bern", "Bernoulli polynomials B_0..B_k and P_j(x)", [this] {
      Table t{{"k", "B_k", "polynomial", "P_k(x)"}, {}};
      std::optional<Real> x;
      if (!bern_.x.empty()) x = parse_x(bern_.x);
      for (int j = 0; j <= bern_.k; ++j) {
        std::string p;
        if (const mpq_class* q = x ? x->as_rational() : nullptr)
          p = str(j == 0 ? mpq_class(1) : bernoulli::periodic_bernoulli(j, *q));
        else if (x)
          p = j == 0 ? "1" : show(bernoulli::periodic_bernoulli(j, *x, g_.bits));
        t.add({str(j), str(bernoulli::bernoulli_number(j)), bernoulli::bernoulli_poly(j).to_string(), p});
      }
      return Result{std::move(t)};
    });
    s->add_option("--k", bern_.k, "Largest degree")->required()->check(CLI::Range(0, bernoulli::kMaxDegree));
    s->add_option("--x", bern_.x, "Evaluate the periodic functions P_j at x");
  }

  void add_watson() {
    auto* s = sub("watson", "S_n = sum csc(m pi/n) directly and asymptotically", [this] {
      const auto w = bernoulli::watson_csc_sum(watson_.n, watson_.J, g_.bits);
      Table t{{"n", "J", "direct", "asymptotic", "difference"}, {}};
      t.add({str(watson_.n), str(watson_.J), show(w.direct), show(w.asymptotic), show(w.direct - w.asymptotic)});
      return Result{std::move(t)};
    });
    s->add_option("--n", watson_.n, "n >= 2")->check(CLI::Range(2UL, 100000000UL));
    s->add_option("--J", watson_.J, "Correction terms")->check(CLI::Range(0, 50));
  }

  void add_sum() {
    auto* s = sub("sum", "Sums over j <= m of 1/||jx||, 1/(j||jx||), ||jx||, 1/|sin pi jx|, R(jx) - 1/2", [this] {
      const Real x = parse_x(sum_.x);
      const auto kind = sums::parse_sum_kind(sum_.kind);
      const auto norm = sums::parse_normalization(sum_.normalize);
      Table t{{"m", "value", "normalizer", "ratio"}, {}};
      std::vector<sums::SumRecord> rows;
      if (!sum_.sweep.empty()) {
        const Sweep w = parse_sweep(sum_.sweep);
        rows = sums::sweep(kind, x, w.start, w.stop, w.step, norm, sum_opt());
      } else {
        const auto m = points_of(sum_.m, "", "m").front();
        rows = sums::sweep(kind, x, m, m, 1, norm, sum_opt());
      }
      for (const auto& r : rows) t.add({str(r.m), show(r.value), show(r.bound_value), show(r.ratio)});
      return Result{std::move(t)};
    });
    s->add_option("--x", sum_.x, "Real input")->required();
    s->add_option("--kind", sum_.kind, "recip, recipj, norm, sin or fracpart");
    s->add_option("--m", sum_.m, "Number of terms");
    s->add_option("--sweep", sum_.sweep, "start:stop:step");
    s->add_option("--normalize", sum_.normalize, "none, mlogm, log2m or m");
  }

  void add_disc() {
    auto* s = sub("disc", "Discrepancy of R(nx), n <= N", [this] {
      const Real x = parse_x(disc_.x);
      Table t{{"N", disc_.star ? "D_star" : "D"}, {}};
      if (disc_.et) {
        t.columns.push_back("et_bracket");
        t.columns.push_back("ratio");
      }
      for (unsigned long N : points_of(disc_.N, disc_.sweep, "N")) {
        const auto ps = equidist::PointSet::kronecker(x, N, g_.bits);
        const HPFloat d = disc_.star ? equidist::discrepancy_star(ps) : equidist::discrepancy(ps);
        std::vector<std::string> row{str(N), show(d)};
        if (disc_.et) {
          const HPFloat b = equidist::erdos_turan_bracket(x, N, *disc_.et, g_.bits);
          row.push_back(show(b));
          row.push_back(show(d / b));
        }
        t.add(std::move(row));
      }
      return Result{std::move(t)};
    });
    s->add_option("--x", disc_.x, "Real input")->required();
    s->add_option("--N", disc_.N, "Number of points")->check(CLI::Range(1UL, 100000000UL));
    s->add_option("--sweep", disc_.sweep, "start:stop:step over N");
    s->add_flag("--star", disc_.star, "Star discrepancy");
    s->add_option("--et-bracket", disc_.et, "Erdos-Turan bracket with m terms")->check(CLI::Range(1UL, 100000000UL));
  }

  void add_prod() {
    auto* s = sub("prod", "Sine products", [this] {
      if (prod_.kind == "fibonacci") {
        const auto n = points_of(prod_.n, prod_.sweep, "n");
        Table t{{"n", "F_n", "P_Fn", "P_Fn-1_over_F_n", "target", "P_Fn-1_over_F_n_printed", "target_printed"}, {}};
        for (unsigned long k : n) {
          const auto f = products::fibonacci_products(k, prod_opt());
          t.add({str(k), str(f.F_n), show(f.P_Fn), show(f.ratio_corrected), show(f.target_corrected),
                 show(f.ratio_printed), show(f.target_printed)});
        }
        return Result{std::move(t)};
      }
      const Real x = parse_x(prod_.x);
      const bool two = prod_.kind == "twosin";
      if (!two && prod_.kind != "geomean") throw ParseError("--kind wants geomean, twosin or fibonacci");
      Table t{{"n", two ? "P_n" : "geomean"}, {}};
      for (unsigned long n : points_of(prod_.n, prod_.sweep, "n"))
        t.add({str(n), show(two ? products::two_sin_product(x, n, prod_opt())
                                : products::sin_product_geomean(x, n, prod_opt()))});
      return Result{std::move(t)};
    });
    s->add_option("--x", prod_.x, "Real input (not used by fibonacci, which takes g)");
    s->add_option("--n", prod_.n, "Product length, or the Fibonacci index")->check(CLI::Range(1UL, 100000000UL));
    s->add_option("--sweep", prod_.sweep, "start:stop:step over n");
    s->add_option("--kind", prod_.kind, "geomean, twosin or fibonacci");
  }

  void add_radius() {
    auto* s = sub("radius", "Radius of convergence estimators for x", [this] {
      Table t{{"x", "n", "via_norm", "via_formula"}, {}};
      if (radius_.relation) {
        for (const char* c : {"R1", "rho1", "ratio"}) t.columns.push_back(c);
      }
      std::vector<std::string> row;
      std::optional<products::RadiusRelation> rel;
      if (!radius_.constructed.empty()) {
        const auto x = radius_.constructed == "linear" ? products::ConstructedExpansion::linear_rate()
                                                       : products::ConstructedExpansion::constant_rate(positive_rational(radius_.constructed));
        const auto e = products::radius_estimate(x, radius_.n, g_.bits);
        row = {e.x, str(e.n), show(e.via_norm), show(e.via_formula)};
        if (radius_.relation) rel = products::radius_relation_check(x, *radius_.relation, prod_opt());
      } else {
        if (radius_.x.empty()) throw ParseError("give --x or --constructed");
        const Real x = parse_x(radius_.x);
        const auto e = products::radius_estimate(x, radius_.n, g_.bits);
        row = {e.x, str(e.n), show(e.via_norm), show(e.via_formula)};
        if (radius_.relation) rel = products::radius_relation_check(x, *radius_.relation, prod_opt());
      }
      if (rel) {
        row.push_back(show(rel->R1_est));
        row.push_back(show(rel->rho1_est));
        row.push_back(show(rel->ratio));
      }
      t.add(std::move(row));
      return Result{std::move(t)};
    });
    s->add_option("--x", radius_.x, "Real input");
    s->add_option("--constructed", radius_.constructed, "a_{n+1} = [e^{r q_n}] for rational r > 0, or 'linear'");
    s->add_option("--n", radius_.n, "Truncation index")->check(CLI::Range(1, 100000));
    s->add_option("--relation", radius_.relation, "Also compare R1 with rho1/2 over m <= this")
        ->check(CLI::Range(2UL, 100000000UL));
  }

  static mpq_class positive_rational(const std::string& s) {
    const Real r = Real::parse(s);
    const mpq_class* q = r.as_rational();
    if (!q || *q <= 0) throw ParseError("--constructed wants 'linear' or a rational r > 0, got '" + s + "'");
    return *q;
  }

  void add_partition() {
    auto* s = sub("partition", "p(n) exactly and by Rademacher's series", [this] {
      const unsigned long K = partition_.K ? *partition_.K
                                           : static_cast<unsigned long>(std::ceil(std::sqrt(static_cast<double>(partition_.n)))) + 2;
      const mpz_class p = products::partition_dp(partition_.n);
      const HPFloat rad = products::partition_rademacher(partition_.n, K, g_.bits);
      const HPFloat diff = abs(rad - HPFloat(p, g_.bits));
      Table t{{"n", "p", "K", "rademacher", "abs_difference"}, {}};
      t.add({str(partition_.n), str(p), str(K), show(rad), show(diff)});
      return Result{std::move(t)};
    });
    s->add_option("n", partition_.n, "n >= 1")->required()->check(CLI::Range(1UL, 1000000UL));
    s->add_option("--K", partition_.K, "Rademacher terms")->check(CLI::Range(1UL, 100000UL));
  }

  void add_farey() {
    auto* s = sub("farey", "Farey fractions of order N", [this] {
      if (farey_.summary) {
        const mpz_class Phi = arith::totient_sum(farey_.N);
        const mpq_class fl = arith::franel_landau_sum(farey_.N);
        Table t{{"N", "Phi", "franel_landau", "franel_landau_decimal", "mertens_ratio"}, {}};
        t.add({str(farey_.N), str(Phi), str(fl), show(HPFloat(fl, g_.bits)), show(arith::mertens_ratio(farey_.N, g_.bits))});
        return Result{std::move(t)};
      }
      const auto F = arith::farey(farey_.N);
      const long Phi = static_cast<long>(F.elements.size() - 1);
      Table t{{"n", "rho", "eta"}, {}};
      for (std::size_t n = 0; n < F.elements.size(); ++n) {
        mpq_class share(static_cast<long>(n), Phi);
        share.canonicalize();
        t.add({str(n), str(F.elements[n]), n == 0 ? "" : str(mpq_class(F.elements[n] - share))});
      }
      return Result{std::move(t)};
    });
    s->add_option("--N", farey_.N, "Order")->required()->check(CLI::Range(1UL, 100000UL));
    s->add_flag("--summary", farey_.summary, "Phi(N), the Franel-Landau sum and the Mertens ratio only");
  }

  void add_reciprocity() {
    auto* s = sub("reciprocity", "Legendre symbols, Gauss's lemma and S(q, p) for odd primes", [this] {
      std::vector<std::pair<unsigned long, unsigned long>> pairs;
      if (recip_.upto) {
        const auto ps = arith::primes_up_to(*recip_.upto);
        for (unsigned long p : ps)
          for (unsigned long q : ps)
            if (p != 2 && q != 2 && p < q) pairs.emplace_back(p, q);
      } else {
        if (!recip_.p || !recip_.q) throw ParseError("give --p and --q, or --upto");
        pairs.emplace_back(*recip_.p, *recip_.q);
      }
      Table t{{"p", "q", "legendre_q_p", "legendre_p_q", "mu_q_p", "mu_p_q", "S_q_p", "S_p_q", "S_total",
               "half_product", "reciprocity"},
              {}};
      for (const auto& [p, q] : pairs) {
        if (p == q) throw DomainError("p and q must differ");
        const int lqp = arith::legendre(q, p), lpq = arith::legendre(p, q);
        const unsigned long sqp = arith::S_sum(q, p), spq = arith::S_sum(p, q);
        const unsigned long half = ((p - 1) / 2) * ((q - 1) / 2);
        t.add({str(p), str(q), str(lqp), str(lpq), str(arith::gauss_mu(q, p)), str(arith::gauss_mu(p, q)), str(sqp),
               str(spq), str(sqp + spq), str(half), lqp * lpq == (half % 2 == 0 ? 1 : -1) ? "holds" : "fails"});
      }
      return Result{std::move(t)};
    });
    s->add_option("--p", recip_.p, "Odd prime");
    s->add_option("--q", recip_.q, "Odd prime");
    s->add_option("--upto", recip_.upto, "Every pair of odd primes up to this")->check(CLI::Range(3UL, 100000UL));
  }

  void add_goldbach() {
    auto* s = sub("goldbach", "Ternary Goldbach counts R(n) against n^2 S(n) / 2", [this] {
      Table t{{"n", "R", "singular_series", "ratio"}, {}};
      for (unsigned long n : goldbach_.n) {
        const auto g = arith::goldbach_ratio(n, goldbach_.P, g_.bits, g_.jobs);
        t.add({str(n), show(g.R), show(g.S), show(g.ratio)});
      }
      return Result{std::move(t)};
    });
    s->add_option("--n", goldbach_.n, "Odd n, repeatable")->required()->check(CLI::Range(7UL, 10000000UL));
    s->add_option("--P", goldbach_.P, "Prime cutoff of the singular series")->check(CLI::Range(2UL, 100000000UL));
  }

  void add_divisor() {
    auto* s = sub("divisor", "sum_{k<=n} d(k) three ways and its residual", [this] {
      constexpr unsigned long kSieveLimit = 10000000;
      const unsigned long n = divisor_.n;
      Table t{{"n", "sum_d", "sum_floor", "hyperbola", "residual", "residual_over_sqrt_n"}, {}};
      const HPFloat N(static_cast<long>(n), g_.bits);
      if (n <= kSieveLimit) {
        const auto d = arith::divisor_sum_identity(n, g_.bits);
        t.add({str(n), str(d.lhs), str(d.rhs), str(d.hyperbola), show(d.residual), show(d.residual / sqrt(N))});
      } else {
        const mpz_class h = arith::divisor_summatory(n);
        const HPFloat res = HPFloat(h, g_.bits) - N * log(N) - (bernoulli::euler_gamma(g_.bits) * 2L - 1L) * N;
        t.add({str(n), "", "", str(h), show(res), show(res / sqrt(N))});
      }
      return Result{std::move(t)};
    });
    s->add_option("--n", divisor_.n, "n >= 1")->required()->check(CLI::Range(1UL, 1000000000000UL));
  }

  void add_verify() {
    auto* s = sub("verify", "Run acceptance suites; exit 1 on any failure", [this] {
      const auto golden = verify::GoldenFile::load(verify_.golden);
      std::vector<verify::Suite> suites;
      for (const auto& name : verify_.suites) suites.push_back(verify::parse_suite(name));
      if (suites.empty()) suites.assign(std::begin(verify::kAllSuites), std::end(verify::kAllSuites));
      Table t{{"criterion", "suite", "check", "result", "detail"}, {}};
      if (verify_.timing) t.columns.push_back("seconds");
      Result r;
      for (auto suite : suites)
        for (const auto& c : verify::run_suite(suite, golden, {g_.bits, g_.jobs})) {
          const int crit = verify::criterion(c.suite);
          std::vector<std::string> row{crit ? str(crit) : "", verify::to_string(c.suite), c.name,
                                       c.passed ? "PASS" : "FAIL", c.detail};
          if (verify_.timing) {
            std::ostringstream sec;
            sec.precision(3);
            sec << std::fixed << c.seconds;
            row.push_back(sec.str());
          }
          t.add(std::move(row));
          if (!c.passed) r.code = kExitAcceptanceFailure;
        }
      r.table = std::move(t);
      return r;
    });
    s->add_option("--suite", verify_.suites,
                  "paper-values, exact-identities, inequalities, oracle-equivalence, asymptotics, golden-properties (default all)");
    s->add_option("--golden", verify_.golden, "Golden-values file");
    s->add_flag("--timing", verify_.timing, "Add a seconds column");
  }

  CLI::App app_;
  Global g_;
  std::vector<std::pair<CLI::App*, Handler>> handlers_;

  struct {
    std::string x;
    std::size_t n = 20;
  } cf_;
  struct {
    int k = 0;
    std::string x;
  } bern_;
  struct {
    unsigned long n = 1000;
    int J = 0;
  } watson_;
  struct {
    std::string x, kind = "recip", sweep, normalize = "none";
    std::optional<unsigned long> m;
  } sum_;
  struct {
    std::string x, sweep;
    std::optional<unsigned long> N, et;
    bool star = false;
  } disc_;
  struct {
    std::string x = "golden", sweep, kind = "geomean";
    std::optional<unsigned long> n;
  } prod_;
  struct {
    std::string x, constructed;
    std::size_t n = 20;
    std::optional<unsigned long> relation;
  } radius_;
  struct {
    unsigned long n = 1;
    std::optional<unsigned long> K;
  } partition_;
  struct {
    unsigned long N = 1;
    bool summary = false;
  } farey_;
  struct {
    std::optional<unsigned long> p, q, upto;
  } recip_;
  struct {
    std::vector<unsigned long> n;
    unsigned long P = 100000;
  } goldbach_;
  struct {
    unsigned long n = 1;
  } divisor_;
  struct {
    std::vector<std::string> suites;
    std::string golden = DIOPH_DEFAULT_GOLDEN;
    bool timing = false;
  } verify_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli;
  return cli.run(argc, argv, out, err);
}

}  // namespace dioph::cli
