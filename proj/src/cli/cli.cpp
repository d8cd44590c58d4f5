#include "orpoly/cli.hpp"

#include "orpoly/analysis.hpp"
#include "orpoly/constructions.hpp"
#include "orpoly/lowerbound.hpp"
#include "orpoly/measures.hpp"
#include "orpoly/oracles.hpp"
#include "orpoly/parallel.hpp"
#include "orpoly/random.hpp"
#include "orpoly/report.hpp"

#include <CLI11.hpp>

#include <bit>
#include <cstdlib>
#include <map>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#ifndef ORPOLY_VERSION
#define ORPOLY_VERSION "0.0.0"
#endif

namespace orpoly::cli {

const char* tool_version() { return ORPOLY_VERSION; }

namespace {

using Json = report::Json;

/// Malformed flag values (e.g. a decimal where an exact rational is required).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string kind;
  std::string claim;
  std::string measure = "hard";
  std::string eps;
  std::string p;
  std::string bound;
  std::string format = "json";
  std::string out;
  std::string input;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> weight;
  std::optional<unsigned> ell;
  std::uint64_t K = 0;
  std::uint64_t R = 0;
  std::uint64_t trials = 0;
  std::uint64_t samples = 1;
  std::uint64_t seed = 1;
  std::uint64_t m_max = 1024;
  unsigned ell_cap = 0;
  unsigned d = 0;
  unsigned jobs = 1;
  double delta = 0.05;
  bool unit_coeffs = false;
  bool random_coeffs = false;
  std::size_t limit = kDefaultExhaustiveLimit;
};

Rational parse_flag_rational(const std::string& flag, const std::string& text) {
  if (text.empty()) throw UsageError("--" + flag + " is required for this command");
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

template <class T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw UsageError(std::string("--") + flag + " is required for this command");
  return *value;
}

Json opt_json(const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); }

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json config_json(const Options& o) {
  Json c = Json::object();
  c["subcommand"] = o.command;
  c["kind"] = opt_json(o.kind);
  c["claim"] = opt_json(o.claim);
  c["measure"] = o.measure;
  c["n"] = opt_json(o.n);
  c["eps"] = opt_json(o.eps);
  c["p"] = opt_json(o.p);
  c["ell"] = opt_json(o.ell);
  c["k"] = opt_json(o.k);
  c["K"] = o.K;
  c["R"] = o.R;
  c["weight"] = opt_json(o.weight);
  c["trials"] = o.trials;
  c["samples"] = o.samples;
  c["delta"] = o.delta;
  c["seed"] = o.seed;
  c["bound"] = opt_json(o.bound);
  c["input"] = opt_json(o.input);
  c["exhaustive_limit"] = o.limit;
  c["jobs"] = o.jobs;
  c["format"] = o.format;
  return c;
}

class Session {
 public:
  Session(const Options& opts, std::ostream& out) : opts_(opts), sink_(report::parse_format(opts.format), out) {}

  void emit(Json result, bool pass) {
    Json record = Json::object();
    record["schema"] = report::kSchema;
    record["tool_version"] = tool_version();
    record["config"] = config_json(opts_);
    record["result"] = std::move(result);
    record["pass"] = pass;
    sink_.write(record);
    all_pass_ = all_pass_ && pass;
  }

  int status() const { return all_pass_ ? kOk : kBoundViolation; }

 private:
  const Options& opts_;
  report::Sink sink_;
  bool all_pass_ = true;
};

FormFile load_forms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  return read_forms(in);
}

PolySampler make_sampler(const Options& o) {
  const std::string& kind = o.kind;
  if (kind == "file") {
    if (o.input.empty()) throw UsageError("--kind file needs --input");
    auto file = load_forms(o.input);
    auto poly = std::make_shared<HypCoverPoly>(file.n, std::move(file.forms));
    return [poly](std::uint64_t) { return *poly; };
  }
  const auto n = static_cast<std::size_t>(require(o.n, "n"));
  if (kind == "exact") return [n](std::uint64_t) { return exact_or_poly(n); };
  const Rational eps = parse_flag_rational("eps", o.eps);
  if (kind == "epoch") {
    const unsigned ell = require(o.ell, "ell");
    return [n, ell, eps](std::uint64_t s) { return sample_epoch_poly(n, ell, eps, s); };
  }
  if (kind == "brs") return [n, eps](std::uint64_t s) { return sample_brs_tarui(n, eps, s); };
  if (kind == "improved") return [n, eps](std::uint64_t s) { return sample_improved(n, eps, s); };
  throw UsageError("unknown --kind '" + kind + "' (expected exact|epoch|brs|improved|file)");
}

bool sampler_is_random(const std::string& kind) { return kind == "epoch" || kind == "brs" || kind == "improved"; }

int cmd_construct(const Options& o, std::ostream& out) {
  const HypCoverPoly poly = make_sampler(o)(o.seed);
  out << "# orpoly " << tool_version() << " construct kind=" << o.kind;
  if (o.n) out << " n=" << *o.n;
  if (!o.eps.empty()) out << " eps=" << to_string(parse_flag_rational("eps", o.eps));
  if (o.ell) out << " ell=" << *o.ell;
  out << " seed=" << o.seed << " degree=" << poly.degree() << '\n';
  write_poly(out, poly);
  return kOk;
}

MeasureSpec make_measure(const Options& o, std::size_t n) {
  const MeasureKind kind = parse_measure_kind(o.measure);
  if (kind == MeasureKind::mu) return MeasureSpec::mu(n, parse_flag_rational("p", o.p));
  if (kind == MeasureKind::hard) return MeasureSpec::hard(n, parse_flag_rational("eps", o.eps));
  throw std::invalid_argument("error measurement needs a measure on points (mu or hard)");
}

Json measure_json(const MeasureSpec& m) {
  Json j = Json::object();
  j["kind"] = std::string(to_string(m.kind));
  j["n"] = m.n;
  if (m.kind == MeasureKind::hard) {
    j["eps"] = to_string(m.eps);
    Json levels = Json::array();
    for (unsigned l : hard_index_set(m.n, m.eps)) levels.push_back(l);
    j["index_set"] = levels;
  } else {
    j["p"] = to_string(m.p);
  }
  return j;
}

int cmd_error(const Options& o, Session& session) {
  const PolySampler sampler = make_sampler(o);
  const bool random = sampler_is_random(o.kind);
  std::optional<Rational> bound;
  if (!o.bound.empty()) {
    bound = parse_flag_rational("bound", o.bound);
  } else if (o.kind == "exact") {
    bound = Rational(0);
  } else if (random) {
    bound = parse_flag_rational("eps", o.eps);
  }

  if (o.weight) {
    const std::size_t n = o.kind == "file" ? sampler(0).n() : static_cast<std::size_t>(require(o.n, "n"));
    const Point x = prefix_point(n, static_cast<std::size_t>(*o.weight));
    const std::uint64_t trials = o.trials == 0 ? 1000 : o.trials;
    const ErrorReport rep = pointwise_error_mc(sampler, x, trials, o.delta, o.seed, o.jobs);
    Json r = Json::object();
    r["mode"] = "pointwise";
    r["weight"] = *o.weight;
    r["failures"] = rep.failures;
    r["trials"] = rep.trials;
    r["mc_estimate"] = rep.mc_estimate;
    r["confidence_radius"] = rep.confidence_radius;
    r["delta"] = rep.delta;
    r["seed"] = rep.seed;
    r["bound"] = bound ? Json(to_string(*bound)) : Json(nullptr);
    const bool pass = !bound || rep.mc_estimate <= to_double(*bound) + rep.confidence_radius;
    session.emit(std::move(r), pass);
    return session.status();
  }

  const std::uint64_t samples = random ? std::max<std::uint64_t>(o.samples, 1) : 1;
  struct Partial {
    Rational sum = 0;
    Rational max = 0;
    std::size_t degree_max = 0;
  };
  std::optional<MeasureSpec> spec;
  auto parts = parallel_chunks<Partial>(samples, o.jobs, [&](std::uint64_t begin, std::uint64_t end) {
    Partial acc;
    for (std::uint64_t i = begin; i < end; ++i) {
      const HypCoverPoly poly = sampler(random ? derive_seed(o.seed, i) : o.seed);
      const MeasureSpec m = make_measure(o, poly.n());
      const Rational e = exact_error(poly, m, o.limit);
      acc.sum += e;
      if (e > acc.max) acc.max = e;
      acc.degree_max = std::max(acc.degree_max, poly.degree());
    }
    return acc;
  });
  Partial total;
  for (const auto& p : parts) {
    total.sum += p.sum;
    if (p.max > total.max) total.max = p.max;
    total.degree_max = std::max(total.degree_max, p.degree_max);
  }
  const Rational mean = total.sum / Rational(BigInt(static_cast<unsigned long>(samples)));
  const double radius = random ? hoeffding_radius(samples, o.delta) : 0.0;
  const std::size_t n = o.kind == "file" ? sampler(0).n() : static_cast<std::size_t>(*o.n);

  Json r = Json::object();
  r["mode"] = "exact";
  r["distribution"] = measure_json(make_measure(o, n));
  r["samples"] = samples;
  r["mean_error"] = to_string(mean);
  r["mean_error_value"] = to_double(mean);
  r["max_error"] = to_string(total.max);
  r["max_degree"] = total.degree_max;
  r["confidence_radius"] = radius;
  r["delta"] = o.delta;
  r["bound"] = bound ? Json(to_string(*bound)) : Json(nullptr);
  const bool pass = !bound || (random ? to_double(mean) <= to_double(*bound) + radius : mean <= *bound);
  session.emit(std::move(r), pass);
  return session.status();
}

WeightedFormSet load_form_set(const Options& o) {
  WeightedFormSet set;
  if (!o.input.empty()) {
    auto file = load_forms(o.input);
    set.n = file.n;
    set.forms = std::move(file.forms);
  } else {
    const auto k = require(o.k, "k");
    std::vector<Var> vars;
    for (std::uint64_t i = 1; i <= k; ++i) vars.push_back(static_cast<Var>(i));
    set.n = static_cast<std::size_t>(k);
    set.forms.push_back(LinearForm::sum_of(vars));
  }
  if (o.n) set.n = std::max<std::size_t>(set.n, static_cast<std::size_t>(*o.n));
  return set;
}

int cmd_potential(const Options& o, Session& session) {
  const WeightedFormSet set = load_form_set(o);
  Json r = Json::object();
  r["forms"] = set.forms.size();
  r["total_weight"] = set.total_weight();
  if (!o.eps.empty()) {
    const Rational eps = parse_flag_rational("eps", o.eps);
    const std::size_t n = static_cast<std::size_t>(require(o.n, "n"));
    const auto levels = hard_index_set(n, eps);
    const double avg = avg_potential(set, n, eps);
    const double bound = potential_bound(set.forms.size(), levels.size());
    r["mode"] = "average";
    r["index_set_size"] = levels.size();
    r["avg_potential"] = avg;
    r["bound"] = bound;
    session.emit(std::move(r), avg <= bound * (1.0 + kRelTol) + kRelTol);
    return session.status();
  }
  const unsigned level = require(o.ell, "ell");
  const double exact = potential_exact(set, level);
  r["mode"] = "level";
  r["level"] = level;
  r["potential_exact"] = exact;
  bool pass = true;
  if (o.trials > 0) {
    const PotentialEstimate est = potential_mc(set, level, o.trials, o.seed, o.delta);
    r["potential_mc"] = est.estimate;
    r["radius"] = est.radius;
    r["trials"] = est.trials;
    pass = std::fabs(est.estimate - exact) <= 3.0 * est.radius;
  }
  session.emit(std::move(r), pass);
  return session.status();
}

int cmd_partition(const Options& o, Session& session) {
  if (o.input.empty()) throw UsageError("partition needs --input");
  if (o.K == 0 || o.R == 0) throw UsageError("partition needs positive --K and --R");
  const auto file = load_forms(o.input);
  const bool hypothesis = partition_hypothesis(file.forms, o.K, o.R);
  const PartitionResult res = partition(file.forms, o.K, o.R);
  const PartitionCheck chk = check_partition(file.forms, res, o.K, o.R);
  Json r = Json::object();
  r["forms"] = file.forms.size();
  r["primary"] = res.primary;
  r["residual"] = res.residual;
  r["iterations"] = res.iterations;
  r["hypothesis"] = hypothesis;
  r["disjoint_cover"] = chk.disjoint_cover;
  r["residuals_ok"] = chk.residuals_ok;
  r["size_ok"] = chk.size_ok;
  session.emit(std::move(r), chk.disjoint_cover && chk.residuals_ok && (!hypothesis || chk.size_ok));
  return session.status();
}

int cmd_threshold(const Options& o, Session& session) {
  const auto n = static_cast<std::size_t>(require(o.n, "n"));
  const Rational eps = parse_flag_rational("eps", o.eps);
  const ThresholdResult t = threshold_t(n, eps);
  Json r = Json::object();
  r["t"] = t.t;
  r["R"] = t.R;
  r["K"] = 4 * t.t * t.t;
  r["index_set_size"] = t.index_count;
  r["constant"] = kPotentialConstant;
  session.emit(std::move(r), true);
  return session.status();
}

Json binom_json(const BinomBoundsReport& b) {
  Json r = Json::object();
  r["claim"] = "binomial";
  r["n"] = b.n;
  r["k"] = b.k;
  r["lower"] = b.lower;
  r["value"] = to_string(b.value);
  r["value_approx"] = b.value.get_d();
  r["upper"] = b.upper;
  return r;
}

int cmd_verify(const Options& o, Session& session) {
  const std::string& claim = o.claim;
  if (claim == "binomial") {
    const auto n = require(o.n, "n");
    std::vector<std::uint64_t> ks;
    if (o.k) {
      ks.push_back(*o.k);
    } else {
      for (std::uint64_t k = 1; 2 * k <= n; ++k) ks.push_back(k);
    }
    for (auto k : ks) {
      const auto b = check_binom_bounds(n, k);
      session.emit(binom_json(b), b.pass());
    }
  } else if (claim == "zero") {
    const auto n = static_cast<std::size_t>(require(o.n, "n"));
    const Rational eps = parse_flag_rational("eps", o.eps);
    const Rational mass = hard_point_mass(n, eps, 0);
    Json r = Json::object();
    r["claim"] = "zero";
    r["mass_at_origin"] = to_string(mass);
    r["mass_at_origin_value"] = to_double(mass);
    r["eps"] = to_string(eps);
    session.emit(std::move(r), mass <= eps);
  } else if (claim == "tail") {
    const auto k = require(o.k, "k");
    const TailReport t = verify_tail_claims(k, o.ell_cap);
    Json r = Json::object();
    r["claim"] = "tail";
    r["k"] = t.k;
    r["level_cap"] = t.level_cap;
    r["t1"] = t.t1;
    r["t1_bound"] = t.t1_bound;
    r["t2"] = t.t2;
    r["t2_bound"] = t.t2_bound;
    r["t2_reference"] = t.t2_reference;
    session.emit(std::move(r), t.pass());
  } else if (claim == "hit") {
    Rational worst = 1;
    std::uint64_t worst_m = 1;
    for (std::uint64_t m = 1; m <= o.m_max; ++m) {
      const Rational q = epoch_hit_prob(m, static_cast<unsigned>(std::bit_width(m) - 1));
      if (q < worst) {
        worst = q;
        worst_m = m;
      }
    }
    Json r = Json::object();
    r["claim"] = "hit";
    r["m_max"] = o.m_max;
    r["min_hit_prob"] = to_string(worst);
    r["min_hit_prob_value"] = to_double(worst);
    r["argmin_weight"] = worst_m;
    session.emit(std::move(r), worst >= Rational(1, 4));
  } else if (claim == "composition") {
    const auto n = static_cast<std::size_t>(require(o.n, "n"));
    const Rational p = parse_flag_rational("p", o.p);
    const auto law = composed_restriction_law(p, n);
    std::uint64_t mismatches = 0;
    for (std::uint64_t mask = 0; mask < law.size(); ++mask) {
      const auto w = static_cast<std::size_t>(std::popcount(mask));
      if (law[mask] != mu_point_mass(p, n, w)) ++mismatches;
    }
    Json r = Json::object();
    r["claim"] = "composition";
    r["points"] = law.size();
    r["mismatches"] = mismatches;
    session.emit(std::move(r), mismatches == 0);
  } else {
    throw UsageError("unknown --claim '" + claim + "' (expected binomial|zero|tail|hit|composition)");
  }
  return session.status();
}

Json verdict_json(const OracleVerdict& v, const char* kind) {
  Json r = Json::object();
  r["oracle"] = kind;
  r["measured"] = to_string(v.measured);
  r["measured_value"] = to_double(v.measured);
  r["bound"] = v.bound;
  r["tight"] = v.tight;
  r["points"] = v.points;
  return r;
}

int cmd_oracle(const Options& o, Session& session) {
  if (o.kind == "lo") {
    LinearForm form;
    if (!o.input.empty()) {
      auto file = load_forms(o.input);
      if (file.forms.empty()) throw std::invalid_argument("input has no forms");
      form = file.forms.front();
    } else {
      const auto k = require(o.k, "k");
      if (o.unit_coeffs == o.random_coeffs) {
        throw UsageError("oracle --kind lo needs exactly one of --unit-coeffs, --random-coeffs or --input");
      }
      std::map<Var, Rational> coeffs;
      Rng rng(o.seed);
      for (std::uint64_t i = 1; i <= k; ++i) {
        coeffs[static_cast<Var>(i)] =
            o.unit_coeffs ? Rational(1) : Rational(BigInt(static_cast<unsigned long>(1 + rng.below(1ULL << 40))));
      }
      form = LinearForm(std::move(coeffs));
    }
    const OracleVerdict v = littlewood_offord_check(form, o.limit);
    Json r = verdict_json(v, "littlewood-offord");
    r["k"] = form.support_size();
    session.emit(std::move(r), v.pass);
  } else if (o.kind == "af") {
    std::vector<LinearForm> factors;
    std::size_t n = 0;
    if (!o.input.empty()) {
      auto file = load_forms(o.input);
      n = file.n;
      factors = std::move(file.forms);
    } else {
      n = static_cast<std::size_t>(require(o.n, "n"));
      if (o.d == 0 || o.d > n) throw UsageError("oracle --kind af needs --input or 1 <= --d <= --n");
      for (unsigned i = 1; i <= o.d; ++i) {
        const Var v = i;
        factors.push_back(LinearForm::sum_of(std::span<const Var>(&v, 1)));
      }
    }
    const OracleVerdict v = alon_furedi_check(factors, n, o.limit);
    Json r = verdict_json(v, "alon-furedi");
    r["d"] = factors.size();
    r["n"] = n;
    session.emit(std::move(r), v.pass);
  } else {
    throw UsageError("unknown oracle --kind '" + o.kind + "' (expected lo|af)");
  }
  return session.status();
}

std::size_t limit_from_env() {
  const char* raw = std::getenv(kLimitEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultExhaustiveLimit;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (*end != '\0' || v == 0 || v > 40) {
    throw UsageError(std::string(kLimitEnv) + " must be an integer in 1..40");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Probabilistic polynomials for OR: constructions, error measurement and lower-bound audits", "orpoly"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "64-bit master seed")->capture_default_str();
    sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", o.out, "write output to this file instead of stdout");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  };
  auto add_construction = [&](CLI::App* sub, bool file_kind) {
    auto kinds = file_kind ? std::vector<std::string>{"exact", "epoch", "brs", "improved", "file"}
                           : std::vector<std::string>{"exact", "epoch", "brs", "improved"};
    sub->add_option("--kind", o.kind, "construction")->required()->check(CLI::IsMember(kinds));
    sub->add_option("--n", o.n, "number of variables")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 24));
    sub->add_option("--eps", o.eps, "error parameter as num/den");
    sub->add_option("--ell", o.ell, "epoch index (kind=epoch)");
  };

  auto* construct = app.add_subcommand("construct", "sample a polynomial and print it in the form text format");
  add_common(construct);
  add_construction(construct, false);

  auto* error = app.add_subcommand("error", "exact or Monte Carlo error against OR_n");
  add_common(error);
  add_construction(error, true);
  error->add_option("--input", o.input, "polynomial file (kind=file)");
  error->add_option("--measure", o.measure, "input distribution")->check(CLI::IsMember({"mu", "hard"}))->capture_default_str();
  error->add_option("--p", o.p, "mu parameter as num/den");
  error->add_option("--samples", o.samples, "sampled polynomials to average (exact mode)")->capture_default_str();
  error->add_option("--weight", o.weight, "pointwise mode: evaluate at 1^w 0^(n-w)");
  error->add_option("--trials", o.trials, "pointwise mode: sampled polynomials (default 1000)");
  error->add_option("--delta", o.delta, "confidence parameter")->check(CLI::Range(1e-12, 0.999999))->capture_default_str();
  error->add_option("--bound", o.bound, "asserted error bound as num/den (default: eps, or 0 for kind=exact)");

  auto* potential = app.add_subcommand("potential", "potential function at one level or averaged over the hard index set");
  add_common(potential);
  potential->add_option("--input", o.input, "form file");
  potential->add_option("--k", o.k, "single unit form on k variables")->check(CLI::PositiveNumber);
  potential->add_option("--n", o.n, "number of variables");
  potential->add_option("--ell", o.ell, "level (>= 1)")->check(CLI::PositiveNumber);
  potential->add_option("--eps", o.eps, "average over the hard index set of (n, eps)");
  potential->add_option("--trials", o.trials, "also estimate by Monte Carlo");
  potential->add_option("--delta", o.delta, "confidence parameter")->check(CLI::Range(1e-12, 0.999999))->capture_default_str();

  auto* part = app.add_subcommand("partition", "greedy partition of a form list");
  add_common(part);
  part->add_option("--input", o.input, "form file")->required();
  part->add_option("--K", o.K, "fresh-support threshold")->required()->check(CLI::PositiveNumber);
  part->add_option("--R", o.R, "primary-set budget")->required()->check(CLI::PositiveNumber);

  auto* threshold = app.add_subcommand("threshold", "largest degree t the lower-bound inequality certifies");
  add_common(threshold);
  threshold->add_option("--n", o.n, "number of variables")->required();
  threshold->add_option("--eps", o.eps, "error parameter as num/den")->required();

  auto* verify = app.add_subcommand("verify", "numeric checks of bounding claims");
  add_common(verify);
  verify->add_option("--claim", o.claim, "binomial|zero|tail|hit|composition")->required();
  verify->add_option("--n", o.n, "number of variables");
  verify->add_option("--k", o.k, "binomial: k; tail: support size")->check(CLI::PositiveNumber);
  verify->add_option("--eps", o.eps, "error parameter as num/den");
  verify->add_option("--p", o.p, "composition: assignment probability as num/den");
  verify->add_option("--ell-cap", o.ell_cap, "tail: last level summed exactly");
  verify->add_option("--m-max", o.m_max, "hit: largest weight swept")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "exhaustive anti-concentration and nonvanishing checks");
  add_common(oracle);
  oracle->add_option("--kind", o.kind, "lo|af")->required()->check(CLI::IsMember({"lo", "af"}));
  oracle->add_option("--k", o.k, "lo: support size")->check(CLI::PositiveNumber);
  oracle->add_flag("--unit-coeffs", o.unit_coeffs, "lo: all coefficients 1");
  oracle->add_flag("--random-coeffs", o.random_coeffs, "lo: seeded random integer coefficients");
  oracle->add_option("--input", o.input, "form file (lo: first form; af: factor list)");
  oracle->add_option("--n", o.n, "af: number of variables");
  oracle->add_option("--d", o.d, "af: use prod_{i<=d}(1 - x_i)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  o.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    o.limit = limit_from_env();
    if (!o.out.empty()) {
      file.open(o.out, std::ios::binary);
      if (!file) throw std::invalid_argument("cannot open output file '" + o.out + "'");
      sink = &file;
    }
    if (o.command == "construct") return cmd_construct(o, *sink);
    Session session(o, *sink);
    if (o.command == "error") return cmd_error(o, session);
    if (o.command == "potential") return cmd_potential(o, session);
    if (o.command == "partition") return cmd_partition(o, session);
    if (o.command == "threshold") return cmd_threshold(o, session);
    if (o.command == "verify") return cmd_verify(o, session);
    if (o.command == "oracle") return cmd_oracle(o, session);
    err << "usage error: unknown subcommand\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace orpoly::cli
