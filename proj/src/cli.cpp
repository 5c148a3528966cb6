#include "ucr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ucr/errors.hpp"
#include "ucr/io.hpp"
#include "ucr/limits.hpp"
#include "ucr/oracle.hpp"
#include "ucr/qseries.hpp"
#include "ucr/radius.hpp"
#include "ucr/wright.hpp"

namespace ucr::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNumerical = 2;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw DomainError("unknown output format '" + s + "' (expected json, csv or text)");
}

std::variant<QBesselParams, WrightParams> family_of(const JobSpec& s) {
  if (s.family == "qbessel") {
    QBesselParams p{parse_kind(s.kind), s.nu, s.q};
    p.validate();
    return p;
  }
  if (s.family == "wright") return WrightParams{s.rho, s.beta};
  throw DomainError("unknown family '" + s.family + "' (expected qbessel or wright)");
}

std::optional<ZeroCache> cache_of(const JobSpec& s) {
  std::string dir = s.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("UC_RADIUS_CACHE")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  return ZeroCache(dir);
}

RadiusOptions radius_options(const JobSpec& s) {
  RadiusOptions o;
  o.tol = s.root_tol;
  if (auto c = cache_of(s)) o.zeros = c->provider();
  return o;
}

json params_json(const JobSpec& s) {
  if (s.family == "qbessel") {
    return {{"family", "qbessel"}, {"kind", s.kind}, {"nu", s.nu}, {"q", s.q}};
  }
  return {{"family", "wright"}, {"rho", s.rho}, {"beta", s.beta}};
}

void emit_text(const json& doc, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void emit(const json& doc, Format f, std::ostream& out) {
  if (f == Format::Text) {
    emit_text(doc, out);
  } else {
    out << dump(doc);
  }
}

void require_not_csv(const JobSpec& s) {
  if (s.format == Format::Csv) {
    throw DomainError("csv output is available for radius and sweep only");
  }
}

int cmd_eval(const JobSpec& s, std::ostream& out) {
  require_not_csv(s);
  const std::complex<double> z(s.z, s.zi);
  json result;
  const std::string& fn = s.function;
  if (fn == "pochhammer") {
    std::optional<long> n;
    if (s.n >= 0) n = s.n;
    result = to_json(q_pochhammer(s.a, s.q, n));
  } else if (fn == "c_nu") {
    result = to_json(c_nu(s.nu, s.q));
  } else if (fn == "classical") {
    result = to_json(classical_bessel(s.nu, s.z));
  } else if (fn == "jackson") {
    result = to_json(jackson_qbessel(std::get<QBesselParams>(family_of(s)), z, s.deriv));
  } else if (fn == "phi" || fn == "lambda" || fn == "psi") {
    if (s.family != "wright") throw DomainError(fn + " needs --family wright");
    const WrightParams p{s.rho, s.beta};
    if (fn == "phi") result = to_json(wright_phi(p, z, s.deriv));
    if (fn == "lambda") result = to_json(lambda_func(p, z, s.deriv));
    if (fn == "psi") result = to_json(psi_func(p, s.z, s.deriv));
  } else if (fn == "normalized") {
    const auto fam = family_of(s);
    const Norm norm = parse_norm(s.norm);
    if (const auto* p = std::get_if<QBesselParams>(&fam)) {
      result = to_json(normalized_qbessel(*p, norm, z, s.deriv));
    } else {
      result = to_json(normalized_wright(std::get<WrightParams>(fam), norm, z, s.deriv));
    }
  } else if (fn == "ratio") {
    const std::complex<double> v = convexity_ratio(s.target(), z);
    result = {{"value", json::array({v.real(), v.imag()})}};
  } else {
    throw DomainError("unknown function '" + fn +
                      "' (pochhammer, c_nu, classical, jackson, phi, lambda, psi, normalized, ratio)");
  }
  json input = params_json(s);
  input["z"] = json::array({s.z, s.zi});
  input["deriv"] = s.deriv;
  if (fn == "normalized" || fn == "ratio") input["norm"] = s.norm;
  if (fn == "pochhammer") {
    input = {{"a", s.a}, {"q", s.q}, {"n", s.n < 0 ? json("inf") : json(s.n)}};
  }
  emit(document({{"command", "eval"}, {"function", fn}, {"input", input}, {"result", result}}),
       s.format, out);
  return kOk;
}

int cmd_zeros(const JobSpec& s, std::ostream& out) {
  require_not_csv(s);
  if (s.count < 1) throw DomainError("--count must be at least 1");
  const ZeroTarget t{family_of(s), parse_zero_kind(s.which)};
  t.validate();
  const auto cache = cache_of(s);
  const ZeroTable tab = cache ? cache->get(t, s.count) : scan_and_refine(t, s.count);
  json doc = to_json(tab);
  doc["command"] = "zeros";
  emit(document(doc), s.format, out);
  return kOk;
}

int cmd_radius(const JobSpec& s, std::ostream& out, std::ostream& err) {
  const UcTarget t = s.target();
  const DualRadius d = radius_uc(t, radius_options(s));
  for (const auto& w : d.direct.warnings) err << "warning: " << w << '\n';
  if (s.format == Format::Csv) {
    out << csv_header() << csv_row(t, d);
    return kOk;
  }
  json doc = to_json(d);
  doc["command"] = "radius";
  doc["target"] = to_json(t);
  emit(document(doc), s.format, out);
  return kOk;
}

int cmd_verify(const JobSpec& s, std::ostream& out) {
  require_not_csv(s);
  const UcTarget t = s.target();
  const DualRadius d = radius_uc(t, radius_options(s));
  const RadiusResult o = oracle_radius(t);
  const MarginReport at = uc_margin(t, d.direct.radius);
  const MarginReport half = uc_margin(t, 0.5 * d.direct.radius);
  const double gap = std::abs(o.radius - d.direct.radius);
  const bool agrees = gap < s.tol;
  json doc = {{"command", "verify"},
              {"target", to_json(t)},
              {"radius", to_json(d)},
              {"oracle", to_json(o)},
              {"oracle_agreement", gap},
              {"tol", s.tol},
              {"agrees", agrees},
              {"margin_at_radius", to_json(at)},
              {"margin_at_half_radius", to_json(half)}};
  emit(document(doc), s.format, out);
  return agrees ? kOk : kNumerical;
}

int cmd_sweep(const JobSpec& s, std::ostream& out, std::ostream& err) {
  const std::vector<UcTarget> grid = sweep_grid(s);
  const RadiusOptions opts = radius_options(s);
  const long n = static_cast<long>(grid.size());
  bool failed = false;
  out << csv_header();
  auto point = [&](long i, std::string& row, std::string& msg) {
    try {
      row = csv_row(grid[i], radius_uc(grid[i], opts));
    } catch (const std::exception& e) {
      row = csv_error_row(grid[i]);
      msg = grid[i].descriptor() + ": " + e.what();
    }
  };
  if (s.serial) {
    for (long i = 0; i < n; ++i) {
      std::string row, msg;
      point(i, row, msg);
      out << row;
      if (!msg.empty()) {
        err << "error: " << msg << '\n';
        failed = true;
      }
    }
  } else {
#pragma omp parallel for ordered schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      std::string row, msg;
      point(i, row, msg);
#pragma omp ordered
      {
        out << row;
        if (!msg.empty()) {
          err << "error: " << msg << '\n';
          failed = true;
        }
      }
    }
  }
  return failed ? kNumerical : kOk;
}

int cmd_limit_check(const JobSpec& s, std::ostream& out) {
  require_not_csv(s);
  const double qs[] = {0.9, 0.95, 0.99};
  json qrows = json::array();
  double worst_099 = 0.0;
  bool monotone = true;
  std::ostringstream text;
  text << "q-limit: J2_nu((1-q) z; q) vs J_nu(z)\n  nu    z    q=0.9        q=0.95       q=0.99\n";
  for (double nu : {0.0, 1.0}) {
    for (double z : {0.5, 1.0, 1.5}) {
      double prev = std::numeric_limits<double>::infinity();
      text << "  " << nu << "  " << z;
      for (double q : qs) {
        const QLimitPoint p = q_limit_point(nu, z, q);
        qrows.push_back({{"nu", nu}, {"z", z}, {"q", q}, {"scaled", p.scaled},
                         {"classical", p.classical}, {"rel_error", p.rel_error}});
        monotone = monotone && p.rel_error < prev;
        prev = p.rel_error;
        if (q == 0.99) worst_099 = std::max(worst_099, p.rel_error);
        char buf[32];
        std::snprintf(buf, sizeof buf, "  %.4e", p.rel_error);
        text << buf;
      }
      text << '\n';
    }
  }
  json wb = json::object();
  text << "Wright-Bessel identity: max |phi(1,nu+1,-x^2/4)(x/2)^nu - J_nu(x)|, x in (0,5]\n";
  double worst_wb = 0.0;
  for (double nu : {0.0, 0.5, 1.0}) {
    double m = 0.0;
    for (double x : wright_bessel_grid()) m = std::max(m, wright_bessel_point(nu, x).abs_error);
    wb[format_double(nu)] = m;
    worst_wb = std::max(worst_wb, m);
    char buf[64];
    std::snprintf(buf, sizeof buf, "  nu=%g  %.3e\n", nu, m);
    text << buf;
  }
  if (s.format == Format::Text) {
    out << text.str();
    return kOk;
  }
  json doc = {{"command", "limit-check"},
              {"q_limit", qrows},
              {"q_limit_max_rel_error_q099", worst_099},
              {"q_limit_decreasing", monotone},
              {"wright_bessel_max_abs_error", wb},
              {"wright_bessel_worst", worst_wb}};
  out << dump(document(doc));
  return kOk;
}

template <class T>
void read_opt(const json& j, const char* key, T& v) {
  if (j.contains(key)) v = j.at(key).get<T>();
}

}  // namespace

UcTarget JobSpec::target() const {
  UcTarget t{family_of(*this), parse_norm(norm)};
  t.validate();
  return t;
}

std::vector<UcTarget> sweep_grid(const JobSpec& s) {
  if (s.family != "qbessel" && s.family != "wright" && s.family != "all") {
    throw DomainError("sweep family must be qbessel, wright or all");
  }
  std::vector<Norm> norms;
  for (const auto& n : s.norms) norms.push_back(parse_norm(n));
  std::vector<UcTarget> grid;
  if (s.family != "wright") {
    for (int k : s.kinds) {
      for (double nu : s.nus) {
        for (double q : s.qs) {
          for (Norm n : norms) {
            if (n == Norm::F && nu <= 0.0) continue;
            UcTarget t{QBesselParams{parse_kind(k), nu, q}, n};
            t.validate();
            grid.push_back(t);
          }
        }
      }
    }
  }
  if (s.family != "qbessel") {
    for (double rho : s.rhos) {
      for (double beta : s.betas) {
        for (Norm n : norms) {
          UcTarget t{WrightParams{rho, beta}, n};
          t.validate();
          grid.push_back(t);
        }
      }
    }
  }
  return grid;
}

JobSpec job_from_json(const json& j) {
  JobSpec s;
  s.command = j.at("command").get<std::string>();
  if (s.command == "sweep") s.family = "all";
  read_opt(j, "family", s.family);
  read_opt(j, "kind", s.kind);
  read_opt(j, "nu", s.nu);
  read_opt(j, "q", s.q);
  read_opt(j, "rho", s.rho);
  read_opt(j, "beta", s.beta);
  read_opt(j, "norm", s.norm);
  if (j.contains("format")) s.format = parse_format(j.at("format").get<std::string>());
  read_opt(j, "cache_dir", s.cache_dir);
  read_opt(j, "tol", s.tol);
  read_opt(j, "root_tol", s.root_tol);
  read_opt(j, "function", s.function);
  read_opt(j, "z", s.z);
  read_opt(j, "zi", s.zi);
  read_opt(j, "deriv", s.deriv);
  read_opt(j, "a", s.a);
  read_opt(j, "n", s.n);
  read_opt(j, "which", s.which);
  read_opt(j, "count", s.count);
  read_opt(j, "kinds", s.kinds);
  read_opt(j, "nus", s.nus);
  read_opt(j, "qs", s.qs);
  read_opt(j, "rhos", s.rhos);
  read_opt(j, "betas", s.betas);
  read_opt(j, "norms", s.norms);
  read_opt(j, "serial", s.serial);
  return s;
}

int run_job(const JobSpec& s, std::ostream& out, std::ostream& err) {
  try {
    if (s.command == "eval") return cmd_eval(s, out);
    if (s.command == "zeros") return cmd_zeros(s, out);
    if (s.command == "radius") return cmd_radius(s, out, err);
    if (s.command == "verify") return cmd_verify(s, out);
    if (s.command == "sweep") return cmd_sweep(s, out, err);
    if (s.command == "limit-check") return cmd_limit_check(s, out);
    err << "error: unknown command '" << s.command << "'\n";
    return kInvalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::bad_variant_access&) {
    err << "error: this function needs --family qbessel\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radius of uniform convexity for normalized q-Bessel and Wright functions"};
  app.require_subcommand(0, 1);
  std::string job_path;
  app.add_option("--job", job_path, "JSON job file (replaces all other flags)");

  JobSpec s;
  std::string format = "json";
  std::string sweep_family = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", s.family, "qbessel or wright")->capture_default_str();
    sub->add_option("--kind", s.kind, "q-Bessel kind s (2 or 3)")->capture_default_str();
    sub->add_option("--nu", s.nu, "q-Bessel order")->capture_default_str();
    sub->add_option("--q", s.q, "deformation parameter")->capture_default_str();
    sub->add_option("--rho", s.rho, "Wright rho")->capture_default_str();
    sub->add_option("--beta", s.beta, "Wright beta")->capture_default_str();
    sub->add_option("--norm", s.norm, "normalization f, g or h")->capture_default_str();
    sub->add_option("--format", format, "json, csv or text")->capture_default_str();
    sub->add_option("--cache-dir", s.cache_dir, "zero-table cache directory");
    sub->add_option("--root-tol", s.root_tol, "relative root tolerance")->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "evaluate a series with its error estimate");
  add_common(eval);
  eval->add_option("--function", s.function,
                   "pochhammer, c_nu, classical, jackson, phi, lambda, psi, normalized, ratio")
      ->capture_default_str();
  eval->add_option("--z", s.z, "argument (real part)")->capture_default_str();
  eval->add_option("--zi", s.zi, "argument (imaginary part)")->capture_default_str();
  eval->add_option("--deriv", s.deriv, "derivative order 0..2")->capture_default_str();
  eval->add_option("--a", s.a, "q-Pochhammer base")->capture_default_str();
  eval->add_option("--n", s.n, "q-Pochhammer length (negative: infinite)")->capture_default_str();

  auto* zeros = app.add_subcommand("zeros", "positive zeros of a target function");
  add_common(zeros);
  zeros->add_option("--which", s.which, "Function, Derivative, AlphaComb, ..., HPrime")
      ->capture_default_str();
  zeros->add_option("--count", s.count, "number of zeros")->capture_default_str();

  auto* radius = app.add_subcommand("radius", "radius of uniform convexity by both routes");
  add_common(radius);

  auto* verify = app.add_subcommand("verify", "check a radius against the sampled criterion");
  add_common(verify);
  verify->add_option("--tol", s.tol, "allowed oracle disagreement")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "parameter grid to CSV");
  sweep->add_option("--family", sweep_family, "qbessel, wright or all")->capture_default_str();
  sweep->add_option("--kinds", s.kinds, "q-Bessel kinds")->delimiter(',');
  sweep->add_option("--nus", s.nus, "q-Bessel orders")->delimiter(',');
  sweep->add_option("--qs", s.qs, "deformation parameters")->delimiter(',');
  sweep->add_option("--rhos", s.rhos, "Wright rho values")->delimiter(',');
  sweep->add_option("--betas", s.betas, "Wright beta values")->delimiter(',');
  sweep->add_option("--norms", s.norms, "normalizations")->delimiter(',');
  sweep->add_option("--cache-dir", s.cache_dir, "zero-table cache directory");
  sweep->add_option("--root-tol", s.root_tol, "relative root tolerance")->capture_default_str();
  sweep->add_flag("--serial", s.serial, "single-threaded reference path");

  auto* limit = app.add_subcommand("limit-check", "q -> 1 and Wright-Bessel identity tables");
  limit->add_option("--format", format, "json or text")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (!job_path.empty()) {
      std::ifstream in(job_path);
      if (!in) {
        err << "error: cannot read job file " << job_path << '\n';
        return kInvalid;
      }
      return run_job(job_from_json(json::parse(in)), out, err);
    }
    const auto subs = app.get_subcommands();
    if (subs.empty()) {
      out << app.help();
      return kInvalid;
    }
    s.command = subs.front()->get_name();
    if (s.command == "sweep") s.family = sweep_family;
    s.format = parse_format(format);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const json::exception& e) {
    err << "error: bad job file: " << e.what() << '\n';
    return kInvalid;
  }
  return run_job(s, out, err);
}

}  // namespace ucr::cli
