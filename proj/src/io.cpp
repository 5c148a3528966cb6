#include "ucr/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "ucr/errors.hpp"

namespace ucr {
namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json family_json(const std::variant<QBesselParams, WrightParams>& f) {
  if (const auto* p = std::get_if<QBesselParams>(&f)) {
    return {{"family", "qbessel"}, {"kind", p->s()}, {"nu", p->nu}, {"q", p->q}};
  }
  const auto& w = std::get<WrightParams>(f);
  return {{"family", "wright"}, {"rho", w.rho}, {"beta", w.beta}};
}

std::variant<QBesselParams, WrightParams> family_from_json(const json& j) {
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "qbessel") {
    return QBesselParams{parse_kind(j.at("kind").get<int>()), j.at("nu").get<double>(),
                         j.at("q").get<double>()};
  }
  if (fam == "wright") return WrightParams{j.at("rho").get<double>(), j.at("beta").get<double>()};
  throw DomainError("unknown family '" + fam + "'");
}

json pair_json(const std::pair<double, double>& p) { return json::array({p.first, p.second}); }

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json to_json(const RealEval& e) {
  return {{"value", finite_or_null(e.value)},
          {"abs_error_est", finite_or_null(e.abs_error_est)},
          {"terms_used", e.terms_used}};
}

json to_json(const ComplexEval& e) {
  return {{"value", json::array({finite_or_null(e.value.real()), finite_or_null(e.value.imag())})},
          {"abs_error_est", finite_or_null(e.abs_error_est)},
          {"terms_used", e.terms_used}};
}

json to_json(const ZeroTarget& t) {
  json j = family_json(t.family);
  j["which"] = to_string(t.which);
  j["descriptor"] = t.descriptor();
  return j;
}

json to_json(const ZeroTable& t) {
  json br = json::array();
  for (const auto& b : t.brackets) br.push_back(pair_json(b));
  return {{"target", to_json(t.target)}, {"zeros", t.zeros},       {"brackets", br},
          {"residuals", t.residuals},    {"power_sums", t.power_sums}, {"tol", t.tol}};
}

json to_json(const UcTarget& t) {
  json j = family_json(t.family);
  j["norm"] = to_string(t.norm);
  return j;
}

json to_json(const RadiusResult& r) {
  json j = {{"radius", finite_or_null(r.radius)},
            {"bracket", pair_json(r.bracket)},
            {"residual", finite_or_null(r.residual)},
            {"iterations", r.iterations},
            {"method", to_string(r.method)},
            {"domain_upper", finite_or_null(r.domain_upper)},
            {"outside_hypotheses", r.outside_hypotheses},
            {"warnings", r.warnings}};
  if (r.method == RadiusMethod::ZeroSum) {
    j["tail_bound"] = finite_or_null(r.tail_bound);
    j["zeros_used"] = r.zeros_used;
  }
  return j;
}

json to_json(const DualRadius& d) {
  return {{"direct", to_json(d.direct)},
          {"zero_sum", to_json(d.zero_sum)},
          {"method_agreement", finite_or_null(d.agreement)},
          {"radius", finite_or_null(d.direct.radius)}};
}

json to_json(const MarginReport& m) {
  return {{"r", m.r},
          {"min_margin", finite_or_null(m.min_margin)},
          {"argmin_angle", m.argmin_angle},
          {"samples", m.samples}};
}

ZeroTarget zero_target_from_json(const json& j) {
  ZeroTarget t{family_from_json(j), parse_zero_kind(j.at("which").get<std::string>())};
  t.validate();
  return t;
}

ZeroTable zero_table_from_json(const json& j) {
  ZeroTable t;
  t.target = zero_target_from_json(j.at("target"));
  t.zeros = j.at("zeros").get<std::vector<double>>();
  for (const auto& b : j.at("brackets")) t.brackets.emplace_back(b.at(0).get<double>(), b.at(1).get<double>());
  t.residuals = j.at("residuals").get<std::vector<double>>();
  t.power_sums = j.at("power_sums").get<std::vector<double>>();
  t.tol = j.at("tol").get<double>();
  if (t.brackets.size() != t.zeros.size() || t.residuals.size() != t.zeros.size()) {
    throw DomainError("inconsistent zero table");
  }
  return t;
}

json document(json payload) {
  payload["schema"] = kSchema;
  return payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_header() {
  return "family,kind,norm,nu|rho,q|beta,radius,residual,method_agreement,domain_upper\n";
}

namespace {
std::string csv_prefix(const UcTarget& t) {
  std::ostringstream os;
  if (const auto* p = std::get_if<QBesselParams>(&t.family)) {
    os << "qbessel," << p->s() << ',' << to_string(t.norm) << ',' << format_double(p->nu) << ','
       << format_double(p->q);
  } else {
    const auto& w = std::get<WrightParams>(t.family);
    os << "wright,," << to_string(t.norm) << ',' << format_double(w.rho) << ','
       << format_double(w.beta);
  }
  return os.str();
}
}  // namespace

std::string csv_row(const UcTarget& t, const DualRadius& d) {
  return csv_prefix(t) + ',' + format_double(d.direct.radius) + ',' +
         format_double(d.direct.residual) + ',' + format_double(d.agreement) + ',' +
         format_double(d.direct.domain_upper) + '\n';
}

std::string csv_error_row(const UcTarget& t) { return csv_prefix(t) + ",nan,nan,nan,nan\n"; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ZeroCache::ZeroCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ZeroCache::path_for(const ZeroTarget& t, double tol) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(t.descriptor() + "|tol=" + format_double(tol))));
  return dir_ / name;
}

std::optional<ZeroTable> ZeroCache::load(const ZeroTarget& t, int count, double tol) const {
  std::ifstream in(path_for(t, tol));
  if (!in) return std::nullopt;
  try {
    ZeroTable tab = zero_table_from_json(json::parse(in));
    if (tab.target.descriptor() != t.descriptor() || tab.tol != tol ||
        static_cast<int>(tab.zeros.size()) < count) {
      return std::nullopt;
    }
    tab.zeros.resize(count);
    tab.brackets.resize(count);
    tab.residuals.resize(count);
    return tab;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ZeroCache::store(const ZeroTable& table) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto final_path = path_for(table.target, table.tol);
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << to_json(table).dump();
  }
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

ZeroTable ZeroCache::get(const ZeroTarget& t, int count, const ScanOptions& opts) const {
  if (auto hit = load(t, count, opts.tol)) return *hit;
  ZeroTable tab = scan_and_refine(t, count, opts);
  store(tab);
  return tab;
}

ZeroProvider ZeroCache::provider(const ScanOptions& opts) const {
  return [cache = *this, opts](const ZeroTarget& t, int count) { return cache.get(t, count, opts); };
}

}  // namespace ucr
