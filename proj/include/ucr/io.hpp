#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "ucr/eval_result.hpp"
#include "ucr/oracle.hpp"
#include "ucr/radius.hpp"
#include "ucr/zeros.hpp"

namespace ucr {

using json = nlohmann::json;

/// Top-level schema tag of every emitted document.
inline constexpr const char* kSchema = "uc-radius/1";

json to_json(const RealEval& e);
json to_json(const ComplexEval& e);
json to_json(const ZeroTarget& t);
json to_json(const ZeroTable& t);
json to_json(const UcTarget& t);
json to_json(const RadiusResult& r);
json to_json(const DualRadius& d);
json to_json(const MarginReport& m);

ZeroTarget zero_target_from_json(const json& j);
ZeroTable zero_table_from_json(const json& j);

/// Wraps a payload as {"schema": ..., <payload fields>}.
json document(json payload);
/// Two-space indented text with a trailing newline; keys sorted, floats in
/// shortest round-trip form, so equal documents give equal bytes.
std::string dump(const json& j);

/// Sweep CSV: family, kind, norm, nu|rho, q|beta, radius, residual,
/// method_agreement, domain_upper.
std::string csv_header();
std::string csv_row(const UcTarget& t, const DualRadius& d);
/// Row for a point that failed; numeric fields are "nan".
std::string csv_error_row(const UcTarget& t);
/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& s);

/// On-disk zero tables keyed by a hash of the target descriptor and tolerance.
/// A stored table with at least the requested number of zeros is truncated
/// and returned; anything shorter is a miss.
class ZeroCache {
public:
  explicit ZeroCache(std::filesystem::path dir);

  [[nodiscard]] std::filesystem::path path_for(const ZeroTarget& t, double tol) const;
  [[nodiscard]] std::optional<ZeroTable> load(const ZeroTarget& t, int count, double tol) const;
  void store(const ZeroTable& table) const;
  /// Cache lookup in front of scan_and_refine.
  [[nodiscard]] ZeroTable get(const ZeroTarget& t, int count, const ScanOptions& opts = {}) const;
  [[nodiscard]] ZeroProvider provider(const ScanOptions& opts = {}) const;

private:
  std::filesystem::path dir_;
};

}  // namespace ucr
