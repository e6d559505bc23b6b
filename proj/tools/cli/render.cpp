#include "cli/render.hpp"

#include "cli/sweep.hpp"

#include <sstream>

namespace sumrules::cli {

std::optional<Format> parse_format(std::string_view text) {
  if (text == "plain") return Format::Plain;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  return std::nullopt;
}

std::string format17(const Real& value) { return value.str(17, std::ios_base::fmtflags(0)); }

double to_double17(const Real& value) { return std::stod(format17(value)); }

namespace {

Json optional_real(const std::optional<Real>& v) {
  if (!v) return nullptr;
  return to_double17(*v);
}

Json coefficient_strings(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_decimal(c));
  return arr;
}

}  // namespace

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity"] = std::string(to_string(r.id));
  j["mode"] = std::string(to_string(r.mode));
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = std::move(params);
  j["lhs"] = to_decimal(r.lhs);
  j["rhs"] = to_decimal(r.rhs);
  j["equal"] = r.equal;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.lhs_poly) j["lhs_coefficients"] = coefficient_strings(*r.lhs_poly);
  if (r.rhs_poly) j["rhs_coefficients"] = coefficient_strings(*r.rhs_poly);
  if (r.residual) j["residual"] = to_double17(*r.residual);
  if (r.diagnostic) j["diagnostic"] = true;
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["bound"] = std::string(to_string(r.id));
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = std::move(params);
  j["exact"] = optional_real(r.exact);
  j["bound_value"] = to_double17(r.bound);
  j["satisfied"] = r.satisfied;
  j["slack"] = optional_real(r.slack);
  if (r.lower) {
    j["lower"] = optional_real(r.lower);
    j["lower_slack"] = optional_real(r.lower_slack);
  }
  return j;
}

Json to_json(const RunSummary& s) {
  Json j;
  j["total"] = s.total;
  j["passes"] = s.passes;
  j["failures"] = s.failures;
  j["skipped"] = s.skipped;
  j["first_failure"] = s.first_failure ? *s.first_failure : Json(nullptr);
  j["wall_ms"] = s.wall_ms;
  return Json{{"summary", std::move(j)}};
}

std::string params_text(const Params& params, char separator) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += separator;
    out += name + "=" + std::to_string(value);
  }
  return out;
}

std::string plain_line(const IdentityReport& r) {
  std::ostringstream os;
  os << to_string(r.id) << ' ' << to_string(r.mode) << ' ' << params_text(r.params, ' ') << " lhs=" << to_decimal(r.lhs)
     << " rhs=" << to_decimal(r.rhs);
  if (r.residual) os << " residual=" << format17(*r.residual);
  os << ' ' << (r.diagnostic ? "DIAGNOSTIC" : r.equal ? "PASS" : "FAIL");
  return os.str();
}

std::string csv_header_identity() { return "identity,mode,params,lhs,rhs,equal,elapsed_ms"; }

std::string csv_line(const IdentityReport& r) {
  std::ostringstream os;
  os << to_string(r.id) << ',' << to_string(r.mode) << ',' << params_text(r.params, ';') << ',' << to_decimal(r.lhs)
     << ',' << to_decimal(r.rhs) << ',' << (r.equal ? "true" : "false") << ',' << r.elapsed_ms;
  return os.str();
}

std::string plain_line(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.id) << ' ' << params_text(r.params, ' ') << " log_exact=" << (r.exact ? format17(*r.exact) : "-inf")
     << " log_bound=" << format17(r.bound) << " slack=" << (r.slack ? format17(*r.slack) : "inf");
  if (r.lower_slack) os << " lower_slack=" << format17(*r.lower_slack);
  os << ' ' << (r.satisfied ? "PASS" : "FAIL");
  return os.str();
}

std::string csv_header_bound() { return "bound,params,log_exact,log_bound,slack,satisfied"; }

std::string csv_line(const BoundReport& r) {
  std::ostringstream os;
  os << to_string(r.id) << ',' << params_text(r.params, ';') << ',' << (r.exact ? format17(*r.exact) : "-inf") << ','
     << format17(r.bound) << ',' << (r.slack ? format17(*r.slack) : "inf") << ',' << (r.satisfied ? "true" : "false");
  return os.str();
}

std::string plain_line(const RunSummary& s) {
  std::ostringstream os;
  os << "summary: total=" << s.total << " passes=" << s.passes << " failures=" << s.failures << " skipped=" << s.skipped
     << " wall_ms=" << s.wall_ms;
  return os.str();
}

}  // namespace sumrules::cli
