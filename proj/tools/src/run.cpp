#include "cobalex/cli/run.hpp"

#include <sstream>

#include "cobalex/cli/properties.hpp"
#include "cobalex/descriptor.hpp"

namespace cobalex::cli {

namespace {

using ojson = nlohmann::ordered_json;

const nlohmann::json& need_input(const JobSpec& job) {
  if (!job.input) throw Error(ErrorKind::InvalidInput, job.command + " needs --input");
  return *job.input;
}

ClosedManifold closed_input(const JobSpec& job) { return closed_from_descriptor(need_input(job)); }

// A bare JSON list is shorthand for {"compose": [...]}.
Cobordism cobordism_input(const JobSpec& job) {
  const nlohmann::json& in = need_input(job);
  if (in.is_array()) return cobordism_from_descriptor(nlohmann::json{{"compose", in}});
  return cobordism_from_descriptor(in);
}

std::string render_pretty(const JobSpec& job, const ojson& j) {
  std::ostringstream os;
  if (job.command == "verify") {
    for (const auto& c : j["checks"]) {
      os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "  (" << c["cases"]
         << " cases";
      if (c["skipped"].get<unsigned>() > 0) os << ", " << c["skipped"] << " skipped";
      os << ")";
      if (c.contains("note")) os << "  " << c["note"].get<std::string>();
      if (c.contains("first_failure")) os << "\n     first failure: " << c["first_failure"].get<std::string>();
      os << "\n";
    }
    os << (j["pass"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << " (seed " << j["seed"] << ")\n";
    return os.str();
  }
  if (job.command == "betti" || job.command == "alex") {
    auto poly = [](const ojson& p) { return to_string(laurent_from_json(nlohmann::json::parse(p.dump()))); };
    if (job.command == "betti") return poly(j) + "\n";
    if (j.contains("delta_det")) os << "delta (det)   " << poly(j["delta_det"]) << "\n";
    if (j.contains("delta_trace")) os << "delta (trace) " << poly(j["delta_trace"]) << "\n";
    if (j.contains("overall_sign")) os << "overall sign  " << j["overall_sign"] << "\n";
    os << "normalized    " << poly(j["normalized"]) << "  (mu " << j["mu"] << ", sign " << j["sign"] << ")\n";
    os << "homology S1xS2 " << (j["homology_s1xs2"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
  }
  // Flat key/value objects; anything nested is printed as compact JSON.
  for (const auto& [key, value] : j.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

ojson homology_fields(ojson j, const ClosedManifold& cm) {
  const bool ok = is_homology_s1xs2(cm);
  j["homology_s1xs2"] = ok;
  if (!ok) j["warning"] = "not a homology S1xS2; the value is a formal sum";
  return j;
}

ojson do_alex(const JobSpec& job) {
  ojson report = invariants_report(closed_input(job), job.route);
  report.erase("casson");
  report.erase("sw");
  return report;
}

ojson do_casson(const JobSpec& job) {
  const ClosedManifold cm = closed_input(job);
  ojson j;
  j["casson"] = json_integer(casson(cm));
  return homology_fields(std::move(j), cm);
}

ojson do_sw(const JobSpec& job) {
  const ClosedManifold cm = closed_input(job);
  ojson j;
  if (job.d) {
    if (*job.d < 0) throw Error(ErrorKind::OutOfRange, "sw needs d >= 0");
    j["d"] = *job.d;
    j["sw"] = json_integer(seiberg_witten(cm, static_cast<unsigned>(*job.d)));
  } else {
    ojson sw = ojson::object();
    for (unsigned d = 0; d <= cm.genus; ++d) sw[std::to_string(d)] = json_integer(seiberg_witten(cm, d));
    j["sw"] = std::move(sw);
  }
  return homology_fields(std::move(j), cm);
}

ojson do_betti(const JobSpec& job) {
  if (job.betti_kind == "sym") return to_json(sym_poincare(job.g, job.k));
  if (job.betti_kind == "moduli") return to_json(moduli_poincare(job.g));
  if (job.betti_kind == "casson-graded") return to_json(casson_graded_dims(job.g));
  throw Error(ErrorKind::InvalidInput, "betti needs one of sym, moduli, casson-graded");
}

ojson do_verify(const JobSpec& job, bool& all_pass) {
  const SuiteOptions opts{.g_max = job.g_max, .samples = job.samples, .seed = job.seed};
  ojson j;
  j["seed"] = job.seed;
  j["g_max"] = job.g_max;
  j["samples"] = job.samples;
  ojson checks = ojson::array();
  all_pass = true;
  for (const auto& c : run_suite(opts)) {
    all_pass = all_pass && c.pass();
    checks.push_back(to_json(c));
  }
  j["checks"] = std::move(checks);
  j["pass"] = all_pass;
  return j;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ValidationFailure:
    case ErrorKind::NotSymplectic:
    case ErrorKind::NotLagrangian:
    case ErrorKind::PrimitivityViolated:
    case ErrorKind::GenusMismatch:
      return kValidation;
    case ErrorKind::TransversalityFailure:
      return kTransversality;
    case ErrorKind::ZeroDeterminant:
    case ErrorKind::NotSymmetrizable:
      return kNormalization;
    case ErrorKind::RouteMismatch:
      return kMismatch;
    default:
      return kUsage;
  }
}

Route parse_route(const std::string& s) {
  if (s == "det") return Route::Det;
  if (s == "trace") return Route::Trace;
  if (s == "both") return Route::Both;
  throw Error(ErrorKind::InvalidInput, "route must be det, trace or both");
}

JobResult run(const JobSpec& job) {
  JobResult res;
  try {
    ojson out;
    bool verified = true;
    if (job.command == "alex") out = do_alex(job);
    else if (job.command == "casson") out = do_casson(job);
    else if (job.command == "sw") out = do_sw(job);
    else if (job.command == "betti") out = do_betti(job);
    else if (job.command == "compose") out = to_json(cobordism_input(job));
    else if (job.command == "verify") out = do_verify(job, verified);
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + job.command + "'");

    res.output = job.pretty ? render_pretty(job, out) : out.dump() + "\n";
    if (!verified) {
      res.exit_code = kMismatch;
      res.error = "verify: at least one property check failed";
    }
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.kind());
    res.error = e.what();
  } catch (const nlohmann::json::exception& e) {
    res.exit_code = kUsage;
    res.error = std::string("InvalidInput: ") + e.what();
  }
  return res;
}

}  // namespace cobalex::cli
