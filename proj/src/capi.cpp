#include "pgap/pgap.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "pgap/ag_codes.hpp"
#include "pgap/catalog.hpp"
#include "pgap/commands.hpp"
#include "pgap/error.hpp"
#include "pgap/json_io.hpp"

struct pgap_curve {
  pgap::Curve curve;
  std::once_flag points_once;
  std::optional<pgap::PointSet> points;
};

struct pgap_oracle {
  pgap::RiemannRochOracle oracle;
};

struct pgap_code {
  pgap::Matrix parity_check;
  int length = 0;
  int dimension = 0;
  int goppa = 0;
};

namespace {

thread_local std::string last_error;

pgap_status set_error(pgap_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs fn, mapping exceptions to status codes.
template <typename Fn>
pgap_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return PGAP_OK;
  } catch (const pgap::Error& e) {
    return set_error(static_cast<pgap_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(PGAP_INVALID_ARGUMENT, std::string("JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PGAP_BUDGET_EXCEEDED, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PGAP_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) pgap::fail(pgap::ErrorCode::invalid_argument, std::string(what) + " is NULL");
}

pgap::Curve validated(pgap::CurveSpec spec) {
  pgap::Curve curve(std::move(spec));
  const auto report = pgap::validate_curve(curve);
  if (!report.ok()) pgap::fail(pgap::ErrorCode::invalid_argument, "curve fails validation: " + report.failures());
  return curve;
}

const pgap::PointSet& points_of(pgap_curve* c) {
  std::call_once(c->points_once, [c] { c->points = pgap::rational_points(c->curve); });
  return *c->points;
}

}  // namespace

extern "C" {

const char* pgap_version(void) { return pgap::kLibraryVersion; }

int pgap_schema_version(void) { return pgap::kSchemaVersion; }

const char* pgap_last_error(void) { return last_error.c_str(); }

const char* pgap_status_name(pgap_status status) {
  switch (status) {
    case PGAP_OK: return "ok";
    case PGAP_INVALID_ARGUMENT: return "invalid_argument";
    case PGAP_INVARIANT_FAILURE: return "invariant_failure";
    case PGAP_IO: return "io";
    case PGAP_BUDGET_EXCEEDED: return "budget_exceeded";
    case PGAP_INSUFFICIENT_PRECISION: return "insufficient_precision";
    case PGAP_INTERNAL: return "internal";
  }
  return "unknown";
}

void pgap_string_free(char* s) { std::free(s); }

pgap_status pgap_run(const char* command, const char* config_json, char** report_json, char** csv) {
  bool passed = true;
  const pgap_status st = guarded([&] {
    need(command, "command");
    need(report_json, "report_json");
    *report_json = nullptr;
    if (csv) *csv = nullptr;
    const auto config = config_json && *config_json ? nlohmann::json::parse(config_json) : nlohmann::json::object();
    const pgap::CommandOutput out = pgap::run_command(command, config);
    *report_json = dup_string(out.report.dump(2));
    if (csv) *csv = dup_string(out.csv);
    passed = out.passed;
  });
  if (st == PGAP_OK && !passed) return set_error(PGAP_INVARIANT_FAILURE, "one or more checks failed; see the report");
  return st;
}

pgap_status pgap_curve_from_json(const char* spec_json, pgap_curve** out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(out, "out");
    *out = nullptr;
    auto spec = pgap::curve_spec_from_json(nlohmann::json::parse(spec_json));
    *out = new pgap_curve{validated(std::move(spec)), {}, {}};
  });
}

pgap_status pgap_curve_from_catalog(const char* name, pgap_curve** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = nullptr;
    *out = new pgap_curve{validated(pgap::catalog_curve(name).spec), {}, {}};
  });
}

void pgap_curve_free(pgap_curve* curve) { delete curve; }

pgap_status pgap_curve_genus(const pgap_curve* curve, int* genus) {
  return guarded([&] {
    need(curve, "curve");
    need(genus, "genus");
    *genus = curve->curve.genus();
  });
}

pgap_status pgap_curve_degree(const pgap_curve* curve, int* n) {
  return guarded([&] {
    need(curve, "curve");
    need(n, "n");
    *n = curve->curve.n();
  });
}

pgap_status pgap_curve_field_order(const pgap_curve* curve, uint64_t* q) {
  return guarded([&] {
    need(curve, "curve");
    need(q, "q");
    *q = curve->curve.field()->order();
  });
}

pgap_status pgap_curve_point_count(pgap_curve* curve, size_t* count) {
  return guarded([&] {
    need(curve, "curve");
    need(count, "count");
    *count = points_of(curve).points.size();
  });
}

pgap_status pgap_oracle_new(const pgap_curve* curve, pgap_oracle** out) {
  return guarded([&] {
    need(curve, "curve");
    need(out, "out");
    *out = nullptr;
    *out = new pgap_oracle{pgap::RiemannRochOracle(curve->curve)};
  });
}

void pgap_oracle_free(pgap_oracle* oracle) { delete oracle; }

pgap_status pgap_oracle_dimension(pgap_oracle* oracle, int a, int b, int c, int* dimension) {
  return guarded([&] {
    need(oracle, "oracle");
    need(dimension, "dimension");
    *dimension = oracle->oracle.dimension({a, b, c});
  });
}

pgap_status pgap_code_build(pgap_curve* curve, int a, int b, int c, int include_p3, pgap_code** out) {
  return guarded([&] {
    need(curve, "curve");
    need(out, "out");
    *out = nullptr;
    const pgap::RiemannRochOracle oracle(curve->curve);
    pgap::CodeOptions options;
    options.include_p3 = include_p3 != 0;
    const pgap::CodeReport rep = pgap::make_code_report(oracle, points_of(curve), {a, b, c}, std::nullopt, options);
    *out = new pgap_code{rep.parity_check, rep.length, rep.dimension, rep.goppa_bound};
  });
}

void pgap_code_free(pgap_code* code) { delete code; }

pgap_status pgap_code_params(const pgap_code* code, int* length, int* dimension, int* goppa_bound) {
  return guarded([&] {
    need(code, "code");
    if (length) *length = code->length;
    if (dimension) *dimension = code->dimension;
    if (goppa_bound) *goppa_bound = code->goppa;
  });
}

pgap_status pgap_code_verify_floor(const pgap_code* code, int w, uint64_t budget, unsigned jobs, int* holds) {
  return guarded([&] {
    need(code, "code");
    need(holds, "holds");
    *holds = pgap::verify_distance_floor(code->parity_check, w, budget, jobs ? jobs : 1) ? 1 : 0;
  });
}

}  // extern "C"
