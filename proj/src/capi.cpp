#include "alde/alde.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>

#include "alde/error.hpp"
#include "alde/suites.hpp"

struct alde_config {
  alde::RunConfig cfg;
};

struct alde_report {
  alde::Report report;
};

namespace {

thread_local std::string last_error;

alde_status fail(alde_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs fn and maps exceptions onto status codes.
template <class F>
alde_status guarded(F&& fn) {
  try {
    fn();
    last_error.clear();
    return ALDE_OK;
  } catch (const alde::UsageError& e) {
    return fail(ALDE_E_USAGE, e.what());
  } catch (const alde::ParseError& e) {
    return fail(ALDE_E_PARSE, e.what());
  } catch (const alde::DomainError& e) {
    return fail(ALDE_E_DOMAIN, e.what());
  } catch (const alde::SolveError& e) {
    return fail(ALDE_E_SOLVE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ALDE_E_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ALDE_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ALDE_E_INTERNAL, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* alde_version(void) { return "0.1.0"; }

const char* alde_status_name(alde_status s) {
  switch (s) {
    case ALDE_OK: return "ok";
    case ALDE_E_USAGE: return "usage";
    case ALDE_E_PARSE: return "parse";
    case ALDE_E_DOMAIN: return "domain";
    case ALDE_E_SOLVE: return "solve";
    case ALDE_E_IO: return "io";
    case ALDE_E_INTERNAL: return "internal";
    case ALDE_E_ARG: return "argument";
  }
  return "unknown";
}

const char* alde_last_error(void) { return last_error.c_str(); }

alde_status alde_config_new(alde_config** out) {
  if (!out) return fail(ALDE_E_ARG, "null output pointer");
  return guarded([&] { *out = new alde_config(); });
}

void alde_config_free(alde_config* cfg) { delete cfg; }

alde_status alde_config_set(alde_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(ALDE_E_ARG, "null argument");
  return guarded([&] { cfg->cfg.set(key, value); });
}

alde_status alde_verify(const alde_config* cfg, const char* suite, alde_report** out) {
  if (!cfg || !suite || !out) return fail(ALDE_E_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new alde_report{alde::run_suite(cfg->cfg, suite)}; });
}

void alde_report_free(alde_report* r) { delete r; }

int alde_report_pass(const alde_report* r) { return r && r->report.pass() ? 1 : 0; }

size_t alde_report_size(const alde_report* r) { return r ? r->report.records.size() : 0; }

size_t alde_report_failures(const alde_report* r) { return r ? r->report.failures() : 0; }

alde_status alde_report_json(const alde_report* r, char** out) {
  if (!r || !out) return fail(ALDE_E_ARG, "null argument");
  return guarded([&] { *out = copy_out(alde::dump(alde::report_to_json(r->report))); });
}

alde_status alde_report_timing_json(const alde_report* r, char** out) {
  if (!r || !out) return fail(ALDE_E_ARG, "null argument");
  return guarded([&] { *out = copy_out(alde::dump(alde::timing_to_json(r->report))); });
}

alde_status alde_table(const alde_config* cfg, const char* kind, const char* format, char** out) {
  if (!cfg || !kind || !format || !out) return fail(ALDE_E_ARG, "null argument");
  return guarded([&] { *out = copy_out(alde::export_table(cfg->cfg, kind, format)); });
}

alde_status alde_krall_synth(const alde_config* cfg, const char* f, char** out, int* pass) {
  if (!cfg || !out) return fail(ALDE_E_ARG, "null argument");
  return guarded([&] {
    const alde::SynthOutput s = alde::krall_synth(cfg->cfg, f ? f : "");
    *out = copy_out(alde::dump(s.json));
    if (pass) *pass = s.report.pass() ? 1 : 0;
  });
}

alde_status alde_write_file(const char* path, const char* text) {
  if (!path || !text) return fail(ALDE_E_ARG, "null argument");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return fail(ALDE_E_IO, std::string("cannot open ") + path);
  f << text;
  f.close();
  if (!f) return fail(ALDE_E_IO, std::string("cannot write ") + path);
  last_error.clear();
  return ALDE_OK;
}

void alde_string_free(char* s) { std::free(s); }

}  // extern "C"
