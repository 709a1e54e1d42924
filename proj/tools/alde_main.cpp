// Command-line harness over the C API.
#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alde/alde.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::map<std::string, std::string> params;
  std::string out;
  std::string timing;
  std::string format = "csv";
  std::string f;
};

const char* const kParamKeys[] = {"alpha", "beta", "gamma", "d", "k", "a", "a0", "nmax", "smax", "wordlen"};

void add_params(CLI::App* app, Options& o) {
  for (const char* key : kParamKeys) app->add_option(std::string("--") + key, o.params[key]);
}

int status_exit(alde_status s) {
  std::fprintf(stderr, "alde: %s error: %s\n", alde_status_name(s), alde_last_error());
  return s == ALDE_E_USAGE || s == ALDE_E_PARSE ? kUsage : kFail;
}

using ConfigPtr = std::unique_ptr<alde_config, decltype(&alde_config_free)>;
using ReportPtr = std::unique_ptr<alde_report, decltype(&alde_report_free)>;
using StringPtr = std::unique_ptr<char, decltype(&alde_string_free)>;

// Builds the config from the flags that were given; returns a status.
alde_status make_config(const CLI::App* app, const Options& o, ConfigPtr& cfg) {
  alde_config* raw = nullptr;
  if (alde_status s = alde_config_new(&raw)) return s;
  cfg.reset(raw);
  for (const char* key : kParamKeys) {
    if (app->count(std::string("--") + key) == 0) continue;
    if (alde_status s = alde_config_set(cfg.get(), key, o.params.at(key).c_str())) return s;
  }
  return ALDE_OK;
}

// Writes text to path, or to stdout when path is empty.
alde_status emit(const std::string& path, const char* text) {
  if (path.empty()) {
    std::fputs(text, stdout);
    return ALDE_OK;
  }
  return alde_write_file(path.c_str(), text);
}

int run_verify(const CLI::App* app, const Options& o, const std::string& suite) {
  ConfigPtr cfg(nullptr, alde_config_free);
  if (alde_status s = make_config(app, o, cfg)) return status_exit(s);
  alde_report* raw = nullptr;
  if (alde_status s = alde_verify(cfg.get(), suite.c_str(), &raw)) return status_exit(s);
  ReportPtr rep(raw, alde_report_free);

  char* text = nullptr;
  if (alde_status s = alde_report_json(rep.get(), &text)) return status_exit(s);
  StringPtr json(text, alde_string_free);
  if (alde_status s = emit(o.out, json.get())) return status_exit(s);
  if (!o.timing.empty()) {
    if (alde_status s = alde_report_timing_json(rep.get(), &text)) return status_exit(s);
    StringPtr timing(text, alde_string_free);
    if (alde_status s = alde_write_file(o.timing.c_str(), timing.get())) return status_exit(s);
  }
  const bool pass = alde_report_pass(rep.get());
  std::fprintf(stderr, "%s: %zu checks, %zu failed: %s\n", suite.c_str(), alde_report_size(rep.get()),
               alde_report_failures(rep.get()), pass ? "PASS" : "FAIL");
  return pass ? kPass : kFail;
}

int run_table(const CLI::App* app, const Options& o, const std::string& kind) {
  ConfigPtr cfg(nullptr, alde_config_free);
  if (alde_status s = make_config(app, o, cfg)) return status_exit(s);
  char* text = nullptr;
  if (alde_status s = alde_table(cfg.get(), kind.c_str(), o.format.c_str(), &text)) return status_exit(s);
  StringPtr table(text, alde_string_free);
  if (alde_status s = emit(o.out, table.get())) return status_exit(s);
  return kPass;
}

int run_synth(const CLI::App* app, const Options& o) {
  ConfigPtr cfg(nullptr, alde_config_free);
  if (alde_status s = make_config(app, o, cfg)) return status_exit(s);
  char* text = nullptr;
  int pass = 0;
  if (alde_status s = alde_krall_synth(cfg.get(), o.f.empty() ? nullptr : o.f.c_str(), &text, &pass))
    return status_exit(s);
  StringPtr json(text, alde_string_free);
  if (alde_status s = emit(o.out, json.get())) return status_exit(s);
  std::fprintf(stderr, "krall synth: %s\n", pass ? "PASS" : "FAIL");
  return pass ? kPass : kFail;
}

// Gram matrix on stdout (or --out), verdict from the orth suite.
int run_sobolev(const CLI::App* app, const Options& o) {
  ConfigPtr cfg(nullptr, alde_config_free);
  if (alde_status s = make_config(app, o, cfg)) return status_exit(s);
  char* text = nullptr;
  if (alde_status s = alde_table(cfg.get(), "gram", "json", &text)) return status_exit(s);
  StringPtr gram(text, alde_string_free);
  alde_report* raw = nullptr;
  if (alde_status s = alde_verify(cfg.get(), "orth", &raw)) return status_exit(s);
  ReportPtr rep(raw, alde_report_free);
  if (alde_status s = emit(o.out, gram.get())) return status_exit(s);
  const bool pass = alde_report_pass(rep.get());
  std::printf("verdict: %s (%zu checks, %zu failed)\n", pass ? "PASS" : "FAIL", alde_report_size(rep.get()),
              alde_report_failures(rep.get()));
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Darboux-transformed Jacobi and simplex polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", alde_version());

  Options o;
  std::string suite, kind;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"jacobi", "krall", "simplex", "darboux", "orth", "all"}));
  add_params(verify, o);
  verify->add_option("--out", o.out, "report file (JSON); stdout if omitted");
  verify->add_option("--timing", o.timing, "file for per-check wall times");

  auto* krall = app.add_subcommand("krall", "one-variable Krall operators");
  krall->require_subcommand(1);
  auto* synth = krall->add_subcommand("synth", "synthesize B_f and B_psi");
  add_params(synth, o);
  synth->add_option("--f", o.f, "f2, f3, a member name or a polynomial in t");
  synth->add_option("--out", o.out, "output file");

  auto* simplex = app.add_subcommand("simplex", "polynomials on the simplex");
  simplex->require_subcommand(1);
  auto* sverify = simplex->add_subcommand("verify", "simplex and multivariable Darboux suites");
  add_params(sverify, o);
  sverify->add_option("--out", o.out, "report file (JSON)");
  sverify->add_option("--timing", o.timing, "file for per-check wall times");

  auto* orth = app.add_subcommand("orth", "orthogonality");
  orth->require_subcommand(1);
  auto* sobolev = orth->add_subcommand("sobolev", "Sobolev Gram matrix and verdict");
  add_params(sobolev, o);
  sobolev->add_option("--out", o.out, "Gram matrix file (JSON)");

  auto* table = app.add_subcommand("table", "export a table");
  table->add_option("kind", kind, "table kind")
      ->required()
      ->check(CLI::IsMember({"jacobi", "q", "qhat", "simplex", "Q", "operators", "gram"}));
  add_params(table, o);
  table->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (verify->parsed()) return run_verify(verify, o, suite);
  if (synth->parsed()) return run_synth(synth, o);
  if (sverify->parsed()) return run_verify(sverify, o, "multivariable");
  if (sobolev->parsed()) return run_sobolev(sobolev, o);
  if (table->parsed()) return run_table(table, o, kind);
  return kUsage;
}
