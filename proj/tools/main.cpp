// webtrace command-line front end. Talks to the engine exclusively through
// the C interface in webtrace.h; exit status 0 = all checks pass, 1 = a
// check failed, 2 = input or resource error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "webtrace.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CliError {
  std::string message;
};

[[noreturn]] void fail(const std::string& message) { throw CliError{message}; }

void check(wt_status status) {
  if (status != WT_OK) fail(wt_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail("cannot read '" + path + "'");
  return buf.str();
}

// Owned C string.
struct Str {
  char* p = nullptr;
  ~Str() { wt_string_free(p); }
  char** out() { return &p; }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};

using Signature = Handle<wt_signature, wt_signature_free>;
using WebHandle = Handle<wt_web, wt_web_free>;
using QwebHandle = Handle<wt_qweb, wt_qweb_free>;
using TensorHandle = Handle<wt_tensor, wt_tensor_free>;
using RepHandle = Handle<wt_representation, wt_representation_free>;
using PackHandle = Handle<wt_pack, wt_pack_free>;

// --budget wins over the WEBTRACE_BUDGET environment variable; both must be
// positive integers. 0 means "engine default".
long long resolve_budget(long long flag_value) {
  if (flag_value > 0) return flag_value;
  const char* env = std::getenv("WEBTRACE_BUDGET");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long long value = std::strtoll(env, &end, 10);
  if (!end || *end != '\0' || value <= 0) {
    fail("WEBTRACE_BUDGET must be a positive integer, got '" + std::string(env) + "'");
  }
  return value;
}

Signature parse_signature_file(const std::string& path) {
  Signature sig;
  check(wt_signature_parse(read_file(path).c_str(), sig.out()));
  return sig;
}

RepHandle parse_representation_file(const std::string& path) {
  RepHandle rep;
  check(wt_representation_parse(read_file(path).c_str(), rep.out()));
  return rep;
}

WebHandle parse_web_file(const std::string& path, const wt_signature* sig, bool strict) {
  WebHandle web;
  check(wt_web_parse(sig, read_file(path).c_str(), strict ? 1 : 0, web.out()));
  return web;
}

int cmd_validate(const std::string& sig_path, const std::string& web_path) {
  Signature sig = parse_signature_file(sig_path);
  WebHandle web = parse_web_file(web_path, sig.get(), false);
  Str report;
  int valid = 0;
  check(wt_web_validate(web.get(), report.out(), &valid));
  if (valid) {
    std::printf("valid\n");
    return kExitPass;
  }
  std::fputs(report.p, stdout);
  return kExitFail;
}

int cmd_trace(const std::string& rep_path, const std::string& web_path, long long budget,
              bool hat) {
  RepHandle rep = parse_representation_file(rep_path);
  Signature sig;
  check(wt_representation_signature(rep.get(), sig.out()));
  WebHandle web = parse_web_file(web_path, sig.get(), true);
  if (hat) {
    TensorHandle t;
    check(wt_extended_trace(rep.get(), web.get(), budget, t.out()));
    Str text;
    check(wt_tensor_serialize(t.get(), text.out()));
    std::fputs(text.p, stdout);
  } else {
    Str value;
    check(wt_trace(rep.get(), web.get(), budget, value.out()));
    std::printf("%s\n", value.p);
  }
  return kExitPass;
}

int cmd_glue(const std::string& sig_path, const std::string& web_path,
             const std::string& with_path) {
  Signature sig = parse_signature_file(sig_path);
  WebHandle a = parse_web_file(web_path, sig.get(), true);
  WebHandle b = parse_web_file(with_path, sig.get(), true);
  WebHandle glued;
  check(wt_web_glue(a.get(), b.get(), glued.out()));
  Str text;
  check(wt_web_serialize(glued.get(), text.out()));
  std::fputs(text.p, stdout);
  return kExitPass;
}

int cmd_delta(const std::string& sig_path, int k) {
  Signature sig = parse_signature_file(sig_path);
  QwebHandle q;
  check(wt_qweb_delta(sig.get(), k, q.out()));
  Str text;
  check(wt_qweb_serialize(q.get(), text.out()));
  std::fputs(text.p, stdout);
  return kExitPass;
}

int cmd_check_delta(const std::string& rep_path, long long budget) {
  RepHandle rep = parse_representation_file(rep_path);
  Str report;
  int hat_zero = 0;
  check(wt_check_delta(rep.get(), budget, report.out(), &hat_zero));
  std::fputs(report.p, stdout);
  return hat_zero ? kExitPass : kExitFail;
}

int cmd_check_relations(const std::string& pack_path, long long budget) {
  PackHandle pack;
  check(wt_pack_parse(read_file(pack_path).c_str(), pack.out()));
  Str report;
  int all_match = 0;
  check(wt_pack_check(pack.get(), budget, report.out(), &all_match));
  std::fputs(report.p, stdout);
  return all_match ? kExitPass : kExitFail;
}

int cmd_connmat(const std::string& rep_path, int k, int max_vertices, int max_loops,
                long long budget) {
  RepHandle rep = parse_representation_file(rep_path);
  Str report;
  long rank = 0;
  size_t webs = 0;
  check(wt_connmat(rep.get(), k, max_vertices, max_loops, budget, report.out(), &rank, &webs));
  std::fputs(report.p, stdout);
  return kExitPass;
}

int cmd_rank_check(const std::string& rep_path, int k_max, int max_vertices, int max_loops,
                   long long budget) {
  RepHandle rep = parse_representation_file(rep_path);
  Str report;
  int all_pass = 0;
  check(wt_rank_check(rep.get(), k_max, max_vertices, max_loops, budget, report.out(),
                      &all_pass));
  std::fputs(report.p, stdout);
  return all_pass ? kExitPass : kExitFail;
}

int cmd_witness_search(const std::string& rep_path, const std::string& qweb_path,
                       int max_vertices, int max_loops, long long budget) {
  RepHandle rep = parse_representation_file(rep_path);
  Signature sig;
  check(wt_representation_signature(rep.get(), sig.out()));
  QwebHandle omega;
  check(wt_qweb_parse(sig.get(), read_file(qweb_path).c_str(), omega.out()));
  Str witness;
  size_t candidates = 0;
  check(wt_witness_search(rep.get(), omega.get(), max_vertices, max_loops, budget,
                          witness.out(), &candidates));
  if (witness.p) {
    std::printf("witness found after %zu candidate(s):\n", candidates);
    std::fputs(witness.p, stdout);
  } else {
    std::printf("search exhausted after %zu candidate(s); no witness found\n", candidates);
  }
  return kExitPass;  // exhaustion is a bounded semi-decision, not a failure
}

int cmd_gallery(const std::string& name, bool run_check, long long budget) {
  if (name == "list") {
    Str names;
    check(wt_gallery_names(names.out()));
    std::fputs(names.p, stdout);
    return kExitPass;
  }
  PackHandle pack;
  check(wt_gallery_pack(name.c_str(), pack.out()));
  if (!run_check) {
    Str text;
    check(wt_pack_serialize(pack.get(), text.out()));
    std::fputs(text.p, stdout);
    return kExitPass;
  }
  Str report;
  int all_match = 0;
  check(wt_pack_check(pack.get(), budget, report.out(), &all_match));
  std::fputs(report.p, stdout);
  return all_match ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational evaluation of typed diagram traces"};
  app.require_subcommand(1);
  app.fallthrough();  // let --budget appear after the subcommand name

  long long budget_flag = 0;
  app.add_option("--budget", budget_flag,
                 "coloring/entry budget for evaluations (overrides WEBTRACE_BUDGET)");

  std::string sig_path, web_path, with_path, rep_path, pack_path, qweb_path, gallery_name;
  int k = 0, k_max = 0;
  int max_vertices = -1, max_loops = -1;
  bool gallery_check = false;

  CLI::App* validate = app.add_subcommand("validate", "check a web document's structure");
  validate->add_option("--sig", sig_path, "signature file")->required();
  validate->add_option("--web", web_path, "web file")->required();

  CLI::App* trace = app.add_subcommand("trace", "closed-diagram trace");
  trace->add_option("--rep", rep_path, "representation file")->required();
  trace->add_option("--web", web_path, "web file")->required();

  CLI::App* hat = app.add_subcommand("hat-trace", "boundary tensor of a (k,l)-web");
  hat->add_option("--rep", rep_path, "representation file")->required();
  hat->add_option("--web", web_path, "web file")->required();

  CLI::App* glue = app.add_subcommand("glue", "compose dual-profile webs");
  glue->add_option("--sig", sig_path, "signature file")->required();
  glue->add_option("--web", web_path, "(k,l)-web file")->required();
  glue->add_option("--with", with_path, "(l,k)-web file")->required();

  CLI::App* delta = app.add_subcommand("delta", "antisymmetrizer quantum web");
  delta->add_option("k", k, "strand count")->required();
  delta->add_option("--sig", sig_path, "signature file")->required();

  CLI::App* check_delta = app.add_subcommand("check-delta", "antisymmetrizer annihilation");
  check_delta->add_option("--rep", rep_path, "representation file")->required();

  CLI::App* check_relations =
      app.add_subcommand("check-relations", "evaluate a pack's relations");
  check_relations->add_option("pack", pack_path, "pack file")->required();

  CLI::App* connmat = app.add_subcommand("connmat", "connection matrix over (k,k)-webs");
  connmat->add_option("k", k, "boundary profile")->required();
  connmat->add_option("--rep", rep_path, "representation file")->required();
  connmat->add_option("--max-vertices", max_vertices, "enumeration bound (default 3)");
  connmat->add_option("--max-loops", max_loops, "enumeration bound (default 1)");

  CLI::App* rank_check = app.add_subcommand("rank-check", "rank bound dim^(2k) for k <= k_max");
  rank_check->add_option("k_max", k_max, "largest boundary profile")->required();
  rank_check->add_option("--rep", rep_path, "representation file")->required();
  rank_check->add_option("--max-vertices", max_vertices, "enumeration bound (default 3)");
  rank_check->add_option("--max-loops", max_loops, "enumeration bound (default 1)");

  CLI::App* witness = app.add_subcommand("witness-search", "look for a nonzero gluing partner");
  witness->add_option("--rep", rep_path, "representation file")->required();
  witness->add_option("--qweb", qweb_path, "quantum web file")->required();
  witness->add_option("--max-vertices", max_vertices, "enumeration bound (default 3)");
  witness->add_option("--max-loops", max_loops, "enumeration bound (default 1)");

  CLI::App* gallery = app.add_subcommand("gallery", "built-in example packs");
  gallery->add_option("name", gallery_name, "pack name, or 'list'")->required();
  gallery->add_flag("--check", gallery_check, "re-evaluate the pack's relations");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(sig_path, web_path);
    if (trace->parsed()) {
      return cmd_trace(rep_path, web_path, resolve_budget(budget_flag), false);
    }
    if (hat->parsed()) return cmd_trace(rep_path, web_path, resolve_budget(budget_flag), true);
    if (glue->parsed()) return cmd_glue(sig_path, web_path, with_path);
    if (delta->parsed()) return cmd_delta(sig_path, k);
    if (check_delta->parsed()) {
      return cmd_check_delta(rep_path, resolve_budget(budget_flag));
    }
    if (check_relations->parsed()) {
      return cmd_check_relations(pack_path, resolve_budget(budget_flag));
    }
    if (connmat->parsed()) {
      return cmd_connmat(rep_path, k, max_vertices, max_loops, resolve_budget(budget_flag));
    }
    if (rank_check->parsed()) {
      return cmd_rank_check(rep_path, k_max, max_vertices, max_loops,
                            resolve_budget(budget_flag));
    }
    if (witness->parsed()) {
      return cmd_witness_search(rep_path, qweb_path, max_vertices, max_loops,
                                resolve_budget(budget_flag));
    }
    if (gallery->parsed()) {
      return cmd_gallery(gallery_name, gallery_check,
                         gallery_check ? resolve_budget(budget_flag) : 0);
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return kExitError;
  }
  return kExitError;
}
