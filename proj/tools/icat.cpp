#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "icat/icat.h"

namespace {

using Json = nlohmann::json;

struct DocDeleter {
  void operator()(icat_doc* d) const { icat_doc_free(d); }
};
using Doc = std::unique_ptr<icat_doc, DocDeleter>;

struct Globals {
  int max_size = 0;
  uint64_t seed = 1;
  std::string out;
  int workers = 0;
  bool json = false;
};

class Failure {
 public:
  explicit Failure(icat_status s) : status(s) {}
  icat_status status;
};

void ok(icat_status s) {
  if (s != ICAT_OK) throw Failure(s);
}

Doc load(const std::string& path) {
  icat_doc* d = nullptr;
  ok(icat_doc_load(path.c_str(), &d));
  return Doc(d);
}

std::string dump(const icat_doc* d, int indent = 2) {
  char* s = nullptr;
  ok(icat_doc_dump(d, indent, &s));
  std::string out(s);
  icat_string_free(s);
  return out;
}

/// Writes to --out when given, otherwise to stdout.
void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out);
  if (!f) {
    std::cerr << "icat: cannot write '" << out << "'\n";
    throw Failure(ICAT_E_BAD_INPUT);
  }
  f << text << "\n";
}

std::string verdict_line(const Json& doc) {
  std::string line = doc.value("verdict", std::string("?"));
  if (doc.contains("check")) line += " " + doc.at("check").get<std::string>();
  if (doc.contains("law") && !doc.at("law").get<std::string>().empty()) {
    line += ": " + doc.at("law").get<std::string>();
    if (doc.contains("witness") && !doc.at("witness").get<std::string>().empty())
      line += " at " + doc.at("witness").get<std::string>();
  }
  if (doc.contains("detail")) line += ": " + doc.at("detail").get<std::string>();
  return line;
}

icat_options options(const Globals& g) {
  icat_options o;
  icat_options_init(&o);
  o.max_size = g.max_size;
  o.seed = g.seed;
  o.workers = g.workers;
  return o;
}

int cmd_check(const Globals& g, const std::string& first, const std::string& second) {
  std::string type = second.empty() ? "auto" : first;
  auto in = load(second.empty() ? first : second);
  int pass = 0;
  icat_doc* out = nullptr;
  ok(icat_check(type.c_str(), in.get(), &pass, &out));
  Doc res(out);
  auto text = dump(res.get());
  std::cout << (g.json ? text : verdict_line(Json::parse(text))) << "\n";
  if (!g.out.empty()) emit(text, g.out);
  return pass ? 0 : 1;
}

int cmd_build(const Globals& g, const std::string& what, const std::string& file) {
  auto in = load(file);
  icat_doc* out = nullptr;
  ok(icat_build(what.c_str(), in.get(), &out));
  Doc res(out);
  emit(dump(res.get()), g.out);
  return 0;
}

int cmd_classify(const Globals& g, const std::string& what, const std::string& file) {
  auto in = load(file);
  int pass = 0;
  icat_doc* out = nullptr;
  ok(icat_classify(what.c_str(), in.get(), &pass, &out));
  Doc res(out);
  emit(dump(res.get()), g.out);
  return pass ? 0 : 1;
}

int cmd_search(const Globals& g, const std::string& what, const std::string& kind) {
  auto o = options(g);
  int found = 0;
  icat_doc* out = nullptr;
  ok(icat_search(what.c_str(), kind.c_str(), &o, &found, &out));
  Doc res(out);
  emit(dump(res.get()), g.out);
  return found ? 0 : 1;
}

int cmd_enumerate(const Globals& g, const std::string& kind) {
  icat_doc* out = nullptr;
  ok(icat_enumerate(kind.c_str(), g.max_size > 0 ? g.max_size : 4, &out));
  Doc res(out);
  emit(dump(res.get()), g.out);
  return 0;
}

int cmd_verify(const Globals& g, const std::string& campaign, const std::string& manifest) {
  icat_doc* m = nullptr;
  if (!manifest.empty())
    ok(icat_doc_load(manifest.c_str(), &m));
  else
    ok(icat_campaign_load(campaign.empty() ? "all" : campaign.c_str(), &m));
  Doc man(m);
  auto o = options(g);
  if (!g.out.empty()) {
    std::filesystem::create_directories(g.out);
    o.out_dir = g.out.c_str();
  }
  int pass = 0;
  icat_doc* r = nullptr;
  ok(icat_verify(man.get(), &o, &pass, &r));
  Doc report(r);
  char* text = nullptr;
  ok(icat_report_render(report.get(), &text));
  std::string rendered(text);
  icat_string_free(text);
  std::cout << (g.json ? dump(report.get()) + "\n" : rendered);
  if (!g.out.empty()) {
    std::ofstream(std::filesystem::path(g.out) / "report.json") << dump(report.get()) << "\n";
    std::ofstream(std::filesystem::path(g.out) / "report.txt") << rendered;
  }
  return pass ? 0 : 1;
}

int cmd_report(const Globals& g, const std::string& file) {
  auto in = load(file);
  char* text = nullptr;
  ok(icat_report_render(in.get(), &text));
  std::string rendered(text);
  icat_string_free(text);
  if (g.out.empty())
    std::cout << rendered;
  else
    emit(rendered, g.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-instance engine for internal categorical structures"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-size,--max-order", g.max_size, "Cap on every structure-size bound");
  app.add_option("--seed", g.seed, "Seed for randomized renumbering checks");
  app.add_option("--out", g.out, "Output file (or directory for verify)");
  app.add_option("--workers", g.workers, "Worker threads for campaigns");
  app.add_flag("--json", g.json, "Print JSON instead of the summary line");
  app.set_version_flag("--version", icat_version());

  std::string a, b, kind, campaign, manifest;
  auto* check = app.add_subcommand("check", "Validate one bundle: check [type] <file>");
  check->add_option("type_or_file", a)->required();
  check->add_option("file", b);
  auto* build = app.add_subcommand("build", "star | product-model | rg-from-h | precat-from-chain | semidirect");
  build->add_option("target", a)->required();
  build->add_option("file", b)->required();
  auto* classify = app.add_subcommand("classify", "additive | group | magma");
  classify->add_option("what", a)->required();
  classify->add_option("file", b)->required();
  auto* search = app.add_subcommand("search", "a2-counterexample | peiffer-failure | joint-epic-failure");
  search->add_option("what", a)->required();
  search->add_option("--kind", kind, "Ambient kind for a2-counterexample");
  auto* verify = app.add_subcommand("verify", "Run a campaign and print its report");
  verify->add_option("name,--campaign", campaign, "Campaign name or manifest path");
  verify->add_option("--manifest", manifest, "Campaign or registration manifest file");
  auto* report = app.add_subcommand("report", "Render a report JSON as text");
  report->add_option("file", a)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Print the corpus of a kind up to --max-size");
  enumerate->add_option("kind", a)->required();
  for (auto* sub : {check, build, classify, search, verify, report, enumerate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(g, a, b);
    if (*build) return cmd_build(g, a, b);
    if (*classify) return cmd_classify(g, a, b);
    if (*search) return cmd_search(g, a, kind);
    if (*verify) return cmd_verify(g, campaign, manifest);
    if (*report) return cmd_report(g, a);
    if (*enumerate) return cmd_enumerate(g, a);
  } catch (const Failure& f) {
    std::cerr << "icat: " << icat_status_name(f.status) << ": " << icat_last_error() << "\n";
    return icat_exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "icat: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
