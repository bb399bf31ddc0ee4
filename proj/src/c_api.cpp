#include "icat/icat.h"

#include <cstring>
#include <string>

#include "icat/harness.hpp"

struct icat_doc {
  icat::Json json;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

icat_status fail(icat_status code, const std::string& what) {
  last_error = what;
  return code;
}

template <class F>
icat_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return ICAT_OK;
  } catch (const icat::Error& e) {
    return fail(static_cast<icat_status>(e.code()), e.what());
  } catch (const icat::Json::exception& e) {
    return fail(ICAT_E_BAD_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ICAT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ICAT_E_INTERNAL, e.what());
  }
}

icat::RunOptions to_options(const icat_options* o) {
  icat::RunOptions r;
  if (!o) return r;
  r.max_size = o->max_size;
  r.seed = o->seed;
  r.out_dir = o->out_dir ? o->out_dir : "";
  r.workers = o->workers;
  return r;
}

void require(const void* p, const char* what) {
  if (!p) throw icat::Error(icat::ErrorCode::kBadInput, std::string(what) + " is NULL");
}

icat_doc* wrap(icat::Json j) { return new icat_doc{std::move(j)}; }

}  // namespace

extern "C" {

const char* icat_version(void) { return "1.0.0"; }

void icat_options_init(icat_options* opts) {
  if (!opts) return;
  opts->max_size = 0;
  opts->seed = 1;
  opts->out_dir = nullptr;
  opts->workers = 0;
}

const char* icat_last_error(void) { return last_error.c_str(); }

const char* icat_status_name(icat_status status) {
  if (status == ICAT_OK) return "Ok";
  if (status == ICAT_E_INTERNAL) return "Internal";
  if (status < ICAT_E_BAD_INPUT || status > ICAT_E_BOUND_TOO_LARGE) return "Unknown";
  return icat::error_name(static_cast<icat::ErrorCode>(status)).data();
}

int icat_exit_code(icat_status status) {
  if (status == ICAT_OK) return 0;
  if (status == ICAT_E_INTERNAL) return 1;
  return icat::exit_code(static_cast<icat::ErrorCode>(status));
}

icat_status icat_doc_parse(const char* text, icat_doc** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(icat::Json::parse(text));
  });
}

icat_status icat_doc_load(const char* path, icat_doc** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = wrap(icat::load_json(path));
  });
}

icat_status icat_doc_dump(const icat_doc* doc, int indent, char** out) {
  return guarded([&] {
    require(doc, "doc");
    require(out, "out");
    *out = copy_string(doc->json.dump(indent < 0 ? -1 : indent));
  });
}

void icat_doc_free(icat_doc* doc) { delete doc; }

void icat_string_free(char* s) { delete[] s; }

icat_status icat_check(const char* type, const icat_doc* in, int* pass, icat_doc** out) {
  return guarded([&] {
    require(in, "in");
    auto r = icat::run_check(type ? type : "auto", in->json);
    if (pass) *pass = r.pass;
    if (out) *out = wrap(std::move(r.doc));
  });
}

icat_status icat_build(const char* what, const icat_doc* in, icat_doc** out) {
  return guarded([&] {
    require(what, "what");
    require(in, "in");
    require(out, "out");
    *out = wrap(icat::run_build(what, in->json));
  });
}

icat_status icat_classify(const char* what, const icat_doc* in, int* pass, icat_doc** out) {
  return guarded([&] {
    require(what, "what");
    require(in, "in");
    auto r = icat::run_classify(what, in->json);
    if (pass) *pass = r.pass;
    if (out) *out = wrap(std::move(r.doc));
  });
}

icat_status icat_search(const char* what, const char* kind, const icat_options* opts, int* found, icat_doc** out) {
  return guarded([&] {
    require(what, "what");
    auto r = icat::run_search(what, kind ? kind : "", to_options(opts));
    if (found) *found = r.pass;
    if (out) *out = wrap(std::move(r.doc));
  });
}

icat_status icat_enumerate(const char* kind, int max_size, icat_doc** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    *out = wrap(icat::run_enumerate(kind, max_size));
  });
}

icat_status icat_campaign_load(const char* name, icat_doc** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = wrap(icat::load_campaign(name));
  });
}

icat_status icat_verify(const icat_doc* manifest, const icat_options* opts, int* pass, icat_doc** report) {
  return guarded([&] {
    require(manifest, "manifest");
    auto r = icat::run_campaign(manifest->json, to_options(opts));
    if (pass) *pass = r.at("verdict") == "PASS";
    if (report) *report = wrap(std::move(r));
  });
}

icat_status icat_report_render(const icat_doc* report, char** text) {
  return guarded([&] {
    require(report, "report");
    require(text, "text");
    *text = copy_string(icat::render_report(report->json));
  });
}

}  // extern "C"
