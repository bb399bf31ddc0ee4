#ifndef ICAT_ICAT_H
#define ICAT_ICAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ICAT_API __attribute__((visibility("default")))
#else
#define ICAT_API
#endif

/* Status codes; nonzero values match the core error categories. */
typedef enum icat_status {
  ICAT_OK = 0,
  ICAT_E_BAD_INPUT = 1,
  ICAT_E_KIND_MISMATCH,
  ICAT_E_INVALID_STRUCTURE,
  ICAT_E_INVALID_MORPHISM,
  ICAT_E_NOT_SPLIT,
  ICAT_E_UNSUPPORTED_COPRODUCT,
  ICAT_E_UNSUPPORTED_CONSTRUCTION,
  ICAT_E_FACTORIZATION_FAILURE,
  ICAT_E_CHAIN_CONDITION_VIOLATED,
  ICAT_E_KERNEL_NOT_TRIVIAL,
  ICAT_E_LAW_VIOLATION,
  ICAT_E_INVALID_ACTION,
  ICAT_E_INVALID_DIAGRAM,
  ICAT_E_COMPARISON_NOT_ISO,
  ICAT_E_TRIANGLE_LAW_VIOLATED,
  ICAT_E_RIGHT_CANCELLATION_VIOLATED,
  ICAT_E_BOUND_TOO_LARGE,
  ICAT_E_INTERNAL = 100
} icat_status;

/* Opaque JSON document (structure, bundle, witness, report, corpus). */
typedef struct icat_doc icat_doc;

typedef struct icat_options {
  int max_size;        /* caps every bound; 0 keeps the defaults */
  uint64_t seed;       /* randomized renumbering checks */
  const char* out_dir; /* witness files; NULL writes none */
  int workers;         /* 0 picks the hardware concurrency */
} icat_options;

ICAT_API const char* icat_version(void);
ICAT_API void icat_options_init(icat_options* opts);

/* Message of the last failing call on this thread; never NULL. */
ICAT_API const char* icat_last_error(void);
ICAT_API const char* icat_status_name(icat_status status);
/* Process exit status: 2 bad input, 3 unsupported, 1 otherwise, 0 for OK. */
ICAT_API int icat_exit_code(icat_status status);

ICAT_API icat_status icat_doc_parse(const char* text, icat_doc** out);
ICAT_API icat_status icat_doc_load(const char* path, icat_doc** out);
/* Serialized document; release with icat_string_free. */
ICAT_API icat_status icat_doc_dump(const icat_doc* doc, int indent, char** out);
ICAT_API void icat_doc_free(icat_doc* doc);
ICAT_API void icat_string_free(char* s);

/* Checks one bundle; type "auto" reads the document's "type" field. */
ICAT_API icat_status icat_check(const char* type, const icat_doc* in, int* pass, icat_doc** out);
/* star | product-model | rg-from-h | precat-from-chain | semidirect */
ICAT_API icat_status icat_build(const char* what, const icat_doc* in, icat_doc** out);
/* additive | group | magma */
ICAT_API icat_status icat_classify(const char* what, const icat_doc* in, int* pass, icat_doc** out);
/* a2-counterexample | peiffer-failure | joint-epic-failure */
ICAT_API icat_status icat_search(const char* what, const char* kind, const icat_options* opts, int* found,
                                 icat_doc** out);
ICAT_API icat_status icat_enumerate(const char* kind, int max_size, icat_doc** out);

/* Campaign by registered name or manifest path. */
ICAT_API icat_status icat_campaign_load(const char* name, icat_doc** out);
/* Runs a campaign or registration manifest; pass is 1 iff every check met
   its expected verdict. */
ICAT_API icat_status icat_verify(const icat_doc* manifest, const icat_options* opts, int* pass,
                                 icat_doc** report);
ICAT_API icat_status icat_report_render(const icat_doc* report, char** text);

#ifdef __cplusplus
}
#endif

#endif
