/*
 * pmlat — p-measured poset representations of finite distributive
 * join-semilattices.
 *
 * C interface of the shared library. All functions are thread-compatible
 * (no shared mutable state); handles are opaque and owned by the caller.
 * Strings returned through `char **` parameters are heap-allocated and must
 * be released with pmlat_string_free().
 */
#ifndef PMLAT_H
#define PMLAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pmlat_doc pmlat_doc; /* a parsed document envelope */

typedef enum {
  PMLAT_OK = 0,          /* success / all checks green */
  PMLAT_VERIFY_FAIL = 1, /* verification failed; report produced */
  PMLAT_BAD_INPUT = 2,   /* malformed or contract-violating input */
  PMLAT_BUDGET = 3       /* element or search budget exhausted */
} pmlat_status;

const char *pmlat_version(void);

void pmlat_string_free(char *s);
void pmlat_doc_free(pmlat_doc *doc);

/* Parse a serialized document (one envelope). On failure returns
 * PMLAT_BAD_INPUT and sets *err. */
pmlat_status pmlat_doc_parse(const char *text, pmlat_doc **out, char **err);
pmlat_status pmlat_doc_read_file(const char *path, pmlat_doc **out, char **err);

/* Kind name: "poset", "semilattice", "measured-poset", "diagram",
 * "run-report". Returned string lives as long as the document. */
const char *pmlat_doc_kind(const pmlat_doc *doc);

/* Serialize back to text (byte-identical for untouched documents). */
pmlat_status pmlat_doc_serialize(const pmlat_doc *doc, char **out, char **err);

/* Construct the measured-poset representation. Semilattice input yields a
 * measured-poset document; diagram input yields a run-report document.
 * budget < 0 uses the built-in default (20000 elements per level). */
pmlat_status pmlat_represent(const pmlat_doc *input, long budget,
                             pmlat_doc **out, char **err);

/* Check the p-measure axioms and (P1)-(P3) of a measured poset against a
 * semilattice document. A report document is produced in every non-input-
 * error case. p2_all_pairs = 0 restricts (P2) to pairs below a join. */
pmlat_status pmlat_verify(const pmlat_doc *measured, const pmlat_doc *semilattice,
                          int p2_all_pairs, pmlat_doc **report, char **err);

/* Strong amalgam of the blocks strictly below `top` (an index element
 * label), measured into the object at `top`. Rejections (normality or
 * doubling failures) produce a report document and PMLAT_VERIFY_FAIL. */
pmlat_status pmlat_amalgam(const pmlat_doc *diagram, const char *top,
                           pmlat_doc **out, char **err);

/* The cube obstruction, reproduced and certified exhaustively. */
pmlat_status pmlat_counterexample_cube(pmlat_doc **report, char **err);

/* Smallest triple witnessing that interval extensions do not compose,
 * searched up to max_size elements (report says when none exists). */
pmlat_status pmlat_counterexample_int_compose(int max_size, pmlat_doc **report,
                                              char **err);

/* Chain-form cross-check of the amalgam measure at the given bound. */
pmlat_status pmlat_oracle_simplebvd(const pmlat_doc *diagram, const char *top,
                                    int chain_bound, pmlat_doc **report,
                                    char **err);

/* Exhaustive p-measure enumeration; at most list_limit tables are embedded
 * in the report, the count is always exact. */
pmlat_status pmlat_oracle_enumerate(const pmlat_doc *poset,
                                    const pmlat_doc *semilattice,
                                    long list_limit, pmlat_doc **report,
                                    char **err);

/* Hasse diagram in DOT text for poset-like documents. */
pmlat_status pmlat_emit_dot(const pmlat_doc *doc, char **dot_text, char **err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PMLAT_H */
