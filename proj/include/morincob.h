/*
 * morincob - exact computation of fold/cusp cobordism groups through the
 * stable-stems composition ring, plus the symbolic verification suites.
 *
 * C interface over the C++ core: opaque handles, integer status codes,
 * malloc'd strings released through mcb_string_free. All functions are safe
 * to call from multiple threads as long as each handle is used from one
 * thread at a time; handles themselves are immutable after creation.
 */

#ifndef MORINCOB_H
#define MORINCOB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcb_status {
  MCB_OK = 0,
  MCB_ERR_INVALID_ARGUMENT = 1, /* bad parameter value or shape */
  MCB_ERR_VALIDATION = 2,       /* malformed or inconsistent input data */
  MCB_ERR_UNKNOWN_PRODUCT = 3,  /* composition product absent from the table */
  MCB_ERR_OUT_OF_TABLE = 4,     /* stem degree beyond the table (degree > 11) */
  MCB_ERR_INDETERMINATE = 5,    /* integral value only pinned mod C2 */
  MCB_ERR_IO = 6,               /* file could not be read */
  MCB_ERR_INTERNAL = 7
} mcb_status;

typedef enum mcb_localization {
  MCB_LOC_INTEGRAL = 0,
  MCB_LOC_ODD = 1,      /* modulo the class of finite 2-groups */
  MCB_LOC_3PRIMARY = 2  /* 3-primary parts */
} mcb_localization;

typedef enum mcb_family {
  MCB_FAMILY_PRIMFOLD = 0,  /* prim fold cobordism groups */
  MCB_FAMILY_PRIMCUSP3 = 1, /* 3-primary prim cusp cobordism groups */
  MCB_FAMILY_CUSPCOB = 2    /* cusp cobordism groups mod C2 */
} mcb_family;

typedef struct mcb_stems mcb_stems;   /* stable-stems table with products */
typedef struct mcb_page mcb_page;     /* one page of the spectral sequence */
typedef struct mcb_answer mcb_answer; /* assembled graded answer */
typedef struct mcb_report mcb_report; /* verification report */

/* Human-readable name of a status code (static storage). */
const char* mcb_status_name(mcb_status status);

/* Message for the most recent failure on this thread (static storage,
 * overwritten by the next failing call). */
const char* mcb_last_error(void);

void mcb_string_free(char* s);

/* --- stems table --------------------------------------------------------- */

mcb_status mcb_stems_create_default(mcb_stems** out);
mcb_status mcb_stems_create_from_json(const char* json_text, mcb_stems** out);
mcb_status mcb_stems_create_from_file(const char* path, mcb_stems** out);
void mcb_stems_free(mcb_stems* t);

/* Rendered table; as_json selects the machine-readable form, which is
 * itself a loadable stems file. */
mcb_status mcb_stems_render(const mcb_stems* t, int as_json, char** out);

/* Canonical group of the n-th stem as {"rank":r,"torsion":[...]} (negative
 * n gives the zero group; n > 11 fails with MCB_ERR_OUT_OF_TABLE). */
mcb_status mcb_stems_group_json(const mcb_stems* t, int degree, char** out);

/* --- spectral sequence pages --------------------------------------------- */

/* r in {1,2,3}, jmax in [1,13]. Fails with MCB_ERR_INDETERMINATE when an
 * integral page-3 cell in the requested grid is only pinned mod C2. */
mcb_status mcb_page_compute(const mcb_stems* t, int r, int jmax,
                            mcb_localization loc, mcb_page** out);
void mcb_page_free(mcb_page* p);
mcb_status mcb_page_render(const mcb_page* p, int as_json, char** out);

/* One cell: {"status":...,"group":{...}} */
mcb_status mcb_page_cell_json(const mcb_page* p, int i, int j, char** out);

/* --- graded answers ------------------------------------------------------ */

mcb_status mcb_groups_compute(const mcb_stems* t, mcb_family family, int n,
                              mcb_answer** out);
void mcb_answer_free(mcb_answer* a);
mcb_status mcb_answer_render(const mcb_answer* a, int as_json, char** out);

/* --- verification suites -------------------------------------------------- */

/* which: 1 = cusp disc/framing identity suite, 2 = root strata suite.
 * max_r, samples, seed configure suite 2 (pass 0 for the defaults r=4,
 * samples=100, fixed seed). inject_defect may be NULL; the name of a known
 * defect deliberately corrupts one expected value so failure reporting can
 * be exercised ("det_expansion"). */
mcb_status mcb_verify(int which, int max_r, int samples, uint64_t seed,
                      const char* inject_defect, mcb_report** out);
void mcb_report_free(mcb_report* r);
mcb_status mcb_report_render(const mcb_report* r, int as_json, char** out);

/* 1 when every check passed, 0 otherwise. */
int mcb_report_passed(const mcb_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MORINCOB_H */
