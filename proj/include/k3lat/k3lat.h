#ifndef K3LAT_H
#define K3LAT_H

/* C interface to the k3lat library.
 *
 * Every function returns a k3l_status. On failure k3l_last_error() holds a
 * message for the calling thread. Strings returned through char** are JSON
 * documents owned by the caller; release them with k3l_string_free.
 * Integers inside JSON are numbers when they fit in 64 bits, else strings.
 */

#include <stdint.h>

#if defined(_WIN32)
#define K3L_API __declspec(dllexport)
#else
#define K3L_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum k3l_status {
  K3L_OK = 0,
  K3L_INVALID_INPUT = 1,
  K3L_PRECONDITION = 2,
  K3L_BUDGET_EXCEEDED = 3,
  K3L_INTERNAL = 4,
  K3L_NULL_ARG = 5
} k3l_status;

typedef struct k3l_lattice k3l_lattice;
typedef struct k3l_fqm k3l_fqm;

K3L_API const char* k3l_version(void);
K3L_API const char* k3l_last_error(void);
K3L_API const char* k3l_status_name(k3l_status status);
K3L_API void k3l_string_free(char* s);

/* lattices */
K3L_API k3l_status k3l_lattice_from_json(const char* json, k3l_lattice** out);
K3L_API k3l_status k3l_lattice_of_family(const char* family, k3l_lattice** out);
K3L_API void k3l_lattice_free(k3l_lattice* lattice);
K3L_API k3l_status k3l_lattice_to_json(const k3l_lattice* lattice, char** out);
K3L_API k3l_status k3l_lattice_rank(const k3l_lattice* lattice, int64_t* out);
/* {"determinant","discriminant","signature":[r,s],"even"} */
K3L_API k3l_status k3l_lattice_invariants(const k3l_lattice* lattice, char** out);
/* vectors are JSON integer arrays; results are JSON integers */
K3L_API k3l_status k3l_lattice_inner(const k3l_lattice* lattice, const char* v, const char* w, char** out);
K3L_API k3l_status k3l_lattice_divisibility(const k3l_lattice* lattice, const char* v, char** out);
K3L_API k3l_status k3l_lattice_represent(const k3l_lattice* lattice, int64_t n, int64_t bound, char** out);
K3L_API k3l_status k3l_lattice_congruence(const k3l_lattice* lattice, int64_t n, int64_t modulus,
                                          int* obstructed);
/* unimodular matrix with first column v */
K3L_API k3l_status k3l_lattice_complete_basis(const k3l_lattice* lattice, const char* v, char** out);
/* h: JSON list of coefficient tuples generating an isotropic subgroup of A_L */
K3L_API k3l_status k3l_lattice_overlattice(const k3l_lattice* lattice, const char* h, k3l_lattice** out);
K3L_API k3l_status k3l_lattice_isometry_image(const k3l_lattice* lattice, int64_t bound, int64_t budget,
                                              char** out);

/* finite quadratic modules */
K3L_API k3l_status k3l_fqm_from_lattice(const k3l_lattice* lattice, k3l_fqm** out);
K3L_API k3l_status k3l_fqm_van_geemen(k3l_fqm** out);
K3L_API void k3l_fqm_free(k3l_fqm* a);
K3L_API k3l_status k3l_fqm_order(const k3l_fqm* a, int64_t* out);
/* divisors, generator q-values, b table; element list when |A| <= budget */
K3L_API k3l_status k3l_fqm_describe(const k3l_fqm* a, int64_t budget, char** out);
K3L_API k3l_status k3l_fqm_isotropic(const k3l_fqm* a, int64_t order, int64_t budget, char** out);
K3L_API k3l_status k3l_fqm_orthogonal_group(const k3l_fqm* a, int64_t budget, char** out);
/* {"isometric": bool, "map": [...] | null} */
K3L_API k3l_status k3l_fqm_isometric(const k3l_fqm* a, const k3l_fqm* b, int64_t budget, char** out);
K3L_API k3l_status k3l_fqm_primary_part(const k3l_fqm* a, int64_t p, k3l_fqm** out);

/* binary forms and genera; forms are [a,b,c] */
K3L_API k3l_status k3l_reduced_forms(int64_t d, char** out);
K3L_API k3l_status k3l_class_count(int64_t d, char** out);
K3L_API k3l_status k3l_reduction_cycle(const char* form, char** out);
K3L_API k3l_status k3l_same_genus(const k3l_lattice* a, const k3l_lattice* b, int64_t budget, int* out);
K3L_API k3l_status k3l_genus_reps(const k3l_lattice* lattice, int64_t budget, char** out);

/* {"ns": gram, "genus_reps": [...], "hodge": "pm-id" | {"generators": [...]}, "search_bound": n} */
K3L_API k3l_status k3l_fm_count(const char* problem, int64_t budget, char** out);

/* geometry */
K3L_API k3l_status k3l_family_tensor(const char* family, char** out);
K3L_API k3l_status k3l_verra_cubic(int64_t a, int64_t b, char** out);
K3L_API k3l_status k3l_complete_square2(const k3l_lattice* lattice, const char* h, int other_root, char** out);
K3L_API k3l_status k3l_complete_isotropic(const k3l_lattice* lattice, const char* f, char** out);

/* cohomology; factors and bundles are JSON integer arrays */
K3L_API k3l_status k3l_cohomology(const char* factors, const char* bundle, char** out);
K3L_API k3l_status k3l_ext_table(const char* factors, const char* from, const char* to, char** out);
/* {"factors": [...], "bundles": [[...], ...]} */
K3L_API k3l_status k3l_check_collection(const char* collection, char** out);
K3L_API k3l_status k3l_mutation_check(const char* factors, const char* e, const char* f, const char* g,
                                      int64_t shift, int64_t probe_radius, char** out);

/* {"items": [{"id","claim","pass","detail"}], "passed": n, "total": n} */
K3L_API k3l_status k3l_check_paper(char** out);

#ifdef __cplusplus
}
#endif

#endif
