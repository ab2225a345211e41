/* voa - exact vertex algebra computations over the rationals.
 *
 * C interface to the core library: opaque handles, integer status codes,
 * malloc'd strings released through voa_string_free. All computation is
 * exact; no floating point appears anywhere.
 */
#ifndef VOA_H
#define VOA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct voa_algebra voa_algebra;
typedef struct voa_state voa_state;

/* Functions returning pointers yield NULL on failure; integer-returning
 * functions yield a negative status. voa_last_error() describes the most
 * recent failure on the calling thread. */
enum voa_status {
    VOA_OK = 0,
    VOA_ERR_INVALID = -1, /* bad arguments, parse errors, inconsistent specs */
    VOA_ERR_DOMAIN = -2,  /* zero divisor, critical level, pole, ... */
    VOA_ERR_INTERNAL = -3
};

const char* voa_last_error(void);
void voa_string_free(char* s);

/* -- algebra handles -------------------------------------------------- */

/* Builtin names: heisenberg:n, heisdeg:n, heispair:n, freefermion:n,
 * betagamma:n, bc:n, sympfermion:n, oev:n:k, oodd:n:k, sev:n:k, sodd:n:k,
 * oevpair:n:k, ooddpair:n:k, virasoro:<c>|virasoro:<param>,
 * affine:sl2:<k>|affine:sl2:<param>, deformable:sl2[:param]. */
voa_algebra* voa_algebra_builtin(const char* name);
voa_algebra* voa_algebra_from_json(const char* json_text);
voa_algebra* voa_algebra_from_file(const char* path);
char* voa_algebra_to_json(const voa_algebra* h);
void voa_algebra_free(voa_algebra* h);

int voa_algebra_num_generators(const voa_algebra* h);
char* voa_algebra_generator_name(const voa_algebra* h, int index);
/* weights are half-integers stored doubled */
long voa_algebra_graded_dimension(voa_algebra* h, long weight2x);

/* -- states ------------------------------------------------------------ */

voa_state* voa_state_parse(voa_algebra* h, const char* expr);
voa_state* voa_state_clone(const voa_state* s);
void voa_state_free(voa_state* s);
char* voa_state_str(const voa_state* s);
int voa_state_is_zero(const voa_state* s);
/* 1 if homogeneous (weight written to *weight2x), 0 if mixed, negative on error */
int voa_state_weight2x(const voa_state* s, long* weight2x);

voa_state* voa_nth_product(const voa_state* a, long n, const voa_state* b);
voa_state* voa_wick(const voa_state* a, const voa_state* b);
voa_state* voa_derivative(const voa_state* a, long times);
voa_state* voa_state_add(const voa_state* a, const voa_state* b);
voa_state* voa_state_scale(const voa_state* a, const char* rational);

/* -- task runner -------------------------------------------------------- */

/* Runs one task described as JSON, e.g.
 *   {"cmd":"triality","n":2,"m":1,"format":"text"}
 * Returns the rendered report (malloc'd) and writes the exit code:
 * 0 success/verified, 1 verification failure, 2 usage error. */
char* voa_run_task(const char* task_json, int* exit_code);

#ifdef __cplusplus
}
#endif
#endif /* VOA_H */
