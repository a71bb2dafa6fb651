#ifndef GELFAND_H
#define GELFAND_H

/* This file is generated by cbindgen from gelfand-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status of a C API call.
typedef enum GelfandStatus {
  // The call succeeded.
  GELFAND_STATUS_OK = 0,
  // A required pointer argument was null.
  GELFAND_STATUS_NULL_POINTER = 1,
  // An argument was out of range or unparsable.
  GELFAND_STATUS_INVALID_ARGUMENT = 2,
  // The requested size exceeds the built-in bound of the model.
  GELFAND_STATUS_CAPACITY_EXCEEDED = 3,
  // The semigroup hypotheses failed; the message carries the
  // diagnosis.
  GELFAND_STATUS_HYPOTHESIS_FAILED = 4,
  // The model was built but a structural verification failed.
  GELFAND_STATUS_VERIFICATION_FAILED = 5,
  // An internal panic was caught; the handle remains valid.
  GELFAND_STATUS_INTERNAL_PANIC = 6,
} GelfandStatus;

// Opaque handle to a built model.
typedef struct GelfandModel GelfandModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The
// pointer stays valid until the next failing call on the same thread;
// do not free it.
const char *gelfand_last_error_message(void);

// Library version as a static string; do not free it.
const char *gelfand_version(void);

// Builds the symmetric group involution model on `n` points.
enum GelfandStatus gelfand_sn_model_new(uintptr_t n, struct GelfandModel **out);

// Builds the rook monoid model on `n` points.
enum GelfandStatus gelfand_isn_model_new(uintptr_t n, struct GelfandModel **out);

// Builds the uniform block bijection monoid model on `n` points.
enum GelfandStatus gelfand_fstar_model_new(uintptr_t n, struct GelfandModel **out);

// Builds the Hecke algebra model on `n` points, over `Z[q]`.
enum GelfandStatus gelfand_hecke_model_new(uintptr_t n, struct GelfandModel **out);

// Builds the q-rook monoid algebra model on `n` points, over `Z[q]`.
enum GelfandStatus gelfand_qrook_model_new(uintptr_t n, struct GelfandModel **out);

// Releases a model handle. Passing null is a no-op.
void gelfand_model_free(struct GelfandModel *model);

// Releases a string returned by this library. Passing null is a no-op.
void gelfand_string_free(char *s);

// Dimension of the model (number of involution basis vectors).
enum GelfandStatus gelfand_model_dimension(const struct GelfandModel *model, uintptr_t *out);

// Number of generator matrices the model exports.
enum GelfandStatus gelfand_model_generator_count(const struct GelfandModel *model, uintptr_t *out);

// Serializes the model basis and generator matrices as JSON. The
// returned string must be freed with `gelfand_string_free`.
enum GelfandStatus gelfand_model_to_json(const struct GelfandModel *model, char **out);

// Runs the structural verification of the model: defining relations and
// block structure for the deformed models, the matrix homomorphism and
// module axiom for the undeformed ones. `out_passed` receives the
// verdict; the status is `VerificationFailed` (with a message) exactly
// when the verdict is false.
enum GelfandStatus gelfand_model_verify(const struct GelfandModel *model, bool *out_passed);

// Commutant dimension of the model's generator matrices with `q`
// specialized at the rational point `q0` (a string, `"p"` or `"p/q"`);
// the undeformed models ignore `q0`. For a multiplicity-free model this
// equals the number of simple modules.
//
// # Safety
// `q0` must be a valid NUL-terminated string or null (treated as "2").
enum GelfandStatus gelfand_model_commutant_dimension(const struct GelfandModel *model,
                                                     const char *q0,
                                                     uintptr_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GELFAND_H */
