// Copyright 2026 The ncprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the ncprob library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an ncp_status; on failure ncp_last_error()
 * describes the problem (thread-local, valid until the next call on the
 * same thread). Strings returned through char** are owned by the caller and
 * released with ncp_string_free. Rational parameters are "p/q" strings. */
#ifndef NCPROB_NCPROB_H
#define NCPROB_NCPROB_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(NCPROB_BUILDING_LIBRARY)
#    define NCP_API __declspec(dllexport)
#  else
#    define NCP_API __declspec(dllimport)
#  endif
#else
#  define NCP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ncp_status {
  NCP_OK = 0,
  NCP_ERR_INVALID_ARGUMENT = 1, /* null pointer or unknown name */
  NCP_ERR_PARSE = 2,
  NCP_ERR_DOMAIN = 3,
  NCP_ERR_DEGREE_EXCEEDED = 4,
  NCP_ERR_ALPHABET_MISMATCH = 5,
  NCP_ERR_PRECONDITION = 6,
  NCP_ERR_INTERNAL = 7
} ncp_status;

typedef struct ncp_series ncp_series;
typedef struct ncp_distribution ncp_distribution;

NCP_API const char* ncp_version(void);
NCP_API const char* ncp_last_error(void);
NCP_API const char* ncp_status_string(ncp_status status);
NCP_API void ncp_string_free(char* text);

/* Series: {"k", "degree", "coeffs": {"1,2": "p/q"}} */
NCP_API ncp_status ncp_series_from_json(const char* json, ncp_series** out);
NCP_API ncp_status ncp_series_to_json(const ncp_series* series, char** out);
NCP_API ncp_status ncp_series_coefficient(const ncp_series* series, const char* word, char** out);
NCP_API void ncp_series_free(ncp_series* series);

NCP_API ncp_status ncp_reta(const ncp_series* f, ncp_series** out);
NCP_API ncp_status ncp_reta_inverse(const ncp_series* g, ncp_series** out);

/* Distributions. Input JSON may carry "view": "moments" | "R" | "eta". */
NCP_API ncp_status ncp_distribution_from_json(const char* json, ncp_distribution** out);
/* view may be NULL for moments. */
NCP_API ncp_status ncp_distribution_to_json(const ncp_distribution* d, const char* view, char** out);
NCP_API ncp_status ncp_distribution_shape(const ncp_distribution* d, int* k, int* degree);
NCP_API void ncp_distribution_free(ncp_distribution* d);

NCP_API ncp_status ncp_semicircular(const char* t, int k, int degree, ncp_distribution** out);
NCP_API ncp_status ncp_free_convolve(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out);
NCP_API ncp_status ncp_boolean_convolve(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out);
NCP_API ncp_status ncp_mult_convolve(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out);
NCP_API ncp_status ncp_free_power(const ncp_distribution* d, const char* t, ncp_distribution** out);
NCP_API ncp_status ncp_boolean_power(const ncp_distribution* d, const char* t, ncp_distribution** out);
NCP_API ncp_status ncp_bbp_transform(const ncp_distribution* d, const char* t, ncp_distribution** out);
NCP_API ncp_status ncp_dilate(const ncp_distribution* d, const char* r, ncp_distribution** out);
/* Result degree is the input degree + 2. */
NCP_API ncp_status ncp_phi(const ncp_distribution* nu, ncp_distribution** out);
/* Moments of nu boxplus gamma_t through the pairing formula. */
NCP_API ncp_status ncp_brownian_moments(const ncp_distribution* nu, const char* t, ncp_distribution** out);

/* kind: "nc", "nc2" or "interval". listing may be NULL; otherwise it receives
 * one partition per line in the form {1,3}{2}. */
NCP_API ncp_status ncp_enumerate(const char* kind, int n, uint64_t* count, char** listing);

/* Runs a named suite. params_json may be NULL or hold any of
 * k, degree, seed, trials, n, t (array of "p/q"), dim, tolerance. */
NCP_API ncp_status ncp_verify(const char* suite, const char* params_json, int* passed, char** report_json);
/* Suite names separated by newlines. */
NCP_API ncp_status ncp_suite_names(char** out);

/* Checks one operator-model input {"dim", "k", "matrices", "state"}. */
NCP_API ncp_status ncp_operator_model_verify(const char* input_json, int degree, double tolerance, int* passed,
                                             char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* NCPROB_NCPROB_H */
