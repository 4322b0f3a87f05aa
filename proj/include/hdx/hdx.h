/* C interface to the hdx library. All results are UTF-8 JSON (or CSV) strings
 * owned by the caller and released with hdx_string_free. Functions return
 * HDX_OK or an error status; hdx_last_error_message describes the most recent
 * error on the calling thread. */
#ifndef HDX_H
#define HDX_H

#include <stddef.h>
#include <stdint.h>

#if defined(HDX_BUILDING_LIBRARY)
#define HDX_API __attribute__((visibility("default")))
#else
#define HDX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hdx_status {
  HDX_OK = 0,
  HDX_ERR_MIXED_FACET_SIZES,
  HDX_ERR_EMPTY_INPUT,
  HDX_ERR_INVALID_FACET,
  HDX_ERR_FACE_NOT_PRESENT,
  HDX_ERR_VERTEX_NOT_PRESENT,
  HDX_ERR_DIMENSION_OUT_OF_RANGE,
  HDX_ERR_WRONG_DIMENSION,
  HDX_ERR_SEARCH_SPACE_TOO_LARGE,
  HDX_ERR_TOO_LARGE,
  HDX_ERR_INVALID_SUBSET,
  HDX_ERR_NOT_REGULAR,
  HDX_ERR_DISCONNECTED,
  HDX_ERR_DISCONNECTED_LINK,
  HDX_ERR_BAD_PARAMS,
  HDX_ERR_UNSUPPORTED_FIELD,
  HDX_ERR_NON_SYMMETRIC_GENERATORS,
  HDX_ERR_GROUP_TOO_LARGE,
  HDX_ERR_UNKNOWN_FIXTURE,
  HDX_ERR_CONFIG,
  HDX_ERR_PARSE,
  HDX_ERR_IO,
  HDX_ERR_INVALID_ARGUMENT,
  HDX_ERR_INTERNAL
} hdx_status;

typedef enum hdx_format { HDX_FORMAT_JSON = 0, HDX_FORMAT_CSV = 1 } hdx_format;

typedef struct hdx_complex hdx_complex;

HDX_API const char* hdx_version(void);
HDX_API const char* hdx_status_name(hdx_status status);
/* Empty string when the last call on this thread succeeded. */
HDX_API const char* hdx_last_error_message(void);
HDX_API void hdx_string_free(char* s);

/* {"facets": [["a","b"], ...]} */
HDX_API hdx_status hdx_complex_from_json(const char* json, hdx_complex** out);
/* family: "complete" {"n","d"}, "flag" {"q","m"}, "cayley" {"degree","generators","max_dim"},
 * "fixture" {"name"}, "cycle" {"k"}. */
HDX_API hdx_status hdx_complex_generate(const char* family, const char* params_json, hdx_complex** out);
HDX_API hdx_status hdx_complex_to_json(const hdx_complex* x, char** out);
HDX_API int hdx_complex_dim(const hdx_complex* x);
HDX_API size_t hdx_complex_face_count(const hdx_complex* x, int i);
HDX_API void hdx_complex_free(hdx_complex* x);

/* only_dim < 0 computes every 0 <= i <= d-1. */
HDX_API hdx_status hdx_compute(const hdx_complex* x, int only_dim, int spectral, hdx_format format, char** out);
HDX_API hdx_status hdx_certify(const hdx_complex* x, const char* mu, const char* eta, char** out, int* ok);
/* cochain: {"dim": i, "faces": [[...], ...]} */
HDX_API hdx_status hdx_localmin(const hdx_complex* x, const char* cochain_json, char** out);
/* params: {"epsilon","epsilon_prime","xi" as rational strings, "q"}; may be NULL. */
HDX_API hdx_status hdx_lemmas(const hdx_complex* x, const char* cochain_json, const char* params_json, char** out,
                              int* all_pass);
/* mc_samples == 0 selects the exact planar search. */
HDX_API hdx_status hdx_overlap(const hdx_complex* x, const char* points_json, size_t mc_samples, uint64_t seed,
                               char** out);
/* config may be NULL for the defaults. Either output may be NULL.
 * *passed is 1 when no check failed. */
HDX_API hdx_status hdx_verify(const char* config_json, char** json_out, char** csv_out, int* passed);
/* Output paths named in a verify configuration, or "" when absent. */
HDX_API hdx_status hdx_verify_outputs(const char* config_json, char** json_out, char** csv_out);
HDX_API hdx_status hdx_fixture_names(char** out);

#ifdef __cplusplus
}
#endif

#endif
