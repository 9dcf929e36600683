#ifndef REFLEKT_H
#define REFLEKT_H

/* C interface to the reflekt library. Every call returns a status code;
 * on failure reflekt_last_error() describes the problem for the calling
 * thread. Strings handed out through char** must be released with
 * reflekt_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define REFLEKT_API __declspec(dllexport)
#else
#define REFLEKT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum reflekt_status {
  REFLEKT_OK = 0,
  REFLEKT_ERR_PARAMETER = 1,
  REFLEKT_ERR_SIZE = 2,
  REFLEKT_ERR_DOMAIN = 3,
  REFLEKT_ERR_CONSISTENCY = 4,
  REFLEKT_ERR_NOT_A_HOMOMORPHISM = 5,
  REFLEKT_ERR_NOT_AN_AUTOMORPHISM = 6,
  REFLEKT_ERR_UNSUPPORTED = 7,
  REFLEKT_ERR_IO = 8,
  REFLEKT_ERR_USAGE = 9,
  REFLEKT_ERR_INTERNAL = 100
} reflekt_status;

typedef struct reflekt_group reflekt_group;
typedef struct reflekt_report reflekt_report;

REFLEKT_API const char* reflekt_version(void);
REFLEKT_API const char* reflekt_status_name(reflekt_status status);
/* Message of the last failed call on this thread, "" if none. */
REFLEKT_API const char* reflekt_last_error(void);
REFLEKT_API void reflekt_string_free(char* s);

/* Route group enumeration through an on-disk cache; NULL turns it off. */
REFLEKT_API reflekt_status reflekt_set_cache_dir(const char* dir);

/* A budget of 0 selects the default enumeration limit. Null handles or
 * output pointers give REFLEKT_ERR_PARAMETER. */
REFLEKT_API reflekt_status reflekt_group_open(int r, int p, int n, uint64_t budget, reflekt_group** out);
REFLEKT_API void reflekt_group_close(reflekt_group* group);
REFLEKT_API reflekt_status reflekt_group_order(const reflekt_group* group, uint64_t* out);
REFLEKT_API reflekt_status reflekt_group_class_count(const reflekt_group* group, size_t* out);
REFLEKT_API reflekt_status reflekt_group_center_order(const reflekt_group* group, size_t* out);
REFLEKT_API reflekt_status reflekt_group_json(const reflekt_group* group, char** out);

/* JSON documents, see the README for their shapes. */
REFLEKT_API reflekt_status reflekt_chars_json(int r, int p, int n, int with_values, uint64_t budget, char** out);
REFLEKT_API reflekt_status reflekt_gelfand_json(int r, int p, int n, uint64_t budget, char** out);
REFLEKT_API reflekt_status reflekt_gim_json(int r, int p, int n, uint64_t budget, char** out);
REFLEKT_API reflekt_status reflekt_aut_json(int r, int p, int n, uint64_t budget, char** out);

REFLEKT_API reflekt_status reflekt_gim_exists(int r, int p, int n, int* exists, char** reason);

/* grid: NULL for the default grid; suites and checks: comma separated,
 * NULL for all. */
REFLEKT_API reflekt_status reflekt_report_run(const char* grid, const char* suites, const char* checks,
                                              uint64_t budget, int timing, reflekt_report** out);
REFLEKT_API reflekt_status reflekt_report_counts(const reflekt_report* report, size_t* pass, size_t* fail,
                                                 size_t* skipped);
REFLEKT_API reflekt_status reflekt_report_json(const reflekt_report* report, char** out);
REFLEKT_API reflekt_status reflekt_report_table(const reflekt_report* report, char** out);
REFLEKT_API void reflekt_report_free(reflekt_report* report);

#ifdef __cplusplus
}
#endif

#endif
