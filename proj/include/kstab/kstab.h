#ifndef KSTAB_H
#define KSTAB_H

/* C interface to the stability-conditions engine. All interaction is through
 * JSON request/response strings; numbers are exact rationals rendered "p/q".
 * Thread-safe: results are independently allocated. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kstab_status {
    KSTAB_OK = 0,
    KSTAB_VERIFY_FAILED = 1,
    KSTAB_ERR_USAGE = 2,
    KSTAB_ERR_INTERNAL = 3
} kstab_status;

typedef struct kstab_result kstab_result;

/* Evaluates one JSON request. Never returns NULL except on allocation
 * failure. The result must be released with kstab_result_free. */
kstab_result* kstab_eval(const char* request_json);

kstab_status kstab_result_status(const kstab_result* r);

/* Full response document {"status", "payload", "message"}; owned by r. */
const char* kstab_result_json(const kstab_result* r);

/* Human-oriented message, empty on success; owned by r. */
const char* kstab_result_message(const kstab_result* r);

void kstab_result_free(kstab_result* r);

const char* kstab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* KSTAB_H */
