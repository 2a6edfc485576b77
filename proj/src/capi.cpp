#include "kstab/kstab.h"

#include "kstab/api.hpp"

#include <new>
#include <string>

struct kstab_result {
    int status = KSTAB_ERR_INTERNAL;
    std::string json;
    std::string message;
};

extern "C" {

kstab_result* kstab_eval(const char* request_json) {
    auto* r = new (std::nothrow) kstab_result;
    if (!r)
        return nullptr;
    try {
        if (!request_json) {
            r->status = KSTAB_ERR_USAGE;
            r->message = "null request";
            r->json = R"({"status":2,"payload":{},"message":"null request"})";
            return r;
        }
        const kstab::json resp =
            kstab::json::parse(kstab::api::eval_string(request_json));
        r->status = resp.at("status").get<int>();
        r->message = resp.at("message").get<std::string>();
        r->json = resp.dump();
    } catch (const std::exception& e) {
        r->status = KSTAB_ERR_INTERNAL;
        r->message = e.what();
        r->json = R"({"status":3,"payload":{},"message":"internal error"})";
    }
    return r;
}

kstab_status kstab_result_status(const kstab_result* r) {
    return r ? static_cast<kstab_status>(r->status) : KSTAB_ERR_INTERNAL;
}

const char* kstab_result_json(const kstab_result* r) {
    return r ? r->json.c_str() : "";
}

const char* kstab_result_message(const kstab_result* r) {
    return r ? r->message.c_str() : "";
}

void kstab_result_free(kstab_result* r) {
    delete r;
}

const char* kstab_version(void) {
    return "0.1.0";
}

}  // extern "C"
