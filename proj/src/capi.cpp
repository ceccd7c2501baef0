#include "qbmoduli.h"

#include <cstring>
#include <new>

#include "qb/problem.hpp"
#include "qb/reports.hpp"

struct qb_problem {
    qb::Problem impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** errmsg, const std::string& msg) {
    if (errmsg) *errmsg = dup_string(msg);
}

// Input problems (bad JSON, schema violations, unusable preconditions) map to
// QB_INPUT_ERROR; anything else is unexpected and also reported as input error
// with its message preserved.
template <typename Fn>
int guarded(char** errmsg, Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        set_err(errmsg, e.what());
        return QB_INPUT_ERROR;
    } catch (...) {
        set_err(errmsg, "unknown error");
        return QB_INPUT_ERROR;
    }
}

int emit(const nlohmann::json& j, char** json_out) {
    *json_out = dup_string(j.dump(2));
    return QB_OK;
}

}  // namespace

extern "C" {

const char* qb_version(void) { return "0.1.0"; }

void qb_free_string(char* s) { delete[] s; }

int qb_problem_parse(const char* json_text, qb_problem** out, char** errmsg) {
    if (!json_text || !out) {
        set_err(errmsg, "null argument");
        return QB_INPUT_ERROR;
    }
    return guarded(errmsg, [&] {
        auto* p = new qb_problem{qb::parse_problem(json_text)};
        *out = p;
        return QB_OK;
    });
}

int qb_problem_read_file(const char* path, qb_problem** out, char** errmsg) {
    if (!path || !out) {
        set_err(errmsg, "null argument");
        return QB_INPUT_ERROR;
    }
    return guarded(errmsg, [&] {
        auto* p = new qb_problem{qb::read_problem_file(path)};
        *out = p;
        return QB_OK;
    });
}

void qb_problem_free(qb_problem* p) { delete p; }

#define QB_REQUIRE(cond)                      \
    if (!(cond)) {                            \
        set_err(errmsg, "null argument");     \
        return QB_INPUT_ERROR;                \
    }

int qb_report_euler(const qb_problem* p, char** json_out, char** errmsg) {
    QB_REQUIRE(p && json_out);
    return guarded(errmsg, [&] { return emit(qb::report_euler(p->impl), json_out); });
}

int qb_report_dim(const qb_problem* p, char** json_out, char** errmsg) {
    QB_REQUIRE(p && json_out);
    return guarded(errmsg, [&] { return emit(qb::report_dim(p->impl), json_out); });
}

int qb_report_smooth(const qb_problem* p, char** json_out, char** errmsg) {
    QB_REQUIRE(p && json_out);
    return guarded(errmsg, [&] { return emit(qb::report_smooth(p->impl), json_out); });
}

int qb_report_walls(const qb_problem* p, long long window_lo, long long window_hi,
                    char** json_out, char** errmsg) {
    QB_REQUIRE(p && json_out);
    return guarded(errmsg, [&] {
        if (window_lo > window_hi) {
            set_err(errmsg, "empty window: lo > hi");
            return QB_INPUT_ERROR;
        }
        return emit(qb::report_walls(p->impl, window_lo, window_hi), json_out);
    });
}

int qb_report_stability(const qb_problem* p, char** json_out, char** errmsg) {
    QB_REQUIRE(p && json_out);
    return guarded(errmsg, [&] { return emit(qb::report_stability(p->impl), json_out); });
}

int qb_report_oracle_verify(const qb_problem* p, char** json_out, char** errmsg) {
    QB_REQUIRE(p && json_out);
    return guarded(errmsg, [&] {
        nlohmann::json j = qb::report_oracle_verify(p->impl);
        emit(j, json_out);
        return j["pass"].get<bool>() ? QB_OK : QB_VERIFY_FAIL;
    });
}

int qb_report_oracle_random(uint64_t seed, int count, int max_vertices, int max_rank,
                            int max_abs_degree, char** json_out, char** errmsg) {
    QB_REQUIRE(json_out);
    return guarded(errmsg, [&] {
        qb::InstanceLimits limits;
        if (max_vertices > 0) limits.max_vertices = max_vertices;
        if (max_rank > 0) limits.max_rank = max_rank;
        if (max_abs_degree > 0) limits.max_abs_degree = max_abs_degree;
        nlohmann::json j = qb::report_oracle_random(seed, count, limits);
        emit(j, json_out);
        return j["pass"].get<bool>() ? QB_OK : QB_VERIFY_FAIL;
    });
}

int qb_render_text(const char* command, const char* report_json, char** text_out,
                   char** errmsg) {
    QB_REQUIRE(command && report_json && text_out);
    return guarded(errmsg, [&] {
        nlohmann::json j = nlohmann::json::parse(report_json);
        *text_out = dup_string(qb::render_text(command, j));
        return QB_OK;
    });
}

}  // extern "C"
