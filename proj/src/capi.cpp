#include "../include/voa.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "algebra_json.hpp"
#include "exprparse.hpp"
#include "standard.hpp"
#include "tasks.hpp"

struct voa_algebra {
    voa::AlgebraPtr h;
};

struct voa_state {
    voa::AlgebraPtr h;
    voa::State s;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

}  // namespace

extern "C" {

const char* voa_last_error(void) { return g_last_error.c_str(); }

void voa_string_free(char* s) { std::free(s); }

voa_algebra* voa_algebra_builtin(const char* name) {
    if (!name) {
        g_last_error = "null name";
        return nullptr;
    }
    return guarded([&]() -> voa_algebra* {
        return new voa_algebra{voa::standard_algebra(name)};
    });
}

voa_algebra* voa_algebra_from_json(const char* json_text) {
    if (!json_text) {
        g_last_error = "null spec";
        return nullptr;
    }
    return guarded([&]() -> voa_algebra* {
        return new voa_algebra{voa::algebra_from_json_text(json_text)};
    });
}

voa_algebra* voa_algebra_from_file(const char* path) {
    if (!path) {
        g_last_error = "null path";
        return nullptr;
    }
    return guarded([&]() -> voa_algebra* {
        return new voa_algebra{voa::algebra_from_file(path)};
    });
}

char* voa_algebra_to_json(const voa_algebra* h) {
    if (!h) {
        g_last_error = "null handle";
        return nullptr;
    }
    return guarded([&]() -> char* { return dup_string(voa::algebra_to_json(h->h).dump(2)); });
}

void voa_algebra_free(voa_algebra* h) { delete h; }

int voa_algebra_num_generators(const voa_algebra* h) {
    if (!h) return VOA_ERR_INVALID;
    return static_cast<int>(h->h->num_generators());
}

char* voa_algebra_generator_name(const voa_algebra* h, int index) {
    if (!h || index < 0 || index >= static_cast<int>(h->h->num_generators())) {
        g_last_error = "generator index out of range";
        return nullptr;
    }
    return dup_string(h->h->generator(index).name);
}

long voa_algebra_graded_dimension(voa_algebra* h, long weight2x) {
    if (!h) return VOA_ERR_INVALID;
    try {
        return static_cast<long>(h->h->graded_dimension(weight2x));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return VOA_ERR_INVALID;
    }
}

voa_state* voa_state_parse(voa_algebra* h, const char* expr) {
    if (!h || !expr) {
        g_last_error = "null argument";
        return nullptr;
    }
    return guarded([&]() -> voa_state* {
        return new voa_state{h->h, voa::parse_expr(expr, h->h)};
    });
}

voa_state* voa_state_clone(const voa_state* s) {
    if (!s) {
        g_last_error = "null state";
        return nullptr;
    }
    return new voa_state{s->h, s->s};
}

void voa_state_free(voa_state* s) { delete s; }

char* voa_state_str(const voa_state* s) {
    if (!s) {
        g_last_error = "null state";
        return nullptr;
    }
    return guarded([&]() -> char* { return dup_string(s->s.str()); });
}

int voa_state_is_zero(const voa_state* s) {
    if (!s) return VOA_ERR_INVALID;
    return s->s.is_zero() ? 1 : 0;
}

int voa_state_weight2x(const voa_state* s, long* weight2x) {
    if (!s || !weight2x) return VOA_ERR_INVALID;
    auto w = s->s.weight2();
    if (!w) return 0;
    *weight2x = *w;
    return 1;
}

voa_state* voa_nth_product(const voa_state* a, long n, const voa_state* b) {
    if (!a || !b) {
        g_last_error = "null state";
        return nullptr;
    }
    return guarded([&]() -> voa_state* {
        return new voa_state{a->h, voa::nth_product(a->s, n, b->s)};
    });
}

voa_state* voa_wick(const voa_state* a, const voa_state* b) { return voa_nth_product(a, -1, b); }

voa_state* voa_derivative(const voa_state* a, long times) {
    if (!a) {
        g_last_error = "null state";
        return nullptr;
    }
    if (times < 0) {
        g_last_error = "negative derivative order";
        return nullptr;
    }
    return guarded([&]() -> voa_state* {
        return new voa_state{a->h, voa::derivative(a->s, times)};
    });
}

voa_state* voa_state_add(const voa_state* a, const voa_state* b) {
    if (!a || !b) {
        g_last_error = "null state";
        return nullptr;
    }
    return guarded([&]() -> voa_state* { return new voa_state{a->h, a->s + b->s}; });
}

voa_state* voa_state_scale(const voa_state* a, const char* rational) {
    if (!a || !rational) {
        g_last_error = "null argument";
        return nullptr;
    }
    return guarded([&]() -> voa_state* {
        return new voa_state{a->h, a->s * voa::Scalar(voa::rat_parse(rational))};
    });
}

char* voa_run_task(const char* task_json, int* exit_code) {
    if (!task_json) {
        g_last_error = "null task";
        if (exit_code) *exit_code = 2;
        return nullptr;
    }
    voa::RunResult r = voa::run_task(task_json);
    if (exit_code) *exit_code = r.code;
    return dup_string(r.output);
}

}  // extern "C"
