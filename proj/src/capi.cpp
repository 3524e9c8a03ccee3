/*
 * Copyright 2026 The dres Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "dres.h"

#include "dres/expr.hpp"
#include "dres/oracle.hpp"
#include "dres/report.hpp"

#include <cstring>
#include <new>
#include <string>

struct dres_ratfun {
    dres::RatFun value;
};

struct dres_report {
    dres::Report value;
};

namespace {

thread_local std::string last_error;
thread_local long last_offset = -1;

dres_status fail(dres_status s, const char* what, long offset = -1) {
    last_error = what;
    last_offset = offset;
    return s;
}

// Runs body and maps exceptions to status codes.
template <typename F>
dres_status guarded(F&& body) {
    last_error.clear();
    last_offset = -1;
    try {
        body();
        return DRES_OK;
    } catch (const dres::ParseError& e) {
        return fail(DRES_ERR_PARSE, e.what(), static_cast<long>(e.offset()));
    } catch (const dres::ParameterError& e) {
        return fail(DRES_ERR_PARAM, e.what());
    } catch (const dres::DivisionByZero& e) {
        return fail(DRES_ERR_DIV_ZERO, e.what());
    } catch (const dres::InvalidInput& e) {
        return fail(DRES_ERR_INVALID, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DRES_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DRES_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* dres_version(void) { return dres::kVersion; }

const char* dres_last_error(void) { return last_error.c_str(); }

long dres_last_error_offset(void) { return last_offset; }

void dres_string_free(char* s) { delete[] s; }

dres_status dres_parse(const char* text, dres_ratfun** out) {
    if (!text || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] { *out = new dres_ratfun{dres::parse_ratfun(text)}; });
}

void dres_ratfun_free(dres_ratfun* f) { delete f; }

dres_status dres_ratfun_to_string(const dres_ratfun* f, char** out) {
    if (!f || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] { *out = dup(f->value.str()); });
}

dres_status dres_analyze_shift(const dres_ratfun* f, dres_report** out) {
    if (!f || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] { *out = new dres_report{dres::analyze_shift(f->value)}; });
}

dres_status dres_analyze_q(const dres_ratfun* f, const char* q, dres_report** out) {
    if (!f || !q || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] {
        dres::Rat qv;
        try {
            qv = dres::Rat::parse(q);
        } catch (const dres::InvalidInput& e) {
            throw dres::ParameterError(std::string("q: ") + e.what());
        }
        *out = new dres_report{dres::analyze_q(f->value, dres::QParam(qv))};
    });
}

dres_status dres_analyze_mahler(const dres_ratfun* f, long m, int tree_bound, dres_report** out) {
    if (!f || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] { *out = new dres_report{dres::analyze_mahler(f->value, dres::MahlerParam(m), tree_bound)}; });
}

dres_status dres_report_verdict(const dres_report* r, dres_verdict* out) {
    if (!r || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    switch (r->value.verdict) {
    case dres::Verdict::Summable:
        *out = DRES_SUMMABLE;
        break;
    case dres::Verdict::NotSummable:
        *out = DRES_NOT_SUMMABLE;
        break;
    case dres::Verdict::Undecided:
        *out = DRES_UNDECIDED;
        break;
    }
    return DRES_OK;
}

dres_status dres_report_json(const dres_report* r, char** out) {
    if (!r || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] { *out = dup(dres::render_json(r->value)); });
}

dres_status dres_report_text(const dres_report* r, char** out) {
    if (!r || !out)
        return fail(DRES_ERR_INVALID, "null argument");
    return guarded([&] { *out = dup(dres::render_text(r->value)); });
}

void dres_report_free(dres_report* r) { delete r; }

dres_status dres_generate_corpus(const char* kase, const char* param, uint64_t seed, int count, int planted,
                                 char** out) {
    if (!kase || !out || count < 0 || planted < 0)
        return fail(DRES_ERR_INVALID, "invalid argument");
    return guarded([&] {
        namespace o = dres::oracle;
        const std::string k = kase;
        o::Case c;
        dres::Rat q(2);
        long m = 2;
        if (k == "shift") {
            c = o::Case::Shift;
        } else if (k == "q") {
            c = o::Case::Q;
            if (param) {
                try {
                    q = dres::Rat::parse(param);
                } catch (const dres::InvalidInput& e) {
                    throw dres::ParameterError(std::string("q: ") + e.what());
                }
            }
            dres::QParam check(q);
        } else if (k == "mahler") {
            c = o::Case::MahlerLaurent;
            if (param) {
                try {
                    m = std::stol(param);
                } catch (const std::exception&) {
                    throw dres::ParameterError("m must be an integer");
                }
            }
            dres::MahlerParam check(m);
        } else {
            throw dres::ParameterError("unknown case '" + k + "'");
        }
        std::string text;
        for (int i = 0; i < count; ++i) {
            const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
            text += o::serialize_instance(o::generate_instance(c, s, o::default_plants(c, planted, s, q, m), q, m));
        }
        *out = dup(text);
    });
}

}  // extern "C"
