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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParseError = 2, kParamError = 3 };

struct Options {
    std::string kase;
    std::string q;
    long m = 0;
    int tree_bound = 6;
    bool text = false;
    std::string expect;
    std::string batch;
    std::optional<std::string> expr;
};

struct Outcome {
    int code = kOk;
    std::string output;  // report, or the error message
    long offset = -1;
};

int exit_for(dres_status s) {
    switch (s) {
    case DRES_OK:
        return kOk;
    case DRES_ERR_PARAM:
    case DRES_ERR_INVALID:
        return kParamError;
    default:
        return kParseError;
    }
}

Outcome error_outcome(dres_status s) { return {exit_for(s), dres_last_error(), dres_last_error_offset()}; }

using RatfunPtr = std::unique_ptr<dres_ratfun, decltype(&dres_ratfun_free)>;
using ReportPtr = std::unique_ptr<dres_report, decltype(&dres_report_free)>;

dres_status run_analysis(const Options& o, const dres_ratfun* f, dres_report** r) {
    if (o.kase == "shift")
        return dres_analyze_shift(f, r);
    if (o.kase == "q")
        return dres_analyze_q(f, o.q.c_str(), r);
    return dres_analyze_mahler(f, o.m, o.tree_bound, r);
}

// Rejects bad parameters before any expression is read.
Outcome check_params(const Options& o) {
    dres_ratfun* raw = nullptr;
    dres_parse("0", &raw);
    RatfunPtr zero(raw, dres_ratfun_free);
    dres_report* rep = nullptr;
    const dres_status s = run_analysis(o, zero.get(), &rep);
    dres_report_free(rep);
    return s == DRES_OK ? Outcome{} : error_outcome(s);
}

Outcome analyze(const Options& o, const std::string& expr) {
    dres_ratfun* raw = nullptr;
    dres_status s = dres_parse(expr.c_str(), &raw);
    if (s != DRES_OK)
        return error_outcome(s);
    RatfunPtr f(raw, dres_ratfun_free);
    dres_report* rep_raw = nullptr;
    s = run_analysis(o, f.get(), &rep_raw);
    if (s != DRES_OK)
        return error_outcome(s);
    ReportPtr rep(rep_raw, dres_report_free);

    char* text = nullptr;
    s = o.text ? dres_report_text(rep.get(), &text) : dres_report_json(rep.get(), &text);
    if (s != DRES_OK)
        return error_outcome(s);
    Outcome out{kOk, text, -1};
    dres_string_free(text);

    dres_verdict v;
    dres_report_verdict(rep.get(), &v);
    if ((o.expect == "summable" && v != DRES_SUMMABLE) || (o.expect == "not-summable" && v != DRES_NOT_SUMMABLE))
        out.code = kMismatch;
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        if (static_cast<unsigned char>(c) < 0x20)
            continue;
        out += c;
    }
    return out;
}

void print_error(const Outcome& r) {
    std::cerr << "dres: error: " << r.output;
    if (r.offset >= 0 && r.output.find(" at offset ") == std::string::npos)
        std::cerr << " at offset " << r.offset;
    std::cerr << '\n';
}

int run_single(const Options& o) {
    const Outcome r = analyze(o, *o.expr);
    if (r.code == kParseError || r.code == kParamError) {
        print_error(r);
        return r.code;
    }
    std::cout << r.output;
    if (!o.text)
        std::cout << '\n';
    if (r.code == kMismatch)
        std::cerr << "dres: verdict does not match --expect " << o.expect << '\n';
    return r.code;
}

// One output record per expression line; '#' lines and blank lines are skipped.
int run_batch(const Options& o) {
    std::ifstream in(o.batch);
    if (!in) {
        std::cerr << "dres: error: cannot open " << o.batch << '\n';
        return kParamError;
    }
    int code = kOk;
    std::string line;
    for (long lineno = 1; std::getline(in, line); ++lineno) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        if (line.back() == '\r')
            line.pop_back();
        const Outcome r = analyze(o, line);
        code = std::max(code, r.code);
        if (r.code == kParseError || r.code == kParamError) {
            if (o.text) {
                std::cout << "line " << lineno << ": error: " << r.output << '\n';
            } else {
                std::cout << "{\"line\":" << lineno << ",\"error\":\"" << json_escape(r.output) << '"';
                if (r.offset >= 0)
                    std::cout << ",\"offset\":" << r.offset;
                std::cout << "}\n";
            }
            continue;
        }
        std::cout << r.output << '\n';
    }
    return code;
}

int run_generate(const std::string& kase, const std::string& param, std::uint64_t seed, int count, int planted) {
    char* out = nullptr;
    const dres_status s =
        dres_generate_corpus(kase.c_str(), param.empty() ? nullptr : param.c_str(), seed, count, planted, &out);
    if (s != DRES_OK) {
        std::cerr << "dres: error: " << dres_last_error() << '\n';
        return exit_for(s);
    }
    std::cout << out;
    dres_string_free(out);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide summability of rational functions over Q by discrete residues."};
    app.set_version_flag("--version", dres_version());
    app.require_subcommand(1);

    Options o;
    auto common = [&](CLI::App* sub) {
        auto* json = sub->add_flag("--json", "JSON report (default)");
        auto* text = sub->add_flag("--text", o.text, "plain-text report");
        text->excludes(json);
        sub->add_option("--expect", o.expect, "exit 1 unless the verdict matches")
            ->check(CLI::IsMember({"summable", "not-summable"}));
        auto* batch = sub->add_option("--batch", o.batch, "one expression per line, one report per line");
        auto* expr = sub->add_option("EXPR", o.expr, "rational function in x");
        expr->excludes(batch);
    };

    auto* shift = app.add_subcommand("shift", "sigma(x) = x + 1");
    common(shift);
    auto* qshift = app.add_subcommand("qshift", "sigma(x) = q x");
    qshift->add_option("--q", o.q, "rational q, not 0, 1 or -1")->required();
    common(qshift);
    auto* mahler = app.add_subcommand("mahler", "sigma(x) = x^m");
    mahler->add_option("--m", o.m, "integer m >= 2")->required();
    mahler->add_option("--tree-bound", o.tree_bound, "tree search bound R")->capture_default_str();
    common(mahler);

    std::string gen_case = "shift", gen_param;
    std::uint64_t gen_seed = 0;
    int gen_count = 1, gen_planted = 0;
    auto* generate = app.add_subcommand("generate", "print generated instances with their known verdict");
    generate->add_option("--case", gen_case)->check(CLI::IsMember({"shift", "q", "mahler"}))->capture_default_str();
    generate->add_option("--q", gen_param, "q for the q case");
    generate->add_option("--m", gen_param, "m for the Mahler case");
    generate->add_option("--seed", gen_seed)->capture_default_str();
    generate->add_option("--count", gen_count)->check(CLI::NonNegativeNumber)->capture_default_str();
    generate->add_option("--planted", gen_planted, "obstructions per instance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParamError;
    }

    if (*generate)
        return run_generate(gen_case, gen_param, gen_seed, gen_count, gen_planted);

    o.kase = *shift ? "shift" : *qshift ? "q" : "mahler";
    if (!o.expr && o.batch.empty()) {
        std::cerr << "dres: error: an expression or --batch FILE is required\n";
        return kParamError;
    }
    if (const Outcome p = check_params(o); p.code != kOk) {
        print_error(p);
        return p.code;
    }
    return o.batch.empty() ? run_single(o) : run_batch(o);
}
