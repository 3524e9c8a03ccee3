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


// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "dres/expr.hpp"
#include "dres/mahler_residues.hpp"
#include "dres/oracle.hpp"
#include "dres/q_residues.hpp"
#include "dres/shift_residues.hpp"

#include "support/oracles.hpp"

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <climits>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace dres;
using namespace dres::oracle;
using dres::testing::Random;

namespace {

class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_++ < 3)
            notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
    }
    void note(const std::string& s) { info_ << (info_.tellp() > 0 ? ", " : "") << s; }

    bool finish() {
        const bool pass = failures_ == 0;
        std::cout << "criterion " << number_ << " [PRIMARY] " << title_ << ": " << (pass ? "PASS" : "FAIL") << " ("
                  << checks_ << " checks";
        if (info_.tellp() > 0)
            std::cout << ", " << info_.str();
        if (!pass)
            std::cout << ", " << failures_ << " failed: " << notes_.str();
        std::cout << ")" << std::endl;
        return pass;
    }

private:
    int number_;
    std::string title_;
    long checks_ = 0;
    long failures_ = 0;
    std::ostringstream notes_;
    std::ostringstream info_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

Shape wide_shape() {
    Shape s;
    s.max_dispersion = INT_MAX;
    return s;
}

const Rat kQs[] = {Rat(2), Rat(3, 2), Rat(-2)};

bool all_zero(const std::vector<ResidueCertificate>& cs) {
    for (const auto& c : cs)
        if (!c.D.is_zero())
            return false;
    return true;
}

bool all_zero(const std::vector<QResidueCertificate>& cs) {
    for (const auto& c : cs)
        if (!c.D.is_zero())
            return false;
    return true;
}

bool criterion1() {
    Criterion c(1, "shift kernel soundness");
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Instance inst = generate_instance(Case::Shift, 1000 + seed, {}, Rat(2), 2, wide_shape());
        const ShiftDecision d = is_shift_summable(inst.f);
        c.expect(inst.f == shift_delta(inst.g), "instance is not a difference");
        c.expect(d.verdict == Verdict::Summable, "seed " + std::to_string(seed) + " not SUMMABLE");
        c.expect(all_zero(d.certificates), "seed " + std::to_string(seed) + " nonzero certificate");
    }
    const double t = seconds_since(t0);
    c.expect(t < 60.0, "runtime " + fmt_seconds(t) + " exceeds 60 s");
    c.note("200 instances in " + fmt_seconds(t));
    return c.finish();
}

bool criterion2() {
    Criterion c(2, "shift planted-residue completeness");
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto plants = default_plants(Case::Shift, 1 + static_cast<int>(seed % 3), 2000 + seed);
        const Instance inst = generate_instance(Case::Shift, 2000 + seed, plants);
        const ShiftDecision d = is_shift_summable(inst.f);
        const std::string id = "seed " + std::to_string(seed);
        c.expect(d.verdict == Verdict::NotSummable, id + " not NOT_SUMMABLE");
        for (const Plant& p : plants) {
            bool found = false;
            for (const auto& cert : d.certificates) {
                if (!cert.rep_modulus.eval(p.point).is_zero())
                    continue;
                if (cert.order == p.order) {
                    found = true;
                    c.expect(cert.D.eval(p.point) == p.value, id + " wrong planted value");
                } else {
                    c.expect(cert.D.eval(p.point).is_zero(), id + " spurious order at plant");
                }
            }
            c.expect(found, id + " plant certificate missing");
        }
    }
    c.note("100 instances");
    return c.finish();
}

bool criterion3() {
    Criterion c(3, "q kernel and infinity obstruction");
    Random rng(3);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Rat q = kQs[seed % 3];
        const QParam qp(q);
        const Instance inst = generate_instance(Case::Q, 3000 + seed, {}, q, 2, wide_shape());
        const std::string id = "seed " + std::to_string(seed);
        const QDecision d = is_q_summable(inst.f, qp);
        c.expect(d.verdict == Verdict::Summable, id + " not SUMMABLE");
        c.expect(d.residues.dres_infinity.is_zero() && all_zero(d.residues.certificates), id + " nonzero residue");
        const Rat k(rng.nonzero(9), rng.range(1, 4));
        const QDecision e = is_q_summable(inst.f + RatFun(k), qp);
        c.expect(e.verdict == Verdict::NotSummable, id + " constant did not flip the verdict");
        c.expect(e.residues.dres_infinity == k, id + " dres_infinity differs from the constant");
        c.expect(all_zero(e.residues.certificates), id + " constant changed a finite residue");
    }
    c.note("200 instances, q in {2, 3/2, -2}");
    return c.finish();
}

bool criterion4() {
    Criterion c(4, "representative covariance");
    long nonzero = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Rat q = kQs[seed % 3];
        const QParam qp(q);
        const long ell = 1 + static_cast<long>(seed % 3);
        const auto plants = default_plants(Case::Q, 1 + static_cast<int>(seed % 2), 4000 + seed, q);
        const Instance inst = generate_instance(Case::Q, 4000 + seed, plants, q);
        const QResidues base = q_discrete_residues(inst.f, qp);
        const QResidues moved = q_discrete_residues(inst.f, qp, ell);
        const std::string id = "seed " + std::to_string(seed);
        c.expect(base.certificates.size() == moved.certificates.size(), id + " certificate count changed");
        if (base.certificates.size() != moved.certificates.size())
            continue;
        for (std::size_t i = 0; i < base.certificates.size(); ++i) {
            const auto& b = base.certificates[i];
            const auto& m = moved.certificates[i];
            c.expect(b.order == m.order && b.orbit_id == m.orbit_id, id + " certificates not aligned");
            c.expect(m.rep_modulus == dilate(b.rep_modulus, q.pow(-ell)).monic(), id + " representative not moved");
            c.expect(b.D.is_zero() == m.D.is_zero(), id + " zero status changed");
            // D'(q^l y) == q^(l k) D(y) at every root y of the old representative
            const Poly lhs = dilate(m.D, q.pow(ell)) - q.pow(ell * b.order) * b.D;
            c.expect((lhs % b.rep_modulus).is_zero(), id + " residue not scaled by q^(l k)");
            nonzero += b.D.is_zero() ? 0 : 1;
        }
    }
    c.expect(nonzero > 0, "no nonzero residue exercised");
    c.note("50 instances, " + std::to_string(nonzero) + " nonzero residues");
    return c.finish();
}

bool criterion5() {
    Criterion c(5, "Mahler Laurent channel");
    Random rng(5);
    const long ms[] = {2, 3, 5};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const long m = ms[seed % 3];
        const MahlerParam mp(m);
        const Instance inst = generate_instance(Case::MahlerLaurent, 5000 + seed, {}, Rat(2), m);
        const std::string id = "seed " + std::to_string(seed);
        const MahlerReport r = mahler_report(inst.f, mp);
        c.expect(r.complement.is_zero(), id + " complement not empty");
        c.expect(r.verdict == Verdict::Summable, id + " not SUMMABLE");
        for (const auto& cl : r.classes)
            c.expect(cl.sum.is_zero(), id + " nonzero class sum");

        long j = 0;
        do
            j = rng.range(-40, 40);
        while (j == 0 || j % m == 0 || r.laurent.terms().count(j) != 0);
        const Rat k(rng.nonzero(9), rng.range(1, 3));
        const MahlerReport p = mahler_report(inst.f + RatFun(k) * RatFun::x().pow(j), mp);
        c.expect(p.verdict == Verdict::NotSummable, id + " plant did not flip the verdict");
        bool seen = false;
        for (const auto& cl : p.classes) {
            if (cl.label == j) {
                seen = true;
                c.expect(cl.sum == k, id + " class sum differs from the plant");
            } else {
                c.expect(cl.sum.is_zero(), id + " plant leaked into another class");
            }
        }
        c.expect(seen, id + " planted class missing");
    }
    c.note("200 instances, m in {2, 3, 5}");
    return c.finish();
}

bool criterion6() {
    Criterion c(6, "oracle agreement");
    double timed = 0;
    long solved = 0, summable = 0, max_window = 0, planted_checked = 0;
    for (Case k : {Case::Shift, Case::Q, Case::MahlerLaurent}) {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Rat q = kQs[seed % 3];
            const long m = 2 + static_cast<long>(seed % 3);
            const int nplants = seed % 2 ? 1 + static_cast<int>(seed % 3) : 0;
            const Instance inst =
                generate_instance(k, 6000 + seed, default_plants(k, nplants, 6000 + seed, q, m), q, m);
            const std::string id = std::string(case_name(k)) + " seed " + std::to_string(seed);
            max_window = std::max<long>(max_window, inst.bounds.window);
            auto solve = [&]() -> std::optional<RatFun> {
                std::optional<RatFun> g;
                if (k == Case::Shift) {
                    g = solve_telescoper_shift(inst.f, inst.bounds);
                    if (g)
                        c.expect(shift_delta(*g) == inst.f, id + " solver output fails substitution");
                } else if (k == Case::Q) {
                    g = solve_telescoper_q(inst.f, q, inst.bounds);
                    if (g)
                        c.expect(q_delta(*g, QParam(q)) == inst.f, id + " solver output fails substitution");
                } else {
                    g = solve_telescoper_mahler_laurent(inst.f, m);
                    if (g)
                        c.expect(mahler_delta(*g, MahlerParam(m)) == inst.f, id + " solver output fails substitution");
                }
                return g;
            };

            const auto t0 = std::chrono::steady_clock::now();
            Verdict v;
            if (k == Case::Shift)
                v = is_shift_summable(inst.f).verdict;
            else if (k == Case::Q)
                v = is_q_summable(inst.f, QParam(q)).verdict;
            else
                v = mahler_report(inst.f, MahlerParam(m)).verdict;
            c.expect(v == (inst.summable ? Verdict::Summable : Verdict::NotSummable), id + " verdict differs from truth");
            if (inst.summable) {
                ++summable;
                const bool found = solve().has_value();
                c.expect(found, id + " solver found no g");
                solved += found ? 1 : 0;
            }
            timed += seconds_since(t0);

            // Untimed: a planted instance must defeat the solver.
            if (!inst.summable && seed % 5 == 1) {
                ++planted_checked;
                c.expect(!solve().has_value(), id + " solver summed a planted instance");
            }
        }
    }
    c.expect(timed < 120.0, "runtime " + fmt_seconds(timed) + " exceeds 120 s");
    c.note("300 instances, " + std::to_string(solved) + "/" + std::to_string(summable) + " summable solved, " +
           std::to_string(planted_checked) + " planted instances resist the solver, max window " +
           std::to_string(max_window) + ", " + fmt_seconds(timed));
    return c.finish();
}

bool criterion7() {
    Criterion c(7, "rational-pole cross-check");
    Random rng(7);
    const Rat bases[] = {Rat(0), Rat(1, 2), Rat(1, 3), Rat(-2, 5)};
    long compared = 0;
    for (int i = 0; i < 50; ++i) {
        // shift case: poles base + integer
        std::vector<Rat> poles;
        RatFun f(rng.poly(static_cast<int>(rng.range(0, 2)), 5));
        for (long n = rng.range(2, 5); n > 0; --n) {
            const Rat r = bases[rng.range(0, 3)] + Rat(rng.range(-3, 3));
            if (std::find(poles.begin(), poles.end(), r) != poles.end())
                continue;
            poles.push_back(r);
            for (long k = rng.range(1, 3); k > 0; --k)
                f += RatFun(Rat(rng.range(-9, 9), rng.range(1, 3))) /
                     RatFun(pow(Poly::linear_root(r), static_cast<unsigned>(k)));
        }
        const auto certs = shift_discrete_residues(f);
        for (const Rat& base : bases) {
            for (int k = 1; k <= 3; ++k) {
                Rat direct(0);
                for (const Rat& r : poles)
                    if ((r - base).is_integer())
                        direct += dres::testing::laurent_at(f, r, 3)[static_cast<std::size_t>(k - 1)];
                std::optional<Rat> cert;
                for (const auto& ct : certs)
                    if (ct.order == k && ct.rep_modulus.degree() == 1 && (-ct.rep_modulus[0] - base).is_integer())
                        cert = ct.D.eval(-ct.rep_modulus[0]);
                c.expect(cert.value_or(Rat(0)) == direct, "shift instance " + std::to_string(i) + " mismatch");
                ++compared;
            }
        }

        // q case: poles base * q^n, residues weighted relative to the representative
        const Rat q = kQs[i % 3];
        const Rat qbases[] = {Rat(1), Rat(3), Rat(-5, 7), Rat(1, 3)};
        std::vector<Rat> qpoles;
        RatFun h(rng.poly(static_cast<int>(rng.range(0, 2)), 5));
        for (long n = rng.range(2, 5); n > 0; --n) {
            const Rat r = qbases[rng.range(0, 3)] * q.pow(rng.range(-2, 2));
            if (std::find(qpoles.begin(), qpoles.end(), r) != qpoles.end())
                continue;
            qpoles.push_back(r);
            for (long k = rng.range(1, 3); k > 0; --k)
                h += RatFun(Rat(rng.range(-9, 9), rng.range(1, 3))) /
                     RatFun(pow(Poly::linear_root(r), static_cast<unsigned>(k)));
        }
        const QResidues qr = q_discrete_residues(h, QParam(q));
        for (const auto& ct : qr.certificates) {
            if (ct.rep_modulus.degree() != 1) {
                c.expect(false, "q instance " + std::to_string(i) + " nonlinear representative");
                continue;
            }
            const Rat alpha = -ct.rep_modulus[0];
            Rat direct(0);
            for (const Rat& r : qpoles)
                for (long n = -8; n <= 8; ++n)
                    if (r == alpha * q.pow(n))
                        direct += q.pow(-n * ct.order) *
                                  dres::testing::laurent_at(h, r, ct.order)[static_cast<std::size_t>(ct.order - 1)];
            c.expect(ct.D.eval(alpha) == direct, "q instance " + std::to_string(i) + " mismatch");
            ++compared;
        }
        c.expect(qr.dres_infinity == divmod(h.num(), h.den()).quot[0], "q instance dres_infinity mismatch");
    }
    c.note("50 shift and 50 q instances, " + std::to_string(compared) + " residues compared");
    return c.finish();
}

bool criterion8() {
    Criterion c(8, "tree partition fixtures");
    const MahlerParam two(2);
    struct Fixture {
        std::string name;
        std::vector<Poly> moduli;
        std::function<bool(const std::vector<TreeAtom>&)> holds;
    };
    auto same = [](const std::vector<TreeAtom>& t) { return t.size() == 2 && t[0].tree_id == t[1].tree_id; };
    auto split = [](const std::vector<TreeAtom>& t) { return t.size() == 2 && t[0].tree_id != t[1].tree_id; };
    auto torsion = [](const std::vector<TreeAtom>& t) {
        bool all = !t.empty();
        for (const auto& a : t)
            all = all && a.torsion;
        return all;
    };
    const std::vector<Fixture> fixtures{
        {"[x-2, x-4] merge", {Poly{-2, 1}, Poly{-4, 1}},
         [&](const auto& t) { return same(t) && !t[0].torsion && !t[1].torsion; }},
        {"[x-2, x-3] split", {Poly{-2, 1}, Poly{-3, 1}}, split},
        {"[x-1, x+1] torsion tree", {Poly{-1, 1}, Poly{1, 1}}, [&](const auto& t) { return same(t) && torsion(t); }},
        {"cyclotomic x^2+x+1", {Poly{1, 1, 1}}, torsion},
        {"cyclotomic x^2+1", {Poly{1, 0, 1}}, torsion},
        {"cyclotomic x^4+x^3+x^2+x+1", {Poly{1, 1, 1, 1, 1}}, torsion},
        {"cyclotomic x^2-x+1", {Poly{1, -1, 1}}, torsion},
        {"cyclotomic x^4-x^2+1", {Poly{1, 0, -1, 0, 1}}, torsion},
        {"non-torsion x^2-x-1", {Poly{-1, -1, 1}}, [](const auto& t) { return t.size() == 1 && !t[0].torsion; }},
    };
    for (const auto& fx : fixtures) {
        const auto r6 = mahler_tree_partition(fx.moduli, two, 6);
        const auto r8 = mahler_tree_partition(fx.moduli, two, 8);
        c.expect(fx.holds(r6), fx.name + " fails at R = 6");
        c.expect(fx.holds(r8), fx.name + " fails at R = 8");
        bool equal = r6.size() == r8.size();
        for (std::size_t i = 0; equal && i < r6.size(); ++i)
            equal = r6[i].modulus == r8[i].modulus && r6[i].tree_id == r8[i].tree_id && r6[i].torsion == r8[i].torsion;
        c.expect(equal, fx.name + " changes between R = 6 and R = 8");
        c.expect(!r6.empty() && r6[0].bound_used == 6 && r8[0].bound_used == 8, fx.name + " bound_used not recorded");
    }
    c.note(std::to_string(fixtures.size()) + " fixtures at R = 6 and R = 8");
    return c.finish();
}

struct Run {
    int code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(DRES_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool criterion9() {
    Criterion c(9, "CLI round-trip, determinism, exit codes");
    Random rng(9);
    std::function<std::string(int)> expr = [&](int depth) -> std::string {
        const long pick = depth == 0 ? rng.range(0, 2) : rng.range(0, 6);
        switch (pick) {
        case 0:
            return std::to_string(rng.range(0, 12));
        case 1:
            return "x";
        case 2:
            return std::to_string(rng.range(1, 9)) + "/" + std::to_string(rng.range(1, 9));
        case 3:
            return "-(" + expr(depth - 1) + ")";
        case 4:
            return "(" + expr(depth - 1) + ")^" + std::to_string(rng.range(-2, 3));
        default: {
            const char ops[] = {'+', '-', '*', '/'};
            return "(" + expr(depth - 1) + ") " + ops[rng.range(0, 3)] + " (" + expr(depth - 1) + ")";
        }
        }
    };
    int parsed = 0;
    for (int i = 0; parsed < 500 && i < 5000; ++i) {
        const std::string text = expr(4);
        RatFun f;
        try {
            f = parse_ratfun(text);
        } catch (const DivisionByZero&) {
            continue;
        }
        ++parsed;
        const std::string printed = f.str();
        const RatFun back = parse_ratfun(printed);
        c.expect(back == f, "round-trip changed the value of " + text);
        c.expect(back.str() == printed, "printing is not stable for " + text);
    }
    c.expect(parsed == 500, "fewer than 500 expressions parsed");

    const std::vector<std::string> commands{
        "shift \"1/x\"",
        "shift \"1/(x^2+1) - 3/(x-1/2)^2 + x^4\"",
        "qshift --q 2 \"x + 5\"",
        "qshift --q -3/2 \"1/(x-1) + 1/(x^2-3) + 7/x^2\"",
        "mahler --m 2 \"x^2 - x + 1/(x-2)\"",
        "mahler --m 3 --tree-bound 4 \"x^-3 + 1/(x^2+x+1) + 1/(x-5)\"",
    };
    for (const auto& cmd : commands) {
        const Run a = run_cli(cmd);
        const Run b = run_cli(cmd);
        c.expect(a.code == 0 && !a.out.empty(), "CLI failed on " + cmd);
        c.expect(a.out == b.out, "output differs across runs of " + cmd);
    }
    const std::string corpus = "acceptance_corpus.txt";
    std::ofstream(corpus) << run_cli("generate --case shift --seed 11 --count 20 --planted 1").out;
    const Run ba = run_cli("shift --batch " + corpus);
    const Run bb = run_cli("shift --batch " + corpus);
    c.expect(ba.code == 0 && ba.out == bb.out, "batch output not reproducible");

    const Run ok = run_cli("shift --expect not-summable \"1/x\"");
    const Run mismatch = run_cli("shift --expect summable \"1/x\"");
    const Run parse = run_cli("shift \"1/(x-\"");
    const Run param = run_cli("qshift --q 1 \"x\"");
    c.expect(ok.code == 0, "exit code 0 not produced");
    c.expect(mismatch.code == 1, "exit code 1 not produced");
    c.expect(parse.code == 2, "exit code 2 not produced");
    c.expect(param.code == 3, "exit code 3 not produced");
    c.note("500 expressions, " + std::to_string(commands.size() + 1) + " repeated invocations, exit codes 0-3");
    return c.finish();
}

}  // namespace

int main() {
    bool ok = true;
    for (auto* criterion : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7,
                            criterion8, criterion9}) {
        try {
            ok = criterion() && ok;
        } catch (const std::exception& e) {
            std::cout << "criterion aborted with exception: " << e.what() << std::endl;
            ok = false;
        }
    }
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return ok ? 0 : 1;
}
