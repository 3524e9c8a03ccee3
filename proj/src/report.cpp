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


#include "dres/report.hpp"

#include <map>
#include <sstream>

namespace dres {

using nlohmann::ordered_json;

ordered_json poly_json(const Poly& p) {
    ordered_json a = ordered_json::array();
    if (p.is_zero()) {
        a.push_back("0");
        return a;
    }
    for (const Rat& c : p.coeffs())
        a.push_back(c.str());
    return a;
}

namespace {

template <typename Cert>
ordered_json certificates_json(const std::vector<Cert>& certs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : certs) {
        ordered_json e;
        e["order"] = c.order;
        e["B"] = poly_json(c.rep_modulus);
        e["D"] = poly_json(c.D);
        e["orbit_id"] = c.orbit_id;
        a.push_back(std::move(e));
    }
    return a;
}

template <typename Cert>
bool any_nonzero(const std::vector<Cert>& certs) {
    for (const auto& c : certs)
        if (!c.D.is_zero())
            return true;
    return false;
}

ordered_json head(const char* kase, ordered_json params) {
    ordered_json j;
    j["case"] = kase;
    j["params"] = std::move(params);
    j["verdict"] = nullptr;
    return j;
}

}  // namespace

std::vector<AggregateCertificate> aggregate_certificates(const std::vector<ResidueCertificate>& certs) {
    std::map<int, AggregateCertificate> by_order;
    for (const auto& c : certs) {
        if (c.D.is_zero())
            continue;
        auto [it, fresh] = by_order.try_emplace(c.order, AggregateCertificate{c.order, c.rep_modulus, c.D});
        if (fresh)
            continue;
        AggregateCertificate& a = it->second;
        // D = D_a + B_a * ((D_c - D_a) / B_a mod B_c)
        const Poly t = ((c.D - a.D) * inverse_mod(a.B, c.rep_modulus)) % c.rep_modulus;
        a.D = a.D + a.B * t;
        a.B = a.B * c.rep_modulus;
        a.D = a.D % a.B;
    }
    std::vector<AggregateCertificate> out;
    for (auto& [k, a] : by_order)
        out.push_back(std::move(a));
    return out;
}

Report analyze_shift(const RatFun& f) {
    const ShiftDecision d = is_shift_summable(f);
    Report r;
    r.verdict = d.verdict;
    r.json = head("shift", ordered_json::object());
    r.json["verdict"] = verdict_name(d.verdict);
    r.json["certificates"] = certificates_json(d.certificates);
    ordered_json agg = ordered_json::array();
    for (const auto& a : aggregate_certificates(d.certificates)) {
        ordered_json e;
        e["order"] = a.order;
        e["B"] = poly_json(a.B);
        e["D"] = poly_json(a.D);
        agg.push_back(std::move(e));
    }
    r.json["aggregate"] = std::move(agg);
    r.json["version"] = kVersion;
    return r;
}

Report analyze_q(const RatFun& f, const QParam& q) {
    const QDecision d = is_q_summable(f, q);
    Report r;
    r.verdict = d.verdict;
    ordered_json params;
    params["q"] = q.value().str();
    r.json = head("q", std::move(params));
    r.json["verdict"] = verdict_name(d.verdict);
    r.json["dres_infinity"] = d.residues.dres_infinity.str();
    r.json["certificates"] = certificates_json(d.residues.certificates);
    r.json["version"] = kVersion;
    return r;
}

Report analyze_mahler(const RatFun& f, const MahlerParam& m, int tree_bound) {
    const MahlerReport d = mahler_report(f, m, tree_bound);
    Report r;
    r.verdict = d.verdict;
    ordered_json params;
    params["m"] = m.value();
    params["tree_bound"] = tree_bound;
    r.json = head("mahler", std::move(params));
    r.json["verdict"] = verdict_name(d.verdict);
    r.json["certificates"] = ordered_json::array();
    ordered_json classes = ordered_json::array();
    for (const auto& c : d.classes) {
        ordered_json e;
        e["label"] = c.label;
        e["sum"] = c.sum.str();
        classes.push_back(std::move(e));
    }
    r.json["laurent_classes"] = std::move(classes);
    ordered_json trees = ordered_json::array();
    for (const auto& t : d.trees) {
        ordered_json e;
        e["modulus"] = poly_json(t.modulus);
        e["tree_id"] = t.tree_id;
        e["torsion"] = t.torsion;
        e["bound_used"] = t.bound_used;
        trees.push_back(std::move(e));
    }
    r.json["trees"] = std::move(trees);
    r.json["version"] = kVersion;
    return r;
}

std::string render_json(const Report& r) { return r.json.dump(); }

namespace {

std::string poly_text(const ordered_json& coeffs) {
    std::vector<Rat> c;
    for (const auto& s : coeffs)
        c.push_back(Rat::parse(s.get<std::string>()));
    return Poly(std::move(c)).str();
}

}  // namespace

std::string render_text(const Report& r) {
    const ordered_json& j = r.json;
    std::ostringstream os;
    os << "case: " << j["case"].get<std::string>();
    for (const auto& [k, v] : j["params"].items())
        os << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\nverdict: " << j["verdict"].get<std::string>() << '\n';
    if (j.contains("dres_infinity"))
        os << "dres(f, oo) = " << j["dres_infinity"].get<std::string>() << '\n';
    for (const auto& c : j["certificates"])
        os << "certificate order " << c["order"].get<int>() << " orbit " << c["orbit_id"].get<int>()
           << ": B = " << poly_text(c["B"]) << ", D = " << poly_text(c["D"]) << '\n';
    if (j.contains("aggregate"))
        for (const auto& c : j["aggregate"])
            os << "aggregate order " << c["order"].get<int>() << ": B = " << poly_text(c["B"])
               << ", D = " << poly_text(c["D"]) << '\n';
    if (j.contains("laurent_classes"))
        for (const auto& c : j["laurent_classes"])
            os << "class " << c["label"].get<long>() << ": sum = " << c["sum"].get<std::string>() << '\n';
    if (j.contains("trees"))
        for (const auto& t : j["trees"])
            os << "tree " << t["tree_id"].get<int>() << ": " << poly_text(t["modulus"])
               << (t["torsion"].get<bool>() ? " (torsion)" : "") << ", within bound "
               << t["bound_used"].get<int>() << '\n';
    os << "version: " << j["version"].get<std::string>() << '\n';
    return os.str();
}

}  // namespace dres
