#pragma once

/* Report document: a lossless, machine-readable rendering of an
 * analysis. Exact values are serialized as "p/q" strings, never as
 * floats; floating approximations ride alongside for display only.
 */

#include "rkstab/classify.hpp"
#include "rkstab/stability_function.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace rkstab {

struct VerdictDoc {
    bool value = false;
    std::string criterion;
    bool exact = false;
    std::string details;
    bool operator==(const VerdictDoc&) const = default;
};

struct SpectrumEntryDoc {
    double re = 0, im = 0, radius = 0;
    bool operator==(const SpectrumEntryDoc&) const = default;
};

struct SampleRow {
    double x = 0, abs_R = 0, deficit = 0;
    bool operator==(const SampleRow&) const = default;
};

struct ReportDocument {
    int schema_version = 1;
    std::string source;
    unsigned stage_count = 0;
    bool exact = false;
    std::vector<std::string> nodes;         // exact tokens, analysis order
    std::vector<double> nodes_approx;
    bool forward = false, symmetric = false, contains_zero_node = false;
    std::vector<std::string> pi;            // ascending coefficients
    std::vector<std::string> chi;           // ascending coefficients
    std::vector<std::vector<std::string>> butcher_A;
    std::vector<std::string> butcher_b;
    std::vector<std::string> sf_N, sf_D, sf_gcd, sf_N_red, sf_D_red;
    std::vector<std::pair<std::string, VerdictDoc>> verdicts;
    std::vector<SpectrumEntryDoc> spectrum;
    std::vector<SampleRow> samples;
    std::string consistency;
    bool operator==(const ReportDocument&) const = default;
};

namespace detail {

inline std::vector<std::string> poly_strings(const RPoly& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

} // namespace detail

inline ReportDocument build_report_document(const CollocationMethod& m,
                                            const StabilityReport& rep,
                                            const std::string& source) {
    ReportDocument doc;
    doc.source = source;
    doc.stage_count = m.s;
    doc.exact = m.flags_exact;
    if (m.nodes)
        for (const auto& v : m.nodes->values) doc.nodes.push_back(to_string(v));
    for (const auto& v : m.tableau_num.c) doc.nodes_approx.push_back(static_cast<double>(v));
    doc.forward = rep.flags.forward;
    doc.symmetric = rep.flags.symmetric;
    doc.contains_zero_node = rep.flags.contains_zero_node;
    if (m.pi) {
        doc.pi = detail::poly_strings(*m.pi);
        doc.chi = detail::poly_strings(tau_transform(*m.pi) / Rational(factorial(m.s)));
    }
    if (m.tableau) {
        const std::size_t s = m.tableau->stage_count();
        doc.butcher_A.assign(s, {});
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                doc.butcher_A[i].push_back(to_string(m.tableau->A(i, j)));
        for (const auto& v : m.tableau->b) doc.butcher_b.push_back(to_string(v));
    }
    if (rep.sf) {
        doc.sf_N = detail::poly_strings(rep.sf->N);
        doc.sf_D = detail::poly_strings(rep.sf->D);
        doc.sf_gcd = detail::poly_strings(rep.sf->g);
        doc.sf_N_red = detail::poly_strings(rep.sf->N_red);
        doc.sf_D_red = detail::poly_strings(rep.sf->D_red);
    }
    for (Notion n : {Notion::A, Notion::I, Notion::AS, Notion::ASI, Notion::IS, Notion::ISI,
                     Notion::AHat, Notion::IHat}) {
        const Verdict& v = rep.verdicts.at(n);
        doc.verdicts.emplace_back(notion_name(n),
                                  VerdictDoc{v.value, criterion_name(v.certificate.criterion),
                                             v.certificate.exact, v.certificate.details});
    }
    for (const auto& r : rep.spectrum.roots)
        doc.spectrum.push_back({static_cast<double>(r.value.real()),
                                static_cast<double>(r.value.imag()),
                                static_cast<double>(r.radius)});
    if (rep.consistency) doc.consistency = rep.consistency->details;
    return doc;
}

inline nlohmann::json to_json(const ReportDocument& d) {
    nlohmann::json j;
    j["schema_version"] = d.schema_version;
    j["method"] = {
        {"source", d.source},
        {"stage_count", d.stage_count},
        {"exact", d.exact},
        {"nodes", d.nodes},
        {"nodes_approx", d.nodes_approx},
        {"flags",
         {{"forward", d.forward},
          {"symmetric", d.symmetric},
          {"contains_zero_node", d.contains_zero_node}}},
    };
    if (!d.pi.empty()) j["method"]["pi"] = d.pi;
    if (!d.chi.empty()) j["method"]["chi"] = d.chi;
    if (!d.butcher_A.empty()) {
        j["method"]["butcher"] = {{"A", d.butcher_A}, {"b", d.butcher_b}};
    }
    if (!d.sf_D.empty()) {
        j["stability_function"] = {{"N", d.sf_N},
                                   {"D", d.sf_D},
                                   {"gcd", d.sf_gcd},
                                   {"N_reduced", d.sf_N_red},
                                   {"D_reduced", d.sf_D_red}};
    }
    nlohmann::json verdicts = nlohmann::json::object();
    for (const auto& [name, v] : d.verdicts)
        verdicts[name] = {{"value", v.value},
                          {"criterion", v.criterion},
                          {"exact", v.exact},
                          {"details", v.details}};
    j["verdicts"] = verdicts;
    nlohmann::json spec = nlohmann::json::array();
    for (const auto& e : d.spectrum)
        spec.push_back({{"re", e.re}, {"im", e.im}, {"radius", e.radius}});
    j["spectrum"] = spec;
    if (!d.samples.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : d.samples)
            rows.push_back({{"x", r.x}, {"abs_R", r.abs_R}, {"deficit", r.deficit}});
        j["samples"] = rows;
    }
    if (!d.consistency.empty()) j["consistency"] = d.consistency;
    return j;
}

inline ReportDocument from_json(const nlohmann::json& j) {
    ReportDocument d;
    d.schema_version = j.at("schema_version").get<int>();
    const auto& m = j.at("method");
    d.source = m.at("source").get<std::string>();
    d.stage_count = m.at("stage_count").get<unsigned>();
    d.exact = m.at("exact").get<bool>();
    d.nodes = m.at("nodes").get<std::vector<std::string>>();
    d.nodes_approx = m.at("nodes_approx").get<std::vector<double>>();
    d.forward = m.at("flags").at("forward").get<bool>();
    d.symmetric = m.at("flags").at("symmetric").get<bool>();
    d.contains_zero_node = m.at("flags").at("contains_zero_node").get<bool>();
    if (m.contains("pi")) d.pi = m.at("pi").get<std::vector<std::string>>();
    if (m.contains("chi")) d.chi = m.at("chi").get<std::vector<std::string>>();
    if (m.contains("butcher")) {
        d.butcher_A = m.at("butcher").at("A").get<std::vector<std::vector<std::string>>>();
        d.butcher_b = m.at("butcher").at("b").get<std::vector<std::string>>();
    }
    if (j.contains("stability_function")) {
        const auto& sf = j.at("stability_function");
        d.sf_N = sf.at("N").get<std::vector<std::string>>();
        d.sf_D = sf.at("D").get<std::vector<std::string>>();
        d.sf_gcd = sf.at("gcd").get<std::vector<std::string>>();
        d.sf_N_red = sf.at("N_reduced").get<std::vector<std::string>>();
        d.sf_D_red = sf.at("D_reduced").get<std::vector<std::string>>();
    }
    for (const char* name : {"A", "I", "AS", "ASI", "IS", "ISI", "A-hat", "I-hat"}) {
        const auto& v = j.at("verdicts").at(name);
        d.verdicts.emplace_back(name, VerdictDoc{v.at("value").get<bool>(),
                                                 v.at("criterion").get<std::string>(),
                                                 v.at("exact").get<bool>(),
                                                 v.at("details").get<std::string>()});
    }
    for (const auto& e : j.at("spectrum"))
        d.spectrum.push_back({e.at("re").get<double>(), e.at("im").get<double>(),
                              e.at("radius").get<double>()});
    if (j.contains("samples"))
        for (const auto& r : j.at("samples"))
            d.samples.push_back({r.at("x").get<double>(), r.at("abs_R").get<double>(),
                                 r.at("deficit").get<double>()});
    if (j.contains("consistency")) d.consistency = j.at("consistency").get<std::string>();
    return d;
}

inline std::string render_text(const ReportDocument& d) {
    std::ostringstream os;
    os << "method: " << d.source << "  (s = " << d.stage_count << ", "
       << (d.exact ? "exact" : "numerical") << ")\n";
    if (!d.nodes.empty()) {
        os << "nodes:";
        for (const auto& n : d.nodes) os << " " << n;
        os << "\n";
    } else if (!d.nodes_approx.empty()) {
        os << "nodes ~";
        for (double n : d.nodes_approx) os << " " << std::setprecision(12) << n;
        os << "\n";
    }
    os << "flags: " << (d.forward ? "forward" : "not-forward") << ", "
       << (d.symmetric ? "symmetric" : "not-symmetric")
       << (d.contains_zero_node ? ", zero-node" : "") << "\n";
    if (!d.sf_D.empty()) {
        auto join = [](const std::vector<std::string>& v) {
            std::string s = "[";
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
            return s + "]";
        };
        os << "R = N/D, ascending coefficients:\n";
        os << "  N       " << join(d.sf_N) << "\n  D       " << join(d.sf_D) << "\n";
        os << "  gcd     " << join(d.sf_gcd) << "\n";
        os << "  N_red   " << join(d.sf_N_red) << "\n  D_red   " << join(d.sf_D_red) << "\n";
    }
    os << "spectrum of A:";
    for (const auto& e : d.spectrum)
        os << "  " << std::setprecision(12) << e.re << (e.im < 0 ? " - " : " + ")
           << std::abs(e.im) << "i";
    os << "\nverdicts:\n";
    for (const auto& [name, v] : d.verdicts) {
        os << "  " << std::left << std::setw(6) << name << (v.value ? "yes" : "no ")
           << "  [" << v.criterion << (v.exact ? ", exact" : ", numerical") << "] "
           << v.details << "\n";
    }
    if (!d.consistency.empty()) os << "consistency: " << d.consistency << "\n";
    return os.str();
}

} // namespace rkstab
