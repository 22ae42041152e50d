#include "symsemi/report.hpp"

#include "symsemi/errors.hpp"

#include <iomanip>
#include <sstream>

namespace symsemi {

using nlohmann::json;

bool operator==(const Check& a, const Check& b) {
    return a.name == b.name && a.pass == b.pass && a.detail == b.detail && a.residual == b.residual;
}

bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.mode == b.mode && a.model == b.model && a.census == b.census &&
           a.oscillator == b.oscillator && a.checks == b.checks && a.criteria == b.criteria &&
           a.warnings == b.warnings && a.pass == b.pass && a.timing_ms == b.timing_ms;
}

namespace {

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
    if (v) j[key] = *v;
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

json model_json(const ModelSection& m) {
    return {{"name", m.name},
            {"manifold_dim", m.manifold_dim},
            {"omega", m.omega},
            {"convention", m.convention},
            {"closed", m.closed},
            {"nondegenerate", m.nondegenerate},
            {"degeneracy_allowed", m.degeneracy_allowed},
            {"top_power", m.top_power},
            {"p", m.p},
            {"dims", m.dims},
            {"betti", m.betti},
            {"cone_betti", m.cone_betti},
            {"harmonic", m.harmonic},
            {"chi", m.chi},
            {"k", m.k},
            {"applicability", m.applicability},
            {"duality_observed", m.duality_observed}};
}

ModelSection model_from(const json& j) {
    ModelSection m;
    j.at("name").get_to(m.name);
    j.at("manifold_dim").get_to(m.manifold_dim);
    j.at("omega").get_to(m.omega);
    j.at("convention").get_to(m.convention);
    j.at("closed").get_to(m.closed);
    j.at("nondegenerate").get_to(m.nondegenerate);
    j.at("degeneracy_allowed").get_to(m.degeneracy_allowed);
    j.at("top_power").get_to(m.top_power);
    j.at("p").get_to(m.p);
    j.at("dims").get_to(m.dims);
    j.at("betti").get_to(m.betti);
    j.at("cone_betti").get_to(m.cone_betti);
    j.at("harmonic").get_to(m.harmonic);
    j.at("chi").get_to(m.chi);
    j.at("k").get_to(m.k);
    j.at("applicability").get_to(m.applicability);
    j.at("duality_observed").get_to(m.duality_observed);
    return m;
}

json census_json(const CensusSection& c) {
    json j{{"source", c.source},
           {"nonvanishing", c.nonvanishing},
           {"zero_count", c.zero_count},
           {"outcome", c.outcome},
           {"note", c.note},
           {"nondegeneracy", c.nondegeneracy},
           {"euler_outcome", c.euler_outcome},
           {"euler_chi", c.euler_chi}};
    put_opt(j, "euler_signed_sum", c.euler_signed_sum);
    return j;
}

CensusSection census_from(const json& j) {
    CensusSection c;
    j.at("source").get_to(c.source);
    j.at("nonvanishing").get_to(c.nonvanishing);
    j.at("zero_count").get_to(c.zero_count);
    j.at("outcome").get_to(c.outcome);
    j.at("note").get_to(c.note);
    j.at("nondegeneracy").get_to(c.nondegeneracy);
    j.at("euler_outcome").get_to(c.euler_outcome);
    j.at("euler_chi").get_to(c.euler_chi);
    c.euler_signed_sum = get_opt<long>(j, "euler_signed_sum");
    return c;
}

json oscillator_json(const OscillatorSection& o) {
    json spec = json::array();
    for (const auto& s : o.spectrum) spec.push_back({{"T", s.T}, {"eigen_over_T", s.eigen_over_T}});
    json j{{"matrix", o.matrix},
           {"mode", o.mode},
           {"det_sign", o.det_sign},
           {"degree_cap", o.degree_cap},
           {"T", o.T},
           {"kernel_dim", o.kernel_dim},
           {"parity", o.parity},
           {"spectrum", spec},
           {"zero_multiplicity", o.zero_multiplicity},
           {"smallest_nonzero", o.smallest_nonzero},
           {"C1", o.C1},
           {"eta_zero", o.eta_zero}};
    put_opt(j, "C1_squared", o.C1_squared);
    return j;
}

OscillatorSection oscillator_from(const json& j) {
    OscillatorSection o;
    j.at("matrix").get_to(o.matrix);
    j.at("mode").get_to(o.mode);
    j.at("det_sign").get_to(o.det_sign);
    j.at("degree_cap").get_to(o.degree_cap);
    j.at("T").get_to(o.T);
    j.at("kernel_dim").get_to(o.kernel_dim);
    j.at("parity").get_to(o.parity);
    for (const auto& s : j.at("spectrum")) o.spectrum.push_back({s.at("T").get<std::string>(), s.at("eigen_over_T").get<std::vector<double>>()});
    j.at("zero_multiplicity").get_to(o.zero_multiplicity);
    j.at("smallest_nonzero").get_to(o.smallest_nonzero);
    j.at("C1").get_to(o.C1);
    j.at("eta_zero").get_to(o.eta_zero);
    o.C1_squared = get_opt<std::string>(j, "C1_squared");
    return o;
}

std::string list_str(const auto& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? ", " : "") << v[i];
    s << ")";
    return s.str();
}

} // namespace

json to_json(const Report& r) {
    json j{{"command", r.command}, {"mode", r.mode}};
    if (r.model) j["model"] = model_json(*r.model);
    if (r.census) j["census"] = census_json(*r.census);
    if (r.oscillator) j["oscillator"] = oscillator_json(*r.oscillator);
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        put_opt(cj, "residual", c.residual);
        checks.push_back(cj);
    }
    j["checks"] = checks;
    json crit = json::array();
    for (const auto& c : r.criteria) {
        json cj{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}};
        put_opt(cj, "seconds", c.seconds);
        crit.push_back(cj);
    }
    j["criteria"] = crit;
    j["warnings"] = r.warnings;
    j["pass"] = r.pass;
    put_opt(j, "timing_ms", r.timing_ms);
    return j;
}

Report report_from_json(const json& j) {
    try {
        Report r;
        j.at("command").get_to(r.command);
        j.at("mode").get_to(r.mode);
        if (j.contains("model")) r.model = model_from(j.at("model"));
        if (j.contains("census")) r.census = census_from(j.at("census"));
        if (j.contains("oscillator")) r.oscillator = oscillator_from(j.at("oscillator"));
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                c.at("detail").get<std::string>(), get_opt<double>(c, "residual")});
        for (const auto& c : j.at("criteria"))
            r.criteria.push_back({c.at("id").get<int>(), c.at("title").get<std::string>(), c.at("pass").get<bool>(),
                                  c.at("detail").get<std::string>(), get_opt<double>(c, "seconds")});
        j.at("warnings").get_to(r.warnings);
        j.at("pass").get_to(r.pass);
        r.timing_ms = get_opt<double>(j, "timing_ms");
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string to_text(const Report& r) {
    std::ostringstream out;
    out << r.command << " (" << r.mode << ")\n";
    if (r.model) {
        const auto& m = *r.model;
        out << "model            " << m.name << " (dim " << m.manifold_dim << ")\n";
        out << "omega            " << m.omega << "\n";
        if (!m.convention.empty()) out << "convention       " << m.convention << "\n";
        out << "symplectic       closed=" << (m.closed ? "yes" : "no")
            << " nondegenerate=" << (m.nondegenerate ? "yes" : "no")
            << (m.degeneracy_allowed ? " (degeneracy allowed)" : "") << "\n";
        out << "betti            " << list_str(m.betti) << "\n";
        out << "cone (p=" << m.p << ")       dims " << list_str(m.dims) << "\n";
        for (std::size_t i = 0; i < m.cone_betti.size(); ++i)
            out << "  b_" << i << "^omega = " << m.cone_betti[i] << "\n";
        out << "harmonic         " << list_str(m.harmonic) << "\n";
        out << "chi              " << m.chi << "\n";
        out << "k(M,omega)       " << m.k << "\n";
        out << "applicability    " << m.applicability << "\n";
        out << "duality          " << (m.duality_observed ? "palindromic" : "not palindromic") << "\n";
    }
    if (r.census) {
        const auto& c = *r.census;
        out << "census           " << c.source << (c.nonvanishing ? " (nonvanishing)" : "") << ", "
            << c.zero_count << " zeros, nondegeneracy " << c.nondegeneracy << "\n";
        out << "counting check   " << c.outcome << " (" << c.note << ")\n";
        out << "euler check      " << c.euler_outcome;
        if (c.euler_signed_sum) out << " (signed sum " << *c.euler_signed_sum << ", chi " << c.euler_chi << ")";
        out << "\n";
    }
    if (r.oscillator) {
        const auto& o = *r.oscillator;
        out << "oscillator       mode " << o.mode << ", det sign " << o.det_sign << ", degree cap " << o.degree_cap << "\n";
        out << "kernel           dim " << o.kernel_dim << ", parity " << o.parity << "\n";
        for (const auto& s : o.spectrum) {
            out << "  T=" << s.T << "  spectrum/T:";
            std::size_t shown = 0;
            for (double x : s.eigen_over_T) {
                if (shown++ == 12) {
                    out << " ...";
                    break;
                }
                out << " " << std::setprecision(6) << x;
            }
            out << "\n";
        }
        out << "gap              " << o.smallest_nonzero << "\n";
        out << "C1               " << std::setprecision(9) << o.C1;
        if (o.C1_squared) out << " (C1^2 = " << *o.C1_squared << ")";
        if (o.eta_zero) out << " (eta = 0)";
        out << "\n";
    }
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << "  " << c.detail;
        if (c.residual) out << "  residual " << std::scientific << std::setprecision(2) << *c.residual << std::defaultfloat;
        out << "\n";
    }
    for (const auto& c : r.criteria) {
        out << (c.pass ? "PASS " : "FAIL ") << "criterion " << c.id << ": " << c.title;
        if (!c.detail.empty()) out << "  [" << c.detail << "]";
        if (c.seconds) out << "  " << std::fixed << std::setprecision(3) << *c.seconds << "s" << std::defaultfloat;
        out << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    out << "result           " << (r.pass ? "pass" : "fail") << "\n";
    if (r.timing_ms) out << "time             " << *r.timing_ms << " ms\n";
    return out.str();
}

} // namespace symsemi
