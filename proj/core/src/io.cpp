#include "periwave/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fft_util.hpp"

namespace periwave::io {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string profile_to_json(const WaveProfile& p) {
    json j;
    j["family"] = p.family.name();
    j["k"] = p.k;
    j["L"] = p.L;
    j["c"] = p.c;
    j["A"] = p.A;
    j["N"] = p.N;
    j["samples"] = p.samples;
    if (p.family.tag == FamilyId::Tag::gardner_dn ||
        p.family.tag == FamilyId::Tag::gardner_dnsn) {
        j["a"] = p.family.a;
        j["b"] = p.family.b;
    }
    if (p.family.tag == FamilyId::Tag::ilw) j["delta"] = p.family.delta;
    return j.dump(2) + "\n";
}

WaveProfile profile_from_json(const std::string& text) {
    json j = json::parse(text);
    WaveProfile p;
    p.family = FamilyId::parse(j.at("family").get<std::string>(),
                               j.value("a", 1.0), j.value("b", 6.0),
                               j.value("delta", 1.0));
    p.k = j.at("k").get<double>();
    p.L = j.at("L").get<double>();
    p.c = j.at("c").get<double>();
    p.A = j.at("A").get<double>();
    p.N = j.at("N").get<int>();
    p.samples = j.at("samples").get<std::vector<double>>();
    if (static_cast<int>(p.samples.size()) != p.N)
        throw std::runtime_error("profile document: N does not match samples length");
    p.fourier = detail::fft_coeffs(p.samples);
    return p;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

std::string profile_to_csv(const WaveProfile& p) {
    std::ostringstream os;
    os << "x,phi\n";
    for (int i = 0; i < p.N; ++i)
        os << fmt17(i * p.L / p.N) << ',' << fmt17(p.samples[i]) << '\n';
    return os.str();
}

std::string trace_to_csv(const EvolutionTrace& t) {
    std::ostringstream os;
    os << "t,rho,drift_E,drift_Q,drift_V\n";
    for (size_t i = 0; i < t.times.size(); ++i) {
        double r = i < t.rho_series.size() ? t.rho_series[i] : 0.0;
        os << fmt17(t.times[i]) << ',' << fmt17(r) << ',' << fmt17(t.drift_E) << ','
           << fmt17(t.drift_Q) << ',' << fmt17(t.drift_V) << '\n';
    }
    return os.str();
}

std::string report_csv_header() {
    return "family,k,L,c,A,dc_dk,dA_dk,Q,V,Phi,Mk,Psi,theta,n_neg,zero_simple,"
           "H0,H1,H2,H3,H4,error\n";
}

std::string report_to_csv_row(const HypothesisReport& r) {
    std::ostringstream os;
    os << r.family << ',' << fmt17(r.k) << ',' << fmt17(r.L) << ',' << fmt17(r.c)
       << ',' << fmt17(r.A) << ',' << fmt17(r.dc_dk) << ',' << fmt17(r.dA_dk) << ','
       << fmt17(r.Q) << ',' << fmt17(r.V) << ',' << fmt17(r.Phi) << ','
       << fmt17(r.Mk) << ',' << fmt17(r.Psi) << ','
       << (r.theta ? fmt17(*r.theta) : std::string("")) << ',' << r.n_negative << ','
       << (r.zero_simple ? 1 : 0) << ',' << (r.h0 ? 1 : 0) << ',' << (r.h1 ? 1 : 0)
       << ',' << (r.h2 ? 1 : 0) << ',' << (r.h3 ? 1 : 0) << ',' << (r.h4 ? 1 : 0)
       << ',' << r.error << '\n';
    return os.str();
}

} // namespace periwave::io
