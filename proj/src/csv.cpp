#include "kdv/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace kdv {

namespace {

void write_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_csv(const std::vector<EnergySample>& samples) {
    std::string out = "t,E,lnE,V,trace\n";
    for (const EnergySample& s : samples) {
        out += format_double(s.t);
        out += ',';
        out += format_double(s.E);
        out += ',';
        out += format_double(std::log(s.E));
        out += ',';
        if (s.V) out += format_double(*s.V);
        out += ',';
        out += format_double(s.trace);
        out += '\n';
    }
    return out;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "value,nu,kappa,r2\n";
    for (const SweepRow& r : rows) {
        out += format_double(r.value);
        out += ',';
        out += format_double(r.nu);
        out += ',';
        out += format_double(r.kappa);
        out += ',';
        out += format_double(r.r2);
        out += '\n';
    }
    return out;
}

std::string to_csv(const CertificateReport& rep) {
    std::string out = "key,value\n";
    auto put = [&out](const char* key, const std::string& value) {
        out += key;
        out += ',';
        out += value;
        out += '\n';
    };
    auto put_d = [&put](const char* key, double v) { put(key, format_double(v)); };
    auto put_b = [&put](const char* key, bool v) { put(key, v ? "true" : "false"); };

    put_d("alpha", rep.alpha);
    put_d("beta", rep.beta);
    put_d("L", rep.L);
    put_d("h", rep.h);
    put_b("admissible", rep.admissible);
    put_b("no_delay_stabilizable", rep.no_delay_stabilizable);
    put_d("M_11", rep.M.m11);
    put_d("M_12", rep.M.m12);
    put_d("M_22", rep.M.m22);
    put_b("M_negdef", rep.M_negdef);
    put_d("Mtilde_11", rep.M_tilde.m11);
    put_d("Mtilde_12", rep.M_tilde.m12);
    put_d("Mtilde_22", rep.M_tilde.m22);
    put_b("Mtilde_negdef", rep.Mtilde_negdef);
    put_d("mu2_max", rep.mu2_max);
    put_d("mu1_max", rep.mu1_max);
    put_d("mu1", rep.mu1);
    put_d("mu2", rep.mu2);
    put_b("Mmu_negdef", rep.Mmu_negdef);
    put_b("mu1_bound_degenerate", rep.mu1_bound_degenerate);
    put_d("r_max", rep.r_max);
    put_d("r", rep.r);
    put_d("gamma", rep.gamma);
    put_b("gamma_is_nonlinear", rep.gamma_is_nonlinear);
    put_d("kappa", rep.kappa);
    put_b("critical", rep.critical);
    if (rep.critical) {
        put("critical_k", std::to_string(rep.critical_k));
        put("critical_l", std::to_string(rep.critical_l));
    }
    return out;
}

void emit_csv(const std::vector<EnergySample>& samples, const std::string& path) {
    write_file(to_csv(samples), path);
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    write_file(to_csv(rows), path);
}

void emit_csv(const CertificateReport& report, const std::string& path) {
    write_file(to_csv(report), path);
}

} // namespace kdv
