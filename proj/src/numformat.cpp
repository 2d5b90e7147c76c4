#include "trefoil/numformat.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include "trefoil/errors.hpp"
#include "trefoil/mat2.hpp"

namespace trefoil {

double geom_tol() {
    static const double tol = [] {
        if (const char *env = std::getenv("TREFOIL_GEOM_TOL")) {
            char *end = nullptr;
            const double v = std::strtod(env, &end);
            if (end != env && v > 0.0 && std::isfinite(v)) return v;
        }
        return 1e-9;
    }();
    return tol;
}

std::string fmt17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    if (v == 0.0) v = 0.0;  // flush -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string pi_multiple(double v) {
    if (!std::isfinite(v)) return "";
    if (v == 0.0) return "0";
    const double x = v / PI;
    for (long long den = 1; den <= 360; ++den) {
        const double scaled = x * static_cast<double>(den);
        const long long num = std::llround(scaled);
        if (num == 0) continue;
        if (std::abs(v - static_cast<double>(num) * PI / static_cast<double>(den)) > 1e-12)
            continue;
        const long long g = std::gcd(std::llabs(num), den);
        const long long n = num / g, d = den / g;
        std::string s;
        if (n == -1) s = "-pi";
        else if (n == 1) s = "pi";
        else s = std::to_string(n) + "pi";
        if (d != 1) s += "/" + std::to_string(d);
        return s;
    }
    return "";
}

std::string fmt_angle(double v) {
    std::string s = fmt17(v);
    const std::string p = pi_multiple(v);
    if (!p.empty() && p != "0") s += " (" + p + ")";
    return s;
}

// --- JsonWriter -------------------------------------------------------------

void JsonWriter::comma() {
    if (!first_.empty()) {
        if (!first_.back()) out_ += ",";
        first_.back() = false;
    }
}

JsonWriter &JsonWriter::begin_object() {
    comma();
    out_ += "{";
    first_.push_back(true);
    return *this;
}

JsonWriter &JsonWriter::end_object() {
    out_ += "}";
    first_.pop_back();
    return *this;
}

JsonWriter &JsonWriter::begin_array(const std::string &k) {
    if (!k.empty()) key(k);
    comma();
    out_ += "[";
    first_.push_back(true);
    return *this;
}

JsonWriter &JsonWriter::end_array() {
    out_ += "]";
    first_.pop_back();
    return *this;
}

JsonWriter &JsonWriter::key(const std::string &k) {
    comma();
    out_ += "\"" + k + "\":";
    if (!first_.empty()) first_.back() = true;  // suppress comma before the value
    return *this;
}

JsonWriter &JsonWriter::value(double v) {
    comma();
    if (std::isfinite(v)) out_ += fmt17(v);
    else out_ += "\"" + fmt17(v) + "\"";  // JSON has no inf/nan literal
    return *this;
}

JsonWriter &JsonWriter::value(long long v) {
    comma();
    out_ += std::to_string(v);
    return *this;
}

JsonWriter &JsonWriter::value(int v) { return value(static_cast<long long>(v)); }

JsonWriter &JsonWriter::value(bool v) {
    comma();
    out_ += v ? "true" : "false";
    return *this;
}

JsonWriter &JsonWriter::value(const std::string &v) {
    comma();
    out_ += "\"";
    for (char c : v) {
        switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += c;
        }
    }
    out_ += "\"";
    return *this;
}

JsonWriter &JsonWriter::field(const std::string &k, double v) { return key(k).value(v); }
JsonWriter &JsonWriter::field(const std::string &k, long long v) { return key(k).value(v); }
JsonWriter &JsonWriter::field(const std::string &k, int v) { return key(k).value(v); }
JsonWriter &JsonWriter::field(const std::string &k, bool v) { return key(k).value(v); }
JsonWriter &JsonWriter::field(const std::string &k, const std::string &v) { return key(k).value(v); }

}  // namespace trefoil
