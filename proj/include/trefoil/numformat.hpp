#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace trefoil {

// 17 significant digits: enough to round-trip an IEEE double exactly.
std::string fmt17(double v);

// "k pi / d" when v is within 1e-12 of a small rational multiple of pi
// (denominators up to 360); empty string otherwise.
std::string pi_multiple(double v);

// fmt17 plus the pi annotation in parentheses when one exists.
std::string fmt_angle(double v);

// ---------------------------------------------------------------------------
// Minimal deterministic JSON writer: insertion-ordered objects, fmt17
// numbers, no whitespace variance across platforms.

class JsonWriter {
public:
    JsonWriter &begin_object();
    JsonWriter &end_object();
    JsonWriter &begin_array(const std::string &key = "");
    JsonWriter &end_array();
    JsonWriter &key(const std::string &k);
    JsonWriter &value(double v);
    JsonWriter &value(long long v);
    JsonWriter &value(int v);
    JsonWriter &value(bool v);
    JsonWriter &value(const std::string &v);
    JsonWriter &field(const std::string &k, double v);
    JsonWriter &field(const std::string &k, long long v);
    JsonWriter &field(const std::string &k, int v);
    JsonWriter &field(const std::string &k, bool v);
    JsonWriter &field(const std::string &k, const std::string &v);

    std::string str() const { return out_; }

private:
    void comma();
    std::string out_;
    std::vector<bool> first_;  // per nesting level
};

// ---------------------------------------------------------------------------
// Deterministic uniform samples: mt19937_64 (bit-exact across platforms by
// the standard), doubles built from the top 53 bits rather than through
// std::uniform_real_distribution (whose output is implementation-defined).

class UniformSampler {
public:
    explicit UniformSampler(std::uint64_t seed) : gen_(seed) {}

    double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double next(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace trefoil
