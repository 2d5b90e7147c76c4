#pragma once

#include <stdexcept>
#include <string>

namespace trefoil {

// Failure kinds surfaced by the library.  CLI maps usage -> exit 1 and
// verification_failure -> exit 2; everything else is a domain/contract error.
enum class errc {
    out_of_range,       // scalar argument outside the documented interval
    out_of_domain,      // point outside a coordinate chart or model domain
    degenerate,         // construction undefined at this parameter (e.g. S=1 translations)
    not_representable,  // no integral Seifert symbol (irrational r)
    not_applicable,     // operation undefined for this input class (e.g. p=0 length)
    undefined_value,    // quantity has no defined value for this geometry class
    usage,              // malformed CLI input
    verification_failure
};

inline const char *errc_name(errc c) {
    switch (c) {
    case errc::out_of_range: return "OutOfRange";
    case errc::out_of_domain: return "OutOfDomain";
    case errc::degenerate: return "Degenerate";
    case errc::not_representable: return "NotRepresentable";
    case errc::not_applicable: return "NotApplicable";
    case errc::undefined_value: return "Undefined";
    case errc::usage: return "Usage";
    case errc::verification_failure: return "VerificationFailure";
    }
    return "Unknown";
}

class GeomError : public std::runtime_error {
public:
    GeomError(errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

// Default algebraic tolerance for closed-form identities; overridable through
// the TREFOIL_GEOM_TOL environment variable (read once per process).
double geom_tol();

}  // namespace trefoil
