#include "mtw/rational.hpp"

#include "mtw/errors.hpp"

#include <cctype>

namespace mtw {

const char* errc_name(errc c) {
    switch (c) {
    case errc::cycle_detected: return "CycleDetected";
    case errc::disconnected: return "Disconnected";
    case errc::nonpositive_length: return "NonpositiveLength";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::point_not_on_tree: return "PointNotOnTree";
    case errc::empty_input: return "EmptyInput";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::no_free_ray: return "NoFreeRay";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::negative_radius: return "NegativeRadius";
    case errc::theta_out_of_range: return "ThetaOutOfRange";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::parse_error: return "ParseError";
    case errc::missing_branch_length: return "MissingBranchLength";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Error";
}

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw Error(errc::parse_error, "not a rational literal: '" + std::string(text) + "'");
}

Int pow10(unsigned long n) {
    Int r = 1;
    for (unsigned long i = 0; i < n; ++i) r *= 10;
    return r;
}

// cpp_int's string constructor reads a leading 0 as octal; always decimal here
Int decimal_int(std::string_view digits) {
    size_t i = 0;
    while (i + 1 < digits.size() && digits[i] == '0') ++i;
    return Int(std::string(digits.substr(i)));
}

} // namespace

Rat parse_rational(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (s.empty()) bad_literal(text);

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.remove_prefix(1);
        if (s.empty()) bad_literal(text);
    }

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string_view ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty()) bad_literal(text);
        for (char c : ns)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad_literal(text);
        for (char c : ds)
            if (!std::isdigit(static_cast<unsigned char>(c))) bad_literal(text);
        Int num = decimal_int(ns);
        Int den = decimal_int(ds);
        if (den == 0) bad_literal(text);
        Rat q(num, den);
        return neg ? Rat(-q) : q;
    }

    // decimal with optional exponent: digits[.digits][(e|E)[+-]digits]
    std::string digits;
    long frac_len = 0, exponent = 0;
    size_t i = 0;
    bool any = false, dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            any = true;
            if (dot) ++frac_len;
        } else if (c == '.') {
            if (dot) bad_literal(text);
            dot = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            bad_literal(text);
        }
    }
    if (!any) bad_literal(text);
    if (i < s.size()) { // exponent part
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            eneg = s[i] == '-';
            ++i;
        }
        if (i >= s.size()) bad_literal(text);
        long ev = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad_literal(text);
            ev = ev * 10 + (s[i] - '0');
            if (ev > 100000) bad_literal(text); // cap absurd exponents
        }
        exponent = eneg ? -ev : ev;
    }

    Int mantissa = decimal_int(digits.empty() ? "0" : digits);
    long shift = exponent - frac_len;
    Rat q;
    if (shift >= 0)
        q = Rat(mantissa * pow10(static_cast<unsigned long>(shift)), 1);
    else
        q = Rat(mantissa, pow10(static_cast<unsigned long>(-shift)));
    return neg ? Rat(-q) : q;
}

std::string rat_string(const Rat& q) {
    const Int& num = boost::multiprecision::numerator(q);
    const Int& den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double rat_double(const Rat& q) { return q.convert_to<double>(); }

} // namespace mtw
