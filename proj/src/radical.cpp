#include "mtw/radical.hpp"

#include "mtw/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mtw {

namespace {

constexpr int kMaxDepth = 24;
constexpr size_t kMaxTerms = 24;

// m = k^2 * m'; extracts square factors by bounded trial division plus a
// perfect-square check on the residual.
std::pair<Int, Int> reduce_radicand(Int m) {
    Int k = 1, rest = 1;
    Int d = 2;
    const Int trial_bound = 512;
    while (d <= trial_bound && d * d <= m) {
        if (m % d == 0) {
            int exp = 0;
            while (m % d == 0) {
                m /= d;
                ++exp;
            }
            for (int i = 0; i < exp / 2; ++i) k *= d;
            if (exp % 2) rest *= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (m > 1) {
        Int r = boost::multiprecision::sqrt(m);
        if (r * r == m) {
            k *= r;
            m = 1;
        }
    }
    return {k, rest * m};
}

using F50 = boost::multiprecision::cpp_bin_float_50;
using F100 = boost::multiprecision::cpp_bin_float_100;
using F200 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;
using F400 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<400>>;

template <class F>
int interval_sign(const std::vector<std::pair<Rat, Int>>& terms) {
    F value = 0, magnitude = 0;
    for (const auto& [coef, rad] : terms) {
        F c = static_cast<F>(coef);
        F s = sqrt(static_cast<F>(rad));
        value += c * s;
        magnitude += fabs(c) * s;
    }
    F bound = magnitude * std::numeric_limits<F>::epsilon() * (16 + 2 * static_cast<int>(terms.size()));
    if (value > bound) return 1;
    if (value < -bound) return -1;
    return 2; // undecided
}

} // namespace

RadicalSum::RadicalSum(const Rat& rational) {
    if (rational != 0) terms_.emplace_back(rational, Int(1));
}

RadicalSum RadicalSum::sqrt_of(const Rat& radicand) {
    if (radicand < 0) throw Error(errc::invalid_argument, "sqrt of negative rational");
    RadicalSum r;
    if (radicand == 0) return r;
    const Int& n = boost::multiprecision::numerator(radicand);
    const Int& d = boost::multiprecision::denominator(radicand);
    auto [k, m] = reduce_radicand(n * d); // sqrt(n/d) = sqrt(n*d)/d
    r.terms_.emplace_back(Rat(k, d), m);
    return r;
}

std::vector<std::pair<Rat, Int>> RadicalSum::normalized(std::vector<std::pair<Rat, Int>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<Rat, Int>> out;
    for (auto& t : terms) {
        if (t.first == 0) continue;
        if (!out.empty() && out.back().second == t.second)
            out.back().first += t.first;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.first == 0; }),
              out.end());
    return out;
}

RadicalSum RadicalSum::operator+(const RadicalSum& o) const {
    RadicalSum r;
    auto merged = terms_;
    merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
    r.terms_ = normalized(std::move(merged));
    return r;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum r = *this;
    for (auto& t : r.terms_) t.first = -t.first;
    return r;
}

RadicalSum RadicalSum::operator-(const RadicalSum& o) const { return *this + (-o); }

int RadicalSum::sign_of_terms(std::vector<std::pair<Rat, Int>> terms, int depth) {
    terms = normalized(std::move(terms));
    if (terms.empty()) return 0;

    bool any_pos = false, any_neg = false;
    for (const auto& t : terms) (t.first > 0 ? any_pos : any_neg) = true;
    if (!any_neg) return 1;
    if (!any_pos) return -1;

    if (terms.size() == 2) {
        // c_p*sqrt(r_p) - c_n*sqrt(r_n) with c_p, c_n > 0
        const auto& a = terms[0];
        const auto& b = terms[1];
        const auto& pos = a.first > 0 ? a : b;
        const auto& neg = a.first > 0 ? b : a;
        Rat lhs = pos.first * pos.first * Rat(pos.second);
        Rat rhs = neg.first * neg.first * Rat(neg.second);
        if (lhs == rhs) return 0;
        return lhs > rhs ? 1 : -1;
    }

    if (depth > 0 && terms.size() <= kMaxTerms) {
        std::vector<std::pair<Rat, Int>> pos, neg;
        for (const auto& t : terms) {
            if (t.first > 0)
                pos.push_back(t);
            else
                neg.emplace_back(-t.first, t.second);
        }
        // sign(P - N) = sign(P^2 - N^2) because P, N > 0.
        auto square = [](const std::vector<std::pair<Rat, Int>>& v,
                         std::vector<std::pair<Rat, Int>>& out, int outer_sign) {
            for (size_t i = 0; i < v.size(); ++i) {
                out.emplace_back(outer_sign * v[i].first * v[i].first * Rat(v[i].second), Int(1));
                for (size_t j = i + 1; j < v.size(); ++j) {
                    Int g = boost::multiprecision::gcd(v[i].second, v[j].second);
                    Int rad = (v[i].second / g) * (v[j].second / g);
                    auto [k, m] = reduce_radicand(rad);
                    out.emplace_back(outer_sign * 2 * v[i].first * v[j].first * Rat(g * k), m);
                }
            }
        };
        std::vector<std::pair<Rat, Int>> diff;
        square(pos, diff, 1);
        square(neg, diff, -1);
        return sign_of_terms(std::move(diff), depth - 1);
    }

    // Certified interval fallback with precision escalation. Can resolve any
    // nonzero value; exact zeroes are always caught by the recursion above
    // for the radical counts this library produces.
    int s = interval_sign<F50>(terms);
    if (s == 2) s = interval_sign<F100>(terms);
    if (s == 2) s = interval_sign<F200>(terms);
    if (s == 2) s = interval_sign<F400>(terms);
    if (s == 2)
        throw Error(errc::invalid_argument,
                    "radical sign undecided at maximum precision (suspected exact zero)");
    return s;
}

int RadicalSum::sign() const { return sign_of_terms(terms_, kMaxDepth); }

bool RadicalSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].second == 1);
}

Rat RadicalSum::as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (terms_.size() == 1 && terms_[0].second == 1) return terms_[0].first;
    throw Error(errc::invalid_argument, "radical value is irrational: " + exact_string());
}

double RadicalSum::to_double() const {
    double v = 0;
    for (const auto& [coef, rad] : terms_)
        v += rat_double(coef) * std::sqrt(Rat(rad).convert_to<double>());
    return v;
}

std::string RadicalSum::decimal_string() const {
    F100 v = 0;
    for (const auto& [coef, rad] : terms_)
        v += static_cast<F100>(coef) * sqrt(static_cast<F100>(rad));
    std::ostringstream os;
    os.precision(32);
    os << v;
    return os.str();
}

std::string RadicalSum::exact_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [coef, rad] : terms_) {
        Rat c = coef;
        if (!first) {
            out += c > 0 ? " + " : " - ";
            if (c < 0) c = -c;
        }
        first = false;
        if (rad == 1) {
            out += rat_string(c);
        } else if (c == 1) {
            out += "sqrt(" + rad.str() + ")";
        } else if (c == -1) {
            out += "-sqrt(" + rad.str() + ")";
        } else {
            out += rat_string(c) + "*sqrt(" + rad.str() + ")";
        }
    }
    return out;
}

} // namespace mtw
