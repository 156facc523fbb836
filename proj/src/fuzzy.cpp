#include "fuzzyahp/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "fuzzyahp/error.hpp"

namespace fahp {

TriangularFuzzyNumber::TriangularFuzzyNumber(double lower, double mode, double upper)
    : l_(lower), m_(mode), u_(upper) {
    if (!(std::isfinite(l_) && std::isfinite(m_) && std::isfinite(u_)) || !(0.0 < l_ && l_ <= m_ && m_ <= u_)) {
        std::ostringstream msg;
        msg << "invalid triangular fuzzy number (" << l_ << ", " << m_ << ", " << u_
            << "): require 0 < l <= m <= u";
        throw ArgumentError(msg.str());
    }
}

LinguisticScale::LinguisticScale(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ArgumentError("linguistic scale is empty");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!seen.insert(entries_[i].first).second)
            throw ArgumentError("duplicate linguistic term '" + entries_[i].first + "'");
        if (i > 0 && !(entries_[i - 1].second.mode() < entries_[i].second.mode()))
            throw ArgumentError("linguistic scale modes must strictly increase at term '" + entries_[i].first + "'");
    }
}

const LinguisticScale& default_scale() {
    static const LinguisticScale scale({
        {"very low", {1, 2, 3}},
        {"low", {2, 3, 4}},
        {"medium", {3, 4, 5}},
        {"high", {4, 5, 6}},
        {"very high", {5, 6, 7}},
    });
    return scale;
}

TriangularFuzzyNumber scale_lookup(std::string_view term, const LinguisticScale& scale) {
    for (const auto& [name, value] : scale.entries())
        if (name == term) return value;

    std::ostringstream msg;
    msg << "unknown linguistic term '" << term << "'; valid terms:";
    const char* sep = " ";
    for (const auto& entry : scale.entries()) {
        msg << sep << "'" << entry.first << "'";
        sep = ", ";
    }
    throw LookupError(msg.str());
}

double membership(const TriangularFuzzyNumber& j, double ratio) {
    if (!(ratio > 0.0) || !std::isfinite(ratio)) {
        std::ostringstream msg;
        msg << "membership ratio must be positive and finite, got " << ratio;
        throw DomainError(msg.str());
    }
    const double l = j.lower(), m = j.mode(), u = j.upper();
    if (ratio == m) return 1.0;
    if (ratio < m) {
        if (m == l) return -std::numeric_limits<double>::infinity();
        return (ratio - l) / (m - l);
    }
    if (u == m) return -std::numeric_limits<double>::infinity();
    return (u - ratio) / (u - m);
}

TriangularFuzzyNumber reciprocal(const TriangularFuzzyNumber& j) {
    return {1.0 / j.upper(), 1.0 / j.mode(), 1.0 / j.lower()};
}

TriangularFuzzyNumber aggregate_judgments(std::span<const TriangularFuzzyNumber> js, AggregationMethod method) {
    if (js.empty()) throw ArgumentError("cannot aggregate an empty list of judgments");
    const double k = static_cast<double>(js.size());
    double l = 0, m = 0, u = 0;
    if (method == AggregationMethod::Geometric) {
        // log-domain mean avoids overflow for large panels
        for (const auto& j : js) {
            l += std::log(j.lower());
            m += std::log(j.mode());
            u += std::log(j.upper());
        }
        l = std::exp(l / k);
        m = std::exp(m / k);
        u = std::exp(u / k);
    } else {
        for (const auto& j : js) {
            l += j.lower();
            m += j.mode();
            u += j.upper();
        }
        l /= k;
        m /= k;
        u /= k;
    }
    // Rounding can break l <= m <= u by an ulp when all inputs share a component.
    m = std::max(m, l);
    u = std::max(u, m);
    return {l, m, u};
}

} // namespace fahp
