#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fahp {

/// Triangular fuzzy number (l, m, u) with 0 < l <= m <= u.
///
/// Used as a fuzzy estimate of a weight ratio. The crisp case l = m = u is
/// allowed.
class TriangularFuzzyNumber {
public:
    TriangularFuzzyNumber(double lower, double mode, double upper);

    double lower() const { return l_; }
    double mode() const { return m_; }
    double upper() const { return u_; }

    bool is_crisp() const { return l_ == m_ && m_ == u_; }

    friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

private:
    double l_;
    double m_;
    double u_;
};

using Tfn = TriangularFuzzyNumber;

/// Ordered list of linguistic terms and their fuzzy values. Terms are unique
/// and modes strictly increase along the list.
class LinguisticScale {
public:
    using Entry = std::pair<std::string, TriangularFuzzyNumber>;

    explicit LinguisticScale(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

/// very low (1,2,3), low (2,3,4), medium (3,4,5), high (4,5,6), very high (5,6,7).
const LinguisticScale& default_scale();

/// Throws LookupError naming the term and the valid ones.
TriangularFuzzyNumber scale_lookup(std::string_view term, const LinguisticScale& scale = default_scale());

/// Linear membership of a crisp ratio in a fuzzy judgment.
///
/// Rising branch (ratio - l) / (m - l) below the mode and falling branch
/// (u - ratio) / (u - m) above it. Both branches continue linearly outside
/// [l, u], so the result goes negative for ratios outside the support. A zero
/// width branch yields -infinity off the mode; the mode itself is always 1.
double membership(const TriangularFuzzyNumber& j, double ratio);

/// (1/u, 1/m, 1/l)
TriangularFuzzyNumber reciprocal(const TriangularFuzzyNumber& j);

enum class AggregationMethod { Geometric, Arithmetic };

/// Componentwise mean of several expert judgments for the same pair.
TriangularFuzzyNumber aggregate_judgments(std::span<const TriangularFuzzyNumber> js,
                                          AggregationMethod method = AggregationMethod::Geometric);

} // namespace fahp
