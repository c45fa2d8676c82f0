#ifndef BICRIT_PARAM_HPP
#define BICRIT_PARAM_HPP

#include <optional>
#include <string>

#include "bicrit/real.hpp"
#include "bicrit/surd.hpp"

namespace bicrit {

enum class ParamSource { Decimal, SurdExact, Expansion };

// One real parameter (alpha or beta) with its provenance. The surd form
// keeps arithmetic exact through the Gauss steps; the decimal form carries
// a trusted-bits budget that shrinks as the expansion descends.
struct RealParam {
    ParamSource source = ParamSource::Decimal;
    Real value{0};
    std::optional<Surd> surd;
    unsigned precision_bits = 256;

    static RealParam from_decimal(const std::string& text, unsigned bits);
    static RealParam from_double(double x, unsigned bits);
    static RealParam from_surd(const Surd& s, unsigned bits);

    bool exact() const { return source == ParamSource::SurdExact; }
};

}  // namespace bicrit

#endif
