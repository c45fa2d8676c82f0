#ifndef BICRIT_REAL_HPP
#define BICRIT_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace bicrit {

// Dynamic-precision real. Precision is tracked per thread; every worker
// thread must call set_precision_bits() before touching Real values.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
}

inline void set_precision_bits(unsigned bits) {
    Real::default_precision(bits_to_digits10(bits));
}

inline unsigned current_precision_bits() {
    return static_cast<unsigned>(std::floor((Real::default_precision() - 1) / 0.3010299956639812));
}

// RAII precision override, restores the previous thread precision on exit.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(unsigned bits) : saved_(Real::default_precision()) {
        set_precision_bits(bits);
    }
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

template <class T>
struct Num;  // numeric constants per scalar type

template <>
struct Num<double> {
    static double pi() { return 3.141592653589793238462643383279502884; }
    static double from(const Real& x) { return x.convert_to<double>(); }
    static double eps() { return 1e-15; }
};

template <>
struct Num<Real> {
    // pi at the active thread precision, cached until the precision changes
    static const Real& pi() {
        thread_local unsigned cached_digits = 0;
        thread_local Real value;
        unsigned digits = Real::default_precision();
        if (digits != cached_digits) {
            value = acos(Real(-1));
            cached_digits = digits;
        }
        return value;
    }
    static Real from(const Real& x) { return x; }
    static Real eps() {
        Real e = 1;
        return ldexp(e, -static_cast<int>(current_precision_bits()) + 4);
    }
};

inline double to_double(const Real& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

// Deterministic decimal rendering at the active precision.
std::string format_real(const Real& x);
std::string format_real(double x);

}  // namespace bicrit

#endif
