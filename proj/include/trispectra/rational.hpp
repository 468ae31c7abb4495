#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace trispectra {

/// Exact rational arithmetic for the closed forms; expression templates are
/// off so that generic code sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

}  // namespace trispectra
