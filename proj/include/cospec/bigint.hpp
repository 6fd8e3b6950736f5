#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cospec {

// Every spectral quantity in this library is exact; floating point is never
// used for cospectrality decisions.
using Int = boost::multiprecision::cpp_int;

}  // namespace cospec
