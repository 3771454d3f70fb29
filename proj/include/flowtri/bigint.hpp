#ifndef FLOWTRI_BIGINT_HPP
#define FLOWTRI_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace flowtri {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace flowtri

#endif  // FLOWTRI_BIGINT_HPP
