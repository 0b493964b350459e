#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace goldbach::detail {

/// Exact self-convolution of a 0/1 vector: out[s] = #{(i,j) : v[i]=v[j]=1, i+j=s}
/// for s < out_len. Uses radix-2 number-theoretic transforms modulo two
/// word-size primes, recombined by remaindering; exact as long as every
/// output value is below ~9.4e17, far above anything a 0/1 input of
/// supported length can produce.
///
/// Supported transform sizes go up to 2^26, i.e. v.size() <= ~3.3e7.
/// threads >= 2 runs the two modulus pipelines concurrently.
std::vector<uint64_t> convolve_square_01(const std::vector<uint8_t>& v, size_t out_len,
                                         unsigned threads);

} // namespace goldbach::detail
