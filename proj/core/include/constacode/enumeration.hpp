#ifndef CONSTACODE_ENUMERATION_HPP
#define CONSTACODE_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "constacode/matrix.hpp"

namespace constacode {

/// Sweeps all q^rank codewords spanned by the matrix rows and returns the
/// weight counts A_0..A_n.  Messages run in reflected mixed-radix Gray order,
/// so each step updates the running codeword by one scaled-row addition.
/// Work is split across threads by message prefix.  q = 2 and q = 4 use a
/// packed bit-plane representation (addition is XOR in characteristic 2).
///
/// Throws TooLargeToEnumerate when q^rank > cap.
std::vector<std::uint64_t> enumerate_weights(const GeneratorMatrix& G, std::int64_t cap, int threads = 0);

/// q^k as long as it stays below 2^62; -1 otherwise.
std::int64_t enumerable_size(std::int64_t q, std::int64_t k);

}  // namespace constacode

#endif
