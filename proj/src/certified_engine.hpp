#pragma once

#include <barning/bigint.hpp>
#include <barning/precision.hpp>
#include <barning/types.hpp>

#include <cstdint>
#include <vector>

namespace barning::detail {

struct DigitRun {
    Digit digit;
    std::uint64_t count;
};

// Longest run emitted by a single step; longer runs continue in the next step.
inline constexpr std::uint64_t max_run_per_step = std::uint64_t{1} << 40;

// Exact rational enclosure [lo, hi] = [plo/qlo, phi/qhi] of a point, pushed
// forward by the interval map while both ends agree on the branch.
//
// Runs of 1s and 3s are collapsed with one division each. Work is batched
// Lehmer-style: the leading ~62 bits of the four integers are stepped in
// 128-bit arithmetic (on an outward-rounded enclosure, so every digit is
// still certified), and the accumulated 2x2 matrix is applied to the full
// integers once per batch.
class CertifiedEngine {
  public:
    explicit CertifiedEngine(const DyadicInterval &enclosure);

    // Appends at least one certified run and returns true, or returns false
    // when the exact enclosure straddles 1/3 or 1/2.
    bool advance(std::vector<DigitRun> &out);

    Rat lo() const { return Rat(plo_, qlo_); }
    Rat hi() const { return Rat(phi_, qhi_); }

  private:
    bool exact_step(std::vector<DigitRun> &out);
    bool batch(std::vector<DigitRun> &out);

    BigInt plo_, qlo_, phi_, qhi_;
};

} // namespace barning::detail
