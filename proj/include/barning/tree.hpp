#pragma once

#include <barning/codec.hpp>
#include <barning/types.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace barning {

enum class RootSelection { OE, EO, Both };

// A node of the tree together with its path from the root.
struct TreeCursor {
    Triple triple;
    Expansion path; // digits from the root plus the root's terminal
};

// Depth-first enumeration of PPT_N = { PPT with c <= N }.
//
// Order: the OE tree before the EO tree, and within a tree the preorder with
// children visited as 1, 2, 3. Children with c > N
// are pruned, which is exact because c strictly increases along edges.
class TreeEnumerator {
  public:
    TreeEnumerator(BigInt max_c, RootSelection roots);

    std::optional<TreeCursor> next();

  private:
    struct Frame {
        Triple triple;
        DigitWord path;
        Digit root;
    };

    BigInt max_c_;
    std::vector<Frame> stack_;
};

// Calls `visit` for every PPT with c <= N, in the TreeEnumerator order.
void enumerate_by_c(const BigInt &max_c, RootSelection roots, const std::function<void(const TreeCursor &)> &visit);

// |PPT_N| restricted to the selected roots.
std::uint64_t count_by_c(const BigInt &max_c, RootSelection roots);

// i.i.d. uniform draws from PPT_N using the (m,n) parametrization with
// rejection plus a fair orientation bit. Same seed, same sample.
std::vector<Triple> uniform_sample(std::uint64_t max_c, std::size_t count, std::uint64_t seed);

} // namespace barning
