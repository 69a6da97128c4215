#pragma once

#include <atomic>
#include <cstddef>

namespace powerstab {

/// Process-wide resource guards. Exceeding any of them raises ResourceLimit.
struct Limits {
    std::atomic<std::size_t> max_total_degree{512};
    std::atomic<std::size_t> max_generators{512};
    std::atomic<std::size_t> max_terms{200000};
    std::atomic<std::size_t> max_basis_size{20000};
    /// Cap on the number of elements of an enumerated finite ring.
    std::atomic<std::size_t> max_ring_size{65536};
    /// Cap on the ring size accepted by the ideal-pair search.
    std::atomic<std::size_t> max_search_ring_size{4096};
};

Limits& limits();

}  // namespace powerstab
