#pragma once

#include <cstdint>

#include "cmv/model.hpp"

namespace cmv {

// Random kind-closed graph: up to 8 entities named e1.., up to 20 links, up
// to 5 attributes. Arguments prefer entities whose kinds fit the predicate,
// with a deliberate share of ill-typed draws. Same seed, same graph.
ModelGraph gen_random(uint64_t seed, const TaxonomyCatalog& cat);

// Random graph with an exact entity count and a distinct-link target (best
// effort within a bounded number of draws).
ModelGraph gen_sized(uint64_t seed, size_t entities, size_t links,
                     const TaxonomyCatalog& cat);

}  // namespace cmv
