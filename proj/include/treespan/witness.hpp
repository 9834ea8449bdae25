#ifndef TREESPAN_WITNESS_HPP
#define TREESPAN_WITNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// Two equal-length walks (surjective weak homomorphisms from a discrete
/// time range into the host graph).
struct WalkPair {
    std::vector<int> a;
    std::vector<int> b;
    int claimed_span = 0;
};

/// Serialization to/from {"claimed_span": int, "A": [...], "B": [...]}.
std::string walk_pair_to_json(const WalkPair& w);
WalkPair walk_pair_from_json(const std::string& text);

struct VerifyReport {
    bool valid_a = false;       // consecutive entries equal or adjacent
    bool valid_b = false;
    bool surjective_a = false;
    bool surjective_b = false;
    std::optional<int> min_distance;  // set only when both walks are valid
    std::optional<std::pair<int, std::string>> first_violation;  // (time step, reason)
    bool pass = false;  // valid, doubly surjective, min_distance >= claimed

    std::string to_json() const;
};

/// Switch of walk B with walk A at the pivot v (times 0-based; component
/// ids index the sorted ComponentSet of the pivot).
struct SwitchCertificate {
    int v = -1;
    int i = -1, j = -1;
    int alpha = -1, beta = -1, gamma = -1;
};

/// Constructs an optimal walk pair realizing the strong vertex span.
WalkPair build_witness(const Tree& t);

/// Checks both weak-homomorphism conditions, both surjectivities, and the
/// pointwise minimum distance against the claimed span.
VerifyReport verify_walk_pair(const Graph& g, const WalkPair& w, int claimed);

/// True iff every tree edge appears as a consecutive pair of the walk.
bool edge_coverage(const Tree& t, const std::vector<int>& walk);

/// First certificate (smallest j, then maximal i below j) of B switching
/// with A at v, or nullopt. Swap the walks for the symmetric test.
std::optional<SwitchCertificate> detect_switch(const Tree& t, const WalkPair& w, int v);

}  // namespace treespan

#endif
