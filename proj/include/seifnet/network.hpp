/**
 * @file network.hpp
 * @brief Finite subgraphs of the Seifert surgery network generated from seed
 * vertices by twisting along registered seiferters, with DOT and canonical
 * JSON export.
 */
#pragma once

#include "seifnet/classify.hpp"

namespace seifnet {

struct NetworkVertex {
    std::string knot; // canonical label
    Int slope = 0;
    std::optional<OrbifoldTriple> orbifold;
    SfsClass cls;
    std::vector<std::string> provenance;    // twist words from seeds, sorted
    std::vector<std::string> annular_pairs; // pair families at trefoil vertices
    bool frontier = false;                  // at truncation distance
    bool identity_known = true;             // false for unresolved twist descriptors

    [[nodiscard]] std::string label() const {
        return knot + "(" + to_string(slope) + ")";
    }
};

/// Edge oriented along the +1 twist: `to` is `from` twisted once along the
/// seiferter, so the slopes differ by exactly lk^2.
struct NetworkEdge {
    std::size_t from = 0, to = 0;
    std::string seiferter;
    int sign = +1;
};

struct NetworkGraph {
    std::vector<NetworkVertex> vertices; // sorted by (knot, slope)
    std::vector<NetworkEdge> edges;      // sorted by (from, to, seiferter)
    std::vector<std::string> warnings;

    [[nodiscard]] std::optional<std::size_t> find(const std::string& knot, Int slope) const;
    [[nodiscard]] bool contains(const SurgeryVertex& v) const;
};

/// Breadth-first closure of the seeds under single ±1 twists along the
/// registered seiferters, up to `radius` twists. A seiferter acts at its
/// ambient torus-knot vertices and stays live along its own twist line;
/// vertices are deduplicated by canonical knot name + slope, keeping every
/// shortest twist word. Seiferters that never find a valid vertex are
/// skipped with a recorded warning.
NetworkGraph build(const std::vector<SurgeryVertex>& seeds,
                   const std::vector<SeiferterDesc>& seiferters, Int radius);

/// Neighborhood of the trefoil line: seeds (T,-1) and (T,-6) with the
/// meridian, c^-1, c^-6 and c registered. Radius 2 already reaches the
/// trivial knot, the figure-eight knot, P(-2,3,7) and P(3,-3,-3).
NetworkGraph preset_trefoil_neighborhood(Int radius);

/// The three slanted lines through (T,m), (T,m-1), (T,m-2) generated by c^m,
/// c^{m+1}, c^{m+2}, together with the horizontal meridian line.
NetworkGraph preset_cm_lines(Int m, Int radius);

/// Deterministic graphviz text; byte-reproducible for equal graphs.
std::string export_dot(const NetworkGraph& g);

/// Canonical JSON (sorted keys, exact integers); load_json(export_json(g))
/// re-exports byte-identically.
std::string export_json(const NetworkGraph& g);

NetworkGraph load_json(const std::string& text);

} // namespace seifnet
