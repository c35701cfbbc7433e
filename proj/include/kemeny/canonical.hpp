#pragma once

#include "kemeny/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace kemeny {

/// Centroid vertices of t (one or two, ascending).
std::vector<Vertex> tree_centroids(const Tree& t);

/// Isomorphism-invariant byte string for t: the AHU parenthesis encoding
/// rooted at the centroid, taking the lexicographically smaller encoding when
/// there are two centroids. Equal strings iff the trees are isomorphic.
std::string canonical_form(const Tree& t);

/// Same, for a tree whose vertices in `marked` carry a distinguishing label
/// ('*' inside the vertex's parentheses). Equal strings iff there is an
/// isomorphism mapping marked vertices onto marked vertices.
std::string canonical_form(const Tree& t, std::span<const Vertex> marked);

/// AHU encoding of t rooted at `root`, with optional marks.
std::string rooted_encoding(const Tree& t, Vertex root, std::span<const Vertex> marked = {});

}  // namespace kemeny
