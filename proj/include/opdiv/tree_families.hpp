#ifndef OPDIV_TREE_FAMILIES_HPP_
#define OPDIV_TREE_FAMILIES_HPP_

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "opdiv/graph.hpp"

namespace opdiv {

// Uniform labelled tree on n >= 2 nodes via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937_64& rng);

// Isomorphism-invariant string for a tree (AHU encoding rooted at the centre).
std::string canonical_tree_code(const Graph& tree);

// Calls visit once per unlabelled tree on n nodes (one representative per
// isomorphism class). Representatives are deterministic.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);

std::vector<Node> leaves(const Graph& g);

} // namespace opdiv

#endif // OPDIV_TREE_FAMILIES_HPP_
