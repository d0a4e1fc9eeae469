#ifndef INTERDEP_HOMOGENEOUS_HPP
#define INTERDEP_HOMOGENEOUS_HPP

#include "interdep/model.hpp"

#include <optional>

namespace interdep {

struct HomogeneousParams {
    double theta = 0.0;
    double penalty = 0.0;
    double xi = 0.0;
};

// The common (theta, L, xi) triple, or nullopt. Networks without arcs have no
// defined xi and are treated as not quasi-homogeneous.
std::optional<HomogeneousParams> is_quasi_homogeneous(const SecurityNetwork& net);

// Largest k such that the node survives iterative in-degree-k peeling.
std::vector<int> core_numbers(const SecurityNetwork& net);

// Maximal induced subgraph with all in-degrees >= k, or nullopt when empty.
std::optional<Coalition> has_k_core(const SecurityNetwork& net, int k);

// Exact search for an induced H whose internal in-degrees are all at least
// l(H) + q, where l(H) is the maximum out-degree from H to its complement
// (and l(H) + q > l(H) as the core definition requires). Guard n <= 20.
std::optional<Coalition> find_kl_core(const SecurityNetwork& net, int q);

// Peeling-based heuristic usable beyond the guard: a found core is genuine,
// a miss proves nothing.
std::optional<Coalition> find_kl_core_heuristic(const SecurityNetwork& net, int q);

enum class ExistencePrediction { Exists, NotExists, Indeterminate };
const char* to_string(ExistencePrediction p);

// Structural predictor for agreeable-allocation existence on quasi-homogeneous
// networks: no ceil((L-theta)/xi)-core guarantees existence; a (k,l)-core with
// (k-l) xi strictly above L-theta rules it out; otherwise indeterminate.
ExistencePrediction predict_agreeable_existence(const SecurityNetwork& net);

} // namespace interdep

#endif
