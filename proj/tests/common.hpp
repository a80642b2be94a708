#pragma once

#include "ozonelab/ncalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace testutil {

inline ozonelab::nc::AlgebraPresentation presentation(const std::vector<std::string>& names,
                                                      const std::vector<std::string>& rels) {
    ozonelab::nc::AlgebraPresentation p;
    for (const auto& n : names) p.generators.push_back({n, 1});
    for (const auto& r : rels) p.relations.push_back(ozonelab::nc::parse_element(r, p.generators));
    return p;
}

/// k_q[x,y] with y x = q x y.
inline ozonelab::nc::AlgebraPresentation quantum_plane(const std::string& q) {
    return presentation({"x", "y"}, {"y*x - (" + q + ")*x*y"});
}

}  // namespace testutil
