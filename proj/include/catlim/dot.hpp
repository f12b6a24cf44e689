#pragma once

#include <string>

#include "catlim/hocolim.hpp"

namespace catlim {

/// Graphviz rendering of the underlying graph; identity loops are omitted.
std::string dot_category(const FinCat& c);

/// Same, with the projection fibers grouped into clusters per index object.
std::string dot_hocolim(const Hocolim& g);

}  // namespace catlim
