#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace texdesc {

// Ordered list of real-valued features plus the tag of the descriptor
// configuration that produced it.
struct FeatureVector {
    std::vector<double> values;
    std::string descriptor;

    std::size_t dim() const { return values.size(); }
};

}  // namespace texdesc
