#include "znorm/sample.hpp"

#include <cmath>
#include <utility>

namespace znorm {

Sample::Sample(std::vector<double> values) {
    if (values.empty()) {
        throw EmptySample();
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw NonFiniteInput("non-finite value at position " + std::to_string(i));
        }
    }
    values_ = std::move(values);
}

Sample Sample::trusted(std::vector<double> values) {
    Sample s;
    s.values_ = std::move(values);
    return s;
}

}  // namespace znorm
