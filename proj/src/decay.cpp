#include "tsad/decay.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tsad {

DecaySpec::DecaySpec(double rate, std::vector<double> weights)
    : rate_(rate), table_(std::move(weights)) {}

DecaySpec DecaySpec::exponential(double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) {  // NaN fails both comparisons
        throw std::invalid_argument("decay rate must be in (0, 1]");
    }
    return DecaySpec(rate, {});
}

DecaySpec DecaySpec::table(std::vector<double> weights) {
    if (weights.empty()) {
        throw std::invalid_argument("decay table must not be empty");
    }
    if (weights.front() != 1.0) {
        throw std::invalid_argument("decay table must start at 1");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] > 0.0 && weights[i] <= 1.0)) {
            throw std::invalid_argument("decay table entry " + std::to_string(i) +
                                        " is outside (0, 1]");
        }
        if (i > 0 && weights[i] > weights[i - 1]) {
            throw std::invalid_argument("decay table must be nonincreasing (entry " +
                                        std::to_string(i) + " increases)");
        }
    }
    return DecaySpec(1.0, std::move(weights));
}

double DecaySpec::at(std::size_t offset) const {
    if (!table_.empty()) {
        // Offsets beyond the table keep the final weight.
        return offset < table_.size() ? table_[offset] : table_.back();
    }
    if (offset == 0) {
        return 1.0;
    }
    return std::pow(rate_, static_cast<double>(offset));
}

}  // namespace tsad
