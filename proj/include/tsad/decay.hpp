#ifndef TSAD_DECAY_HPP
#define TSAD_DECAY_HPP

#include <cstddef>
#include <vector>

namespace tsad {

// Weight applied to a detection as a function of its offset from the start
// of an anomaly segment. Always 1 at offset 0 and nonincreasing after that,
// so a detection never gains credit by arriving later.
class DecaySpec {
public:
    /// d^offset with d in (0, 1]. d = 1 disables decay.
    static DecaySpec exponential(double rate);

    /// Explicit weight table. table[0] must be 1, entries nonincreasing and
    /// in (0, 1]. Offsets past the end clamp to the last entry.
    static DecaySpec table(std::vector<double> weights);

    double at(std::size_t offset) const;

    bool exponential_mode() const { return table_.empty(); }
    double rate() const { return rate_; }

private:
    DecaySpec(double rate, std::vector<double> weights);

    double rate_ = 1.0;
    std::vector<double> table_;
};

}  // namespace tsad

#endif
