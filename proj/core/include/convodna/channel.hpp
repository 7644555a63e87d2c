#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "convodna/convcode.hpp"
#include "convodna/decode.hpp"

namespace convodna {

// Deterministic 64-bit-seeded generator (SplitMix64). Chosen for trivial
// cross-language reproducibility; the name travels with every report.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    // Uniform in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

inline constexpr std::string_view kGeneratorName = "splitmix64";

// XOR mask over a received word, one n-bit group per tick.
struct ErrorPattern {
    std::vector<Group> mask;
    int group_bits = 0;
};

// Shorter mask is zero-extended; DataError if group widths differ.
ReceivedWord apply(const ErrorPattern& pattern, const ReceivedWord& w);

struct ChannelConfig {
    enum class Kind { bsc, burst_guard, explicit_mask };
    Kind kind = Kind::bsc;
    double p = 0.0;           // bsc crossover probability
    int burst_weight = 1;     // burst-guard: total errors per burst (<= e)
    int burst_len = 1;        //   ...within this many ticks,
    int guard_len = 0;        //   ...followed by this many clean ticks
    std::uint64_t seed = 0;
    ErrorPattern mask;        // explicit passthrough

    void validate() const;    // DomainError on out-of-range fields
};

ErrorPattern gen_pattern(const ChannelConfig& cfg, std::size_t ticks, int n);
// Same, drawing from a caller-owned engine (used per-trial by the harness).
ErrorPattern gen_pattern(const ChannelConfig& cfg, std::size_t ticks, int n, SplitMix64& rng);

enum class DecoderKind { exhaustive, viterbi };

struct ExperimentReport {
    std::uint64_t trials = 0;
    std::uint64_t correct = 0;  // exact match, no *
    std::uint64_t flagged = 0;  // * present, every non-* digit correct
    std::uint64_t wrong = 0;    // some non-* digit incorrect
    std::uint64_t seed = 0;
    std::string generator{kGeneratorName};
};

std::string to_json(const ExperimentReport& report);  // single line

// Encodes random messages (message_len digits plus register flush), pushes
// them through the configured channel, decodes, and classifies each trial.
// Trailing flush digits are never compared.
ExperimentReport run_experiment(const CodeSpec& code, DecoderKind decoder,
                                const ChannelConfig& cfg, std::uint64_t trials,
                                std::size_t message_len, int tau);

}  // namespace convodna
