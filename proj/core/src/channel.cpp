#include "convodna/channel.hpp"

#include <algorithm>
#include <sstream>

#include "convodna/errors.hpp"

namespace convodna {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("next_below needs a positive bound");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t v;
    do {
        v = next();
    } while (v > limit);
    return v % bound;
}

ReceivedWord apply(const ErrorPattern& pattern, const ReceivedWord& w) {
    if (!pattern.mask.empty() && !w.ticks.empty() && pattern.group_bits != w.group_bits)
        throw DataError("error-pattern groups are " + std::to_string(pattern.group_bits) +
                        " bits wide, received word uses " + std::to_string(w.group_bits));
    ReceivedWord out = w;
    for (std::size_t i = 0; i < std::min(pattern.mask.size(), out.ticks.size()); ++i)
        out.ticks[i] ^= pattern.mask[i];
    return out;
}

void ChannelConfig::validate() const {
    if (p < 0.0 || p > 1.0) throw DomainError("crossover probability must lie in [0, 1]");
    if (burst_weight < 0 || burst_len < 1 || guard_len < 0)
        throw DomainError("burst-guard parameters out of range");
}

ErrorPattern gen_pattern(const ChannelConfig& cfg, std::size_t ticks, int n) {
    SplitMix64 rng(cfg.seed);
    return gen_pattern(cfg, ticks, n, rng);
}

ErrorPattern gen_pattern(const ChannelConfig& cfg, std::size_t ticks, int n, SplitMix64& rng) {
    cfg.validate();
    ErrorPattern out;
    out.group_bits = n;
    out.mask.assign(ticks, 0);
    switch (cfg.kind) {
        case ChannelConfig::Kind::bsc:
            for (std::size_t t = 0; t < ticks; ++t)
                for (int b = 0; b < n; ++b)
                    if (rng.next_double() < cfg.p) out.mask[t] |= 1u << b;
            break;
        case ChannelConfig::Kind::burst_guard: {
            const std::size_t cycle = static_cast<std::size_t>(cfg.burst_len + cfg.guard_len);
            const std::size_t burst_bits = static_cast<std::size_t>(cfg.burst_len) *
                                           static_cast<std::size_t>(n);
            const std::size_t weight =
                std::min<std::size_t>(static_cast<std::size_t>(cfg.burst_weight), burst_bits);
            for (std::size_t start = 0; start < ticks; start += cycle) {
                // Place `weight` distinct bit errors inside the burst window.
                std::vector<std::size_t> positions(burst_bits);
                for (std::size_t i = 0; i < burst_bits; ++i) positions[i] = i;
                for (std::size_t placed = 0; placed < weight; ++placed) {
                    std::size_t pick = placed + rng.next_below(burst_bits - placed);
                    std::swap(positions[placed], positions[pick]);
                    std::size_t tick = start + positions[placed] / static_cast<std::size_t>(n);
                    if (tick < ticks)
                        out.mask[tick] |= 1u << (positions[placed] % static_cast<std::size_t>(n));
                }
            }
            break;
        }
        case ChannelConfig::Kind::explicit_mask:
            if (!cfg.mask.mask.empty() && cfg.mask.group_bits != n)
                throw DataError("explicit mask group width mismatch");
            for (std::size_t t = 0; t < std::min(ticks, cfg.mask.mask.size()); ++t)
                out.mask[t] = cfg.mask.mask[t];
            break;
    }
    return out;
}

std::string to_json(const ExperimentReport& r) {
    std::ostringstream os;
    os << "{\"trials\":" << r.trials << ",\"correct\":" << r.correct
       << ",\"flagged\":" << r.flagged << ",\"wrong\":" << r.wrong << ",\"seed\":" << r.seed
       << ",\"generator\":\"" << r.generator << "\"}";
    return os.str();
}

ExperimentReport run_experiment(const CodeSpec& code, DecoderKind decoder,
                                const ChannelConfig& cfg, std::uint64_t trials,
                                std::size_t message_len, int tau) {
    cfg.validate();
    if (message_len == 0) throw DomainError("message length must be positive");
    ExperimentReport report;
    report.trials = trials;
    report.seed = cfg.seed;

    const std::size_t k = static_cast<std::size_t>(code.k);
    const std::size_t blocks = (message_len + k - 1) / k;
    const std::size_t ticks = blocks + static_cast<std::size_t>(code.m);

    // Trial seeds drawn up front so trials stay order-independent.
    std::vector<std::uint64_t> seeds(trials);
    SplitMix64 master(cfg.seed);
    for (auto& s : seeds) s = master.next();

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seeds[trial]);
        BitSeq message(message_len);
        for (auto& b : message) b = static_cast<std::uint8_t>(rng.next() & 1u);

        auto groups = encode_register(code, message, ticks);
        ReceivedWord sent{groups, code.n};
        ReceivedWord received = apply(gen_pattern(cfg, ticks, code.n, rng), sent);

        TernaryWord decoded;
        switch (decoder) {
            case DecoderKind::exhaustive:
                decoded = exhaustive_decode(code, received, tau, message_len);
                break;
            case DecoderKind::viterbi:
                decoded = viterbi_general(code, received, tau, message_len);
                break;
        }

        bool any_star = false, any_wrong = false;
        for (std::size_t i = 0; i < message_len; ++i) {
            if (decoded[i] == Trit::star)
                any_star = true;
            else if (decoded[i] != trit_of(message[i]))
                any_wrong = true;
        }
        if (any_wrong)
            ++report.wrong;
        else if (any_star)
            ++report.flagged;
        else
            ++report.correct;
    }
    return report;
}

}  // namespace convodna
