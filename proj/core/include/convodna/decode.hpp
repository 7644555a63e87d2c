#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "convodna/convcode.hpp"

namespace convodna {

// Decoder output alphabet {0, 1, *}. The asterisk flags positions where the
// minimizing walks disagreed; it is never accepted as channel input.
enum class Trit : std::uint8_t { zero = 0, one = 1, star = 2 };

using TernaryWord = std::vector<Trit>;

std::string to_string(const TernaryWord& w);
bool has_star(const TernaryWord& w);
inline Trit trit_of(std::uint8_t bit) { return bit ? Trit::one : Trit::zero; }

// Received word in interleaved form: one n-bit group per tick.
struct ReceivedWord {
    std::vector<Group> ticks;
    int group_bits = 0;
};

// Accepts comma- and/or whitespace-separated n-bit groups: "11,10,00".
ReceivedWord parse_received(std::string_view text, int n);

// Saturating distance arithmetic; kInfDistance propagates through sums.
inline constexpr std::uint64_t kInfDistance = std::numeric_limits<std::uint64_t>::max();
inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a == kInfDistance || b == kInfDistance) ? kInfDistance : a + b;
}

struct DecodeOptions {
    // Tie handling for the general Viterbi walk update: merge all minimizing
    // walks with * at disagreements, or keep the first minimizer only.
    enum class TiePolicy { merge_star, first_min };
    TiePolicy tie = TiePolicy::merge_star;
};

// Windowed exhaustive decoding: per decision, all 2^(k*tau) walks of length
// tau from the current state are compared to the next tau ticks; if every
// minimizing walk starts with the same input word that word is emitted,
// otherwise * marks each disagreeing position and the decoder advances along
// the lexicographically smallest minimizer's first edge. Emits `digits`
// message digits; the received word is zero-extended as needed.
TernaryWord exhaustive_decode(const CodeSpec& code, const ReceivedWord& w, int tau,
                              std::size_t digits);

// Truncated Viterbi decoder for any supported (n, k, m) code. Keeps one walk
// of tau*k message digits plus a distance per state; processes one received
// group per step and, from step tau onwards, emits the oldest stored k-digit
// block (with * where the minimum-distance states disagree).
class ViterbiDecoder {
public:
    ViterbiDecoder(const CodeSpec& code, int tau, DecodeOptions opts = {});

    // Returns k decoded digits once ticks_processed() >= tau, else empty.
    TernaryWord step(Group received);

    int ticks_processed() const { return ticks_; }
    std::uint64_t distance(State s) const { return dist_[s]; }
    const TernaryWord& walk(State s) const { return walks_[s]; }
    const StateDiagram& diagram() const { return sd_; }
    int window() const { return tau_; }

private:
    StateDiagram sd_;
    int tau_;
    DecodeOptions opts_;
    int ticks_ = 0;
    std::vector<std::uint64_t> dist_;
    std::vector<TernaryWord> walks_;
};

// Algorithm-3.1-style decoder for k=1 codes, written independently of
// ViterbiDecoder as a literal two-predecessor transcription. The two must
// agree exactly for k=1.
TernaryWord viterbi_k1(const CodeSpec& code, const ReceivedWord& w, int tau, std::size_t digits);

// General decoder driven to completion: decodes `digits` message digits,
// zero-extending the received word to cover the window delay.
TernaryWord viterbi_general(const CodeSpec& code, const ReceivedWord& w, int tau,
                            std::size_t digits, DecodeOptions opts = {});

// e-ready predicate on a live decoder: every wrong state is at least
// min(1+e, w(correct, s')) behind, and every nearby state's stored walk is
// the correct state's walk with only the leading state digits swapped.
bool is_e_ready(const ViterbiDecoder& dec, State correct_state, int e);

}  // namespace convodna
