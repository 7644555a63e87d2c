#include "convodna/decode.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

#include "convodna/analysis.hpp"
#include "convodna/errors.hpp"

namespace convodna {

std::string to_string(const TernaryWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Trit t : w) s.push_back(t == Trit::star ? '*' : (t == Trit::one ? '1' : '0'));
    return s;
}

bool has_star(const TernaryWord& w) {
    return std::find(w.begin(), w.end(), Trit::star) != w.end();
}

ReceivedWord parse_received(std::string_view text, int n) {
    ReceivedWord w;
    w.group_bits = n;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            w.ticks.push_back(group_from_string(token, n));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return w;
}

namespace {

std::vector<Group> extend_ticks(const ReceivedWord& w, int n, std::size_t len) {
    if (!w.ticks.empty() && w.group_bits != n)
        throw DataError("received word has " + std::to_string(w.group_bits) +
                        "-bit groups; code outputs " + std::to_string(n) + " bits per tick");
    std::vector<Group> ext(w.ticks.begin(), w.ticks.end());
    if (ext.size() < len) ext.resize(len, 0);
    return ext;
}

// Input words of k digits ordered by their digit strings (digit 1 = bit 0),
// so enumeration visits walks in lexicographic message order.
std::vector<std::uint32_t> digit_lex_words(int k) {
    std::vector<std::uint32_t> words(std::size_t{1} << k);
    std::iota(words.begin(), words.end(), 0u);
    std::sort(words.begin(), words.end(), [k](std::uint32_t a, std::uint32_t b) {
        for (int i = 0; i < k; ++i) {
            auto da = (a >> i) & 1u, db = (b >> i) & 1u;
            if (da != db) return da < db;
        }
        return false;
    });
    return words;
}

void append_word_digits(TernaryWord& out, std::uint32_t word, int k, std::uint32_t star_mask) {
    for (int i = 0; i < k; ++i)
        out.push_back((star_mask >> i) & 1u ? Trit::star
                                            : trit_of(static_cast<std::uint8_t>((word >> i) & 1u)));
}

}  // namespace

TernaryWord exhaustive_decode(const CodeSpec& code, const ReceivedWord& w, int tau,
                              std::size_t digits) {
    if (tau < 1) throw DomainError("window size must be positive");
    if (tau * code.k > 24)
        throw DomainError("exhaustive decoding would enumerate 2^" +
                          std::to_string(tau * code.k) + " walks; refusing above 2^24");
    StateDiagram sd(code);
    const int k = code.k;
    const std::size_t decisions = (digits + static_cast<std::size_t>(k) - 1) / k;
    auto ticks = extend_ticks(w, code.n, decisions + static_cast<std::size_t>(tau) - 1);
    const auto word_order = digit_lex_words(k);

    TernaryWord out;
    out.reserve(decisions * static_cast<std::size_t>(k));
    State current = 0;

    for (std::size_t dec = 0; dec < decisions; ++dec) {
        std::uint64_t best = kInfDistance;
        std::uint32_t lex_first_word = 0;  // first word of the lex-smallest minimizing walk
        std::uint32_t disagree = 0;        // digit positions where minimizers' first words differ

        // Depth-first over all 2^(k*tau) walks in lexicographic order, pruning
        // branches that already exceed the current minimum.
        auto search = [&](auto&& self, int depth, State s, std::uint64_t d, std::uint32_t first) -> void {
            if (d > best) return;
            if (depth == tau) {
                if (d < best) {
                    best = d;
                    lex_first_word = first;
                    disagree = 0;
                } else {
                    disagree |= first ^ lex_first_word;
                }
                return;
            }
            for (std::uint32_t u : word_order) {
                Group diff = sd.output(s, u) ^ ticks[dec + static_cast<std::size_t>(depth)];
                self(self, depth + 1, sd.target(s, u),
                     d + static_cast<std::uint64_t>(std::popcount(diff)),
                     depth == 0 ? u : first);
            }
        };
        search(search, 0, current, 0, 0);

        append_word_digits(out, lex_first_word, k, disagree);
        current = sd.target(current, lex_first_word);
    }
    out.resize(digits);
    return out;
}

// ---------------------------------------------------------------------------
// General truncated Viterbi decoder (arbitrary k within the Def 3.2 range).

ViterbiDecoder::ViterbiDecoder(const CodeSpec& code, int tau, DecodeOptions opts)
    : sd_(code), tau_(tau), opts_(opts) {
    if (tau < std::max(code.m, 1))
        throw DomainError("window size " + std::to_string(tau) + " is below m=" +
                          std::to_string(code.m));
    const std::size_t walk_len = static_cast<std::size_t>(tau_) * sd_.input_bits();
    dist_.assign(sd_.state_count(), kInfDistance);
    dist_[0] = 0;
    walks_.assign(sd_.state_count(), TernaryWord(walk_len, Trit::star));
    for (State s = 0; s < sd_.state_count(); ++s)
        for (int i = 0; i < sd_.state_bits(); ++i)
            walks_[s][static_cast<std::size_t>(i)] =
                trit_of(static_cast<std::uint8_t>((s >> i) & 1u));
}

TernaryWord ViterbiDecoder::step(Group received) {
    ++ticks_;
    const int k = sd_.input_bits();
    const int state_len = sd_.state_bits();
    const std::uint32_t kmask = (1u << k) - 1;
    const std::size_t walk_len = walks_[0].size();

    std::vector<std::uint64_t> ndist(sd_.state_count());
    std::vector<TernaryWord> nwalks(sd_.state_count());

    for (State s = 0; s < sd_.state_count(); ++s) {
        const std::uint32_t entering = s & kmask;  // input word on every edge into s
        std::uint64_t best = kInfDistance;
        std::vector<State> min_preds;
        for (std::uint32_t u = 0; u <= kmask; ++u) {
            State pred = (s >> k) | (u << (state_len - k));
            std::uint64_t cand = sat_add(
                dist_[pred],
                static_cast<std::uint64_t>(std::popcount(sd_.output(pred, entering) ^ received)));
            if (cand < best) {
                best = cand;
                min_preds.assign(1, pred);
            } else if (cand == best) {
                min_preds.push_back(pred);
            }
        }
        ndist[s] = best;

        TernaryWord merged = walks_[min_preds.front()];
        if (opts_.tie == DecodeOptions::TiePolicy::merge_star) {
            for (std::size_t p = 1; p < min_preds.size(); ++p) {
                const TernaryWord& other = walks_[min_preds[p]];
                for (std::size_t j = 0; j < walk_len; ++j)
                    if (merged[j] != other[j]) merged[j] = Trit::star;
            }
        }
        TernaryWord nw;
        nw.reserve(walk_len);
        for (int i = 0; i < k; ++i)
            nw.push_back(trit_of(static_cast<std::uint8_t>((s >> i) & 1u)));
        nw.insert(nw.end(), merged.begin(), merged.end() - k);
        nwalks[s] = std::move(nw);
    }
    dist_ = std::move(ndist);
    walks_ = std::move(nwalks);

#ifndef NDEBUG
    for (State s = 0; s < sd_.state_count(); ++s)
        for (int i = 0; i < state_len; ++i)
            assert(walks_[s][static_cast<std::size_t>(i)] ==
                   trit_of(static_cast<std::uint8_t>((s >> i) & 1u)));
#endif

    TernaryWord decoded;
    if (ticks_ >= tau_) {
        std::uint64_t dmin = kInfDistance;
        for (auto d : dist_) dmin = std::min(dmin, d);
        for (int i = 0; i < k; ++i) {
            const std::size_t pos = walk_len - static_cast<std::size_t>(k) +
                                    static_cast<std::size_t>(i);
            bool first = true, agree = true;
            Trit value = Trit::star;
            for (State s = 0; s < sd_.state_count(); ++s) {
                if (dist_[s] != dmin) continue;
                if (first) {
                    value = walks_[s][pos];
                    first = false;
                } else if (walks_[s][pos] != value) {
                    agree = false;
                }
            }
            decoded.push_back(agree ? value : Trit::star);
        }
    }
    return decoded;
}

TernaryWord viterbi_general(const CodeSpec& code, const ReceivedWord& w, int tau,
                            std::size_t digits, DecodeOptions opts) {
    ViterbiDecoder dec(code, tau, opts);
    const std::size_t k = static_cast<std::size_t>(code.k);
    const std::size_t blocks = (digits + k - 1) / k;
    auto ticks = extend_ticks(w, code.n, static_cast<std::size_t>(tau) + blocks - 1);
    TernaryWord out;
    for (Group g : ticks) {
        TernaryWord part = dec.step(g);
        out.insert(out.end(), part.begin(), part.end());
    }
    out.resize(digits);
    return out;
}

// ---------------------------------------------------------------------------
// Literal two-predecessor transcription for k=1 codes, self-contained so it
// can cross-check ViterbiDecoder.

TernaryWord viterbi_k1(const CodeSpec& code, const ReceivedWord& w, int tau, std::size_t digits) {
    if (code.k != 1) throw DomainError("viterbi_k1 handles k=1 codes only");
    if (code.m < 1) throw DomainError("k=1 decoding needs m >= 1");
    if (tau < code.m) throw DomainError("window size below m");

    const int m = code.m;
    const std::uint32_t nstates = 1u << m;
    std::vector<std::uint32_t> gen_masks;
    for (const auto& g : code.generators) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < g.coeffs().size(); ++i)
            if (g.coeffs()[i]) mask |= 1u << i;
        gen_masks.push_back(mask);
    }
    auto edge_output = [&](std::uint32_t reg) {
        Group out = 0;
        for (std::size_t j = 0; j < gen_masks.size(); ++j)
            out |= static_cast<Group>(std::popcount(reg & gen_masks[j]) & 1) << j;
        return out;
    };

    std::vector<std::uint64_t> dist(nstates, kInfDistance);
    dist[0] = 0;
    std::vector<TernaryWord> walks(nstates, TernaryWord(static_cast<std::size_t>(tau), Trit::star));
    for (std::uint32_t s = 0; s < nstates; ++s)
        for (int i = 0; i < m; ++i)
            walks[s][static_cast<std::size_t>(i)] =
                trit_of(static_cast<std::uint8_t>((s >> i) & 1u));

    auto ticks = extend_ticks(w, code.n, static_cast<std::size_t>(tau) + digits - 1);
    TernaryWord out;
    std::vector<std::uint64_t> ndist(nstates);
    std::vector<TernaryWord> nwalks(nstates);

    for (std::size_t t = 1; t <= ticks.size(); ++t) {
        const Group g = ticks[t - 1];
        for (std::uint32_t s = 0; s < nstates; ++s) {
            const std::uint32_t s1 = s & 1u;
            const std::uint32_t p0 = s >> 1;
            const std::uint32_t p1 = (s >> 1) | (1u << (m - 1));
            const std::uint64_t d0 = sat_add(
                dist[p0], static_cast<std::uint64_t>(std::popcount(edge_output((p0 << 1) | s1) ^ g)));
            const std::uint64_t d1 = sat_add(
                dist[p1], static_cast<std::uint64_t>(std::popcount(edge_output((p1 << 1) | s1) ^ g)));

            TernaryWord nw;
            nw.reserve(static_cast<std::size_t>(tau));
            nw.push_back(trit_of(static_cast<std::uint8_t>(s1)));
            if (d0 < d1) {
                nw.insert(nw.end(), walks[p0].begin(), walks[p0].end() - 1);
            } else if (d1 < d0) {
                nw.insert(nw.end(), walks[p1].begin(), walks[p1].end() - 1);
            } else {
                // Step 3b: extend the 0-predecessor's walk, starring each digit
                // that disagrees with the 1-predecessor's.
                for (std::size_t j = 0; j + 1 < walks[p0].size(); ++j)
                    nw.push_back(walks[p0][j] == walks[p1][j] ? walks[p0][j] : Trit::star);
            }
            ndist[s] = std::min(d0, d1);
            nwalks[s] = std::move(nw);
        }
        dist = ndist;
        walks = nwalks;

        if (t >= static_cast<std::size_t>(tau)) {
            std::uint64_t dmin = kInfDistance;
            for (auto d : dist) dmin = std::min(dmin, d);
            bool first = true, agree = true;
            Trit value = Trit::star;
            for (std::uint32_t s = 0; s < nstates; ++s) {
                if (dist[s] != dmin) continue;
                Trit digit = walks[s].back();
                if (first) {
                    value = digit;
                    first = false;
                } else if (digit != value) {
                    agree = false;
                }
            }
            out.push_back(agree ? value : Trit::star);
        }
    }
    out.resize(digits);
    return out;
}

bool is_e_ready(const ViterbiDecoder& dec, State correct_state, int e) {
    const StateDiagram& sd = dec.diagram();
    const std::uint64_t d_correct = dec.distance(correct_state);
    if (d_correct == kInfDistance) return false;
    const int state_len = sd.state_bits();
    const TernaryWord& correct_walk = dec.walk(correct_state);

    for (State s = 0; s < sd.state_count(); ++s) {
        if (s == correct_state) continue;
        const std::uint64_t w = min_path_weight(sd, correct_state, s);
        const std::uint64_t need = std::min<std::uint64_t>(1 + static_cast<std::uint64_t>(e), w);
        if (dec.distance(s) < sat_add(d_correct, need)) return false;
        if (w < 1 + static_cast<std::uint64_t>(e)) {
            const TernaryWord& walk = dec.walk(s);
            for (int i = 0; i < state_len; ++i)
                if (walk[static_cast<std::size_t>(i)] !=
                    trit_of(static_cast<std::uint8_t>((s >> i) & 1u)))
                    return false;
            for (std::size_t j = static_cast<std::size_t>(state_len); j < walk.size(); ++j)
                if (walk[j] != correct_walk[j]) return false;
        }
    }
    return true;
}

}  // namespace convodna
