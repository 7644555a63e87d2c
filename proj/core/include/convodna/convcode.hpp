#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "convodna/gf2poly.hpp"

namespace convodna {

// An n-bit output group: bit j is generator j's output at one tick.
using Group = std::uint32_t;
// A register state: bit i holds state digit s_{i+1}, so the most recent
// message digit sits in bit 0 and state_name() prints bit 0 first.
using State = std::uint32_t;

int group_weight(Group g);
std::string group_to_string(Group g, int n);
Group group_from_string(std::string_view s, int n);  // DataError on width/char mismatch

// An (n, k, m) binary convolutional code: n output bits per k message digits,
// generator polynomials of degree <= m with at least one reaching m.
struct CodeSpec {
    int n;
    int k;
    int m;
    std::vector<BinaryPoly> generators;

    CodeSpec(int n, int k, int m, std::vector<BinaryPoly> generators);

    // State diagrams require 1 <= k <= m/2, except the classic k=1 case.
    bool state_diagram_supported() const { return k == 1 ? m >= 1 : 2 * k <= m; }
};

struct Codeword {
    std::vector<BinaryPoly> components;  // c_1..c_n
};

// Directed graph over register states: from each state, one edge per k-bit
// input word u, leading to u prepended to the state with the last k digits
// dropped, labeled with the register outputs for contents (u, state).
class StateDiagram {
public:
    explicit StateDiagram(const CodeSpec& code);

    int state_bits() const { return state_bits_; }   // m + 1 - k
    int input_bits() const { return k_; }
    int output_bits() const { return n_; }
    std::uint32_t state_count() const { return 1u << state_bits_; }

    State target(State from, std::uint32_t input) const;
    Group output(State from, std::uint32_t input) const;

    std::string state_name(State s) const;
    std::string dot() const;

private:
    int state_bits_, k_, n_;
    std::vector<Group> outputs_;  // index = (state << k) | input
};

// c_i(x) = m(x) g_i(x). Only defined for k = 1.
Codeword encode_poly(const CodeSpec& code, const BinaryPoly& message);

// Shift-register simulation for any k: the message is zero-padded to
// k*ticks digits; each tick the k next digits enter cells X0..X_{k-1} in
// message order and every generator emits the XOR of its tapped cells.
std::vector<Group> encode_register(const CodeSpec& code, const BitSeq& message, std::size_t ticks);

// Interleaved form: group t holds the coefficient of x^t from each component.
BitSeq interleave(const Codeword& cw, std::size_t ticks);

// Walk from the zero state driven by successive k-digit input words.
std::vector<Group> encode_walk(const StateDiagram& sd, const BitSeq& message);

// Recover the message from a state path: the first k digits of each
// successive state. DomainError if two consecutive states are not connected.
BitSeq walk_to_message(const StateDiagram& sd, std::span<const State> path);

BitSeq flatten_groups(std::span<const Group> groups, int n);
std::string format_groups(std::span<const Group> groups, int n);  // "11 01 00"

}  // namespace convodna
