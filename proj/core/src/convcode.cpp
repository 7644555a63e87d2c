#include "convodna/convcode.hpp"

#include <bit>
#include <sstream>

#include "convodna/errors.hpp"

namespace convodna {

int group_weight(Group g) { return std::popcount(g); }

std::string group_to_string(Group g, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j)
        if ((g >> j) & 1u) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

Group group_from_string(std::string_view s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw DataError("expected " + std::to_string(n) + "-bit group, got '" + std::string(s) + "'");
    Group g = 0;
    for (int j = 0; j < n; ++j) {
        char c = s[static_cast<std::size_t>(j)];
        if (c == '1')
            g |= 1u << j;
        else if (c != '0')
            throw DataError("group digit must be 0/1, got '" + std::string(1, c) + "'");
    }
    return g;
}

CodeSpec::CodeSpec(int n_, int k_, int m_, std::vector<BinaryPoly> gens)
    : n(n_), k(k_), m(m_), generators(std::move(gens)) {
    if (n < 1 || generators.empty()) throw DomainError("code needs at least one generator");
    if (static_cast<int>(generators.size()) != n)
        throw DomainError("code declares n=" + std::to_string(n) + " but has " +
                          std::to_string(generators.size()) + " generators");
    if (k < 1) throw DomainError("k must be positive");
    if (m < 0) throw DomainError("m must be nonnegative");
    bool reaches_m = false;
    for (const auto& g : generators) {
        auto d = g.degree();
        if (d && static_cast<int>(*d) > m)
            throw DomainError("generator " + g.to_string() + " exceeds degree bound m=" +
                              std::to_string(m));
        if (d && static_cast<int>(*d) == m) reaches_m = true;
    }
    if (!reaches_m)
        throw DomainError("no generator attains degree m=" + std::to_string(m) +
                          "; m is overstated");
}

namespace {

std::vector<std::uint32_t> generator_masks(const CodeSpec& code) {
    std::vector<std::uint32_t> masks;
    masks.reserve(code.generators.size());
    for (const auto& g : code.generators) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < g.coeffs().size(); ++i)
            if (g.coeffs()[i]) mask |= 1u << i;
        masks.push_back(mask);
    }
    return masks;
}

// Outputs of an (m+1)-cell register whose contents are the bits of reg
// (bit i = cell X_i).
Group register_outputs(std::uint32_t reg, const std::vector<std::uint32_t>& masks) {
    Group out = 0;
    for (std::size_t j = 0; j < masks.size(); ++j)
        out |= static_cast<Group>(std::popcount(reg & masks[j]) & 1) << j;
    return out;
}

}  // namespace

StateDiagram::StateDiagram(const CodeSpec& code)
    : state_bits_(code.m + 1 - code.k), k_(code.k), n_(code.n) {
    if (!code.state_diagram_supported())
        throw DomainError("state diagram requires 1 <= k <= m/2 (or k=1, m>=1); got k=" +
                          std::to_string(code.k) + ", m=" + std::to_string(code.m));
    if (state_bits_ + k_ > 26) throw DomainError("state diagram too large");
    auto masks = generator_masks(code);
    outputs_.resize(std::size_t{1} << (state_bits_ + k_));
    for (State s = 0; s < state_count(); ++s)
        for (std::uint32_t u = 0; u < (1u << k_); ++u)
            outputs_[(static_cast<std::size_t>(s) << k_) | u] =
                register_outputs((s << k_) | u, masks);
}

State StateDiagram::target(State from, std::uint32_t input) const {
    return ((from << k_) | input) & (state_count() - 1);
}

Group StateDiagram::output(State from, std::uint32_t input) const {
    return outputs_[(static_cast<std::size_t>(from) << k_) | input];
}

std::string StateDiagram::state_name(State s) const {
    std::string name(static_cast<std::size_t>(state_bits_), '0');
    for (int i = 0; i < state_bits_; ++i)
        if ((s >> i) & 1u) name[static_cast<std::size_t>(i)] = '1';
    return name;
}

std::string StateDiagram::dot() const {
    std::ostringstream os;
    os << "digraph state_diagram {\n  rankdir=LR;\n";
    for (State s = 0; s < state_count(); ++s)
        os << "  \"" << state_name(s) << "\";\n";
    for (State s = 0; s < state_count(); ++s)
        for (std::uint32_t u = 0; u < (1u << k_); ++u)
            os << "  \"" << state_name(s) << "\" -> \"" << state_name(target(s, u))
               << "\" [label=\"" << group_to_string(u, k_) << "/"
               << group_to_string(output(s, u), n_) << "\"];\n";
    os << "}\n";
    return os.str();
}

Codeword encode_poly(const CodeSpec& code, const BinaryPoly& message) {
    if (code.k != 1)
        throw DomainError("polynomial encoding is defined for k=1 codes; use register encoding");
    Codeword cw;
    cw.components.reserve(code.generators.size());
    for (const auto& g : code.generators) cw.components.push_back(message * g);
    return cw;
}

std::vector<Group> encode_register(const CodeSpec& code, const BitSeq& message, std::size_t ticks) {
    const std::size_t k = static_cast<std::size_t>(code.k);
    if (ticks * k < message.size())
        throw DomainError("ticks=" + std::to_string(ticks) + " cannot consume a " +
                          std::to_string(message.size()) + "-digit message at k=" +
                          std::to_string(code.k));
    auto masks = generator_masks(code);
    std::uint32_t reg = 0;
    const std::uint32_t reg_mask = (code.m + 1 >= 32) ? ~0u : ((1u << (code.m + 1)) - 1);
    std::vector<Group> out;
    out.reserve(ticks);
    for (std::size_t t = 0; t < ticks; ++t) {
        std::uint32_t word = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t idx = t * k + i;
            if (idx < message.size() && message[idx]) word |= 1u << i;
        }
        reg = ((reg << k) | word) & reg_mask;
        out.push_back(register_outputs(reg, masks));
    }
    return out;
}

BitSeq interleave(const Codeword& cw, std::size_t ticks) {
    std::size_t max_deg = 0;
    for (const auto& c : cw.components)
        if (auto d = c.degree()) max_deg = std::max(max_deg, *d);
    if (ticks <= max_deg)
        throw DomainError("ticks=" + std::to_string(ticks) +
                          " does not cover component degree " + std::to_string(max_deg));
    BitSeq out;
    out.reserve(ticks * cw.components.size());
    for (std::size_t t = 0; t < ticks; ++t)
        for (const auto& c : cw.components) out.push_back(c.coeff(t));
    return out;
}

std::vector<Group> encode_walk(const StateDiagram& sd, const BitSeq& message) {
    const std::size_t k = static_cast<std::size_t>(sd.input_bits());
    if (message.size() % k != 0)
        throw DataError("message length " + std::to_string(message.size()) +
                        " is not divisible by k=" + std::to_string(k));
    std::vector<Group> out;
    out.reserve(message.size() / k);
    State s = 0;
    for (std::size_t t = 0; t < message.size() / k; ++t) {
        std::uint32_t u = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (message[t * k + i]) u |= 1u << i;
        out.push_back(sd.output(s, u));
        s = sd.target(s, u);
    }
    return out;
}

BitSeq walk_to_message(const StateDiagram& sd, std::span<const State> path) {
    BitSeq msg;
    const std::uint32_t k = static_cast<std::uint32_t>(sd.input_bits());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        std::uint32_t u = path[i + 1] & ((1u << k) - 1);
        if (sd.target(path[i], u) != path[i + 1])
            throw DomainError("states " + sd.state_name(path[i]) + " and " +
                              sd.state_name(path[i + 1]) + " are not connected");
        for (std::uint32_t b = 0; b < k; ++b)
            msg.push_back(static_cast<std::uint8_t>((u >> b) & 1u));
    }
    return msg;
}

BitSeq flatten_groups(std::span<const Group> groups, int n) {
    BitSeq out;
    out.reserve(groups.size() * static_cast<std::size_t>(n));
    for (Group g : groups)
        for (int j = 0; j < n; ++j) out.push_back(static_cast<std::uint8_t>((g >> j) & 1u));
    return out;
}

std::string format_groups(std::span<const Group> groups, int n) {
    std::string s;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s.push_back(' ');
        s += group_to_string(groups[i], n);
    }
    return s;
}

}  // namespace convodna
