#include "convodna/analysis.hpp"

#include <limits>
#include <queue>
#include <vector>

#include "convodna/errors.hpp"

namespace convodna {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

// Single-source shortest path over the state diagram, edge cost = output weight.
std::vector<std::uint64_t> dijkstra(const StateDiagram& sd, State src) {
    std::vector<std::uint64_t> dist(sd.state_count(), kInf);
    using Item = std::pair<std::uint64_t, State>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[src] = 0;
    heap.emplace(0, src);
    while (!heap.empty()) {
        auto [d, s] = heap.top();
        heap.pop();
        if (d != dist[s]) continue;
        for (std::uint32_t u = 0; u < (1u << sd.input_bits()); ++u) {
            State t = sd.target(s, u);
            std::uint64_t nd = d + static_cast<std::uint64_t>(group_weight(sd.output(s, u)));
            if (nd < dist[t]) {
                dist[t] = nd;
                heap.emplace(nd, t);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_catastrophic(const CodeSpec& code) {
    StateDiagram sd(code);
    // Cycle detection on the subgraph of zero-weight edges, with the zero
    // state's self-loop removed. Iterative three-color DFS.
    enum Color : std::uint8_t { white, gray, black };
    std::vector<Color> color(sd.state_count(), white);
    for (State start = 0; start < sd.state_count(); ++start) {
        if (color[start] != white) continue;
        std::vector<std::pair<State, std::uint32_t>> stack{{start, 0}};
        color[start] = gray;
        while (!stack.empty()) {
            auto& [s, next_u] = stack.back();
            bool advanced = false;
            while (next_u < (1u << sd.input_bits())) {
                std::uint32_t u = next_u++;
                if (group_weight(sd.output(s, u)) != 0) continue;
                State t = sd.target(s, u);
                if (s == 0 && t == 0) continue;  // the permitted zero-state loop
                if (color[t] == gray) return true;
                if (color[t] == white) {
                    color[t] = gray;
                    stack.emplace_back(t, 0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced && stack.back().second >= (1u << sd.input_bits())) {
                color[stack.back().first] = black;
                stack.pop_back();
            }
        }
    }
    return false;
}

int free_distance(const CodeSpec& code) {
    if (is_catastrophic(code))
        throw DomainError("code is catastrophic; free distance is not defined by a finite walk");
    StateDiagram sd(code);
    std::uint64_t best = kInf;
    for (std::uint32_t u = 1; u < (1u << sd.input_bits()); ++u) {
        State first = sd.target(0, u);
        std::uint64_t w0 = static_cast<std::uint64_t>(group_weight(sd.output(0, u)));
        auto dist = dijkstra(sd, first);
        if (dist[0] != kInf) best = std::min(best, w0 + dist[0]);
    }
    if (best == kInf) throw DomainError("no walk returns to the zero state");
    return static_cast<int>(best);
}

int max_correctable(const CodeSpec& code) { return (free_distance(code) - 1) / 2; }

int tau(const CodeSpec& code, int e) {
    if (is_catastrophic(code)) throw DomainError("tau is undefined for catastrophic codes");
    int e_max = max_correctable(code);
    if (e < 1 || e > e_max)
        throw DomainError("e=" + std::to_string(e) + " outside 1..floor((d-1)/2)=" +
                          std::to_string(e_max));
    StateDiagram sd(code);

    // Min accumulated weight per end state over walks whose first edge leaves
    // the zero state, lengthened one edge at a time. The per-length minimum is
    // nondecreasing, so the first length exceeding 2e is the answer.
    std::vector<std::uint64_t> dist(sd.state_count(), kInf);
    for (std::uint32_t u = 1; u < (1u << sd.input_bits()); ++u) {
        State t = sd.target(0, u);
        std::uint64_t w = static_cast<std::uint64_t>(group_weight(sd.output(0, u)));
        dist[t] = std::min(dist[t], w);
    }
    const int cap = 10 * (code.m + 1) * (2 * e + 1);
    for (int len = 1; len <= cap; ++len) {
        std::uint64_t least = kInf;
        for (auto d : dist) least = std::min(least, d);
        if (least > static_cast<std::uint64_t>(2 * e)) return len;
        std::vector<std::uint64_t> next(sd.state_count(), kInf);
        for (State s = 0; s < sd.state_count(); ++s) {
            if (dist[s] == kInf) continue;
            for (std::uint32_t u = 0; u < (1u << sd.input_bits()); ++u) {
                State t = sd.target(s, u);
                std::uint64_t nd = dist[s] + static_cast<std::uint64_t>(group_weight(sd.output(s, u)));
                next[t] = std::min(next[t], nd);
            }
        }
        dist = std::move(next);
    }
    throw DomainError("tau search exceeded its length cap of " + std::to_string(cap));
}

std::uint64_t min_path_weight(const StateDiagram& sd, State from, State to) {
    if (from >= sd.state_count() || to >= sd.state_count())
        throw DomainError("state out of range");
    if (from == to) return 0;
    return dijkstra(sd, from)[to];
}

}  // namespace convodna
