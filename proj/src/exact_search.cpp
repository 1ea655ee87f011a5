// Copyright 2026 hoboc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hoboc/exact_search.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hoboc {

namespace {

constexpr int kMaxQ = 3;
constexpr int kMaxT = 8;
constexpr int kMaxMonomials = 7;

// Parities fit in 8 bits each (n <= 3), the done-set in 7 bits.
std::uint64_t encode_state(const std::vector<Mask>& parities, unsigned done) {
    std::uint64_t key = done;
    for (Mask m : parities) key = (key << 8) | m;
    return key;
}

}  // namespace

std::optional<Circuit> exact_search(const IsingPolynomial& h, const CdpConfig& cfg) {
    const int n = h.var_count();
    const int q = cfg.qubits == 0 ? n : cfg.qubits;
    const int t_budget = cfg.layers;
    const int v_count = static_cast<int>(h.terms().size());
    if (q > kMaxQ || t_budget > kMaxT || v_count > kMaxMonomials || v_count == 0 || n > q ||
        t_budget < 1)
        throw std::invalid_argument("exact_search limits exceeded (q<=3, T<=8, monomials<=7)");

    std::vector<Mask> monomials;
    for (const Term& t : h.terms()) monomials.push_back(t.monomial);
    const unsigned all_done = (1u << v_count) - 1;

    struct Node {
        std::vector<Mask> parities;
        unsigned done;
    };
    struct Edge {
        std::uint64_t prev;
        std::vector<Gate> layer;
        int distance;
    };

    Node start;
    start.parities.assign(q, 0);
    for (int i = 0; i < n; ++i) start.parities[i] = Mask{1} << i;
    start.done = 0;
    const std::uint64_t start_key = encode_state(start.parities, start.done);
    const std::uint64_t goal_key = encode_state(start.parities, all_done);

    std::unordered_map<std::uint64_t, Edge> visited;
    visited.emplace(start_key, Edge{start_key, {}, 0});
    std::queue<Node> frontier;
    frontier.push(start);

    // Candidate CNOT arcs, fixed up front.
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            if (i == j) continue;
            if (cfg.downward_only && i > j) continue;
            arcs.push_back({i, j});
        }

    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop();
        const std::uint64_t key = encode_state(node.parities, node.done);
        const int dist = visited.at(key).distance;
        if (key == goal_key) {  // distinct from the start: done-sets differ
            std::vector<std::vector<Gate>> layers;
            std::uint64_t cursor = key;
            while (cursor != start_key) {
                const Edge& e = visited.at(cursor);
                layers.push_back(e.layer);
                cursor = e.prev;
            }
            std::reverse(layers.begin(), layers.end());
            Circuit out(q, n);
            for (const auto& layer : layers) out.append_layer(layer);
            return out;
        }
        if (dist >= t_budget) continue;

        // Rotation options per qubit: its current parity, when still owed.
        std::vector<std::pair<int, int>> rotatable;  // (qubit, vid)
        for (int i = 0; i < q; ++i) {
            const Mask parity = node.parities[i];
            if (parity == 0) continue;
            auto it = std::lower_bound(monomials.begin(), monomials.end(), parity);
            if (it == monomials.end() || *it != parity) continue;
            const int vid = static_cast<int>(it - monomials.begin());
            if (!(node.done >> vid & 1)) rotatable.push_back({i, vid});
        }

        const int cnot_options = static_cast<int>(arcs.size());
        for (int choice = -1; choice < cnot_options; ++choice) {
            Mask busy = 0;
            if (choice >= 0) busy = (Mask{1} << arcs[choice].first) | (Mask{1} << arcs[choice].second);
            // Any subset of the free rotatable qubits may join the layer.
            std::vector<std::pair<int, int>> free_rot;
            for (const auto& rot : rotatable)
                if (!((busy >> rot.first) & 1)) free_rot.push_back(rot);
            const unsigned subsets = 1u << free_rot.size();
            for (unsigned pick = 0; pick < subsets; ++pick) {
                if (choice < 0 && pick == 0) continue;  // empty layer
                // With ancillas two qubits may hold the same parity; a
                // monomial still gets at most one rotation per layer.
                unsigned picked_vids = 0;
                bool duplicate = false;
                for (std::size_t idx = 0; idx < free_rot.size(); ++idx) {
                    if (!((pick >> idx) & 1)) continue;
                    const unsigned bit = 1u << free_rot[idx].second;
                    if (picked_vids & bit) duplicate = true;
                    picked_vids |= bit;
                }
                if (duplicate) continue;
                Node next = node;
                std::vector<Gate> layer;
                if (choice >= 0) {
                    const auto [ctrl, tgt] = arcs[choice];
                    next.parities[tgt] ^= next.parities[ctrl];
                    layer.push_back(Cnot{ctrl, tgt});
                }
                for (std::size_t idx = 0; idx < free_rot.size(); ++idx) {
                    if (!((pick >> idx) & 1)) continue;
                    const auto [qubit, vid] = free_rot[idx];
                    next.done |= 1u << vid;
                    layer.push_back(
                        Rotation{qubit, monomials[vid], h.coefficient(monomials[vid])});
                }
                const std::uint64_t next_key = encode_state(next.parities, next.done);
                if (visited.count(next_key)) continue;
                visited.emplace(next_key, Edge{key, std::move(layer), dist + 1});
                frontier.push(std::move(next));
            }
        }
    }
    return std::nullopt;
}

}  // namespace hoboc
