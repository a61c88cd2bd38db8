// Removal and addition bounds next to the exact change in average distance.
#include <cstdio>

#include "netcomp/bounds.hpp"
#include "netcomp/centrality.hpp"

int main() {
    using namespace netcomp;
    Graph c8(8);
    for (NodeId i = 0; i < 8; ++i) c8.add_edge(EdgeKey::of(i, (i + 1) % 8));

    const EdgeKey cut = EdgeKey::of(0, 1);
    std::printf("remove %s: B %.3f  bound %.4f  actual %.4f\n", to_string(cut).c_str(),
                edge_betweenness_single(c8, cut), removal_upper_bound(c8, cut),
                delta_on_removal(c8, cut).mean_change());

    for (NodeId v = 2; v <= 4; ++v) {
        const EdgeKey chord = EdgeKey::of(0, v);
        std::printf("add %s: psi %.3f  bound %.4f  actual %.4f\n", to_string(chord).c_str(),
                    psi_addition(c8, chord), addition_lower_bound(c8, chord),
                    -delta_on_addition(c8, chord).mean_change());
    }
}
