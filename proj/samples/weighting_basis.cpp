// Reads a graph file (or family spec) and prints each basis weighting of its
// well-covered space next to the common weight of its maximal independent sets.
#include <iostream>

#include "wcdim.hpp"

int main(int argc, char** argv) {
    using namespace wcdim;
    if (argc != 2) {
        std::cerr << "usage: weighting_basis <graph file | family spec>\n";
        return 2;
    }
    try {
        const auto loaded = io::load_graph(argv[1]);
        const auto mis = enumerate_mis(loaded.graph);
        const auto report = compute_wcdim(mis, FieldSpec::rationals());
        std::cout << loaded.label << ": " << mis.size() << " maximal independent sets, wcdim " << report.wcdim
                  << '\n';
        for (const auto& w : report.basis) {
            mpq_class sum = 0;
            for (Vertex v : mis[0]) sum += w[v];
            std::cout << "  [" << report::detail::join_exact(w, ", ") << "]  every MIS weighs " << sum << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
