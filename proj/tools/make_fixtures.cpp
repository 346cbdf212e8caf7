// Regenerates the bundled fixture graphs. The outputs are committed; this
// tool exists so the files stay reproducible from their seeds.

#include <fstream>
#include <iostream>
#include <string>

#include "topobench/fixtures.hpp"
#include "topobench/graph.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";

    topobench::Graph planned = topobench::make_grid_graph(8, 8);
    topobench::Graph organic = topobench::make_organic_graph(64, 9021, 0.45,
                                                             0.17);

    auto write = [&](const std::string& name, const topobench::Graph& g) {
        std::string path = dir + "/" + name + ".json";
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << path << "\n";
            std::exit(1);
        }
        out << topobench::graph_to_json(g, name);
        std::cout << path << ": " << g.node_count() << " nodes, "
                  << g.edge_count() << " edges\n";
    };

    write("planned_grid", planned);
    write("organic_sprawl", organic);
    return 0;
}
