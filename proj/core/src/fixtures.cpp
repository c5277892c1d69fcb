#include "chroma/fixtures.hpp"

namespace chroma::fixtures {

Graph path(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph star(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph petersen_minus_vertex() { return petersen().without_vertex(0); }

Graph subdivided_k4() {
    // K4 on {0,1,2,3} with edge 23 subdivided by vertex 4.
    return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

std::vector<std::pair<std::string, Graph>> basic_family() {
    std::vector<std::pair<std::string, Graph>> family;
    for (int n = 3; n <= 9; n += 2) family.emplace_back("C" + std::to_string(n), cycle(n));
    for (int n = 2; n <= 7; ++n) family.emplace_back("K" + std::to_string(n), complete(n));
    family.emplace_back("petersen", petersen());
    family.emplace_back("petersen-minus-vertex", petersen_minus_vertex());
    family.emplace_back("subdivided-K4", subdivided_k4());
    return family;
}

}  // namespace chroma::fixtures
