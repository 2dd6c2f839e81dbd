#include "bei/corpus.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace bei {

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// Chain of m triangles {i, i+1, i+2}.
Graph line2d(int m) {
    Graph g(m + 2);
    for (int i = 1; i <= m; ++i) {
        g.add_edge(i, i + 1);
        g.add_edge(i, i + 2);
        g.add_edge(i + 1, i + 2);
    }
    return g;
}

Graph claw() {
    return make_graph(4, {{1, 2}, {1, 3}, {1, 4}});
}

// Triangle with a pendant edge at each vertex.
Graph fig1() {
    return make_graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
}

// Four triangles {1,2,4},{2,3,5},{2,4,5},{4,5,6}: chordal and claw free.
Graph fig2() {
    return make_graph(6, {{1, 2}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
}

Graph bowtie() { return glue_at_vertex(complete(3), 3, complete(3), 1); }

// Edge, chain of two triangles, edge, glued end to end.
Graph alt_line_tri() {
    Graph a = glue_at_vertex(path(2), 2, line2d(2), 1);
    return glue_at_vertex(a, 5, path(2), 1);
}

const std::map<std::string, std::function<Graph()>>& builders() {
    static const std::map<std::string, std::function<Graph()>> m = {
        {"k1", [] { return complete(1); }},
        {"k2", [] { return complete(2); }},
        {"k3", [] { return complete(3); }},
        {"k4", [] { return complete(4); }},
        {"k5", [] { return complete(5); }},
        {"c4", [] { return cycle(4); }},
        {"c5", [] { return cycle(5); }},
        {"c6", [] { return cycle(6); }},
        {"path2", [] { return path(2); }},
        {"path3", [] { return path(3); }},
        {"path4", [] { return path(4); }},
        {"path5", [] { return path(5); }},
        {"line2d-1", [] { return line2d(1); }},
        {"line2d-2", [] { return line2d(2); }},
        {"line2d-3", [] { return line2d(3); }},
        {"line2d-4", [] { return line2d(4); }},
        {"claw", claw},
        {"fig1", fig1},
        {"fig2", fig2},
        {"bowtie", bowtie},
        {"glue-k3-k2", [] { return glue_at_vertex(complete(3), 3, complete(2), 1); }},
        {"glue-line2d2-k2", [] { return glue_at_vertex(line2d(2), 4, complete(2), 1); }},
        {"glue-fig1-k3", [] { return glue_at_vertex(fig1(), 4, complete(3), 1); }},
        {"glue-fig2-k3", [] { return glue_at_vertex(fig2(), 1, complete(3), 1); }},
        {"alt-line-tri", alt_line_tri},
    };
    return m;
}

} // namespace

std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : builders()) names.push_back(name);
    return names;
}

Graph corpus_graph(const std::string& name) {
    auto it = builders().find(name);
    if (it == builders().end())
        throw std::invalid_argument("corpus: unknown name '" + name + "'");
    return it->second();
}

} // namespace bei
