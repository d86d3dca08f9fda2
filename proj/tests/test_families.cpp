#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "romdom/errors.hpp"
#include "romdom/families.hpp"
#include "romdom/graph_io.hpp"

using namespace romdom;

TEST_CASE("spec parse and canonical format round-trip") {
    for (const char* s : {
             "complete:5", "path:1", "cycle:3", "wheel:4", "multipartite:1,2,3",
             "ellk2:4", "ak:k=2,n=6", "kkmm:3", "corona(path:3,complete:2)",
             "kjoin(cycle:4,complete:3,2)", "starjoin(complete:1,cycle:4)",
             "corona(kjoin(path:2,complete:3,1),ellk2:2)", "file:some/graph.txt",
         }) {
        FamilySpec spec = parse_spec(s);
        CHECK(format_spec(spec) == s);
        CHECK(parse_spec(format_spec(spec)) == spec);
    }
}

TEST_CASE("bipartite is sugar for two-part multipartite") {
    CHECK(parse_spec("bipartite:3,2") == parse_spec("multipartite:3,2"));
    CHECK(format_spec(parse_spec("bipartite:3,2")) == "multipartite:3,2");
}

TEST_CASE("spec parse rejects malformed input") {
    for (const char* s : {
             "", "complete", "complete:", "complete:-3", "complete:2x",
             "unknown:4", "multipartite:", "multipartite:1,,2", "ak:k=2", "ak:n=4,k=2",
             "corona(path:3)", "corona(path:3,path:3", "kjoin(path:2,path:2)",
             "complete:4 ", "complete:9999999999", "wheel:4,5",
         }) {
        CAPTURE(s);
        CHECK_THROWS_AS(parse_spec(s), InputError);
    }
}

TEST_CASE("generators refuse undersized families") {
    CHECK_THROWS_AS(generate(parse_spec("complete:0")), InputError);
    CHECK_THROWS_AS(generate(parse_spec("cycle:2")), InputError);
    CHECK_THROWS_AS(generate(parse_spec("wheel:3")), InputError);
    CHECK_THROWS_AS(generate(parse_spec("ak:k=2,n=2")), InputError);
    CHECK_NOTHROW(generate(parse_spec("path:1")));
    CHECK_NOTHROW(generate(parse_spec("cycle:3")));
    CHECK_NOTHROW(generate(parse_spec("wheel:4")));
}

TEST_CASE("basic family shapes") {
    Graph k4 = make_complete(4);
    CHECK(k4.size() == 6);
    CHECK(k4.min_degree() == 3);

    Graph p5 = make_path(5);
    CHECK(p5.size() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(2) == 2);
    CHECK(make_path(1).size() == 0);

    Graph c5 = make_cycle(5);
    CHECK(c5.size() == 5);
    CHECK(c5.min_degree() == 2);
    CHECK(c5.adjacent(4, 0));

    Graph w6 = make_wheel(6);  // order 6: hub + 5-cycle rim
    CHECK(w6.order() == 6);
    CHECK(w6.size() == 10);
    CHECK(w6.degree(0) == 5);
    CHECK(w6.adjacent(1, 5));
    CHECK(!w6.adjacent(1, 3));
}

TEST_CASE("complete multipartite blocks") {
    Graph g = make_multipartite({1, 2, 3});
    CHECK(g.order() == 6);
    CHECK(g.size() == 11);  // 15 - 1 - 3 within-part pairs
    CHECK(!g.adjacent(1, 2));
    CHECK(!g.adjacent(3, 5));
    CHECK(g.adjacent(0, 5));
    CHECK(make_multipartite({4}).size() == 0);
}

TEST_CASE("matching and near-complete families") {
    Graph m = make_ell_k2(3);
    CHECK(m.order() == 6);
    CHECK(m.size() == 3);
    CHECK(m.min_degree() == 1);
    CHECK(m.max_degree() == 1);
    CHECK(m.adjacent(4, 5));

    // K_{3,3} minus the partial matching (0,3), (1,4)
    Graph kk = make_kkmm(3);
    CHECK(kk.order() == 6);
    CHECK(kk.size() == 7);
    CHECK(!kk.adjacent(0, 3));
    CHECK(!kk.adjacent(1, 4));
    CHECK(kk.adjacent(2, 5));
    CHECK(!kk.adjacent(0, 1));
}

TEST_CASE("near-clique with a pendant-like tail") {
    Graph g = make_ak(2, 5);
    CHECK(g.order() == 5);
    // 0,1,2 form a triangle minus edge (1,2); 3 and 4 attach to 0 and 1
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK(!g.adjacent(1, 2));
    for (int v : {3, 4}) {
        CHECK(g.neighbors(v) == std::vector<int>{0, 1});
    }
    CHECK(!g.adjacent(3, 4));
}

TEST_CASE("corona replaces each vertex with a joined copy") {
    Graph g = corona(make_path(3), make_complete(2));
    CHECK(g.order() == 3 + 3 * 2);
    // edge count: edges of the base + per base vertex (edges of the copy + joins)
    CHECK(g.size() == 2 + 3 * (1 + 2));
    CHECK(g.adjacent(0, 3));
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(3, 4));
    CHECK(!g.adjacent(1, 3));
    CHECK(g.adjacent(1, 5));
    CHECK(g.adjacent(2, 8));
}

TEST_CASE("join operators") {
    // joining one vertex to a 4-cycle builds the 5-wheel
    CHECK(star_join(make_complete(1), make_cycle(4)) == make_wheel(5));

    Graph kj = k_join(make_cycle(4), make_complete(3), 2);
    CHECK(kj.order() == 7);
    CHECK(kj.size() == 4 + 3 + 4 * 2);
    for (int u = 0; u < 4; ++u) {
        CHECK(kj.adjacent(u, 4));
        CHECK(kj.adjacent(u, 5));
        CHECK(!kj.adjacent(u, 6));
    }

    Graph custom = k_join(make_path(2), make_path(3), 1, {{2}, {0}});
    CHECK(custom.adjacent(0, 2 + 2));
    CHECK(custom.adjacent(1, 2 + 0));
    CHECK(!custom.adjacent(0, 2 + 0));
    CHECK_THROWS_AS(k_join(make_path(2), make_path(3), 2, {{0}, {1}}), InputError);
    CHECK_THROWS_AS(k_join(make_path(2), make_path(3), 4), InputError);
}

TEST_CASE("file specs read the referenced graph") {
    const char* path = "families_file_spec.txt";
    {
        std::ofstream out(path);
        out << serialize_graph(make_cycle(5));
    }
    CHECK(generate(parse_spec(std::string("file:") + path)) == make_cycle(5));
    std::remove(path);
    CHECK_THROWS_AS(generate(parse_spec("file:no/such/file.txt")), InputError);
}

TEST_CASE("generate dispatches every kind") {
    CHECK(generate(parse_spec("complete:4")) == make_complete(4));
    CHECK(generate(parse_spec("ellk2:2")) == make_ell_k2(2));
    CHECK(generate(parse_spec("kkmm:2")) == make_kkmm(2));
    CHECK(generate(parse_spec("ak:k=3,n=6")) == make_ak(3, 6));
    CHECK(generate(parse_spec("corona(complete:2,complete:2)")) ==
          corona(make_complete(2), make_complete(2)));
    CHECK(generate(parse_spec("multipartite:2,2")) == make_multipartite({2, 2}));
}
