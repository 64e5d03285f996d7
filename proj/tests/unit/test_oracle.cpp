#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "sortnet/core.hpp"
#include "sortnet/oracle.hpp"
#include "sortnet/search.hpp"

using namespace sortnet;

namespace {

Network net_of(int channels, const std::vector<int>& codes) {
    Network net;
    net.channels = channels;
    for (int code : codes) net.comps.push_back(static_cast<Code>(code));
    return net;
}

Permutation perm_of(const std::vector<int>& image) {
    Permutation perm;
    perm.image = image;
    return perm;
}

SubsumptionWitness triple_of(const Network& subsumer, const Network& subsumed,
                             const Permutation& perm) {
    return SubsumptionWitness{subsumer, subsumed, perm};
}

}  // namespace

TEST_CASE("writer emits the canonical text form") {
    OracleFile oracle;
    oracle.channels = 3;
    oracle.kind = OracleKind::raw;
    oracle.levels.push_back(
        OracleLevel{1, {triple_of(net_of(3, {0}), net_of(3, {1}), perm_of({0, 2, 1}))}});
    CHECK(write_oracle_text(oracle) ==
          "ORACLE v1 n=3 kind=raw\n"
          "LEVEL k=1 count=1\n"
          "0 ; 1 ; 0 2 1\n");

    oracle.kind = OracleKind::reduced;
    oracle.levels.push_back(OracleLevel{2, {}});
    CHECK(write_oracle_text(oracle) ==
          "ORACLE v1 n=3 kind=reduced\n"
          "LEVEL k=1 count=1\n"
          "0 ; 1 ; 0 2 1\n"
          "LEVEL k=2 count=0\n");

    OracleFile headerless;  // channels == -1 cannot be serialized
    CHECK_THROWS_AS(write_oracle_text(headerless), std::invalid_argument);
}

TEST_CASE("round-trip through text and through files") {
    const ProduceResult produced = produce(4, 6);
    OracleFile oracle;
    oracle.channels = 4;
    oracle.kind = OracleKind::raw;
    oracle.levels = produced.oracle;

    const std::string text = write_oracle_text(oracle);
    const OracleFile back = read_oracle_text(text);
    CHECK(back == oracle);
    CHECK(write_oracle_text(back) == text);  // byte-identical re-emission

    testutil::ScratchDir dir;
    const std::string path = dir.file("roundtrip.oracle");
    write_oracle(oracle, path);
    CHECK(read_oracle(path) == oracle);
    CHECK(testutil::read_text_file(path) == text);

    CHECK_THROWS_AS(read_oracle(dir.file("missing.oracle")), std::runtime_error);
}

TEST_CASE("comments are ignored anywhere, blank lines are not") {
    const std::string commented =
        "# produced by hand\n"
        "ORACLE v1 n=3 kind=raw\n"
        "# the only level\n"
        "LEVEL k=1 count=2\n"
        "0 ; 1 ; 0 2 1\n"
        "# between triples\n"
        "0 ; 2 ; 1 0 2\n"
        "# trailing\n";
    const OracleFile oracle = read_oracle_text(commented);
    CHECK(oracle.channels == 3);
    REQUIRE(oracle.levels.size() == 1);
    CHECK(oracle.levels[0].triples.size() == 2);
    CHECK(oracle.levels[0].triples[1].perm.image == std::vector<int>{1, 0, 2});

    CHECK_THROWS_WITH_AS(
        (void)read_oracle_text("ORACLE v1 n=3 kind=raw\n\nLEVEL k=1 count=0\n"),
        "line 2: blank line", OracleParseError);
}

TEST_CASE("an empty or comment-only file has zero levels") {
    for (const std::string text : {std::string(""), std::string("# nothing here\n# at all\n")}) {
        const OracleFile oracle = read_oracle_text(text);
        CHECK(oracle.channels == -1);
        CHECK(oracle.levels.empty());
    }
}

TEST_CASE("parse errors carry the offending line number") {
    const auto line_of = [](const std::string& text) -> std::size_t {
        try {
            (void)read_oracle_text(text);
        } catch (const OracleParseError& e) {
            return e.line;
        }
        return 0;  // no error raised
    };

    SUBCASE("bad header") {
        CHECK(line_of("ORACLE v2 n=3 kind=raw\n") == 1);
        CHECK(line_of("ORACLE v1 n=17 kind=raw\n") == 1);
        CHECK(line_of("ORACLE v1 n=3 kind=maybe\n") == 1);
        CHECK(line_of("# c\nORACLE v1 n=3\n") == 2);
    }

    SUBCASE("levels must be contiguous from one") {
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=2 count=0\n") == 2);
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=0\nLEVEL k=3 count=0\n") == 3);
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=0 x\n") == 2);
    }

    SUBCASE("non-bijective permutation") {
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n0 ; 1 ; 0 0 2\n") == 3);
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n0 ; 1 ; 0 1\n") == 3);
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n0 ; 1 ; 0 1 3\n") == 3);
        // double space: images are separated by exactly one space
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n0 ; 1 ; 0  2 1\n") == 3);
    }

    SUBCASE("network problems") {
        // code 3 is out of range on three channels
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n3 ; 1 ; 0 1 2\n") == 3);
        // size-2 network inside a k=1 level
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n0,1 ; 1 ; 0 1 2\n") == 3);
        // missing field separator
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n0 ; 1 0 1 2\n") == 3);
    }

    SUBCASE("declared count must match exactly") {
        // one triple short: detected at end of input
        const std::string truncated =
            "ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=2\n0 ; 1 ; 0 2 1\n";
        CHECK_THROWS_WITH_AS((void)read_oracle_text(truncated),
                             doctest::Contains("unexpected end of file"), OracleParseError);
        // one triple too many: the extra line is not a level header
        CHECK(line_of("ORACLE v1 n=3 kind=raw\nLEVEL k=1 count=1\n"
                      "0 ; 1 ; 0 2 1\n0 ; 2 ; 1 0 2\n") == 4);
    }
}

TEST_CASE("build_graph enforces out-degree one and acyclicity") {
    const Network a = net_of(4, {0});
    const Network b = net_of(4, {1});
    const Network c = net_of(4, {4});
    const Permutation id = Permutation::identity(4);

    SUBCASE("a single edge") {
        OracleLevel level{1, {triple_of(a, b, id)}};
        const SubsumptionGraph graph = build_graph(level, 4);
        CHECK(graph.k == 1);
        REQUIRE(graph.edges.size() == 1);
        CHECK(graph.edges.begin()->first == b);
        CHECK(graph.edges.begin()->second.subsumer == a);
    }

    SUBCASE("a path is accepted") {
        OracleLevel level{1, {triple_of(b, c, id), triple_of(a, b, id)}};
        const SubsumptionGraph graph = build_graph(level, 4);
        CHECK(graph.edges.size() == 2);
    }

    SUBCASE("removing one network twice is an error") {
        OracleLevel level{1, {triple_of(a, c, id), triple_of(b, c, id)}};
        try {
            (void)build_graph(level, 4);
            FAIL("expected PreprocessError");
        } catch (const PreprocessError& e) {
            CHECK(e.level_k == 1);
            CHECK(std::string(e.what()).find("removed by two") != std::string::npos);
        }
    }

    SUBCASE("a two-cycle is an error") {
        const Network x = net_of(4, {0, 1, 2});
        const Network y = net_of(4, {0, 1, 3});
        OracleLevel level{3, {triple_of(x, y, id), triple_of(y, x, id)}};
        try {
            (void)build_graph(level, 4);
            FAIL("expected PreprocessError");
        } catch (const PreprocessError& e) {
            CHECK(e.level_k == 3);
            CHECK(std::string(e.what()).find("cycle") != std::string::npos);
        }
    }

    SUBCASE("a self-loop is a cycle") {
        OracleLevel level{1, {triple_of(a, a, id)}};
        CHECK_THROWS_AS((void)build_graph(level, 4), PreprocessError);
    }
}

TEST_CASE("reduce collapses chains to their roots") {
    // Chain of one-comparator four-channel networks:
    //   (2,3) subsumed by (1,3) subsumed by (0,2) subsumed by (0,1).
    const Network n01 = net_of(4, {0});
    const Network n02 = net_of(4, {1});
    const Network n13 = net_of(4, {4});
    const Network n23 = net_of(4, {5});

    const auto p1 = testref::exhaustive_subsumption(n13, n23);
    const auto p2 = testref::exhaustive_subsumption(n02, n13);
    const auto p3 = testref::exhaustive_subsumption(n01, n02);
    REQUIRE(p1.has_value());
    REQUIRE(p2.has_value());
    REQUIRE(p3.has_value());

    const Permutation q1 = perm_of(*p1);
    const Permutation q2 = perm_of(*p2);
    const Permutation q3 = perm_of(*p3);
    OracleLevel raw{1, {triple_of(n13, n23, q1), triple_of(n02, n13, q2),
                        triple_of(n01, n02, q3)}};
    const OracleLevel reduced = reduce(build_graph(raw, 4));

    REQUIRE(reduced.triples.size() == 3);
    // Sorted by subsumed network: (0,2) < (1,3) < (2,3) canonically.
    CHECK(reduced.triples[0].subsumed == n02);
    CHECK(reduced.triples[1].subsumed == n13);
    CHECK(reduced.triples[2].subsumed == n23);
    for (const SubsumptionWitness& triple : reduced.triples) {
        CHECK(triple.subsumer == n01);  // everything points at the root
        CHECK(testref::naive_subsumes(triple.subsumer, triple.subsumed, triple.perm));
    }
    // The composed permutations are pinned by the label algebra: each
    // step applies the next label first, then the accumulated map.
    CHECK(reduced.triples[0].perm == q3);
    CHECK(reduced.triples[1].perm == compose(q2, q3));
    CHECK(reduced.triples[2].perm == compose(compose(q1, q2), q3));

    SUBCASE("the reduced level is chain-free and reduction is idempotent") {
        std::set<Network, NetworkLess> subsumed;
        for (const SubsumptionWitness& triple : reduced.triples)
            subsumed.insert(triple.subsumed);
        for (const SubsumptionWitness& triple : reduced.triples)
            CHECK(!subsumed.contains(triple.subsumer));
        CHECK(reduce(build_graph(reduced, 4)) == reduced);
    }
}

TEST_CASE("reduce leaves stars untouched") {
    const Network a = net_of(4, {0});
    const Network b = net_of(4, {1});
    const Network c = net_of(4, {2});
    const Network d = net_of(4, {3});
    const auto pb = testref::exhaustive_subsumption(a, b);
    const auto pc = testref::exhaustive_subsumption(a, c);
    const auto pd = testref::exhaustive_subsumption(a, d);
    REQUIRE((pb && pc && pd));
    OracleLevel star{1, {triple_of(a, b, perm_of(*pb)), triple_of(a, c, perm_of(*pc)),
                         triple_of(a, d, perm_of(*pd))}};
    const OracleLevel reduced = reduce(build_graph(star, 4));
    CHECK(reduced == star);  // already sorted by subsumed, already root-pointing
}

TEST_CASE("preprocess is the per-level map and is identity on produced oracles") {
    for (int n : {3, 4}) {
        const ProduceResult produced = produce(n, 8);
        const std::vector<OracleLevel> reduced = preprocess(produced.oracle, n);
        // The producer already emits root-pointing triples in canonical
        // subsumed order, so reduction changes nothing.
        CHECK(reduced == produced.oracle);
        CHECK(preprocess(reduced, n) == reduced);
    }
}

TEST_CASE("preprocess reports the level it failed on") {
    const Permutation id = Permutation::identity(4);
    std::vector<OracleLevel> levels;
    levels.push_back(OracleLevel{1, {}});
    levels.push_back(OracleLevel{2, {}});
    const Network x = net_of(4, {0, 1, 2});
    const Network y = net_of(4, {0, 1, 3});
    levels.push_back(
        OracleLevel{3, {triple_of(x, y, id), triple_of(y, x, id)}});  // cycle at k=3
    try {
        (void)preprocess(levels, 4);
        FAIL("expected PreprocessError");
    } catch (const PreprocessError& e) {
        CHECK(e.level_k == 3);
    }
}
