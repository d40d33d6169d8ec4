#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "eqsc/cpn.hpp"
#include "eqsc/graph_file.hpp"
#include "eqsc/random_table.hpp"
#include "test_support.hpp"

namespace eqsc {
namespace {

namespace fs = std::filesystem;

bool same_table(const CanonicalTable& a, const CanonicalTable& b) {
    if (a.variables() != b.variables() || a.size() != b.size()) return false;
    for (PointId i = 0; i < a.size(); ++i)
        if (a.name(i) != b.name(i) || a.lambda(i) != b.lambda(i)) return false;
    return a.entries() == b.entries();
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("eqsc_graph_file_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

TEST_F(TempDir, CpnRoundTrip) {
    const auto path = dir_ / "cp2.json";
    save_table(cpn_table(2), path);
    const auto g = load_graph(path);
    EXPECT_TRUE(same_table(g.table(), cpn_table(2)));
    EXPECT_EQ(g.edges(), (std::set<std::pair<PointId, PointId>>{{0, 1}, {1, 2}}));
}

TEST_F(TempDir, RandomRoundTrips) {
    for (int seed = 0; seed < 50; ++seed) {
        const auto t = random_valid_table(1 + seed % 4, {1, 2, 2, 1}, seed);
        const auto path = dir_ / "t.json";
        save_table(t, path);
        EXPECT_TRUE(same_table(load_table(path), t));
    }
}

TEST_F(TempDir, MissingFile) { EXPECT_THROW(load_table(dir_ / "absent.json"), IoError); }

TEST(GraphFile, MissingDiagonalNamesThePoint) {
    auto doc = table_to_json(cpn_table(2));
    auto& alpha = doc["alpha"];
    for (auto it = alpha.begin(); it != alpha.end(); ++it) {
        if ((*it)["p"] == "p2" && (*it)["q"] == "p2") {
            alpha.erase(it);
            break;
        }
    }
    const auto t = table_from_json(doc);
    try {
        build_graph(t);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("p2"), std::string::npos);
    }
}

TEST(GraphFile, UndeclaredVariableIsAParseErrorWithLocation) {
    auto doc = table_to_json(cpn_table(2));
    doc["alpha"].push_back({{"p", "p2"}, {"q", "p1"}, {"poly", "t0 - s9"}});
    try {
        table_from_json(doc);
        FAIL() << "expected EntryParseError";
    } catch (const EntryParseError& e) {
        EXPECT_EQ(e.offset(), 5u);
        EXPECT_NE(std::string(e.what()).find("(p2, p1)"), std::string::npos);
    }
}

TEST(GraphFile, SchemaErrors) {
    using nlohmann::json;
    EXPECT_THROW(table_from_json(json::array()), SchemaError);
    EXPECT_THROW(table_from_json(json{{"variables", {"t0"}}, {"points", json::array()}}), SchemaError);
    EXPECT_THROW(table_from_json(json{{"variables", {"t0", "t0"}}, {"points", json::array()}, {"alpha", json::array()}}),
                 SchemaError);
    EXPECT_THROW(table_from_json(json{{"variables", {"t0"}},
                                      {"points", {{{"name", "a"}, {"lambda", 0}}, {{"name", "a"}, {"lambda", 1}}}},
                                      {"alpha", json::array()}}),
                 SchemaError);
    EXPECT_THROW(table_from_json(json{{"variables", {"t0"}},
                                      {"points", {{{"name", "a"}, {"lambda", 0}}}},
                                      {"alpha", {{{"p", "a"}, {"q", "b"}, {"poly", "1"}}}}}),
                 SchemaError);
    EXPECT_THROW(parse_json_text("{not json"), SchemaError);
}

} // namespace
} // namespace eqsc
