#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aucc/csv.hpp"
#include "aucc/error.hpp"
#include "oracles.hpp"

using namespace aucc;

namespace {

// scratch file in the test working directory, removed on destruction
struct TempCsv {
    explicit TempCsv(const std::string& stem, const std::string& content)
        : path(stem + ".tmp.csv") {
        std::ofstream out(path);
        out << content;
    }
    ~TempCsv() { std::remove(path.c_str()); }
    std::string path;
};

const std::string kDataDir = AUCC_DATA_DIR;

} // namespace

TEST_CASE("dataset csv with header and label column") {
    TempCsv f("ds_header",
              "x,y,class\n"
              "0.5,1.5,a\n"
              "1.5,0.5,a\n"
              "9.0,9.0,b\n");
    const auto loaded = load_dataset_csv(f.path, true);
    CHECK(loaded.data.size() == 3);
    CHECK(loaded.data.dim() == 2);
    CHECK(loaded.data(0, 1) == 1.5);
    REQUIRE(loaded.truth.has_value());
    CHECK(loaded.truth->classes() == 2);
    CHECK(oracles::to_vector(loaded.truth->labels()) ==
          std::vector<int>{0, 0, 1});
}

TEST_CASE("dataset csv without header or labels") {
    TempCsv f("ds_plain", "1,2\n3,4\n5,6\n");
    const auto loaded = load_dataset_csv(f.path);
    CHECK(loaded.data.size() == 3);
    CHECK(loaded.data.dim() == 2);
    CHECK(loaded.data(2, 0) == 5.0);
    CHECK_FALSE(loaded.truth.has_value());
}

TEST_CASE("dataset csv rejects ragged rows and bad numbers") {
    TempCsv ragged("ds_ragged", "1,2\n3\n");
    CHECK_THROWS_AS(load_dataset_csv(ragged.path), input_error);
    TempCsv bad("ds_bad", "1,2\n3,oops\n");
    CHECK_THROWS_AS(load_dataset_csv(bad.path), input_error);
    CHECK_THROWS_AS(load_dataset_csv("definitely_missing.csv"), input_error);
}

TEST_CASE("bundled similarity matrix loads with its orientation") {
    const auto m = load_matrix_csv(kDataDir + "/toy7_similarity.csv",
                                   ScoreOrientation::similarity);
    CHECK(m.size() == 7);
    CHECK(m.orientation() == ScoreOrientation::similarity);
    CHECK(m.at(0, 1) == 0.82);
    CHECK(m.at(5, 6) == 0.90);
    // similarity: larger ranks closer
    CHECK(m.more_similar(0.9, 0.1));
}

TEST_CASE("matrix csv validation") {
    TempCsv asym("m_asym", "0,1\n2,0\n");
    CHECK_THROWS_AS(load_matrix_csv(asym.path, ScoreOrientation::dissimilarity),
                    input_error);
    TempCsv rect("m_rect", "0,1,2\n1,0,3\n");
    CHECK_THROWS_AS(load_matrix_csv(rect.path, ScoreOrientation::dissimilarity),
                    input_error);
    TempCsv diag("m_diag", "0.5,1\n1,0\n");
    CHECK_THROWS_AS(load_matrix_csv(diag.path, ScoreOrientation::dissimilarity),
                    input_error);
    // header row skipped
    TempCsv headed("m_headed", "a,b\n0,1\n1,0\n");
    CHECK(load_matrix_csv(headed.path, ScoreOrientation::dissimilarity).size() ==
          2);
}

TEST_CASE("partition and ground truth files") {
    const auto p = load_partition(kDataDir + "/toy7_partition.txt");
    CHECK(p.size() == 7);
    CHECK(p.k() == 2);
    CHECK(oracles::to_vector(p.labels()) ==
          std::vector<int>{0, 0, 0, 0, 1, 1, 1});

    TempCsv one_row("p_row", "0,0,1,1,2\n");
    CHECK(load_partition(one_row.path).k() == 3);

    TempCsv junk("p_junk", "0\nx\n1\n");
    CHECK_THROWS_AS(load_partition(junk.path), input_error);

    TempCsv names("g_names", "setosa\nsetosa\nvirginica\n");
    const auto g = load_ground_truth(names.path);
    CHECK(g.classes() == 2);
    CHECK(oracles::to_vector(g.labels()) == std::vector<int>{0, 0, 1});
}

TEST_CASE("pair arrays csv") {
    const auto arrays = load_pair_arrays_csv(kDataDir + "/tied_scores.csv");
    REQUIRE(arrays.flags.size() == 6);
    CHECK(arrays.flags == std::vector<std::uint8_t>{1, 0, 1, 1, 0, 0});
    CHECK(arrays.scores[0] == 0.75);
    CHECK(arrays.scores[5] == 0.20);

    TempCsv badflag("pa_badflag", "flag,score\n2,0.5\n1,0.4\n");
    CHECK_THROWS_AS(load_pair_arrays_csv(badflag.path), input_error);
    TempCsv short_file("pa_short", "flag,score\n1,0.5\n");
    CHECK_THROWS_AS(load_pair_arrays_csv(short_file.path), input_error);
}

TEST_CASE("dataset csv round-trip") {
    const Dataset data({1.25, -3.5, 0.0078125, 42.0}, 2, 2);
    const std::vector<int> labels{3, 5};
    std::ostringstream out;
    write_dataset_csv(out, data, &labels);
    CHECK(out.str().rfind("f0,f1,label\n", 0) == 0);

    TempCsv f("ds_roundtrip", out.str());
    const auto loaded = load_dataset_csv(f.path, true);
    REQUIRE(loaded.data.size() == 2);
    CHECK(loaded.data(0, 0) == 1.25);
    CHECK(loaded.data(0, 1) == -3.5);
    CHECK(loaded.data(1, 0) == 0.0078125);
    CHECK(loaded.data(1, 1) == 42.0);
    CHECK(oracles::to_vector(loaded.truth->labels()) == std::vector<int>{0, 1});
}

TEST_CASE("bundled datasets load cleanly") {
    const auto iris = load_dataset_csv(kDataDir + "/iris.csv", true);
    CHECK(iris.data.size() == 150);
    CHECK(iris.data.dim() == 4);
    REQUIRE(iris.truth.has_value());
    CHECK(iris.truth->classes() == 3);

    const auto ruspini = load_dataset_csv(kDataDir + "/ruspini.csv", true);
    CHECK(ruspini.data.size() == 75);
    CHECK(ruspini.data.dim() == 2);
    REQUIRE(ruspini.truth.has_value());
    CHECK(ruspini.truth->classes() == 4);
}
