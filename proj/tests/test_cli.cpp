#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

// Drives the installed binary end to end: exact bytes for table output,
// parsed JSON for json output, and the documented exit codes.

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string command = std::string(USETS_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

std::string data(const std::string& name) { return std::string(USETS_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("assess renders the mean interval, value, and grade") {
    RunResult r = run("assess --grades A:3,B:7,C:5,D:3,F:2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "mean: [61.5000, 76.6500]\nvalue: 69.0750\ngrade: C\n");

    RunResult single = run("assess --grades A:5");
    CHECK(single.exit_code == 0);
    CHECK(single.output == "mean: [85.0000, 100.0000]\nvalue: 92.5000\ngrade: A\n");
}

TEST_CASE("assess json output carries full precision") {
    RunResult r = run("assess --grades A:3,B:7,C:5,D:3,F:2 --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(std::abs(parsed["value"].get<double>() - 69.075) <= 1e-9);
    CHECK(parsed["grade"] == "C");
    CHECK(std::abs(parsed["mean"][0].get<double>() - 61.5) <= 1e-9);
    CHECK(std::abs(parsed["mean"][1].get<double>() - 76.65) <= 1e-9);
}

TEST_CASE("assess reads grade specs from a file and honors a custom scale") {
    std::string spec_path = "/tmp/usets_grades_spec.txt";
    {
        FILE* f = fopen(spec_path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("A:3,B:7,C:5,D:3,F:2\n", f);
        fclose(f);
    }
    RunResult from_file = run("assess --grades-file " + spec_path);
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == "mean: [61.5000, 76.6500]\nvalue: 69.0750\ngrade: C\n");
    std::remove(spec_path.c_str());

    RunResult custom = run("assess --grades A:5 --scale " + data("scale_alt.json"));
    CHECK(custom.exit_code == 0);
    CHECK(custom.output == "mean: [80.0000, 100.0000]\nvalue: 90.0000\ngrade: A\n");
}

TEST_CASE("assess validation and io failures use distinct exit codes") {
    RunResult unknown = run("assess --grades A:3,Q:1", true);
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.output.find("unknown grade 'Q'") != std::string::npos);

    RunResult malformed = run("assess --grades A3", true);
    CHECK(malformed.exit_code == 1);

    RunResult missing = run("assess --grades A:3 --scale /nonexistent.json", true);
    CHECK(missing.exit_code == 2);
}

TEST_CASE("decide ranks the mixed six-house table") {
    RunResult r = run("decide " + data("houses_table3.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "method: hybrid\n"
          "choice values:\n"
          "  H1: 1.5950\n"
          "  H2: 2.1700\n"
          "  H3: 3.3400\n"
          "  H4: 1.4700\n"
          "  H5: 3.2150\n"
          "  H6: 2.4700\n"
          "ranking:\n"
          "  1. H3 (3.3400)\n"
          "  2. H5 (3.2150)\n"
          "  3. H6 (2.4700)\n"
          "  4. H2 (2.1700)\n"
          "  5. H1 (1.5950)\n"
          "  6. H4 (1.4700)\n");

    SUBCASE("identical runs are byte identical") {
        RunResult again = run("decide " + data("houses_table3.json"));
        CHECK(again.output == r.output);
    }
}

TEST_CASE("decide --weighted applies the stored weights") {
    RunResult r = run("decide " + data("houses_table3.json") + " --weighted");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "method: weighted\n"
          "choice values:\n"
          "  H1: 1.1675\n"
          "  H2: 1.6550\n"
          "  H3: 2.2380\n"
          "  H4: 0.9530\n"
          "  H5: 2.1255\n"
          "  H6: 1.8050\n"
          "ranking:\n"
          "  1. H3 (2.2380)\n"
          "  2. H5 (2.1255)\n"
          "  3. H6 (1.8050)\n"
          "  4. H2 (1.6550)\n"
          "  5. H1 (1.1675)\n"
          "  6. H4 (0.9530)\n");
}

TEST_CASE("decide reports tie groups for the all-binary table") {
    RunResult r = run("decide " + data("houses_table2.csv"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "method: binary\n"
          "choice values:\n"
          "  H1: 1.0000\n"
          "  H2: 2.0000\n"
          "  H3: 2.0000\n"
          "  H4: 1.0000\n"
          "  H5: 2.0000\n"
          "  H6: 2.0000\n"
          "ranking:\n"
          "  1. H2, H3, H5, H6 (2.0000)\n"
          "  2. H1, H4 (1.0000)\n");
}

TEST_CASE("decide json output lists values and tie groups") {
    RunResult r = run("decide " + data("houses_table2.csv") + " --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["method"] == "binary");
    CHECK(parsed["ranking"][0] == nlohmann::json::array({"H2", "H3", "H5", "H6"}));
    CHECK(parsed["values"]["H3"] == 2.0);
}

TEST_CASE("decide --weighted without weights fails validation") {
    RunResult r = run("decide " + data("houses_table2.csv") + " --weighted", true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("soft complement of the worked example") {
    RunResult r = run("soft complement " + data("example1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "universe: H1 H2 H3\n"
          "parameters: e1 e2 e3\n"
          "support:\n"
          "  e1: {H3}\n"
          "  e2: {H1}\n");
}

TEST_CASE("soft union merges supports") {
    RunResult r = run("soft union " + data("example1_s2.json") + " " + data("example1_s5.json") +
                      " --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["support"]["e1"] == nlohmann::json::array({"H2"}));
    CHECK(parsed["support"]["e2"] == nlohmann::json::array({"H3"}));
}

TEST_CASE("soft intersect of disjoint supports yields an empty support") {
    RunResult r = run("soft intersect " + data("example1_s2.json") + " " +
                      data("example1_s5.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "universe: H1 H2 H3\n"
          "parameters: e1 e2 e3\n"
          "support:\n");
}

TEST_CASE("soft subsets enumerates the sixteen subsets") {
    RunResult r = run("soft subsets " + data("example1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, 10) == "count: 16\n");
    CHECK(r.output.find("  16. (e1: {}) (e2: {})\n") != std::string::npos);

    RunResult as_json = run("soft subsets " + data("example1.json") + " --format json");
    auto parsed = nlohmann::json::parse(as_json.output);
    CHECK(parsed["count"] == 16);
    CHECK(parsed["subsets"].size() == 16);
}

TEST_CASE("soft tabular prints the binary matrix as CSV") {
    RunResult r = run("soft tabular " + data("cars.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == ",e1,e2,e3\nC1,1,0,0\nC2,1,1,0\nC3,0,1,1\n");
}

TEST_CASE("soft check-subset reports containment and properness") {
    RunResult r = run("soft check-subset " + data("example1_s1.json") + " " +
                      data("example1.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "subset: yes\nproper: yes\n");

    RunResult reversed = run("soft check-subset " + data("example1.json") + " " +
                             data("example1_s1.json"));
    CHECK(reversed.output == "subset: no\nproper: no\n");
}

TEST_CASE("soft operations reject mismatched frames") {
    RunResult r = run("soft union " + data("example1.json") + " " + data("cars.json"), true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("topology verifies the worked soft family") {
    RunResult r = run("topology " + data("topology_soft.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output == "soft topology: yes\n");
}

TEST_CASE("topology reports the escaping union with indices") {
    RunResult r = run("topology " + data("topology_soft_bad.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "soft topology: no\n"
          "witness: union of opens[2] and opens[3] is not in the family\n");
}

TEST_CASE("topology reports missing universal sets") {
    RunResult r = run("topology " + data("topology_fuzzy_bad.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "fuzzy topology: no\n"
          "witness: the universal set is not in the family\n");
}

TEST_CASE("topology --separation classifies the crisp power set") {
    RunResult r = run("topology " + data("topology_fuzzy.json") + " --separation");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "fuzzy topology: yes\nseparation: T2\n");
}

TEST_CASE("topology continuity between soft families") {
    RunResult r = run("topology " + data("topology_soft.json") + " --continuity " +
                      data("topology_soft_discrete.json") +
                      " --point-map H1:H1,H2:H2,H3:H3 --param-map e1:e1,e2:e2,e3:e3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "soft topology: yes\ncontinuous: yes\n");
}

TEST_CASE("topology continuity between fuzzy families") {
    RunResult r = run("topology " + data("topology_fuzzy.json") + " --continuity " +
                      data("topology_fuzzy.json") + " --point-map x:x,y:y");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "fuzzy topology: yes\ncontinuous: yes\n");
}

TEST_CASE("separation on a soft family is a validation error") {
    RunResult r = run("topology " + data("topology_soft.json") + " --separation", true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("missing inputs exit with the io code") {
    RunResult r = run("topology /nonexistent/family.json", true);
    CHECK(r.exit_code == 2);
    RunResult d = run("decide /nonexistent/table.json", true);
    CHECK(d.exit_code == 2);
}

TEST_CASE("malformed json exits with the validation code") {
    RunResult r = run("soft complement " + data("malformed.json"), true);
    CHECK(r.exit_code == 1);
}

TEST_CASE("topology json output mirrors the table verdict") {
    RunResult r = run("topology " + data("topology_soft_bad.json") + " --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["kind"] == "soft");
    CHECK(parsed["topology"] == false);
    CHECK(parsed["witness"] == "union of opens[2] and opens[3] is not in the family");
}

TEST_CASE("out-of-range degrees in a fuzzy family fail validation") {
    std::string family_path = "/tmp/usets_bad_fuzzy.json";
    {
        FILE* f = fopen(family_path.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"kind\": \"fuzzy\", \"universe\": [\"x\"], \"opens\": [{\"x\": 1.5}]}", f);
        fclose(f);
    }
    RunResult r = run("topology " + family_path, true);
    CHECK(r.exit_code == 1);
    std::remove(family_path.c_str());
}
