#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "liequad/jobs.hpp"

using namespace liequad;

namespace {

JobSpec base(const std::string& command, const std::string& type, const std::string& weight) {
    JobSpec s;
    s.command = command;
    s.type_string = type;
    s.weight_string = weight;
    return s;
}

} // namespace

TEST_CASE("describe") {
    auto r = run(base("describe", "G2", ""));
    CHECK(r.exit_status == 0);
    CHECK(r.results["positive_roots"] == 6);
    CHECK(r.results["dim_g"] == 14);
    CHECK(r.results["delta"] == "1,1");
}

TEST_CASE("rep report") {
    auto r = run(base("rep", "A3", "0,1,0"));
    CHECK(r.exit_status == 0);
    CHECK(r.results["dim"] == 6);
    CHECK(r.results["weight_multiplicities"].size() == 6);
}

TEST_CASE("projector report") {
    auto r = run(base("projector", "A1", "1"));
    CHECK(r.exit_status == 0);
    CHECK(r.results["c"] == "1/4");
    CHECK(r.results["casimir_eigenvalue"] == "3/8");
    CHECK(r.results["lichtenstein_constant"] == "1");
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].pass);

    auto adj = run(base("projector", "A1", "2"));
    CHECK(adj.results["c"] == "1");
    CHECK(adj.results["lichtenstein_constant"] == "3");
}

TEST_CASE("equations report") {
    auto r = run(base("equations", "A3", "0,1,0"));
    r.results = run(base("equations", "A3", "0,1,0")).results;
    CHECK(r.exit_status == 0);
    CHECK(r.results["form_count"] == 1);
    // (2 lambda + 2 delta, 2 lambda) for sl4, omega_2: 12 in the trace
    // normalization, divided by 2 h^v = 8
    CHECK(r.results["ambient_constant"] == "3/2");

    JobSpec js = base("equations", "A3", "0,1,0");
    js.format = "json";
    auto rj = run(js);
    auto terms = rj.results["forms"][0];
    REQUIRE(terms.size() == 3);
    // complementary pairs with alternating signs, up to one overall scale
    CHECK(terms[0][0] == 1);
    CHECK(terms[0][1] == 6);
    CHECK(terms[1][0] == 2);
    CHECK(terms[1][1] == 5);
    CHECK(terms[2][0] == 3);
    CHECK(terms[2][1] == 4);
    const Rational c0 = parse_rational(terms[0][2].get<std::string>());
    CHECK(c0 != 0);
    CHECK(parse_rational(terms[1][2].get<std::string>()) == -c0);
    CHECK(parse_rational(terms[2][2].get<std::string>()) == c0);

    CHECK(run(base("equations", "A1", "1")).results["form_count"] == 0);
    CHECK(run(base("equations", "A1", "2")).results["form_count"] == 1);
}

TEST_CASE("member command") {
    JobSpec s = base("member", "A1", "2");
    s.vector_csv = "1,0,0";
    auto r = run(s);
    CHECK(r.exit_status == 0);
    CHECK(r.results["is_member"] == true);
    CHECK(r.results["residual_norm_is_zero"] == true);

    s.vector_csv = "1,0,1";
    auto r2 = run(s);
    CHECK(r2.exit_status == 0);
    CHECK(r2.results["is_member"] == false);

    s.vector_csv = "1,0";
    CHECK(run(s).exit_status == 2);
    s.vector_csv = "1,0,x";
    CHECK(run(s).exit_status == 2);
}

TEST_CASE("inner ideal command") {
    const std::string path = "/tmp/liequad_test_subspace.txt";
    {
        std::ofstream out(path);
        out << "1,0,0,0,0,0\n";
    }
    JobSpec s = base("inner-ideal", "A3", "0,1,0");
    s.subspace_path = path;
    auto r = run(s);
    CHECK(r.exit_status == 0);
    CHECK(r.results["is_inner_ideal"] == true);

    {
        std::ofstream out(path);
        out << "1,0,0,0,0,1\n";
    }
    CHECK(run(s).results["is_inner_ideal"] == false);

    s.subspace_path = "/tmp/liequad_no_such_file.txt";
    CHECK(run(s).exit_status == 2);
    std::remove(path.c_str());
}

TEST_CASE("orbit sample command") {
    JobSpec s = base("orbit-sample", "A1", "2");
    auto r0 = run(s);  // empty word
    CHECK(r0.results["vector"] == "1,0,0");

    s.word_spec = "f1:1/2";
    auto r1 = run(s);
    CHECK(r1.exit_status == 0);
    CHECK(r1.results["is_member"] == true);

    s.word_spec = "f9:1";
    CHECK(run(s).exit_status == 2);
    s.word_spec = "x1:1";
    CHECK(run(s).exit_status == 2);

    s.word_spec.clear();
    s.seed = 5;
    auto ra = run(s);
    auto rb = run(s);
    CHECK(ra.results["vector"] == rb.results["vector"]);
    CHECK(ra.results["is_member"] == true);
    CHECK(ra.render_json() == rb.render_json());
}

TEST_CASE("verify command") {
    auto r = run(base("verify", "A1", "2"));
    CHECK(r.exit_status == 0);
    CHECK(r.checks.size() > 20);
    for (const auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    bool has_gamma_note = false;
    for (const auto& n : r.notes)
        if (n.find("gamma") != std::string::npos) has_gamma_note = true;
    CHECK(has_gamma_note);
}

TEST_CASE("error statuses") {
    CHECK(run(base("describe", "H5", "")).exit_status == 2);
    CHECK(run(base("rep", "A2", "1")).exit_status == 2);
    CHECK(run(base("rep", "A2", "-1,0")).exit_status == 1);  // non-dominant
    JobSpec s = base("rep", "A3", "1,1,1");
    s.max_dim = 32;
    CHECK(run(s).exit_status == 3);
    CHECK(run(base("nonsense", "A1", "1")).exit_status == 2);
    // the trivial module is rejected by the faithfulness requirement
    CHECK(run(base("projector", "A1", "0")).exit_status == 1);
}

TEST_CASE("output is byte deterministic and rationals round trip") {
    JobSpec s = base("projector", "A2", "1,1");
    s.format = "json";
    auto a = run(s);
    auto b = run(s);
    CHECK(a.render_json() == b.render_json());

    auto parsed = nlohmann::json::parse(a.render_json());
    for (const auto& key : {"c", "casimir_eigenvalue", "lichtenstein_constant"}) {
        const std::string text = parsed["results"][key].get<std::string>();
        CHECK(rational_str(parse_rational(text)) == text);
    }
}
