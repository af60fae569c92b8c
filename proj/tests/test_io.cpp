#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "icat/fixtures.hpp"
#include "icat/io.hpp"
#include "icat/run.hpp"

using namespace icat;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> bundled = {"F1_unit.json",     "F2_points.json",       "F3_poset.json",
                                          "F4_z2.json",       "F5_sweedler.json",     "F6_hopf_galois.json",
                                          "F7_comatrix.json"};

std::string fixture_path(const std::string& name) { return std::string(ICAT_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

io::Document reparse(const io::Document& d) { return io::parse(io::dump(d)); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Mismatch;
}

std::string error_text(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

// Exit status of the CLI on `args`, stdout captured into `out`.
int run_cli(const std::string& args, std::string* out = nullptr, const std::string& env = {}) {
    const fs::path tmp = fs::temp_directory_path() / "icat_cli_test.out";
    const std::string cmd = env + " " + ICAT_CLI + " " + args + " > " + tmp.string() + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    if (out) *out = slurp(tmp.string());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

}  // namespace

TEST_CASE("bundled documents parse and are in canonical form") {
    for (const auto& name : bundled) {
        INFO(name);
        const std::string text = slurp(fixture_path(name));
        const io::Document d = io::parse(text);
        CHECK(io::dump(d) == text);
        CHECK(io::dump(reparse(d)) == text);
    }
}

TEST_CASE("bundled documents match the in-code fixtures") {
    const io::Document f3 = io::load(fixture_path("F3_poset.json"));
    const CategoryPtr p = fixtures::poset();
    CHECK(same_category(*f3.categories.at("F3"), *p));
    const Monad m = fixtures::ceiling_monad(p);
    const Monad& pm = f3.monads.at("ceiling");
    CHECK(same_functor(*pm.t, *m.t));
    CHECK(pm.mu.alpha == m.mu.alpha);
    CHECK(pm.eta.alpha == m.eta.alpha);
    CHECK(verify_monad(pm).ok());
    const FiniteCategory& c = f3.finite_categories.at("poset");
    const FiniteCategory chain = chain_category(2);
    CHECK(c.morphisms == chain.morphisms);
    CHECK(c.comp == chain.comp);
    CHECK(verify_set_monad(c, f3.set_monads.at("ceiling").monad).ok());

    const io::Document f5 = io::load(fixture_path("F5_sweedler.json"));
    const SweedlerPtr sw = fixtures::sweedler_z2();
    CHECK(same_coring(f5.sweedlers.at("F5")->coring, sw->coring));
    const SweedlerMonadData& g = f5.sweedler_data.at("unit_g");
    CHECK(g.t == unit_monad_data(sw, Matrix{{0}, {1}}).t);

    const io::Document f6 = io::load(fixture_path("F6_hopf_galois.json"));
    const HopfGaloisInstance hg = fixtures::hopf_galois_z2();
    const HopfGaloisInstance& h = f6.hopf_galois.at("F6");
    CHECK(h.rho == hg.rho);
    CHECK(h.incl == hg.incl);
    CHECK(same_coring(h.sw->coring, hg.sw->coring));
}

TEST_CASE("parse(serialize(x)) = x") {
    SUBCASE("fixture monads and their Kleisli data") {
        for (const auto& [name, m] : fixtures::monads()) {
            INFO(name);
            io::Document d;
            io::add(d, name, m);
            const CategoryPtr k = kleisli_object(m);
            const std::string kk = io::add(d, k);
            io::add(d, name + "_adjunction", kleisli_adjunction(m));
            const io::Document back = reparse(d);
            const Monad& bm = back.monads.at(name);
            CHECK(same_functor(*bm.t, *m.t));
            CHECK(same_functor(*bm.mu.source, *m.mu.source));
            CHECK(bm.mu.alpha == m.mu.alpha);
            CHECK(bm.eta.alpha == m.eta.alpha);
            CHECK(same_category(*back.categories.at(kk), *k));
            const Adjunction& ba = back.adjunctions.at(name + "_adjunction");
            CHECK(verify_adjunction(ba).ok());
            CHECK(io::dump(back) == io::dump(d));
        }
    }
    SUBCASE("corings, twisting data and finite categories") {
        const SweedlerPtr sw = fixtures::sweedler_z2();
        const SweedlerMonadData data = unit_monad_data(sw, Matrix{{0}, {1}});
        io::Document d;
        io::add(d, "g", data);
        io::add(d, "td", sweedler_twisting_datum(data));
        const FiniteCategory z3 = cyclic_group_category(3);
        io::add(d, z3);
        io::add(d, "id", z3.name, identity_set_monad(z3));
        const io::Document back = reparse(d);
        CHECK(io::dump(back) == io::dump(d));
        const TwistingDatum& td = back.twisting.at("td");
        const TwistingDatum ref = sweedler_twisting_datum(data);
        CHECK(same_coring(td.c, ref.c));
        CHECK(same_coring(td.d, ref.d));
        CHECK(td.theta == ref.theta);
        const FiniteCategory& bz = back.finite_categories.at(z3.name);
        CHECK(bz.comp == z3.comp);
        CHECK(bz.identity == z3.identity);
        // classical Kleisli categories put identities last; explicit form keeps the order
        const FiniteCategory ck = classical_kleisli(chain_category(2), SetMonad{{1, 1}, {1, 1, 1}, {2, 1}, {1, 1}});
        io::Document e;
        io::add(e, ck);
        const io::Document eb = reparse(e);
        const FiniteCategory& bck = eb.finite_categories.begin()->second;
        CHECK(bck.morphisms == ck.morphisms);
        CHECK(bck.comp == ck.comp);
    }
    SUBCASE("scalars") {
        io::Document d;
        Matrix m(1, 3);
        m(0, 0) = Scalar::parse("-7/3");
        m(0, 1) = Scalar::parse("123456789012345678901234567890");
        m(0, 2) = Scalar::parse("5");
        d.matrices["m"] = m;
        d.matrices["empty"] = Matrix(0, 3);
        const io::Document back = reparse(d);
        CHECK(back.matrices.at("m") == m);
        CHECK(back.matrices.at("empty").cols() == 3);
        CHECK(io::dump(d).find("\"-7/3\"") != std::string::npos);
    }
}

TEST_CASE("input errors") {
    CHECK(kind_of([] { io::parse(R"({"matrices": {"a": [[1, "1/0"]]}})"); }) == ErrorKind::BadScalar);
    CHECK(kind_of([] { io::parse(R"({"matrices": {"a": [[1.5]]}})"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::parse(R"({"functors": {"f": {"src": "X", "dst": "X", "f0": [[1]], "f1": [[1]]}}})"); }) ==
          ErrorKind::UnresolvedReference);
    CHECK(kind_of([] { io::parse(R"({"comonoids": {"k": {"delta": [[1]], "counit": [[1]], "extra": 1}}})"); }) ==
          ErrorKind::ParseError);
    CHECK(kind_of([] { io::parse(R"({"comonoids": {"k": {"delta": [[1], [0]], "counit": [[1]]}}})"); }) ==
          ErrorKind::ShapeMismatch);
    CHECK(kind_of([] { io::parse(R"({"field": "Fp", "p": 4})"); }) == ErrorKind::BadScalar);
    CHECK(kind_of([] { io::parse(R"({"field": "R"})"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::parse(R"({"unknown": {}})"); }) == ErrorKind::ParseError);

    const std::string msg = error_text([] { io::parse("{\n  \"matrices\": {\n    \"a\": [1,]\n  }\n}"); });
    CHECK(msg.find("ParseError: line 3, column") != std::string::npos);
    CHECK(error_text([] { io::parse(R"({"matrices": {"a": [[1, "x"]]}})"); }).find("/matrices/a/0/1") !=
          std::string::npos);
}

TEST_CASE("fields") {
    const io::Document d = io::parse(R"({"field": "Fp", "p": 5, "matrices": {"a": [["1/2", -1]]}})");
    CHECK(d.field == Field::prime(5));
    CHECK(d.matrices.at("a") == Matrix({{3, 4}}, Field::prime(5)));
    CHECK(io::dump(d).find("\"p\": 5") != std::string::npos);
    const std::string plain = R"({"matrices": {"a": [[2]]}})";
    CHECK(io::parse(plain, {}, Field::prime(3)).field == Field::prime(3));
    CHECK(io::parse(R"({"field": "Q"})", {}, Field::prime(3)).field == Field::rationals());
    CHECK(io::parse(R"({"field": "Q"})", Field::prime(7)).field == Field::prime(7));
    CHECK(io::parse_field("F7") == Field::prime(7));
    CHECK(io::parse_field("Fp:11") == Field::prime(11));
    CHECK(kind_of([] { io::parse_field("F"); }) == ErrorKind::ParseError);
}

TEST_CASE("run dispatch") {
    const io::Document f3 = io::load(fixture_path("F3_poset.json"));
    const cli::RunResult k = cli::run_task(f3, "kleisli");
    CHECK(k.report.ok());
    CHECK(k.report.passed("theta is the identity"));
    const CategoryPtr kl = k.output.categories.at("ceiling_kleisli");
    CHECK(kl->A.dim() == 4);
    CHECK(same_category(*kl, *kleisli_object(fixtures::ceiling_monad(fixtures::poset()))));
    CHECK(io::dump(io::report_json(k.report)) == io::dump(io::report_json(cli::run_task(f3, "kleisli").report)));
    CHECK(io::dump(k.output) == io::dump(reparse(k.output)));

    for (const char* t : {"oracle", "adjunction", "cokleisli", "opkleisli", "theta"}) {
        INFO(t);
        CHECK(cli::run_task(f3, t).report.ok());
    }

    const io::Document f5 = io::load(fixture_path("F5_sweedler.json"));
    CHECK(cli::run_task(f5, "verify").report.ok());
    CHECK(cli::run_task(f5, "sweedler").report.ok());
    CHECK(cli::run_task(f5, "twist").report.ok());

    const io::Document f6 = io::load(fixture_path("F6_hopf_galois.json"));
    const cli::RunResult hg = cli::run_task(f6, "hopf-galois");
    CHECK(hg.report.ok());
    CHECK(hg.output.matrices.at("can") == canonical_map(fixtures::hopf_galois_z2()));
    CHECK(hg.output.matrices.at("tau") == Matrix{{1, 0}, {0, 0}, {0, 0}, {0, 1}});
    CHECK(hg.output.matrices.at("mu_table") == Matrix{{1, 1, 0, 0}, {0, 0, 1, 1}});

    CHECK(kind_of([&] { cli::run_command(f3, "kleisli", {{"target", "missing"}}); }) == ErrorKind::UnresolvedReference);
    CHECK(kind_of([&] { cli::run_command(f3, "nonsense", {}); }) == ErrorKind::UnresolvedReference);

    // A broken multiplication is a failed law, not an input error.
    io::Document broken = f3;
    broken.monads.at("ceiling").mu.alpha = Matrix{{1, 0}, {0, 1}, {0, 0}};
    const cli::RunResult bad = cli::run_command(broken, "kleisli", {{"target", "ceiling"}});
    CHECK_FALSE(bad.report.ok());
    CHECK_FALSE((bad.report.passed("monad.associativity") && bad.report.passed("monad.unit")));
}

TEST_CASE("command line exit codes") {
    std::string out;
    CHECK(run_cli("verify " + fixture_path("F5_sweedler.json"), &out) == 0);
    CHECK(out.rfind("verify document: PASS", 0) == 0);
    CHECK(run_cli("--report json kleisli " + fixture_path("F3_poset.json"), &out) == 0);
    const io::json j = io::json::parse(out);
    CHECK(j["verdict"] == "pass");
    CHECK(j["output"]["categories"].contains("ceiling_kleisli"));

    const fs::path written = fs::temp_directory_path() / "icat_cli_test_kleisli.json";
    CHECK(run_cli("--out " + written.string() + " run " + fixture_path("F3_poset.json") + " kleisli") == 0);
    CHECK(io::load(written.string()).categories.at("ceiling_kleisli")->A.dim() == 4);

    std::string text = slurp(fixture_path("F3_poset.json"));
    const std::string needle = "\"mu\": [\n        [0, 0],\n        [1, 1],";
    REQUIRE(text.find(needle) != std::string::npos);
    text.replace(text.find(needle), needle.size(), "\"mu\": [\n        [1, 0],\n        [0, 1],");
    CHECK(run_cli("kleisli " + write_temp("icat_broken.json", text) + " --target ceiling") == 1);

    CHECK(run_cli("verify " + write_temp("icat_bad_scalar.json", R"({"matrices": {"a": [["1/0"]]}})")) == 2);
    CHECK(run_cli("verify " + write_temp("icat_bad_text.json", "{\"matrices\": ")) == 2);
    CHECK(run_cli("verify /nonexistent/file.json") == 2);
    CHECK(run_cli("kleisli " + fixture_path("F3_poset.json") + " --target nope") == 2);
    CHECK(run_cli("") == 2);

    // --field beats the document, which beats ICAT_FIELD.
    const std::string half = write_temp("icat_half.json", R"({"matrices": {"a": [["1/2"]]}})");
    CHECK(run_cli("verify " + half, nullptr, "ICAT_FIELD=F2") == 2);
    CHECK(run_cli("verify " + half, nullptr, "ICAT_FIELD=F3") == 0);
    const std::string q = write_temp("icat_q.json", R"({"field": "Q", "matrices": {"a": [["1/2"]]}})");
    CHECK(run_cli("verify " + q, nullptr, "ICAT_FIELD=F2") == 0);
    CHECK(run_cli("--field F2 verify " + q) == 2);
}
