#include <doctest.h>

#include <cstdlib>

#include "inexp/commands.hpp"
#include "inexp/parse.hpp"
#include "inexp/sha256.hpp"
#include "support/oracles.hpp"

using namespace inexp;
using cli::CommonOptions;

namespace {

const std::vector<std::string> xy{"x", "y"};

IdealFile cusp_file() {
    return ideal_file_from_text(R"({"variables": ["x", "y"], "generators": ["x^2 - y^3"], "k": 1})");
}

} // namespace

TEST_CASE("expression grammar") {
    Polynomial f = parse_polynomial("x^3*y + x*y^4", xy);
    CHECK(f.initial_exponent() == Exponent{3, 1});
    CHECK(f.term_count() == 2);

    CHECK(parse_polynomial("-1/2*x + x", xy) ==
          Polynomial::term(Exponent{1, 0}, Rational(1, 2)));

    // Expansion agrees with explicit repeated multiplication.
    Polynomial base = parse_polynomial("x - y", xy);
    CHECK(parse_polynomial("(x - y)^2", xy) == base * base);
    CHECK(parse_polynomial("(x - y)^2", xy) == parse_polynomial("x^2 - 2*x*y + y^2", xy));

    CHECK(parse_polynomial("0", xy).is_zero());
    CHECK(parse_polynomial("2^3", xy) == Polynomial::constant(2, 8));
    CHECK(parse_polynomial("- -x", xy) == parse_polynomial("x", xy));
    CHECK(parse_polynomial("2 * -x", xy) == parse_polynomial("-2*x", xy));
    CHECK(parse_polynomial("1/2*x", xy) == Polynomial::term(Exponent{1, 0}, Rational(1, 2)));
}

TEST_CASE("grammar rejections carry positions") {
    auto position_of = [](const std::string& src) -> std::size_t {
        try {
            parse_polynomial(src, xy);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected a parse error for: ", src);
        return SIZE_MAX;
    };

    CHECK(position_of("x + z") == 4);       // unknown identifier
    CHECK(position_of("x/2") == 1);         // division by non-literal
    CHECK(position_of("1/x") == 2);         // non-literal denominator
    CHECK(position_of("x y") == 2);         // juxtaposition
    CHECK(position_of("2*(x + y) 3") == 10);
    CHECK(position_of("x^-2") == 2);        // malformed exponent
    CHECK(position_of("x^y") == 2);
    CHECK(position_of("x^99999") == 2);     // exponent cap
    CHECK(position_of("(x") == 2);          // missing ')'
    CHECK(position_of("1/0") == 2);         // zero denominator
    CHECK(position_of("x + ") == 4);
    CHECK(position_of("x $ y") == 2);       // stray character
}

TEST_CASE("printing round-trips through the parser") {
    Rng rng(2468);
    for (int i = 0; i < 80; ++i) {
        Polynomial p = testing::random_polynomial(rng, 2, 6, 6);
        CHECK(parse_polynomial(p.to_string(xy), xy) == p);
    }
    CHECK(parse_polynomial(Polynomial(2).to_string(xy), xy).is_zero());
}

TEST_CASE("sha256 reference vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    // 56 bytes: exercises the two-block padding path.
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
    CHECK(sha256_hex("The quick brown fox jumps over the lazy dog") ==
          "d7a8fbb307d7809469ca9abcb0082e4f8d5651e46d3cdb762d02d0bf37c9e592");
}

TEST_CASE("ideal files") {
    IdealFile f = cusp_file();
    CHECK(f.variables == xy);
    CHECK(f.k == 1);
    CHECK(f.presentation.generators.size() == 1);

    CHECK_THROWS_AS(ideal_file_from_text("not json"), DomainError);
    CHECK_THROWS_AS(ideal_file_from_text(R"({"variables": ["x"], "generators": []})"),
                    DomainError);
    CHECK_THROWS_AS(ideal_file_from_text(R"({"variables": ["x", "x"], "generators": ["x"]})"),
                    DomainError);
    CHECK_THROWS_AS(ideal_file_from_text(R"({"variables": ["x"], "generators": ["x"], "k": 2})"),
                    DomainError);
    CHECK_THROWS_AS(
        ideal_file_from_text(R"({"variables": ["x", "y"], "generators": ["x - x"]})"),
        DomainError);
    CHECK_THROWS_AS(ideal_file_from_text(R"({"variables": ["x"], "generators": ["q"]})"),
                    ParseError);
}

TEST_CASE("diagram command") {
    CommonOptions common;
    common.seed = 5;
    auto result = cli::run_diagram(cusp_file(), common, true);
    CHECK(result.exit_code == 0);
    const Json& r = result.report;
    CHECK(r["command"] == "diagram");
    CHECK(r["version"] == "0.1.0");
    CHECK(r["result"]["vertices"] == Json::array({Json::array({2, 0})}));
    // The audit trace shows each generator inside the ideal of the basis.
    for (const auto& t : r["result"]["trace"]) {
        CHECK(t["identity_ok"] == true);
        CHECK(t["in_ideal"] == true);
    }
}

TEST_CASE("hs command with oracle cross-check") {
    CommonOptions common;
    auto result = cli::run_hs(cusp_file(), common, 4, true);
    CHECK(result.exit_code == 0);
    const Json& r = result.report["result"];
    CHECK(r["values"] ==
          Json::array({Json::array({0, "1"}), Json::array({1, "3"}), Json::array({2, "5"}),
                       Json::array({3, "7"}), Json::array({4, "9"})}));
    CHECK(r["e"] == "2");
    CHECK(r["d"] == 1);
    CHECK(r["oracle"]["agrees"] == true);
    CHECK(result.csv ==
          std::string("eta,H\n0,1\n1,3\n2,5\n3,7\n4,9\n"));
}

TEST_CASE("mult command") {
    CommonOptions common;
    common.seed = 9;
    auto result = cli::run_mult(cusp_file(), common, std::nullopt);
    CHECK(result.exit_code == 0);
    const Json& r = result.report["result"];
    CHECK(r["e_from_table"] == "2");
    CHECK(r["e_from_generic_level"] == "2");
    CHECK(r["e_from_evaluation"] == "2");
    CHECK(r["consistent"] == true);

    // k from the flag must not contradict the file.
    CHECK_THROWS_AS(cli::run_mult(cusp_file(), common, 2), DomainError);
}

TEST_CASE("jet-sweep command") {
    CommonOptions common;
    common.seed = 4;
    common.threads = 2;
    auto result = cli::run_jet_sweep(cusp_file(), common, std::nullopt, 1, 5, 3);
    CHECK(result.exit_code == 0);
    const Json& r = result.report["result"];
    CHECK(r["sweep"]["stabilized_at"] == 2);
    CHECK(r["sweep"]["certified_mu0"] == 2);
    CHECK(r["perturbation"]["all_pass"] == true);
    REQUIRE(result.csv.has_value());
    CHECK(result.csv->rfind("mu,stabilized,certified_mu0\n", 0) == 0);
    CHECK(result.csv->find("\n2,1,2\n") != std::string::npos);
}

TEST_CASE("check-regseq command") {
    CommonOptions common;
    auto result = cli::run_check_regseq(cusp_file(), common, std::nullopt);
    CHECK(result.exit_code == 0);
    CHECK(result.report["result"]["certified"] == true);
}

TEST_CASE("repro command") {
    CommonOptions common;
    auto result = cli::run_repro_ex55(common, 5);
    CHECK(result.exit_code == 0);
    const Json& r = result.report["result"];
    CHECK(r["present_at_mu"] == true);
    CHECK(r["ok"] == true);
    bool found = false;
    for (const auto& v : r["vertices_at_mu"])
        if (v == Json::array({1, 6})) found = true;
    CHECK(found);

    CHECK_THROWS_AS(cli::run_repro_ex55(common, 2), DomainError);
}

TEST_CASE("identical inputs and seeds give byte-identical results") {
    CommonOptions common;
    common.seed = 123;
    for (int round = 0; round < 2; ++round) {
        auto a = cli::run_mult(cusp_file(), common, std::nullopt);
        auto b = cli::run_mult(cusp_file(), common, std::nullopt);
        CHECK(a.report["result"].dump() == b.report["result"].dump());
        auto s1 = cli::run_jet_sweep(cusp_file(), common, std::nullopt, 1, 4, 2);
        auto s2 = cli::run_jet_sweep(cusp_file(), common, std::nullopt, 1, 4, 2);
        CHECK(s1.report["result"].dump() == s2.report["result"].dump());
    }
}

TEST_CASE("seed resolution order") {
    CommonOptions with_flag;
    with_flag.seed = 7;
    CHECK(cli::resolve_seed(with_flag, 3) == 7);
    CommonOptions no_flag;
    CHECK(cli::resolve_seed(no_flag, 3) == 3);
    setenv("INEXP_SEED", "11", 1);
    CHECK(cli::resolve_seed(no_flag, std::nullopt) == 11);
    CHECK(cli::resolve_seed(no_flag, 3) == 3); // file beats env
    setenv("INEXP_SEED", "bogus", 1);
    CHECK_THROWS_AS(cli::resolve_seed(no_flag, std::nullopt), DomainError);
    unsetenv("INEXP_SEED");
    CHECK(cli::resolve_seed(no_flag, std::nullopt) == 0);
}
