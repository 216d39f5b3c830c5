#include "graycat/cli.hpp"
#include "graycat/io.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace graycat;
using support::fixture_path;
using support::fx;
using support::share;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Document single(const std::string& name, Section::Value v)
{
    Document d;
    d.sections.push_back({name, std::move(v)});
    return d;
}

} // namespace

TEST_SUITE("cli_io")
{
    TEST_CASE("every shipped fixture round-trips byte for byte")
    {
        const Document bc = load_document(fixture_path("bc.gc"));
        int files = 0;
        for (const auto& e : std::filesystem::directory_iterator(GRAYCAT_FIXTURE_DIR)) {
            if (e.path().extension() != ".gc")
                continue;
            CAPTURE(e.path().filename().string());
            std::string text = slurp(e.path().string());
            const Document* ctx = e.path().filename() == "bc_transformations.gc" ? &bc : nullptr;
            Document d = parse(text, ctx);
            CHECK(serialize(d, ctx) == text);
            ++files;
        }
        CHECK(files == 14);
    }

    TEST_CASE("fixture files are the serialized builders")
    {
        struct Case {
            const char* file;
            FiniteGrayCategory (*build)();
        };
        for (const auto& c : {Case{"one.gc", [] { return build_walking(0); }}, Case{"walking1.gc", [] { return build_walking(1); }},
                              Case{"walking2.gc", [] { return build_walking(2); }},
                              Case{"walking3.gc", [] { return build_walking(3); }}, Case{"bc.gc", [] { return bc_z2(); }},
                              Case{"bc_trivial.gc", [] { return bc_z2(false); }}, Case{"bc4.gc", bc_z4},
                              Case{"chain2.gc", [] { return build_chain(2); }}, Case{"thin_s3.gc", build_thin_s3},
                              Case{"codiscrete_s3.gc", build_codiscrete_s3}}) {
            CAPTURE(c.file);
            auto C = share(c.build());
            CHECK(serialize(single(C->name(), C)) == slurp(fixture_path(c.file)));
        }
        const auto& M = build_mapping_space(fx().w1, fx().bc);
        CHECK(serialize(mapping_space_document(M)) == slurp(fixture_path("walking1_bc.gc")));
    }

    TEST_CASE("empty category round-trips")
    {
        auto E = share(FiniteGrayCategory("empty"));
        std::string text = serialize(single("empty", E));
        CHECK(serialize(parse(text)) == text);
        CHECK(text == slurp(fixture_path("empty.gc")));
    }

    TEST_CASE("transfor sections round-trip against their category")
    {
        const auto& M = build_mapping_space(fx().w1, fx().bc);
        Document ctx = single("walking1", fx().w1);
        ctx.sections.push_back({"BC", fx().bc});
        for (const auto& A : M.mods) {
            Document d;
            d.sections.push_back({"F", A.dom.dom});
            d.sections.push_back({"a", A.dom});
            d.sections.push_back({"b", A.cod});
            d.sections.push_back({"A", A});
            std::string text = serialize(d, &ctx);
            Document back = parse(text, &ctx);
            REQUIRE(back.sections.size() == 4);
            CHECK(std::get<PseudoModification>(back.sections[3].value) == A);
            CHECK(serialize(back, &ctx) == text);
        }
    }

    TEST_CASE("malformed src line reports its line")
    {
        std::string text = slurp(fixture_path("bc.gc"));
        auto pos = text.find("src 0 = e");
        REQUIRE(pos != std::string::npos);
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
        text.replace(pos, 9, "src 0 e");
        try {
            parse(text);
            FAIL("parse accepted a malformed line");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    }

    TEST_CASE("unknown version is rejected")
    {
        CHECK_THROWS_AS(parse("graycat v2\n"), ParseError);
        CHECK_THROWS_AS(parse("category X\nend\n"), ParseError);
    }

    TEST_CASE("exit codes")
    {
        CHECK(cli({"validate", fixture_path("bc.gc")}).code == 0);
        auto bad = cli({"validate", fixture_path("corrupted.gc")});
        CHECK(bad.code == 1);
        CHECK(bad.out.find("violation [whisk_2on3 boundary] at (1, (1,0))") != std::string::npos);
        CHECK(cli({"check", "interchange", fixture_path("walking1.gc"), fixture_path("bc.gc")}).code == 0);
        CHECK(cli({"check", "pasteunit", fixture_path("one.gc"), fixture_path("bc.gc")}).code == 0);
        CHECK(cli({"validate", fixture_path("does_not_exist.gc")}).code == 2);
        CHECK(cli({"check", "no-such-theorem", fixture_path("bc.gc")}).code == 2);
        auto tmp = std::filesystem::temp_directory_path() / "graycat_malformed.gc";
        {
            std::ofstream o(tmp);
            o << "graycat v1\ncategory X\ncells 0: a\nsrc a\nend\n";
        }
        CHECK(cli({"validate", tmp.string()}).code == 2);
        std::filesystem::remove(tmp);
    }

    TEST_CASE("reports are deterministic")
    {
        std::vector<std::vector<std::string>> runs = {
            {"validate", fixture_path("corrupted.gc")},
            {"check", "hcomp-typing", fixture_path("walking1.gc"), fixture_path("bc.gc")},
            {"enumerate", "psmod", fixture_path("walking1.gc"), fixture_path("bc.gc")},
        };
        for (const auto& args : runs) {
            auto a = cli(args), b = cli(args);
            CHECK(a.code == b.code);
            CHECK(a.out == b.out);
            CHECK(a.err == b.err);
        }
    }
}
