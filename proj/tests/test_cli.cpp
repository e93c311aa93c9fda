#include "support.hpp"

#include "linembed/cli.hpp"
#include "linembed/corpus.hpp"
#include "linembed/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace linembed;
namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "linembed");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string complex_text(const SimplicialComplex& c)
{
    std::ostringstream os;
    write_complex(os, c);
    return os.str();
}

class Scratch
{
public:
    Scratch() : dir_(fs::temp_directory_path() / ("linembed_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) const
    {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string read_file(const std::string& p)
{
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), {}};
}

} // namespace

TEST_CASE("gen")
{
    const auto r = run({"gen", "simplex", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "facet 0 1 2\n");
    CHECK(run({"gen", "random-tree", "20", "--seed", "7"}).out == complex_text(gen_random_tree(20, 7)));
    CHECK(run({"gen", "nothing"}).code == cli::kInputError);
    CHECK(run({"gen", "simplex"}).code == cli::kInputError);
    CHECK(run({}).code == cli::kInputError);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("collapse exit codes")
{
    CHECK(run({"collapse", "-"}, complex_text(gen_simplex(4))).code == cli::kOk);
    CHECK(run({"collapse", "-"}, complex_text(gen_cycle(3))).code == cli::kAbsent);
    CHECK(run({"collapse", "-", "--budget", "10"}, complex_text(gen_simplex(5))).code == cli::kExhausted);
    // No free face: exhaustive search ends at the root whatever the budget.
    CHECK(run({"collapse", "-", "--budget", "10"}, complex_text(gen_dunce_hat())).code == cli::kAbsent);
    CHECK(run({"collapse", "-", "--target", "cycle"}, complex_text(gen_cycle(3))).code == cli::kOk);
    const auto bad = run({"collapse", "-"}, "facet 0 1\nfacet 0 q\n");
    CHECK(bad.code == cli::kInputError);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"collapse", "/nonexistent/file"}).code == cli::kInputError);
    CHECK(run({"collapse", "-", "--target", "disk"}, complex_text(gen_cycle(3))).code == cli::kInputError);
    CHECK(run({"collapse", "-", "--budget", "0"}, complex_text(gen_cycle(3))).code == cli::kInputError);

    const auto ok = run({"collapse", "-"}, complex_text(gen_simplex(3)));
    std::istringstream is(ok.out);
    const auto seq = read_sequence(is);
    CHECK(replay(gen_simplex(3), seq.steps) == seq.target);
}

TEST_CASE("morse111 exit codes")
{
    CHECK(run({"morse111", "-"}, complex_text(gen_dunce_hat())).code == cli::kOk);
    CHECK(run({"morse111", "-"}, complex_text(gen_simplex_boundary(4))).code == cli::kAbsent);
    CHECK(run({"morse111", "-", "--budget", "1"}, complex_text(gen_dunce_hat())).code == cli::kExhausted);
    CHECK(run({"morse111", "-"}, complex_text(gen_cycle(4))).code == cli::kInputError);
}

TEST_CASE("embed exit codes")
{
    const auto dh = run({"embed", "-", "--mode", "morse111"}, complex_text(gen_dunce_hat()));
    CHECK(dh.code == cli::kOk);
    std::istringstream is(dh.out);
    CHECK(read_embedding(is).ambient_dim == 4);

    CHECK(run({"embed", "-", "--mode", "collapsible"}, complex_text(gen_dunce_hat())).code == cli::kAbsent);
    const auto k5 = run({"embed", "-", "--mode", "generic"}, complex_text(gen_skeleton(5, 1)));
    CHECK(k5.code == cli::kOk);
    CHECK(k5.out.starts_with("dim 3\n"));
    CHECK(run({"embed", "-", "--budget", "10"}, complex_text(gen_simplex(5))).code == cli::kExhausted);
    CHECK(run({"embed", "-", "--mode", "morse111", "--budget", "1"}, complex_text(gen_dunce_hat())).code ==
          cli::kExhausted);
    CHECK(run({"embed", "-", "--base", "1"}, complex_text(gen_simplex(3))).code == cli::kInputError);
    CHECK(run({"embed", "-", "--mode", "fancy"}, complex_text(gen_simplex(3))).code == cli::kInputError);
    CHECK(run({"embed", "-"}, "not a complex\n").code == cli::kInputError);
}

TEST_CASE("verify exit codes")
{
    Scratch s;
    const std::string tree = s.file("tree.txt", complex_text(gen_random_tree(20, 7)));
    const std::string emb = s.path("tree.emb");
    CHECK(run({"embed", tree, "--output", emb}).code == cli::kOk);
    const auto ok = run({"verify", tree, emb});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out == "verdict: embedded\n");

    const std::string cross = s.file("cross.txt", "facet 0 1\nfacet 2 3\n");
    const std::string cross_emb = s.file("cross.emb", "dim 2\nvertex 0: 0 0\nvertex 1: 2 2\nvertex 2: 0 2\nvertex 3: 2 0\n");
    const auto bad = run({"verify", cross, cross_emb});
    CHECK(bad.code == cli::kAbsent);
    CHECK(bad.out.find("point: 1 1\n") != std::string::npos);

    const std::string partial = s.file("partial.emb", "dim 2\nvertex 0: 0 0\nvertex 1: 2 2\nvertex 2: 0 2\n");
    CHECK(run({"verify", cross, partial}).code == cli::kInputError);
    const std::string flat = s.file("flat.emb", "dim 2\nvertex 0: 0 0\nvertex 1: 1 1\nvertex 2: 2 2\n");
    const std::string tri = s.file("tri.txt", "facet 0 1 2\n");
    CHECK(run({"verify", tri, flat}).code == cli::kAbsent);
    CHECK(run({"verify", "-", "-"}, "facet 0\n").code == cli::kInputError);
    CHECK(run({"verify", tri}).code == cli::kInputError);
}

TEST_CASE("tverberg exit codes")
{
    const auto sq = run({"tverberg", "-", "-r", "2"}, "point 0 0\npoint 1 0\npoint 1 1\npoint 0 1\n");
    CHECK(sq.code == cli::kOk);
    CHECK(sq.out.find("common_point: 1/2 1/2\n") != std::string::npos);
    CHECK(run({"tverberg", "-", "-r", "2"}, "point 0 0\npoint 1 0\n").code == cli::kAbsent);
    CHECK(run({"tverberg", "-", "-r", "0"}, "point 0 0\n").code == cli::kInputError);
    CHECK(run({"tverberg", "-", "-r", "2"}, "point 0 0\npoint 1\n").code == cli::kInputError);

    Lcg64 rng(2024);
    std::vector<Point> pts;
    for (int i = 0; i < 11; ++i) pts.push_back(testing::random_point(rng, 4, 100));
    std::ostringstream os;
    write_points(os, pts);
    CHECK(run({"tverberg", "-", "-r", "3"}, os.str()).code == cli::kOk);

    std::ostringstream many;
    for (int i = 0; i < 15; ++i) many << "point " << i << '\n';
    CHECK(run({"tverberg", "-", "-r", "3"}, many.str()).code == cli::kInputError);
}

TEST_CASE("pipelines are reproducible")
{
    Scratch s;
    const std::string vkf = s.file("vkf.txt", complex_text(gen_vkf_cone(2)));
    const auto a = run({"embed", vkf, "--seed", "3"});
    const auto b = run({"embed", vkf, "--seed", "3"});
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(run({"morse111", "-"}, complex_text(gen_projective_plane())).out ==
          run({"morse111", "-"}, complex_text(gen_projective_plane())).out);

    const std::string out = s.path("seq.txt");
    CHECK(run({"collapse", vkf, "--output", out}).code == cli::kOk);
    CHECK(read_file(out) == run({"collapse", vkf}).out);
}
