#include <doctest.h>

#include <sstream>

#include "zorbit/cli.hpp"
#include "zorbit/json_io.hpp"

using namespace zorbit;

namespace {

struct Run {
    int code;
    std::string out, err;
    json j() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "zorbit");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented examples") {
    auto a = run({"orbits", "count", "--family", "A", "--n", "5", "--r", "2"});
    CHECK(a.code == 0);
    CHECK(a.j() == json{{"count", 60}, {"components", 5}, {"factor", 12}, {"identity_holds", true}});
    auto b = run({"tableau", "to-w", "--n", "5", "--cols", "2 4"});
    CHECK(b.code == 0);
    CHECK(b.j()["w"] == "3 1 4 2 5");
    CHECK(b.j()["separated"] == true);
    CHECK(b.j()["dims"]["len_w"] == 3);
    auto c = run({"weyl", "len", "--family", "D", "--n", "6", "--perm", "6 5 3 4 2 1"});
    CHECK(c.code == 0);
    CHECK(c.j()["inversions"] == 14);
    CHECK(c.j()["length"] == 6);
    auto d = run({"chars", "dominance", "--family", "B", "--n", "7", "--r", "2"});
    CHECK(d.j() == json{{"weight", {1}}, {"dominant", true}});
}

TEST_CASE("usage and spec errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"weyl"}).code == 2);
    auto f = run({"weyl", "len", "--family", "E", "--n", "3", "--perm", "1 2 3"});
    CHECK(f.code == 2);
    CHECK(f.err.find("unknown family") != std::string::npos);
    auto p = run({"weyl", "len", "--family", "A", "--n", "3", "--perm", "1 1 3"});
    CHECK(p.code == 2);
    CHECK(p.err.find("permutation") != std::string::npos);
    auto s = run({"chars", "dominance", "--family", "B", "--n", "6", "--r", "2"});
    CHECK(s.code == 2);
    CHECK(s.err != p.err);
    CHECK(run({"models", "lie-dim", "--family", "A", "--n", "3", "--r", "1", "--field", "fp"}).code == 2);
    CHECK(run({"weyl", "len", "--family", "A", "--n", "3", "--perm", "1 2 3", "--format", "xml"}).code == 2);
    CHECK(run({"resolve", "--family", "A", "--n", "4", "--r", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("json and tsv carry the same content") {
    std::vector<std::string> args{"verify", "dim-formula", "--family", "A", "--n", "4", "--r", "1", "--exhaustive"};
    auto j = run(args);
    CHECK(j.code == 0);
    CHECK(j.j()["checked"] == 24);
    args.push_back("--format");
    args.push_back("tsv");
    auto t = run(args);
    CHECK(t.code == 0);
    std::istringstream is(t.out);
    std::string line;
    int data = 0;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.rfind("codim\tpass\trhs\tw", 0) == 0) header = true;
        else if (header && !line.empty()) ++data;
    }
    CHECK(header);
    CHECK(data == 24);
    CHECK(t.out.find("all_pass\ttrue") != std::string::npos);
}

TEST_CASE("sampled verification is deterministic and thread independent") {
    std::vector<std::string> args{"verify", "dim-formula", "--family", "D", "--n", "8", "--r", "2", "--samples", "10", "--seed", "9"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.j()["checked"] == 10);
    auto one = run({"resolve", "exhaustive", "--family", "A", "--n", "4", "--r", "1", "--samples", "2", "--threads", "1"});
    auto four = run({"resolve", "exhaustive", "--family", "A", "--n", "4", "--r", "1", "--samples", "2", "--threads", "4"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("other subcommands") {
    CHECK(run({"weyl", "check", "--family", "C", "--n", "4", "--perm", "4 3 2 1"}).j()["in_weyl"] == true);
    CHECK(run({"weyl", "check", "--family", "C", "--n", "4", "--perm", "2 1 3 4"}).j()["in_weyl"] == false);
    auto dec = run({"weyl", "decompose", "--family", "D", "--n", "6", "--r", "2", "--perm", "6 5 3 4 2 1"});
    CHECK(dec.code == 0);
    CHECK(dec.j()["additive"] == true);
    CHECK(run({"weyl", "bruhat", "--family", "A", "--n", "3", "--u", "1 2 3", "--w", "3 1 2"}).j()["leq"] == true);
    auto g = run({"models", "lie-dim", "--family", "D", "--n", "6", "--r", "2", "--tag", "G"});
    CHECK(g.j()["dim"] == 15);
    auto gp = run({"models", "lie-dim", "--family", "D", "--n", "6", "--r", "2", "--tag", "Z", "--field", "fp", "--p", "5"});
    auto gq = run({"models", "lie-dim", "--family", "D", "--n", "6", "--r", "2", "--tag", "Z"});
    CHECK(gp.j()["dim"] == gq.j()["dim"]);
    CHECK(run({"models", "lie-dim", "--family", "A", "--n", "3", "--r", "1", "--tag", "Bw:3 1 2"}).j()["dim"] == 6);
    auto mem = run({"models", "member", "--family", "A", "--n", "2", "--r", "1", "--tag", "Z", "--matrix", R"([["2","1"],["0","2"]])"});
    CHECK(mem.j()["member"] == true);
    CHECK(run({"models", "member", "--family", "A", "--n", "2", "--r", "1", "--matrix", R"([["2/4","1"],["0","2"]])"}).code == 2);
    CHECK(run({"models", "chi", "--n", "4", "--rank", "2"}).j()["chi"] == json{0, 1, 1});
    CHECK(run({"models", "dickson", "--matrix", "[[0,0,0,1],[0,1,0,0],[0,0,1,0],[1,0,0,0]]"}).j()["dickson"] == 1);
    auto wp = run({"orbits", "enumerate-wp", "--family", "A", "--n", "4", "--r", "1"});
    CHECK(wp.j()["count"] == 12);
    auto cl = run({"orbits", "classify", "--family", "D", "--n", "8", "--r", "2", "--matrix", R"([["0","1"],["1","0"]])"});
    CHECK(cl.code == 0);
    CHECK(cl.j()["u"].get<std::string>().size() == 3);
    auto rho = run({"chars", "rho", "--family", "D", "--n", "8", "--r", "4", "--group", "H"});
    CHECK(rho.j()["two_rho"] == json{4, 2});
    CHECK(run({"tableau", "enumerate", "--n", "5", "--r", "2"}).j()["count"] == 5);
    CHECK(run({"tableau", "to-w", "--n", "5", "--cols", "2 4", "--pretty"}).out == "5 4\n3 2\n1\n");
    CHECK(run({"tableau", "to-w", "--n", "4", "--cols", "2 4"}).code == 2);
    auto cx = run({"counterexample"});
    CHECK(cx.code == 0);
    CHECK(cx.j()["phi_limit"] == "<f1,f3>");
    CHECK(run({"verify", "lengths", "--family", "D", "--n", "8"}).code == 0);
    CHECK(run({"verify", "smoothness-dims", "--family", "B", "--n", "5", "--r", "2", "--primes", "3 7"}).code == 0);
    auto rep = run({"resolve", "one", "--family", "D", "--n", "6", "--r", "2", "--v", "6 5 3 4 2 1", "--samples", "3"});
    CHECK(rep.code == 0);
    CHECK(rep.j()["ok"] == true);
}

TEST_CASE("verify all") {
    auto a = run({"verify", "all", "--small"});
    CHECK(a.code == 0);
    CHECK(a.j()["rows"].size() == 10);
}
