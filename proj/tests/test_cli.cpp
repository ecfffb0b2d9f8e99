// Exercises the hkverify binary end to end: exit codes, output formats,
// determinism of the report stream.

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what)
{
    if (!ok) {
        failures++;
        std::cerr << "FAIL: " << what << "\n";
    }
}

int run(const std::string& args)
{
    std::string cmd = std::string(HKVERIFY_PATH) + " " + args;
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main()
{
    const std::string tmp1 = "cli_out1.txt", tmp2 = "cli_out2.txt";

    // eval: known values land in the output
    expect(run("eval hermite n=0 x=0 --out " + tmp1) == 0, "eval hermite rc");
    expect(slurp(tmp1).find("\n1,") != std::string::npos ||
               slurp(tmp1).find("0,1,") != std::string::npos,
           "eval hermite H_0 = 1");

    expect(run("eval hk2d n=1 rho=0 k=1 x=1 y=2 --out " + tmp1) == 0,
           "eval hk2d rc");
    expect(slurp(tmp1).find("-2,") != std::string::npos, "eval hk2d value -2");

    expect(run("eval ml_hk3 g1=0 g2=1 g3=0 rho=1 k=1 x=0 y=0.5 --out " + tmp1) ==
               0,
           "eval ml_hk3 rc");
    expect(slurp(tmp1).find("1.6487212707001282") != std::string::npos,
           "eval ml_hk3 exp(1/2)");

    // grid syntax produces the full cartesian product
    expect(run("eval hermite n=2 x=0:1:5 --out " + tmp1) == 0, "eval grid rc");
    {
        std::string body = slurp(tmp1);
        int lines = 0;
        for (char c : body)
            lines += c == '\n';
        expect(lines == 6, "eval grid rows (header + 5)");
    }

    // json format
    expect(run("--format json eval hermite n=1 x=3 --out " + tmp1) == 0,
           "eval json rc");
    expect(slurp(tmp1).find("\"value\":6.0") != std::string::npos ||
               slurp(tmp1).find("\"value\":6") != std::string::npos,
           "eval json value");

    // usage errors exit with 2
    expect(run("eval nosuchfunction x=1 2>/dev/null") == 2, "unknown function");
    expect(run("eval hermite n=0 2>/dev/null") == 2, "missing parameter");
    expect(run("eval hermite n=0 x=bad 2>/dev/null") == 2, "malformed value");
    expect(run("table 2>/dev/null") == 2, "missing table preset");
    expect(run("table nosuchpreset 2>/dev/null") == 2, "unknown table preset");
    expect(run("verify nosuchsuite 2>/dev/null") == 2, "unknown suite");

    // verify: a fast suite passes and the report stream is deterministic
    expect(run("verify jk --seed 42 --out " + tmp1) == 0, "verify jk rc");
    expect(run("verify jk --seed 42 --out " + tmp2) == 0, "verify jk rc 2");
    expect(slurp(tmp1) == slurp(tmp2), "verify reports byte-identical");
    expect(run("verify jk --seed 42 --jobs 2 --out " + tmp2) == 0,
           "verify jk parallel rc");
    expect(slurp(tmp1) == slurp(tmp2), "parallel reports byte-identical");
    expect(slurp(tmp1).find("\"status\":\"flagged\"") != std::string::npos,
           "jk certification reports flagged");
    expect(slurp(tmp1).find("\"seed\":42") != std::string::npos,
           "report includes the seed");

    // forced failure via tolerance override exits 1
    expect(run("verify jk --tol jk-ml-relation=1e-30 --out " + tmp1 +
               " 2>/dev/null") == 1,
           "tolerance override forces failure exit code");

    // tables are CSV with a header
    expect(run("table hk-biortho-matrix n_max=2 rho=0 k=1 --out " + tmp1) == 0,
           "table rc");
    {
        std::string body = slurp(tmp1);
        expect(body.rfind("n,m0,m1,m2", 0) == 0, "table header");
    }

    std::remove(tmp1.c_str());
    std::remove(tmp2.c_str());
    if (failures) {
        std::cerr << failures << " CLI test(s) failed\n";
        return 1;
    }
    std::puts("all CLI tests passed");
    return 0;
}
