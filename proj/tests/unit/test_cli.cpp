#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  std::string out;
  int status = -1;
};

// Runs the tool through the shell; stderr is discarded unless redirected in
// `args`.
Result cli(const std::string& args, const std::string& stdin_text = "") {
  const std::string cmd = "printf '%s' '" + stdin_text + "' | '" PERMCLASS_CLI "' " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Result r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kData = PERMCLASS_TEST_DATA;

}  // namespace

TEST_CASE("encode and decode") {
  CHECK(cli("encode", "2 4 5 1 6 3 7\n3 1 2\n").out == "2 3 3 1 2 1 1\n3 1 1\n");
  CHECK(cli("decode", "2 2 2 1 1 1\n\n").out == "2 3 4 1 5 6\n\n");
  const Result bad = cli("decode 2>&1", "1 1\n3 1\n");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("stdin line 2") != std::string::npos);
}

TEST_CASE("closure, gf and counts") {
  const Result closure = cli("closure --k 2 --basis " + kData + "/fibonacci.basis 2>/dev/null");
  CHECK(closure.status == 0);
  CHECK(closure.out == "alphabet 2\nstates 2\ninitial 0\nfinal 0\ndirection forward\nt 0 1 0\nt 0 2 1\nt 1 1 0\n");
  const Result notes = cli("closure --k 2 --basis " + kData + "/fibonacci.basis 2>&1 >/dev/null");
  CHECK(notes.out.find("3 2 1 lies outside Omega_2") != std::string::npos);
  CHECK(cli("closure --k 2 --basis " + kData + "/fibonacci.basis 2>/dev/null | '" PERMCLASS_CLI "' gf").out ==
        "1\n1 -1 -1\n");
  CHECK(cli("count --lang " + kData + "/fibonacci.aut --upto 7").out == "1 1 2 3 5 8 13 21\n");
  CHECK(cli("recurrence --lang " + kData + "/fibonacci.aut").out == "order 2\ncoefficients 1 1\ninitial 1 1\n");
}

TEST_CASE("class queries") {
  const std::string fib = " --class " + kData + "/fibonacci.aut";
  CHECK(cli("member" + fib, "2 1 3\n2 3 1\n1 2 3 4\n").out == "in\nout\nin\n");
  const Result fb = cli("is-finitely-based" + fib);
  CHECK(fb.out == "true\n");
  CHECK(fb.status == 0);
  const Result osc = cli("closure --k 3 --basis-lang " + kData + "/oscillation.aut | '" PERMCLASS_CLI
                         "' is-finitely-based --class -");
  CHECK(osc.out == "false\n");
  CHECK(osc.status == 1);
  CHECK(cli("is-closed --k 2 --lang " + kData + "/fibonacci.aut").status == 0);
  CHECK(cli("is-closed --k 1 --lang " + kData + "/fibonacci.aut").status == 1);
  const Result basis = cli("basis --list --maxlen 5" + fib);
  CHECK(basis.out ==
        "alphabet 2\nstates 4\ninitial 0\nfinal 3\ndirection forward\nt 0 2 1\nt 1 2 2\nt 2 1 3\n"
        "# basis restricted to length <= 5\n# 2 3 1\n# 3 1 2  (outside Omega_2)\n# 3 2 1  (outside Omega_2)\n");
}

TEST_CASE("omega") {
  const Result o = cli("omega --k 3");
  CHECK(o.status == 0);
  CHECK(cli("omega --k 3 | '" PERMCLASS_CLI "' count --upto 6").out == "1 1 2 6 18 54 162\n");
}

TEST_CASE("monotone commands") {
  CHECK(cli("monotone greedy --phi +--", "2 4 8 7 3 9 6 5 1\n").out == "3 1 2 1 3 3 2 1 3\n");
  CHECK(cli("monotone encodings --phi +--", "2 4 8 7 3 9 6 5 1\n").out ==
        "# 2 4 8 7 3 9 6 5 1\n3 1 2 1 3 3 2 1 3\n3 1 2 1 3 3 2 2 3\n");
  CHECK(cli("monotone decode --phi=-+", "1 1 2\n").out == "2 1 3\n");
  CHECK(cli("monotone gf --phi +-").out == "1 -1\n1 -2\n");
  CHECK(cli("monotone member --phi +- --basis " + kData + "/321.basis", "1 3 2\n3 2 1\n2 1 3\n").out ==
        "in\nout\nout\n");
  const Result outside = cli("monotone greedy --phi +- 2>&1", "1 3 2 4\n");
  CHECK(outside.status == 2);
}

TEST_CASE("machines") {
  CHECK(cli("simulate stack --n 3").out == "1 2 3\n1 3 2\n2 1 3\n2 3 1\n3 2 1\n");
  CHECK(cli("simulate stack --capacity 1 --n 3").out == "1 2 3\n");
  CHECK(cli("simulate riffle --n 3").out == "1 2 3\n1 3 2\n2 1 3\n2 3 1\n3 1 2\n");
  CHECK(cli("brute-basis --oracle riffle --maxlen 5").out ==
        "# basis restricted to length <= 5\n3 2 1\n2 1 4 3\n2 4 1 3\n");
  CHECK(cli("brute-basis --oracle stack --maxlen 4").out == "# basis restricted to length <= 4\n3 1 2\n");
  CHECK(cli("brute-basis --oracle avoid:" + kData + "/321.basis --maxlen 4").out ==
        "# basis restricted to length <= 4\n3 2 1\n");
}

TEST_CASE("errors") {
  CHECK(cli("2>/dev/null").status == 2);
  CHECK(cli("gf --lang /nonexistent/file 2>/dev/null").status == 2);
  CHECK(cli("omega --k 0 2>/dev/null").status == 2);
  CHECK(cli("gf 2>&1", "alphabet 2\n").out.find("missing \"states\" line") != std::string::npos);
  CHECK(cli("brute-basis --oracle nope 2>/dev/null").status == 2);
  CHECK(cli("--help").status == 0);
}
