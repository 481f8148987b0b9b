// Golden-file checks for the CLI: output is byte-identical across runs and
// thread counts, and the documented examples print exactly as specified.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

std::string run(const std::string& command) {
  std::string full = command + " 2>/dev/null";
  std::array<char, 4096> buffer;
  std::string out;
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), got);
  pclose(pipe);
  return out;
}

const std::string cli = CLI_PATH;

}  // namespace

TEST_CASE("documented examples") {
  CHECK(run(cli + " lr --space 'g(2,4)' --theory h 0101 0101") == "0110\t1\n1001\t1\n");
  CHECK(run(cli + " lr --space 'g(1,3)' --theory ht 010 010") == "010\ty3 - y2\n100\t1\n");
  CHECK(run(cli + " quantum --space 'g(3,6)' -d 1 3,2,1 3,2,1 2,1") == "2\n");
  CHECK(run(cli + " og assoc --m 6 --lambda 6,4") == "5,4,3,1\n");
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::string cmd = " lr --space 'fl(1,3;6)' --theory h2 001021 010201";
  std::string reference = run("SCHUBERT_THREADS=1 " + cli + cmd);
  CHECK(!reference.empty());
  for (const char* threads : {"1", "2", "3", "8"}) {
    CHECK(run(std::string("SCHUBERT_THREADS=") + threads + " " + cli + cmd) == reference);
  }
  CHECK(run("SCHUBERT_THREADS=2 " + cli + cmd) == reference);
  // A grid large enough to engage the parallel search-tree split.
  const std::string big = " lr --space 'g(3,7)' --theory h 0010101 0010101";
  std::string big_ref = run("SCHUBERT_THREADS=1 " + cli + big);
  CHECK(!big_ref.empty());
  for (const char* threads : {"2", "5"})
    CHECK(run(std::string("SCHUBERT_THREADS=") + threads + " " + cli + big) == big_ref);
}

TEST_CASE("exit codes") {
  CHECK(std::system((cli + " lr --space 'bad' --theory h 01 01 >/dev/null 2>&1").c_str()) != 0);
  int ok = std::system((cli + " crosscheck --space 'g(1,3)' --theory h >/dev/null 2>&1").c_str());
  CHECK(ok == 0);
}
