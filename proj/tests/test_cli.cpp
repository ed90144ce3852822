#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "af/cli.hpp"

using af::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Writes fixture files once per process into a scratch directory.
class Fixtures {
public:
  Fixtures() {
    dir_ = std::filesystem::temp_directory_path() / "afsolve-cli-test";
    std::filesystem::create_directories(dir_);
    write("f3.tgf", "a\nb\nc\n#\na b\nb c\n");
    write("f4.tgf", "a\nb\n#\na b\nb a\n");
    write("f5.apx", "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\natt(c,a).\n");
    write("bad.tgf", "a\nb\n");  // no separator
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
  void write(const std::string& name, const std::string& text) {
    std::ofstream file(dir_ / name, std::ios::binary);
    file << text;
  }

  std::filesystem::path dir_;
};

const Fixtures& fixtures() {
  static Fixtures f;
  return f;
}

}  // namespace

TEST_CASE("banner on empty invocation") {
  Result r = invoke({});
  CHECK(r.code == 0);
  CHECK(r.out == "afsolve v1.0.0\nthe afsolve authors\n");
  CHECK(r.err.empty());
}

TEST_CASE("capability listing") {
  Result formats = invoke({"--formats"});
  CHECK(formats.code == 0);
  CHECK(formats.out == "[apx,tgf]\n");

  Result problems = invoke({"--problems"});
  CHECK(problems.code == 0);
  CHECK(problems.out ==
        "[DC-CO,DC-GR,DC-PR,DC-ST,DS-CO,DS-GR,DS-PR,DS-ST,"
        "EE-CO,EE-GR,EE-PR,EE-ST,SE-CO,SE-GR,SE-PR,SE-ST]\n");
}

TEST_CASE("solving through the protocol") {
  Result se = invoke({"-p", "SE-GR", "-f", fixtures().path("f3.tgf"), "-fo", "tgf"});
  CHECK(se.code == 0);
  CHECK(se.out == "[a,c]\n");
  CHECK(se.err.empty());

  Result ee = invoke({"-p", "EE-ST", "-f", fixtures().path("f5.apx"), "-fo", "apx"});
  CHECK(ee.code == 0);
  CHECK(ee.out == "[]\n");

  Result dc = invoke({"-p", "DC-PR", "-f", fixtures().path("f4.tgf"), "-fo", "tgf",
                      "-a", "a"});
  CHECK(dc.code == 0);
  CHECK(dc.out == "YES\n");

  // flag order is free
  Result reordered = invoke({"-fo", "tgf", "-p", "SE-GR", "-f",
                             fixtures().path("f3.tgf")});
  CHECK(reordered.out == "[a,c]\n");
}

TEST_CASE("every advertised problem dispatches") {
  Result problems = invoke({"--problems"});
  std::string list = problems.out.substr(1, problems.out.size() - 3);
  std::istringstream split(list);
  std::string pair;
  int count = 0;
  while (std::getline(split, pair, ',')) {
    ++count;
    std::vector<std::string> args = {"-p", pair, "-f", fixtures().path("f3.tgf"),
                                     "-fo", "tgf"};
    if (pair.starts_with("DC") || pair.starts_with("DS")) {
      args.push_back("-a");
      args.push_back("a");
    }
    Result r = invoke(args);
    CAPTURE(pair);
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
  }
  CHECK(count == 16);
}

TEST_CASE("identical invocations give identical output") {
  std::vector<std::string> args = {"-p", "EE-CO", "-f", fixtures().path("f4.tgf"),
                                   "-fo", "tgf"};
  CHECK(invoke(args).out == invoke(args).out);
  CHECK(invoke(args).out == "[[],[a],[b]]\n");
}

TEST_CASE("errors exit 1 with clean standard output") {
  auto check_failure = [](const std::vector<std::string>& args) {
    Result r = invoke(args);
    CAPTURE(args.empty() ? std::string() : args[0]);
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);  // one diagnostic line
  };

  const std::string f3 = fixtures().path("f3.tgf");
  check_failure({"-p", "XX-GR", "-f", f3, "-fo", "tgf"});
  check_failure({"-p", "SE-XX", "-f", f3, "-fo", "tgf"});
  check_failure({"-p", "SE-GR", "-f", f3, "-fo", "gml"});
  check_failure({"-p", "SE-GR", "-f", "/nonexistent/x.tgf", "-fo", "tgf"});
  check_failure({"-p", "SE-GR", "-f", fixtures().path("bad.tgf"), "-fo", "tgf"});
  check_failure({"-p", "DC-GR", "-f", f3, "-fo", "tgf"});             // missing -a
  check_failure({"-p", "SE-GR", "-f", f3, "-fo", "tgf", "-a", "a"});  // extra -a
  check_failure({"-p", "DC-GR", "-f", f3, "-fo", "tgf", "-a", "zz"});
  check_failure({"-p", "SE-GR", "-f", f3});                           // missing -fo
  check_failure({"-p", "SE-GR", "-f", f3, "-fo"});                    // missing value
  check_failure({"--nonsense"});
  check_failure({"-p", "SE-GR", "-p", "SE-GR", "-f", f3, "-fo", "tgf"});
  // apx content under -fo tgf: the '#' separator is missing
  check_failure({"-p", "SE-GR", "-f", fixtures().path("f5.apx"), "-fo", "tgf"});
}
