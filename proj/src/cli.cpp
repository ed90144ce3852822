#include "af/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "af/engine.hpp"
#include "af/errors.hpp"
#include "af/formats.hpp"

namespace af::cli {

namespace {

struct UsageError {
  std::string message;
};

struct Problem {
  Task task;
  Semantics semantics;
};

Problem parse_problem(const std::string& spec) {
  auto dash = spec.find('-');
  if (dash != std::string::npos) {
    auto task = parse_task(spec.substr(0, dash));
    auto sem = parse_semantics(spec.substr(dash + 1));
    if (task && sem) return {*task, *sem};
  }
  throw UsageError{"unknown problem '" + spec + "'"};
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError{"cannot read file '" + path + "'"};
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int solve_problem(const std::map<std::string, std::string>& flags,
                  std::ostream& out) {
  auto value = [&](const char* flag) -> const std::string* {
    auto it = flags.find(flag);
    return it == flags.end() ? nullptr : &it->second;
  };

  const std::string* p = value("-p");
  const std::string* f = value("-f");
  const std::string* fo = value("-fo");
  const std::string* a = value("-a");
  if (!p) throw UsageError{"missing -p <problem>"};
  if (!f) throw UsageError{"missing -f <file>"};
  if (!fo) throw UsageError{"missing -fo <format>"};

  Problem problem = parse_problem(*p);
  auto format = parse_format(*fo);
  if (!format) throw UsageError{"unsupported format '" + *fo + "'"};

  bool wants_query =
      problem.task == Task::credulous || problem.task == Task::skeptical;
  if (wants_query && !a) throw UsageError{"problem '" + *p + "' requires -a <argument>"};
  if (!wants_query && a) throw UsageError{"problem '" + *p + "' does not take -a"};

  Framework framework = parse_framework(read_file(*f), *format);

  std::optional<ArgumentId> query;
  if (wants_query) {
    query = framework.find(*a);
    if (!query) throw UsageError{"argument '" + *a + "' not in framework"};
  }

  SolverAnswer answer = solve(framework, problem.task, problem.semantics, query);
  out << serialize_answer(answer, framework);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    if (args.empty()) {
      out << kSolverName << " v" << kSolverVersion << "\n" << kSolverAuthor << "\n";
      return 0;
    }
    if (args.size() == 1 && args[0] == "--formats") {
      out << "[apx,tgf]\n";
      return 0;
    }
    if (args.size() == 1 && args[0] == "--problems") {
      out << "[";
      bool first = true;
      for (Task t : {Task::credulous, Task::skeptical, Task::enumerate_extensions,
                     Task::some_extension}) {
        for (Semantics s : {Semantics::complete, Semantics::grounded,
                            Semantics::preferred, Semantics::stable}) {
          if (!first) out << ",";
          out << problem_name(t, s);
          first = false;
        }
      }
      out << "]\n";
      return 0;
    }

    std::map<std::string, std::string> flags;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& flag = args[i];
      if (flag != "-p" && flag != "-f" && flag != "-fo" && flag != "-a")
        throw UsageError{"unexpected argument '" + flag + "'"};
      if (i + 1 >= args.size()) throw UsageError{"missing value for " + flag};
      if (!flags.emplace(flag, args[++i]).second)
        throw UsageError{"duplicate flag " + flag};
    }
    return solve_problem(flags, out);
  } catch (const UsageError& e) {
    err << kSolverName << ": " << e.message << "\n";
  } catch (const Error& e) {
    err << kSolverName << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << kSolverName << ": " << e.what() << "\n";
  }
  return 1;
}

}  // namespace af::cli
