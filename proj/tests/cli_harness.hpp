#ifndef BERGELAB_TESTS_CLI_HARNESS_HPP
#define BERGELAB_TESTS_CLI_HARNESS_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

// Runs the installed CLI binary (path injected by the build as
// BERGELAB_CLI_PATH) with shell-quoted arguments, captured streams, and an
// optional stdin payload or environment prefix.
namespace cliharness {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CliResult run_cli(const std::string& args,
                         const std::string& stdin_data = "",
                         const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string stem = "/tmp/bergelab_cli_" +
                           std::to_string(static_cast<long>(getpid())) + "_" +
                           std::to_string(counter++);
  const std::string in_path = stem + ".in";
  const std::string out_path = stem + ".out";
  const std::string err_path = stem + ".err";
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_data;
  }
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += std::string(BERGELAB_CLI_PATH) + " " + args + " < " + in_path +
         " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  if (status == -1) throw std::runtime_error("system() failed");

  CliResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return res;
}

}  // namespace cliharness

#endif
