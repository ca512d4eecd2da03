// Runs every tests/golden/*.args case against the CLI and compares stdout and exit code exactly.
//   golden_runner <holo> <dir> [--update]
// A case is NAME.args (one argument per line), NAME.expected (stdout) and optionally NAME.exit.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& exe, const std::vector<std::string>& args) {
  int fds[2];
  if (pipe(fds) != 0) return {};
  pid_t pid = fork();
  if (pid == 0) {
    dup2(fds[1], STDOUT_FILENO);
    close(fds[0]);
    close(fds[1]);
    // stdin is never read by the cases
    freopen("/dev/null", "r", stdin);
    freopen("/dev/null", "w", stderr);
    std::vector<char*> argv{const_cast<char*>(exe.c_str())};
    for (auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);
    execv(exe.c_str(), argv.data());
    _exit(127);
  }
  close(fds[1]);
  Run r;
  char buf[4096];
  ssize_t n;
  while ((n = read(fds[0], buf, sizeof buf)) > 0) r.out.append(buf, static_cast<size_t>(n));
  close(fds[0]);
  int st = 0;
  waitpid(pid, &st, 0);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: golden_runner <holo> <dir> [--update]\n";
    return 1;
  }
  std::string exe = argv[1];
  fs::path dir = argv[2];
  bool update = argc > 3 && std::string(argv[3]) == "--update";
  std::vector<fs::path> cases;
  for (auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".args") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  int failed = 0;
  for (auto& c : cases) {
    std::vector<std::string> args;
    std::istringstream in(slurp(c));
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) args.push_back(line);
    auto t0 = std::chrono::steady_clock::now();
    Run r = run(exe, args);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    fs::path expected = fs::path(c).replace_extension(".expected");
    fs::path exitf = fs::path(c).replace_extension(".exit");
    if (update) {
      std::ofstream(expected) << r.out;
      if (r.code != 0)
        std::ofstream(exitf) << r.code << "\n";
      else
        fs::remove(exitf);
    }
    int want = fs::exists(exitf) ? std::stoi(slurp(exitf)) : 0;
    bool ok = fs::exists(expected) && slurp(expected) == r.out && r.code == want;
    std::printf("%s %-40s %.2fs\n", ok ? "PASS" : "FAIL", c.stem().c_str(), secs);
    if (!ok) {
      ++failed;
      std::printf("  exit %d (want %d)\n--- got\n%s--- want\n%s", r.code, want, r.out.c_str(),
                  fs::exists(expected) ? slurp(expected).c_str() : "(missing)\n");
    }
  }
  std::printf("%zu cases, %d failed\n", cases.size(), failed);
  return failed ? 1 : 0;
}
