#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace cli {

struct Run {
  int code = -1;
  std::string out;
};

inline std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

/// Runs the workbench with the given (already quoted) arguments. stderr is
/// folded into out when merge_stderr is set, discarded otherwise.
inline Run run(const std::string& args, bool merge_stderr = true) {
  const std::string cmd = quote(ESGAMES_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace cli
