#include "devstone/bench/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "devstone/generator.hpp"
#include "pdevs/simulation.hpp"

namespace devstone::bench {

namespace {

double monotonic_seconds() {
  timespec ts;
  clock_gettime(CLOCK_MONOTONIC, &ts);
  return static_cast<double>(ts.tv_sec) + static_cast<double>(ts.tv_nsec) * 1e-9;
}

void apply_memory_cap(std::uint64_t bytes) {
  if (bytes == 0) return;
  rlimit rl;
  rl.rlim_cur = bytes;
  rl.rlim_max = bytes;
  setrlimit(RLIMIT_AS, &rl);
}

void write_all(int fd, const char* data, std::size_t n) {
  while (n > 0) {
    ssize_t k = ::write(fd, data, n);
    if (k < 0) {
      if (errno == EINTR) continue;
      return;
    }
    data += k;
    n -= static_cast<std::size_t>(k);
  }
}

void write_line(int fd, const char* line) {
  write_all(fd, line, std::strlen(line));
  write_all(fd, "\n", 1);
}

[[noreturn]] void trial_child_main(int fd, const RunConfig& config) {
  auto counters = std::make_shared<TransitionCounters>();
  std::unique_ptr<pdevs::CoupledModel> model;
  std::optional<pdevs::Simulation> sim;
  try {
    model = build(config.spec, counters);
    sim.emplace(*model, injection_schedule(config.spec));
  } catch (const std::bad_alloc&) {
    write_line(fd, "oom build");
    _exit(3);
  } catch (const std::exception& e) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "error build %s", e.what());
    write_line(fd, buf);
    _exit(2);
  }

  char buf[192];
  std::snprintf(buf, sizeof buf, "built %llu",
                static_cast<unsigned long long>(sim->atomic_count()));
  write_line(fd, buf);

  const double t0 = monotonic_seconds();
  try {
    sim->run_to_quiescence(config.step_cap);
  } catch (const std::bad_alloc&) {
    write_line(fd, "oom run");
    _exit(4);
  } catch (const std::exception& e) {
    char ebuf[512];
    std::snprintf(ebuf, sizeof ebuf, "error run %s", e.what());
    write_line(fd, ebuf);
    _exit(5);
  }
  const double wall = monotonic_seconds() - t0;

  std::snprintf(buf, sizeof buf, "counters %llu %llu %llu",
                static_cast<unsigned long long>(counters->num_delt_ints),
                static_cast<unsigned long long>(counters->num_delt_exts),
                static_cast<unsigned long long>(counters->num_of_events));
  write_line(fd, buf);
  std::snprintf(buf, sizeof buf, "wall %.9f", wall);
  write_line(fd, buf);
  write_line(fd, "done");
  _exit(0);
}

bool starts_with(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

std::uint64_t read_vmhwm_bytes(pid_t pid) {
  char path[64];
  std::snprintf(path, sizeof path, "/proc/%d/status", static_cast<int>(pid));
  std::FILE* f = std::fopen(path, "r");
  if (f == nullptr) return 0;
  char line[256];
  std::uint64_t kb = 0;
  while (std::fgets(line, sizeof line, f) != nullptr) {
    if (std::strncmp(line, "VmHWM:", 6) == 0) {
      kb = std::strtoull(line + 6, nullptr, 10);
      break;
    }
  }
  std::fclose(f);
  return kb * 1024;
}

std::uint64_t self_vmhwm_bytes() { return read_vmhwm_bytes(getpid()); }

ChildOutcome run_trial_in_child(const RunConfig& config) {
  int fds[2];
  if (pipe(fds) != 0) {
    throw HarnessError(std::string("pipe failed: ") + std::strerror(errno));
  }
  pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw HarnessError(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    close(fds[0]);
    apply_memory_cap(config.mem_cap_bytes);
    trial_child_main(fds[1], config);
  }
  close(fds[1]);
  fcntl(fds[0], F_SETFL, O_NONBLOCK);

  ChildOutcome out;
  std::string pending;
  bool eof = false;
  bool killed = false;
  double built_at = 0.0;
  bool protocol_error = false;

  auto handle_line = [&](const std::string& line) {
    if (starts_with(line, "built ")) {
      out.built = true;
      out.n_atomics = std::strtoull(line.c_str() + 6, nullptr, 10);
      built_at = monotonic_seconds();
    } else if (starts_with(line, "counters ")) {
      unsigned long long i = 0, e = 0, v = 0;
      if (std::sscanf(line.c_str(), "counters %llu %llu %llu", &i, &e, &v) == 3) {
        out.counters = TransitionCounters{i, e, v};
      } else {
        protocol_error = true;
      }
    } else if (starts_with(line, "wall ")) {
      out.wall_time_s = std::strtod(line.c_str() + 5, nullptr);
    } else if (line == "done") {
      out.finished = true;
    } else if (line == "oom build") {
      out.oom = true;
      out.oom_during_build = true;
    } else if (line == "oom run") {
      out.oom = true;
    } else if (starts_with(line, "error build ")) {
      out.build_error = true;
      out.error_message = line.substr(12);
    } else if (starts_with(line, "error run ")) {
      out.run_error = true;
      out.error_message = line.substr(10);
    } else {
      protocol_error = true;
    }
  };

  while (!eof) {
    pollfd p{fds[0], POLLIN, 0};
    poll(&p, 1, 2);  // 2 ms tick -> watchdog samples at ~500 Hz
    char tmp[4096];
    for (;;) {
      ssize_t k = read(fds[0], tmp, sizeof tmp);
      if (k > 0) {
        pending.append(tmp, static_cast<std::size_t>(k));
        continue;
      }
      if (k == 0) {
        eof = true;
      } else if (errno == EINTR) {
        continue;
      } else if (errno != EAGAIN && errno != EWOULDBLOCK) {
        eof = true;
      }
      break;
    }
    std::size_t nl;
    while ((nl = pending.find('\n')) != std::string::npos) {
      handle_line(pending.substr(0, nl));
      pending.erase(0, nl + 1);
    }
    if (!killed && !out.finished) {
      if (out.built && config.time_cap_s > 0 &&
          monotonic_seconds() - built_at > config.time_cap_s) {
        kill(pid, SIGKILL);
        out.killed_time = true;
        killed = true;
      } else if (config.mem_cap_bytes > 0 &&
                 read_vmhwm_bytes(pid) > config.mem_cap_bytes) {
        kill(pid, SIGKILL);
        out.killed_mem = true;
        killed = true;
      }
    }
  }
  close(fds[0]);
  if (out.built) out.elapsed_run_s = monotonic_seconds() - built_at;

  rusage ru{};
  int status = 0;
  pid_t reaped;
  do {
    reaped = wait4(pid, &status, 0, &ru);
  } while (reaped < 0 && errno == EINTR);
  if (reaped != pid) {
    throw HarnessError(std::string("wait4 failed: ") + std::strerror(errno));
  }
  out.peak_mem_bytes = static_cast<std::uint64_t>(ru.ru_maxrss) * 1024;
  if (WIFEXITED(status)) {
    out.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    out.term_signal = WTERMSIG(status);
  }
  if (protocol_error) {
    throw HarnessError("benchmark child produced a malformed report");
  }
  return out;
}

ProbeOutcome run_probe_in_child(const std::function<int()>& body, double time_cap_s,
                                std::uint64_t mem_cap_bytes, bool apply_rlimit) {
  pid_t pid = fork();
  if (pid < 0) {
    throw HarnessError(std::string("fork failed: ") + std::strerror(errno));
  }
  if (pid == 0) {
    if (apply_rlimit) apply_memory_cap(mem_cap_bytes);
    int code = 127;
    try {
      code = body();
    } catch (...) {
      code = 126;
    }
    _exit(code);
  }

  ProbeOutcome out;
  const double t0 = monotonic_seconds();
  bool killed = false;
  for (;;) {
    rusage ru{};
    int status = 0;
    pid_t r = wait4(pid, &status, WNOHANG, &ru);
    if (r < 0 && errno != EINTR) {
      throw HarnessError(std::string("wait4 failed: ") + std::strerror(errno));
    }
    if (r == pid) {
      out.peak_mem_bytes = static_cast<std::uint64_t>(ru.ru_maxrss) * 1024;
      if (WIFEXITED(status)) {
        out.exited = true;
        out.exit_code = WEXITSTATUS(status);
      } else if (WIFSIGNALED(status)) {
        out.term_signal = WTERMSIG(status);
      }
      return out;
    }
    if (!killed) {
      if (time_cap_s > 0 && monotonic_seconds() - t0 > time_cap_s) {
        kill(pid, SIGKILL);
        out.killed_time = true;
        killed = true;
      } else if (mem_cap_bytes > 0 && read_vmhwm_bytes(pid) > mem_cap_bytes) {
        kill(pid, SIGKILL);
        out.killed_mem = true;
        killed = true;
      }
    }
    usleep(2000);
  }
}

}  // namespace devstone::bench
