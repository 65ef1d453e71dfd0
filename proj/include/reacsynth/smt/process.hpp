#pragma once

// Child process with piped stdin/stdout, used to drive the external
// SMT solver. POSIX only.

#include "reacsynth/errors.hpp"

#include <csignal>
#include <cstring>
#include <string>
#include <vector>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace reacsynth::smt {

class Subprocess {
public:
    Subprocess() = default;
    Subprocess(const Subprocess&) = delete;
    Subprocess& operator=(const Subprocess&) = delete;

    ~Subprocess() { terminate(); }

    void spawn(const std::string& path, const std::vector<std::string>& args) {
        terminate();
        static bool sigpipe_ignored = [] {
            ::signal(SIGPIPE, SIG_IGN);
            return true;
        }();
        (void)sigpipe_ignored;

        int to_child[2], from_child[2];
        if (::pipe(to_child) != 0 || ::pipe(from_child) != 0)
            throw SolverError("pipe() failed: " + std::string(std::strerror(errno)));

        pid_ = ::fork();
        if (pid_ < 0) throw SolverError("fork() failed");
        if (pid_ == 0) {
            ::dup2(to_child[0], STDIN_FILENO);
            ::dup2(from_child[1], STDOUT_FILENO);
            ::close(to_child[0]);
            ::close(to_child[1]);
            ::close(from_child[0]);
            ::close(from_child[1]);
            std::vector<char*> argv;
            argv.push_back(const_cast<char*>(path.c_str()));
            for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
            argv.push_back(nullptr);
            ::execvp(path.c_str(), argv.data());
            ::perror("execvp");
            ::_exit(127);
        }
        ::close(to_child[0]);
        ::close(from_child[1]);
        in_fd_ = to_child[1];
        out_fd_ = from_child[0];
    }

    bool running() const { return pid_ > 0; }

    bool write_all(const std::string& data) {
        std::size_t off = 0;
        while (off < data.size()) {
            ssize_t n = ::write(in_fd_, data.data() + off, data.size() - off);
            if (n < 0) {
                if (errno == EINTR) continue;
                return false;
            }
            off += static_cast<std::size_t>(n);
        }
        return true;
    }

    enum class ReadStatus { Data, Timeout, Eof };

    // Appends available bytes to `buf`, waiting up to `timeout_s`.
    ReadStatus read_some(std::string& buf, double timeout_s) {
        struct pollfd pfd{out_fd_, POLLIN, 0};
        int ms = timeout_s >= 1e8 ? -1 : static_cast<int>(timeout_s * 1000.0) + 1;
        int rc = ::poll(&pfd, 1, ms);
        if (rc == 0) return ReadStatus::Timeout;
        if (rc < 0) return errno == EINTR ? ReadStatus::Timeout : ReadStatus::Eof;
        char chunk[65536];
        ssize_t n = ::read(out_fd_, chunk, sizeof chunk);
        if (n <= 0) return ReadStatus::Eof;
        buf.append(chunk, static_cast<std::size_t>(n));
        return ReadStatus::Data;
    }

    void terminate() {
        if (pid_ <= 0) return;
        if (in_fd_ >= 0) ::close(in_fd_);
        if (out_fd_ >= 0) ::close(out_fd_);
        ::kill(pid_, SIGKILL);
        int status = 0;
        ::waitpid(pid_, &status, 0);
        pid_ = -1;
        in_fd_ = out_fd_ = -1;
    }

private:
    pid_t pid_ = -1;
    int in_fd_ = -1;
    int out_fd_ = -1;
};

} // namespace reacsynth::smt
