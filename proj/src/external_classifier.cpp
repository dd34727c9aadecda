#include "cst/external_classifier.hpp"

#include <csignal>
#include <cstdio>
#include <cmath>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

#include "cst/error.hpp"
#include "cst/hash.hpp"

namespace cst {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw Error("external: " + msg);
}

// Child process with line-buffered stdin/stdout pipes.
class ChildProcess {
 public:
  explicit ChildProcess(const std::string& command) {
    // EPIPE instead of SIGPIPE when the child dies under us.
    std::signal(SIGPIPE, SIG_IGN);

    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      fail("cannot create pipes");
    pid_ = fork();
    if (pid_ < 0) fail("cannot fork child process");
    if (pid_ == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      execl("/bin/sh", "sh", "-c", command.c_str(), (char*)nullptr);
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    stdin_fd_ = to_child[1];
    stdout_ = fdopen(from_child[0], "r");
    if (!stdout_) fail("cannot open child stdout");
  }

  ~ChildProcess() {
    if (stdin_fd_ >= 0) close(stdin_fd_);
    if (stdout_) fclose(stdout_);
    if (pid_ > 0) {
      int status = 0;
      // Give the child a moment to exit on EOF, then escalate.
      for (int i = 0; i < 50; ++i) {
        if (waitpid(pid_, &status, WNOHANG) != 0) return;
        usleep(10'000);
      }
      kill(pid_, SIGKILL);
      waitpid(pid_, &status, 0);
    }
  }

  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  void write_line(const std::string& line) {
    std::string buf = line;
    buf.push_back('\n');
    std::size_t off = 0;
    while (off < buf.size()) {
      ssize_t n = write(stdin_fd_, buf.data() + off, buf.size() - off);
      if (n <= 0) fail("transport error: child stdin closed");
      off += static_cast<std::size_t>(n);
    }
  }

  std::string read_line() {
    char* line = nullptr;
    std::size_t cap = 0;
    ssize_t n = getline(&line, &cap, stdout_);
    if (n < 0) {
      free(line);
      fail("transport error: child stdout closed mid-stream");
    }
    std::string out(line, static_cast<std::size_t>(n));
    free(line);
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r'))
      out.pop_back();
    return out;
  }

 private:
  pid_t pid_ = -1;
  int stdin_fd_ = -1;
  FILE* stdout_ = nullptr;
};

json parse_reply(const std::string& line) {
  try {
    json reply = json::parse(line);
    if (!reply.is_object()) fail("protocol error: reply is not a json object");
    return reply;
  } catch (const json::exception&) {
    fail("protocol error: malformed reply line");
  }
}

class ExternalTrainedClassifier : public TrainedClassifier {
 public:
  ExternalTrainedClassifier(const std::string& command,
                            std::span<const LabeledText> examples,
                            Provenance provenance, std::uint64_t seed)
      : provenance_(provenance), child_(command) {
    Digest digest;
    digest.field(command);
    digest.field(provenance.str());
    digest.field(std::to_string(seed));
    json train_msg;
    train_msg["op"] = "train";
    train_msg["seed"] = seed;
    auto& items = train_msg["examples"] = json::array();
    for (const auto& ex : examples) {
      items.push_back(
          {{"text", ex.text}, {"label", std::string(to_string(ex.label))}});
      digest.field(ex.id);
      digest.field(ex.text);
      digest.field(to_string(ex.label));
    }
    digest_ = digest.hex();
    child_.write_line(train_msg.dump());
    json reply = parse_reply(child_.read_line());
    if (reply.value("ok", false) != true)
      fail("protocol error: train was not acknowledged");
  }

  Prediction predict(std::string_view text) const override {
    json msg;
    msg["op"] = "predict";
    msg["text"] = std::string(text);
    child_.write_line(msg.dump());
    json reply = parse_reply(child_.read_line());
    if (!reply.contains("probs") || !reply["probs"].is_array() ||
        reply["probs"].size() != 2) {
      fail("protocol error: expected {\"probs\":[p_pos,p_neg]}");
    }
    double p0 = reply["probs"][0].is_number() ? reply["probs"][0].get<double>()
                                              : std::nan("");
    double p1 = reply["probs"][1].is_number() ? reply["probs"][1].get<double>()
                                              : std::nan("");
    if (!std::isfinite(p0) || !std::isfinite(p1))
      fail("protocol error: non-finite probabilities");
    if (p0 < 0.0 || p0 > 1.0 || p1 < 0.0 || p1 > 1.0 ||
        std::abs(p0 + p1 - 1.0) > 1e-6) {
      fail("protocol error: probabilities must be in [0,1] and sum to 1");
    }
    return make_prediction(p0);
  }

  Provenance provenance() const override { return provenance_; }
  std::string digest() const override { return digest_; }

 private:
  Provenance provenance_;
  std::string digest_;
  mutable ChildProcess child_;
};

}  // namespace

std::unique_ptr<TrainedClassifier> ExternalBackend::train(
    std::span<const LabeledText> train_examples,
    std::span<const LabeledText> dev_examples, Provenance provenance,
    std::uint64_t seed) {
  // The child owns its training loop; the dev split stays host-side.
  (void)dev_examples;
  if (train_examples.empty()) fail("no training examples");
  return std::make_unique<ExternalTrainedClassifier>(command_, train_examples,
                                                     provenance, seed);
}

}  // namespace cst
