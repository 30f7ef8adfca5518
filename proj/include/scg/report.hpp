#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace scg {

/// Outcome of one verification: failures carry residuals or counterexamples
/// in `details`.
struct Report {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
  double elapsed_ms = 0.0;

  void fail(std::string detail) {
    passed = false;
    details.push_back(std::move(detail));
  }
  void note(std::string detail) { details.push_back(std::move(detail)); }
};

/// Times a scope and writes the elapsed milliseconds into a report.
class ReportTimer {
 public:
  explicit ReportTimer(Report& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace scg
