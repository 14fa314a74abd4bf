#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace curvegrp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kComputation = 2, kInconclusive = 3 };

// Ordered "# heading" sections of "key: value" lines.
class Report {
 public:
  void section(std::string heading) { sections_.push_back({std::move(heading), {}}); }
  void line(std::string text) { sections_.back().second.push_back(std::move(text)); }
  void kv(const std::string& key, const std::string& value) { line(key + ": " + value); }
  // Appends every non-empty line of a multi-line block.
  void block(const std::string& text);

  // Machine form drops the headings.
  std::string render(bool machine = false) const;

 private:
  std::vector<std::pair<std::string, std::vector<std::string>>> sections_;
};

// argv[0] is the program name.  Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvegrp::cli
