#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace nlsim {

struct FittedQuantity {
  std::string name;
  double value = 0.0;
  double residual = 0.0;
  std::size_t samples = 0;
};

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// One row of the per-case table. `status` is "ok" or a failure message.
struct CaseRow {
  std::string label;
  std::vector<double> values;
  std::string status = "ok";
};

struct StudyReport {
  std::string study;
  std::vector<std::string> columns;
  std::vector<CaseRow> cases;
  std::vector<FittedQuantity> fits;
  std::vector<Assertion> assertions;
  std::vector<std::string> flags;
  std::map<std::string, std::string> environment;

  void assert_that(std::string name, bool ok, std::string detail);
  bool passed() const;
  const FittedQuantity* fit(const std::string& name) const;
  const Assertion* assertion(const std::string& name) const;
};

/// JSON summary mirroring the report; non-finite numbers become null.
void write_json(std::ostream& os, const StudyReport& report);

/// Writes through a temporary sibling and renames into place, so a crash
/// never leaves a truncated file under the final name.
void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& writer);

/// "%.17g", with "nan"/"inf" spelled out.
std::string format_number(double v);

}  // namespace nlsim
