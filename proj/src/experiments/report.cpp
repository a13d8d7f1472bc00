#include "nlsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "nlsim/error.hpp"

namespace nlsim {

void StudyReport::assert_that(std::string name, bool ok, std::string detail) {
  assertions.push_back({std::move(name), ok, std::move(detail)});
}

bool StudyReport::passed() const {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

const FittedQuantity* StudyReport::fit(const std::string& name) const {
  for (const auto& f : fits)
    if (f.name == name) return &f;
  return nullptr;
}

const Assertion* StudyReport::assertion(const std::string& name) const {
  for (const auto& a : assertions)
    if (a.name == name) return &a;
  return nullptr;
}

namespace {

nlohmann::ordered_json number(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void write_json(std::ostream& os, const StudyReport& r) {
  nlohmann::ordered_json j;
  j["study"] = r.study;
  j["passed"] = r.passed();
  j["environment"] = r.environment;
  j["columns"] = r.columns;
  auto& cases = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json row;
    row["label"] = c.label;
    auto& values = row["values"] = nlohmann::ordered_json::array();
    for (double v : c.values) values.push_back(number(v));
    row["status"] = c.status;
    cases.push_back(std::move(row));
  }
  auto& fits = j["fits"] = nlohmann::ordered_json::array();
  for (const auto& f : r.fits)
    fits.push_back({{"name", f.name}, {"value", number(f.value)}, {"residual", number(f.residual)},
                    {"samples", f.samples}});
  auto& asserts = j["assertions"] = nlohmann::ordered_json::array();
  for (const auto& a : r.assertions)
    asserts.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
  j["flags"] = r.flags;
  os << j.dump(2) << '\n';
}

void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& writer) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    writer(out);
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace nlsim
