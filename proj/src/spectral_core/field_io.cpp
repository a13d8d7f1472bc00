#include "nlsim/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nlsim/error.hpp"

namespace nlsim {
namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_field(std::ostream& os, const Field& f) {
  const Grid& g = f.grid();
  os << g.dim() << ' ' << g.points_per_axis() << ' ' << format_double(g.extent()) << ' '
     << to_string(f.rep()) << '\n';
  for (const cplx& z : f.samples()) os << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
}

Field read_field(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw DomainError("field stream: missing header");
  std::istringstream hs(header);
  int dim = 0, n = 0;
  std::string extent_text, rep_text;
  if (!(hs >> dim >> n >> extent_text >> rep_text))
    throw DomainError("field stream: malformed header '" + header + "'");
  Rep rep;
  if (rep_text == "physical") rep = Rep::physical;
  else if (rep_text == "frequency") rep = Rep::frequency;
  else throw DomainError("field stream: unknown representation '" + rep_text + "'");
  const Grid grid(dim, std::stod(extent_text), n);
  std::vector<cplx> samples(grid.size());
  std::string re, im;
  for (auto& z : samples) {
    if (!(is >> re >> im)) throw DomainError("field stream: truncated sample data");
    z = cplx(std::strtod(re.c_str(), nullptr), std::strtod(im.c_str(), nullptr));
  }
  return Field(grid, std::move(samples), rep);
}

void save_field(const std::filesystem::path& path, const Field& f) {
  std::ofstream os(path);
  if (!os) throw DomainError("cannot open " + path.string() + " for writing");
  write_field(os, f);
}

Field load_field(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open " + path.string());
  return read_field(is);
}

}  // namespace nlsim
