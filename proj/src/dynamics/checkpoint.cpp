#include <cstdio>
#include <fstream>

#include "nlsim/dynamics.hpp"
#include "nlsim/error.hpp"
#include "nlsim/field_io.hpp"

namespace nlsim {

void write_checkpoints(const std::filesystem::path& dir, const Trajectory& traj) {
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.txt");
  if (!manifest) throw DomainError("cannot write manifest in " + dir.string());
  char name[32], line[96];
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    std::snprintf(name, sizeof name, "sample_%06zu.field", i);
    save_field(dir / name, traj.samples[i].field);
    std::snprintf(line, sizeof line, "%zu %.17g %s\n", i, traj.samples[i].t, name);
    manifest << line;
  }
}

}  // namespace nlsim
