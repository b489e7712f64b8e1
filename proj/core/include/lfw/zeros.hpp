#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lfw/characters.hpp"
#include "lfw/lfunc.hpp"

namespace lfw {

enum class ZeroSource { computed, imported };

struct Zero {
  double gamma = 0.0;  // rho = 1/2 + i gamma
  cplx lprime;         // L'(rho, chi)
  ZeroSource source = ZeroSource::computed;
  double refine_err = 0.0;
};

struct ZeroList {
  CharacterId character;
  double t_min = 0.0;
  double t_max = 0.0;
  std::vector<Zero> zeros;  // strictly increasing gamma in (t_min, t_max]
  bool complete = false;    // count agrees with expected_count within tolerance
};

struct ScanOptions {
  double max_height = 300.0;
  int max_halvings = 6;
  double window = 10.0;  // t-length of the independently scanned pieces
};

// Smooth zero count (T / 2 pi) log(qT / 2 pi e) for 0 < gamma <= T; T >= 2.
double expected_count(const Character& chi, double T);
// Allowed deviation 2 + log(qT) between found and expected counts.
double count_tolerance(const Character& chi, double T);

// Phase making e^{i theta} L(1/2 + it) real for real primitive chi.
double hardy_theta(double t, const Character& chi);
double hardy_z(double t, const Character& chi, const EvalParams& p = {});

// Number of zeros of L(s, chi) inside the box [sigma0, sigma1] x [t0, t1]
// by tracking the argument along the boundary.
int winding_count(const Character& chi, double sigma0, double sigma1, double t0, double t1,
                  const EvalParams& p = {});

// Zeros with T0 < gamma <= T1. chi must be primitive (1 allowed).
ZeroList scan_zeros(const Character& chi, double T0, double T1, const EvalParams& p = {},
                    const ScanOptions& opts = {});

// Restricts the list to (T0, T1] and sets `complete` from the count rule
// used by scans. Returns the new flag.
bool mark_coverage(ZeroList& list, const Character& chi, double T0, double T1);

// Concatenates lists of one character, sorts by gamma and drops ordinates
// closer than 1e-7 to their predecessor.
ZeroList merge_zero_lists(const std::vector<ZeroList>& parts);

void export_zeros(const ZeroList& list, const std::filesystem::path& path);
std::string zeros_to_csv(const ZeroList& list);

// Reads the CSV format back, re-verifies |L(1/2 + i gamma)| <= 1e-6 for every
// entry and recomputes L' where the file leaves it blank.
ZeroList import_zeros(const std::filesystem::path& path, const Character& chi, const EvalParams& p = {});
ZeroList zeros_from_csv(const std::string& text, const Character& chi, const EvalParams& p = {});

// Verified zeros with freshly computed L' at externally supplied ordinates.
ZeroList verify_ordinates(const std::vector<double>& gammas, const Character& chi, const EvalParams& p = {});

}  // namespace lfw
