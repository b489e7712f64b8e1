#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <vector>

#include "lfw/arithmetic.hpp"
#include "lfw/config.hpp"
#include "lfw/selftest.hpp"
#include "lfw/sums.hpp"
#include "lfw/zeros.hpp"

namespace lfw {

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitThreshold = 2;

struct VerifyRequest {
  ReportKind kind = ReportKind::ultraclean_ii;
  CharacterId character;
  Rational xi;
  std::vector<double> grid;  // empty: default_grid(kind)
};

std::vector<double> default_grid(ReportKind kind);

// Height up to which zeros are needed for the request (0 for arithmetic-only kinds).
double required_zero_height(const VerifyRequest& req, const Bump& bump);
// Largest n the l(n) table must hold (0 for zero-only kinds).
std::size_t required_sieve(const VerifyRequest& req, const Bump& bump);

// Shared state of one CLI invocation: configuration, a lazily grown l(n)
// table and zero lists kept in memory and on disk.
class Workspace {
 public:
  explicit Workspace(RunConfig cfg);

  const RunConfig& config() const noexcept { return cfg_; }

  // Table holding at least 1..n.
  const EllTable& ell_table(std::size_t n);

  // Complete zero list of a primitive character covering (0, T]. Looked up
  // in memory, then in the cache directory, then downloaded when the network
  // is enabled, and scanned otherwise. Fresh scans are written to the cache.
  const ZeroList& zeros(const Character& primitive, double T);

  std::size_t scans_performed() const noexcept { return scans_; }

 private:
  RunConfig cfg_;
  std::unique_ptr<EllTable> table_;
  std::map<CharacterId, ZeroList> zero_lists_;
  std::size_t scans_ = 0;
  std::mutex mutex_;
};

VerificationReport run_verification(Workspace& ws, const VerifyRequest& req);

struct CharacterRow {
  CharacterId id;
  std::uint32_t conductor;
  int parity;
  std::uint32_t order;
  bool principal;
  bool primitive;
};
std::vector<CharacterRow> character_table(std::uint32_t q);

int cmd_characters(std::uint32_t q, std::ostream& out);
int cmd_scan_zeros(Workspace& ws, CharacterId id, double T, std::ostream& out);
int cmd_verify(Workspace& ws, const VerifyRequest& req, std::ostream& out);
int cmd_selftest(Workspace& ws, std::ostream& out);
int cmd_export_plotdata(Workspace& ws, const VerifyRequest& req, std::ostream& out);

}  // namespace lfw
