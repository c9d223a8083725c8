#pragma once

#include <optional>
#include <string>
#include <vector>

#include "happy/io.h"
#include "happy/lattice.h"

namespace happy {

struct LatticeStatus {
  LatticeName name;
  std::string status;  // total-colorable | non-colorable | unbounded | open
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> t;
  std::string note;
};

/// Known colorability of each of the 19 lattices.
std::vector<LatticeStatus> lattice_statuses();

struct ApiResponse {
  int status = 200;
  Json body;
};

/// One API request, independent of any transport. Paths: GET /api/lattices,
/// POST /api/puzzle, /api/check, /api/hint, and /api/solve when enabled.
ApiResponse handle_api(const std::string& method, const std::string& path, const std::string& body,
                       bool enable_solve = false);

struct ServiceOptions {
  std::string host = "0.0.0.0";
  int port = 8080;
  std::string static_dir;  // served at / when non-empty
  bool enable_solve = false;
};

/// Blocks serving HTTP until the process stops. Throws std::runtime_error when
/// the port cannot be bound or static_dir does not exist.
void serve(const ServiceOptions& options);

}  // namespace happy
