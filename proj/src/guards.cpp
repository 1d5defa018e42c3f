#include "tspread/guards.hpp"

#include <cstdlib>
#include <string>

#include "tspread/errors.hpp"

namespace tspread {

namespace {

void override_from(const char* name, std::size_t& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  std::size_t consumed = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &consumed);
  } catch (const std::exception&) {
    throw InvalidInput(std::string(name) + ": not a number: " + raw);
  }
  if (consumed != std::string(raw).size() || value == 0)
    throw InvalidInput(std::string(name) + ": expected a positive integer");
  slot = static_cast<std::size_t>(value);
}

}  // namespace

Guards Guards::from_env() {
  Guards g;
  override_from("TSPREAD_MAX_GENERATORS", g.max_power_generators);
  override_from("TSPREAD_MAX_DECOMP_VARS", g.max_decomposition_vars);
  override_from("TSPREAD_MAX_COMPONENTS", g.max_components);
  override_from("TSPREAD_MAX_WITNESS_SEARCH", g.max_witness_search);
  return g;
}

}  // namespace tspread
