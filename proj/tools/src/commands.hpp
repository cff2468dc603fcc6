#ifndef UDWFORCE_COMMANDS_HPP
#define UDWFORCE_COMMANDS_HPP

#include <string>

#include "config.hpp"

namespace udwforce {

// All commands return the process exit code:
//   0 success, 1 verification failure, 2 invalid input, 3 tolerance not met.
int cmd_force(const RunConfig& cfg, const std::string& out,
              const std::string& format);
int cmd_sweep(const RunConfig& cfg, const std::string& out,
              const std::string& format, int threads);
int cmd_figure(const std::string& id, const std::string& out, int threads);
int cmd_verify(const std::string& suite);

// --threads flag (>0) beats UDWF_THREADS beats hardware concurrency.
int resolve_threads(int flag_value);

}  // namespace udwforce

#endif
