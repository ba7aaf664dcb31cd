#pragma once

// Typed stage chains: each stage consumes the previous stage's value. The
// whole chain is type-checked before anything runs.
//
// Stage syntax: name or name:arg, e.g.
//   negacyclic-conference:13 symmetric-2c turyn-williamson williamson-array verify-hadamard:28

#include <string>
#include <vector>

namespace negadesigns {

enum class ValueType { None, ConferenceRow, Blocks, Quad, NGPair, Matrix };

std::string_view to_string(ValueType t);

struct StageSpec {
  std::string name;
  std::string arg;  // empty when absent

  static StageSpec parse(std::string_view text);
};

struct PipelineResult {
  int exit_code = 0;  // 0 ok, 1 usage or type mismatch, 2 verification failure, 4 unsupported
  std::vector<std::string> log;  // one line per executed stage
};

/// Names of every known stage with their input and output types.
std::vector<std::string> pipeline_stage_help();

PipelineResult run_pipeline(const std::vector<StageSpec>& stages);

}  // namespace negadesigns
