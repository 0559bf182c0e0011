#pragma once

// Batch front end behind the `sbasis` executable.
//
// Job file:
//   ring integer            (integer | rationals | mod M)
//   vars x,y,z
//   order ds                (lp ls dp ds Ds or M(...))
//   ideal:
//   15x2+28y2z6
//   ...
//   targets:                (optional; polynomials for nf / member)
//   ...
// '#' starts a comment line.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbasis/monorder.hpp"
#include "sbasis/poly.hpp"

namespace sbasis {

struct JobSpec {
  PolyRingPtr ring;
  std::vector<Polynomial> ideal;
  std::vector<Polynomial> targets;
};

/// Reads a job file. Zero polynomials in the ideal section are dropped.
/// Throws ParseError / Error on malformed input.
JobSpec parseJob(std::istream& in, DsVariant dsVariant = DsVariant::RevLex);

enum class ExitCode : int { Ok = 0, VerifyFailed = 1, InputError = 2, IterationLimit = 3 };

/// Runs `sbasis <command> <input> [options]`; `input` may be "-" for `in`.
int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sbasis
