#pragma once

namespace gemex {

// Batch front end. Parses argv, runs one subcommand, prints a human-readable
// table to stdout, and appends machine records (JSON lines) for sweep and
// anneal runs. Returns 0 on success, 1 when a covered bound violation or a
// lemma-check failure turned up, 2 on usage or operational errors. Callable
// in-process, so tests drive it without spawning a binary.
int run_cli(int argc, const char* const* argv);

}  // namespace gemex
