#pragma once

// Replica of the original interactive program: prompts for the generator
// count, 2n integer parts and a query (N, K), then prints
// "epsilon[N][K] = (re,im)" where the value is eps_K of the first N inputs.
//
// Arithmetic is wrapping 64-bit; inputs are read as 32-bit integers. Output
// on stdout is byte-for-byte what the original writes, including the
// prompts, which end without a newline, and the line breaks printed after
// each read. When the original would die with an uncaught exception the
// replica stops at the same point on stdout, writes the exception line to
// stderr and returns 2.

#include <iosfwd>

namespace esym::cli {

int run_java_compat(std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace esym::cli
