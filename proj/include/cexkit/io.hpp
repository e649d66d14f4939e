#ifndef CEXKIT_IO_HPP
#define CEXKIT_IO_HPP

#include "cexkit/algebra.hpp"
#include "cexkit/catalog.hpp"
#include "cexkit/cohomology.hpp"

#include <string>

namespace cexkit {

/// Thrown for malformed files and bad CLI specs (exit code 2 territory).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical algebra document: {"dim": n, "table": [[i,j,k,"num/den"],...]}
/// with the table sorted by (i,j,k). Writing then reading is bit-exact.
std::string algebra_to_text(const Algebra& a);
Algebra algebra_from_text(const std::string& text);

/// Canonical cocycle document:
/// {"dim": n, "components": [[[i,j,"num/den"],...], ...]}.
std::string cocycle_to_text(const Cocycle& c);
Cocycle cocycle_from_text(const std::string& text);

/// Canonical matrix document: {"rows": r, "cols": c, "entries": [...]}.
std::string matrix_to_text(const Mat& m);
Mat matrix_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Resolves a CLI algebra argument: a catalog spec like "mu1_2:7" when it
/// parses as one, otherwise a file path.
Algebra load_algebra_arg(const std::string& arg);

} // namespace cexkit

#endif
