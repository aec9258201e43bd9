#pragma once

// Command implementations for the cubic3 batch CLI, separated from the
// argv front end so the integration tests can drive them directly.
//
// Every command writes one record per line — JSONL by default, CSV with a
// header row on request — in a fixed field order, fully determined by the
// inputs. Exit codes: 0 success, 1 mathematical mismatch or failed
// verification, 2 usage error.

#include <iosfwd>
#include <string>

#include "cubic3/curve_points.hpp"

namespace cubic3::cli {

enum class Format { Jsonl, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

int cmd_represent(i64 n, Format fmt, std::ostream& out, std::ostream& err);
int cmd_admissible(i64 max, Format fmt, std::ostream& out, std::ostream& err);
int cmd_points(i64 d, SetKind kind, i64 z_max, Format fmt, std::ostream& out,
               std::ostream& err);
int cmd_trinomials(i64 d, i64 st_max, Format fmt, std::ostream& out, std::ostream& err);
int cmd_verify(std::istream& in, Format fmt, std::ostream& out, std::ostream& err);
int cmd_oracle(i64 d, SetKind kind, i64 z_max, Format fmt, std::ostream& out,
               std::ostream& err);

bool parse_set_kind(const std::string& name, SetKind& kind);
const char* set_kind_name(SetKind kind);

// argv front end used by main(); exposed for tests.
int run(int argc, const char* const* argv);

}  // namespace cubic3::cli
