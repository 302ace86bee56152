#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/twist.hpp"
#include "hurwitz/walks.hpp"

namespace hurwitz {

enum class TableKind { Plain, Monotone, Strict, WeakStrict, Mixed, Multi };

/// plain|okounkov, monotone|hciz, strict, weak-strict|alpha_q, mixed, multi|multimonotone.
TableKind parse_table_kind(std::string_view name);
std::string table_kind_name(TableKind kind);

struct TableSpec {
    TableKind kind = TableKind::Plain;
    int n_max = 4;
    /// Largest total number of steps (b, k, k + l, or d_1 + ... + d_m).
    int step_max = 4;
    /// Number of strictly monotone segments for Multi.
    int segments = 2;
    bool connected = false;
};

struct TableRow {
    int n = 0;
    Partition from;
    Partition to;
    std::vector<std::pair<std::string, int>> steps;
    Rational count;
    bool connected = false;
};

/// The generating twist of a table kind, each parameter capped at step_max:
/// Exp(beta), H(z), E(w), H(z) E(w), H(z) Exp(beta), E(w1) ... E(wm).
TwistSpec table_twist(const TableSpec& spec);

/// Walk constraint counted by one row's step data.
WalkConstraint row_constraint(TableKind kind, const std::vector<std::pair<std::string, int>>& steps);

/// Counts read off the twisted connection coefficients (or, with connected
/// set, off log tau), for 1 <= n <= n_max, all lambda, mu |- n and every step
/// tuple with total <= step_max, in canonical order.
std::vector<TableRow> hurwitz_table(const TableSpec& spec);

} // namespace hurwitz
