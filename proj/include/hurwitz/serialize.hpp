#pragma once

#include <string>
#include <vector>

#include "hurwitz/characters.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/symfunc.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/twist.hpp"
#include "hurwitz/walks.hpp"

namespace hurwitz {

/// {"n":N,"order":["2","1,1"],"chi":[[1,1],[-1,1]]}
std::string chartable_json(const CharacterTable& t);

/// {"z^3":"12", ...}; the constant term key is "1".
std::string series_json(const TruncSeries& s);

/// {"n":4,"twist":"H","entries":[{"from":"...","to":"...","series":{...}}]}
std::string gmatrix_json(const ConnectionMatrix& g, const std::string& twist_label);

/// {"basis":"p"|"s","terms":[{"part":"2,1","coeff":"1/3"}]}
std::string symfunc_json(const SymFunc& f);
/// Parses the symfunc_json format; throws ParseError.
SymFunc symfunc_from_json(const std::string& text);

/// {"n":..,"from":..,"to":..,"kind":..,"steps":{..},"transitive":..,"count":".."}
std::string walk_json(const WalkQuery& q, const std::string& kind, const Rational& count);

/// One JSON object per row inside an array, one row per line.
std::string table_json(const std::vector<TableRow>& rows);
/// Header n,from,to,<step keys>,count; partitions are quoted.
std::string table_csv(const std::vector<TableRow>& rows);

} // namespace hurwitz
