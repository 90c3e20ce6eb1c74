#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "cfladder/ladder.hpp"
#include "cfladder/stats.hpp"

namespace cfl {

inline constexpr const char* kToolVersion = "cfladder 1.0.0";

// metadata emitted verbatim: CSV gets one leading "# key: value" line per
// entry, JSON mirrors them as string values under "meta" (insertion order)
using ExportMeta = std::vector<std::pair<std::string, std::string>>;

// fixed "%.10g" so reruns are byte-identical across locales
std::string format_double(double v);

// CSV schema: n,b_n,p_n,q_n for n = 0..N
std::string expand_csv(const Expansion& exp, const ExportMeta& meta);
nlohmann::ordered_json expand_json(const Expansion& exp,
                                   const ExportMeta& meta);

// CSV schema: i,n,k,r,s,t,value,lower,upper (i is 1-based row number);
// a trailing "# connections: <count>" metadata line is always appended
std::string ladder_csv(const Ladder& lad, const ExportMeta& meta);
nlohmann::ordered_json ladder_json(const Ladder& lad, const ExportMeta& meta);

// CSV schema: i,n_minus_k (the alternation plot series)
std::string figure3_csv(const Ladder& lad, const ExportMeta& meta);
nlohmann::ordered_json figure3_json(const Ladder& lad,
                                    const ExportMeta& meta);

// CSV schema: k,count,empirical,expected,deviation; the tail bucket row is
// labeled ">100"
std::string stats_csv(const KuzminReport& rep, const ExportMeta& meta);
nlohmann::ordered_json stats_json(const KuzminReport& rep,
                                  const ExportMeta& meta);

// two labeled quotient columns joined by straight connection segments;
// quotients >= 2m + 1 are emphasized; all coordinates are integers, so the
// output is deterministic
std::string ladder_svg(const Ladder& lad);

}  // namespace cfl
