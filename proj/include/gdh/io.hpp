#pragma once

#include <string>
#include <string_view>

#include "gdh/gdh.hpp"

namespace gdh {

// Theory file: `r <arity>` then one `gen <img_0> ... <img_{r-1}>` line per
// generator. `#` starts a comment. No generators means the trivial group.
Theory parse_theory(std::string_view text);
std::string serialize_theory(const Theory& theory);

// Graph file: `n <count>` then one edge per line, r vertex ids. Any orbit
// representative is accepted and canonicalized on load.
Gdh parse_gdh(std::string_view text, const Theory& theory);
std::string serialize_gdh(const Gdh& g);

// Family file: `family <k>` then k graph records separated by `---` lines.
Family parse_family(std::string_view text, const Theory& theory);
std::string serialize_family(const Family& family);

}  // namespace gdh
