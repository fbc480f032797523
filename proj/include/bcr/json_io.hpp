#pragma once

#include <string>

#include "bcr/cover.hpp"
#include "bcr/route.hpp"

namespace bcr {

/// Cover document, fixed field order:
/// {"algorithm":"memb","rb":1,"l":3,"gc_mode":null,
///  "boxes":[{"id":0,"center":1,"nodes":[0,1,2]},...],"assignment":[0,0,0,1,1]}
/// GC covers emit "center":null per box and their mode in "gc_mode".
std::string cover_to_json(const BoxCover& cover);

/// Route document, fixed field order:
/// {"method":"bcr","s":0,"t":4,"nodes":[0,1,2,3,4],"cost":4.0,
///  "box_sequence":[0,1],"fallbacks":0,"stretch":1.0}
/// Flat routes emit "box_sequence":null; an unset stretch emits null.
std::string route_to_json(const Route& route);

}  // namespace bcr
