#include "bcr/json_io.hpp"

#include <json.hpp>

namespace bcr {

namespace {

using json = nlohmann::ordered_json;

}  // namespace

std::string cover_to_json(const BoxCover& cover) {
  json doc;
  doc["algorithm"] = to_string(cover.algorithm);
  doc["rb"] = cover.rb;
  doc["l"] = cover.box_size;
  doc["gc_mode"] = cover.gc_mode ? json(to_string(*cover.gc_mode)) : json(nullptr);
  json boxes = json::array();
  for (const Box& box : cover.boxes) {
    json jb;
    jb["id"] = box.id;
    jb["center"] = box.center ? json(*box.center) : json(nullptr);
    jb["nodes"] = box.nodes;
    boxes.push_back(std::move(jb));
  }
  doc["boxes"] = std::move(boxes);
  doc["assignment"] = cover.assignment;
  return doc.dump();
}

std::string route_to_json(const Route& route) {
  json doc;
  doc["method"] = to_string(route.method);
  doc["s"] = route.s;
  doc["t"] = route.t;
  doc["nodes"] = route.nodes;
  doc["cost"] = route.cost;
  doc["box_sequence"] = route.box_sequence ? json(*route.box_sequence) : json(nullptr);
  doc["fallbacks"] = route.fallbacks;
  doc["stretch"] = route.stretch ? json(*route.stretch) : json(nullptr);
  return doc.dump();
}

}  // namespace bcr
