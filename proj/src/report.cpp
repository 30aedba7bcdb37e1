#include "unmix/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>
#include <vector>

#include "unmix/parser_io.hpp"

namespace unmix {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string emit_result(const VarOrder& vars, std::span<const Component> components,
                        Format format) {
  std::vector<const Component*> sorted;
  for (const auto& c : components) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Component* a, const Component* b) { return component_less(*a, *b); });

  if (format == Format::json) {
    nlohmann::ordered_json out;
    out["vars"] = vars.names();
    out["components"] = nlohmann::ordered_json::array();
    for (const Component* c : sorted) {
      nlohmann::ordered_json entry;
      entry["dimension"] = c->dimension;
      entry["generators"] = io::render_all(c->generators.generators());
      entry["source_chain"] = io::render_all(c->source_chain.elements());
      entry["u_set"] = io::render_all(c->u_set);
      out["components"].push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
  }

  std::string out = "vars";
  for (const auto& name : vars.names()) out += " " + name;
  out += "\ncomponents " + std::to_string(sorted.size()) + "\n";
  for (const Component* c : sorted) {
    out += "\ndim=" + std::to_string(c->dimension) + "\n";
    out += "generators:\n";
    for (const auto& g : io::render_all(c->generators.generators())) out += "  " + g + "\n";
    out += "source_chain:\n";
    for (const auto& g : io::render_all(c->source_chain.elements())) out += "  " + g + "\n";
    out += "u_set:";
    if (c->u_set.empty()) out += " (empty)";
    out += "\n";
    for (const auto& g : io::render_all(c->u_set)) out += "  " + g + "\n";
  }
  return out;
}

}  // namespace unmix
