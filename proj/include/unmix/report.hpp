#ifndef UNMIX_REPORT_HPP
#define UNMIX_REPORT_HPP

#include <span>
#include <string>
#include <string_view>

#include "unmix/decomp.hpp"
#include "unmix/polyring.hpp"

namespace unmix {

enum class Format { text, json };

/// Parses "text" or "json"; throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

/// Renders components sorted by component_less. JSON follows
///   {"vars":[...],"components":[{"dimension":int,"generators":[...],
///    "source_chain":[...],"u_set":[...]}]}
/// and text prints one block per component headed by "dim=<d>".
std::string emit_result(const VarOrder& vars, std::span<const Component> components,
                        Format format);

}  // namespace unmix

#endif  // UNMIX_REPORT_HPP
