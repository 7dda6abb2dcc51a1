#pragma once

#include <mcxag/synth.hpp>
#include <mcxag/verify.hpp>
#include <mcxag/xag.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcxag
{

/*! \brief Malformed input document; `line` is 1-based, 0 when not tied to a line. */
class parse_error : public std::runtime_error
{
public:
  parse_error( std::size_t line, std::string const& message );

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief Bristol Fashion text.

  Header: "<gates> <wires>", then "1 <n>" for the single input group and
  "1 <m>" for the single output group, then a blank line.  Wires 0..n-1
  carry x_1..x_n; the last m wires carry the outputs in order.  Gate lines
  are "2 1 <a> <b> <out> AND|XOR" and "1 1 <a> <out> INV".  Multi-operand
  XORs become left-associated chains; CONST1 becomes INV(XOR(w0, w0)).
  Only gates reachable from the outputs are written, so the number of AND
  lines equals and_count().
*/
std::string export_bristol( circuit const& c );

/*! \brief Parses Bristol Fashion with AND, XOR and INV gates.

  Input groups are concatenated into x_1..x_n and output groups into
  outputs labeled out_1..out_m.  Throws parse_error on malformed headers,
  gate-count mismatches, undefined or re-assigned wires, and unknown ops.
*/
circuit import_bristol( std::string_view text );

/*! \brief Graphviz digraph: node g<id> per gate, node o<k> per output. */
std::string export_dot( circuit const& c );

/*! \brief {"metadata": {n, construction, and_count}, "gates": [...], "outputs": [...]} */
std::string circuit_to_json( circuit const& c, std::optional<construction> kind = std::nullopt );
circuit circuit_from_json( std::string_view text );

std::string report_to_json( verification_report const& report );
std::string lemma_suite_to_json( unsigned n_max, std::vector<lemma_check> const& checks );

} // namespace mcxag
