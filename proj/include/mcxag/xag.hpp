#pragma once

#include <mcxag/anf.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mcxag
{

/*! \brief Dense gate index; operands always have smaller ids than their gate. */
struct gate_id
{
  std::uint32_t index{ 0u };

  friend auto operator<=>( gate_id, gate_id ) = default;
};

enum class gate_kind : std::uint8_t
{
  input,
  const1,
  and_gate,
  xor_gate,
  not_gate
};

std::string_view to_string( gate_kind kind );

struct gate
{
  gate_kind kind{ gate_kind::const1 };
  unsigned var{ 0u }; /* 1-based, inputs only */
  std::vector<gate_id> fanins;

  friend bool operator==( gate const&, gate const& ) = default;
};

struct circuit_output
{
  gate_id node;
  std::string label;

  friend bool operator==( circuit_output const&, circuit_output const& ) = default;
};

/*! \brief Immutable XOR-AND graph over {INPUT, CONST1, AND, XOR, NOT}.

  Gates are stored in topological order.  XOR gates may have any number of
  operands (at least two); AND gates have exactly two.
*/
class circuit
{
public:
  /*! \brief Validates arities, operand order, and input variables. */
  circuit( unsigned arity, std::vector<gate> gates, std::vector<circuit_output> outputs );

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return gates_.size(); }
  std::vector<gate> const& gates() const noexcept { return gates_; }
  gate const& at( gate_id id ) const { return gates_.at( id.index ); }
  std::vector<circuit_output> const& outputs() const noexcept { return outputs_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }

  /*! \brief Evaluates all outputs on one input assignment (entry j-1 is x_j). */
  std::vector<bool> eval( std::vector<bool> const& input ) const;

  /*! \brief 64 input assignments at once.

    `input_words[j-1]` carries x_j for 64 lanes; returns one word per output.
  */
  std::vector<std::uint64_t> simulate( std::span<const std::uint64_t> input_words ) const;

  /*! \brief One truth table per output, over all 2^arity inputs. */
  std::vector<truth_table> eval_all() const;

  /*! \brief Flags gates in the transitive fanin of some output. */
  std::vector<bool> reachable() const;

  /*! \brief Number of AND gates reachable from the outputs. */
  std::size_t and_count() const;

  /*! \brief Copy with output `index` tapped from `node` instead. */
  circuit with_output( std::size_t index, gate_id node ) const;

private:
  /* evaluates `block` words per gate; inputs holds `block` words per variable */
  void simulate_block( std::size_t block, std::span<const std::uint64_t> inputs,
                       std::vector<std::uint64_t>& values ) const;

  unsigned arity_;
  std::vector<gate> gates_;
  std::vector<circuit_output> outputs_;
};

/*! \brief Rewrites every NOT(a) as XOR(CONST1, a). */
circuit replace_not_by_xor( circuit const& c );

/*! \brief Append-only, hash-consing circuit builder.

  Structurally identical gates (same kind, same operand list in the same
  order) are created once.  No algebraic simplification is performed.
*/
class circuit_builder
{
public:
  explicit circuit_builder( unsigned arity );

  unsigned arity() const noexcept { return arity_; }

  gate_id input( unsigned var );

  /*! \brief The INPUT gate of x_var; throws if it was never added. */
  gate_id input_node( unsigned var ) const;

  /*! \brief Adds INPUT gates x_1..x_n in order, returning their ids. */
  std::vector<gate_id> inputs();

  gate_id constant_one();
  gate_id make_and( gate_id a, gate_id b );
  gate_id make_xor( gate_id a, gate_id b );
  gate_id make_xor( std::span<const gate_id> operands );
  gate_id make_not( gate_id a );

  void add_output( gate_id node, std::string label );

  std::size_t size() const noexcept { return gates_.size(); }

  /*! \brief AND gates created so far, reachable or not. */
  std::size_t num_ands() const noexcept { return num_ands_; }

  circuit build() const;

private:
  void check_operand( gate_id id ) const;
  gate_id intern( gate_kind kind, std::vector<gate_id> fanins );

  unsigned arity_;
  std::vector<gate> gates_;
  std::vector<circuit_output> outputs_;
  std::vector<std::optional<gate_id>> inputs_;
  /* structural hash -> gates with that hash */
  std::unordered_multimap<std::size_t, gate_id> strash_;
  std::size_t num_ands_{ 0u };
};

} // namespace mcxag
